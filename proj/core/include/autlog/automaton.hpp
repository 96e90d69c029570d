#pragma once

#include "autlog/graph.hpp"

#include <span>
#include <vector>

namespace autlog {

inline constexpr int final_state = 0;

/// One transition step. From a non-final state u, input v moves the
/// automaton to v when v is u itself or one of u's neighbours, and to the
/// absorbing final state otherwise. Throws std::out_of_range for states
/// outside 0..n or inputs outside 1..n.
int transition(const Graph& g, int state, int input);

/// Output bit of the state reached by a step: 0 exactly for the final state.
inline int output_bit(int resulting_state)
{
    return resulting_state == final_state ? 0 : 1;
}

/// Feeds a whole input word from the given initial state, emitting one
/// output bit per step. The state evolves within the run; once the final
/// state is reached every further bit is 0.
std::vector<int> run(const Graph& g, int initial_state, std::span<const int> inputs);

}  // namespace autlog
