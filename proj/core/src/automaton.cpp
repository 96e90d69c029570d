#include "autlog/automaton.hpp"

namespace autlog {

int transition(const Graph& g, int state, int input)
{
    if (!g.valid_vertex(input))
        throw std::out_of_range("input " + std::to_string(input) + " outside 1.." +
                                std::to_string(g.vertex_count()));
    if (state < 0 || state > g.vertex_count())
        throw std::out_of_range("state " + std::to_string(state) + " outside 0.." +
                                std::to_string(g.vertex_count()));
    if (state == final_state) return final_state;
    if (state == input || g.has_edge(state, input)) return input;
    return final_state;
}

std::vector<int> run(const Graph& g, int initial_state, std::span<const int> inputs)
{
    if (initial_state < 0 || initial_state > g.vertex_count())
        throw std::out_of_range("state " + std::to_string(initial_state) + " outside 0.." +
                                std::to_string(g.vertex_count()));
    for (int v : inputs)
        if (!g.valid_vertex(v))
            throw std::out_of_range("input " + std::to_string(v) + " outside 1.." +
                                    std::to_string(g.vertex_count()));
    std::vector<int> bits;
    bits.reserve(inputs.size());
    int state = initial_state;
    for (int v : inputs) {
        state = transition(g, state, v);
        bits.push_back(output_bit(state));
    }
    return bits;
}

}  // namespace autlog
