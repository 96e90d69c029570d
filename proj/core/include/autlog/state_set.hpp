#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace autlog {

/// Subset of the non-final states {1..n}, packed as a bitmask: vertex v
/// occupies bit v-1. The final state 0 is never a member. Immutable value
/// semantics; safe to share across threads.
class StateSet {
public:
    /// Largest supported vertex count; keeps every subset enumerable as a
    /// 32-bit mask.
    static constexpr int max_vertices = 30;

    constexpr StateSet() = default;

    static constexpr StateSet from_mask(std::uint32_t mask) { return StateSet(mask); }

    static StateSet single(int v)
    {
        StateSet s;
        s.insert(v);
        return s;
    }

    /// The whole state set {1..n}.
    static constexpr StateSet full(int n)
    {
        return StateSet(n >= 1 ? (std::uint32_t{1} << n) - 1 : 0);
    }

    bool contains(int v) const
    {
        return v >= 1 && v <= max_vertices && ((bits_ >> (v - 1)) & 1u) != 0;
    }

    void insert(int v);  // throws std::out_of_range outside 1..max_vertices
    void erase(int v);

    bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    std::uint32_t mask() const { return bits_; }

    bool subset_of(StateSet other) const { return (bits_ & ~other.bits_) == 0; }
    StateSet complement_in(int n) const { return StateSet(full(n).bits_ & ~bits_); }

    friend StateSet operator&(StateSet a, StateSet b) { return StateSet(a.bits_ & b.bits_); }
    friend StateSet operator|(StateSet a, StateSet b) { return StateSet(a.bits_ | b.bits_); }
    friend StateSet operator-(StateSet a, StateSet b) { return StateSet(a.bits_ & ~b.bits_); }

    friend bool operator==(StateSet a, StateSet b) = default;

    /// Report order: smaller sets first, ties broken by the lexicographic
    /// order of the ascending member sequences. A strict total order.
    friend bool operator<(StateSet a, StateSet b);

    /// Ascending member list.
    std::vector<int> members() const;

    /// Set notation with sorted members, "{1,2}"; "{}" when empty.
    std::string to_string() const;

private:
    constexpr explicit StateSet(std::uint32_t bits) : bits_(bits) {}

    std::uint32_t bits_ = 0;
};

/// Parses a comma-separated member list such as "1,2,3" (spaces allowed)
/// into a StateSet. Members must lie in 1..max_vertex. An empty or
/// whitespace-only string yields the empty set.
StateSet parse_state_set(std::string_view text, int max_vertex);

}  // namespace autlog
