#pragma once

#include "autlog/state_set.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace autlog {

/// Undirected simple graph on vertices 1..n. It fully determines a
/// normalized automaton: the states are the vertices plus the final state 0,
/// and the inputs coincide with the vertices. Immutable once populated and
/// safe to share across threads.
class Graph {
public:
    /// Throws std::invalid_argument unless 1 <= n <= StateSet::max_vertices.
    explicit Graph(int n);

    /// Adds the unordered edge {u,v}. Rejects self-loops and out-of-range
    /// endpoints; repeating an edge is a no-op.
    void add_edge(int u, int v);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool valid_vertex(int v) const { return v >= 1 && v <= n_; }
    bool has_edge(int u, int v) const;

    /// {v} together with v's neighbours: exactly the states that answer 1
    /// when input v is applied.
    StateSet closed_neighborhood(int v) const;

    StateSet vertices() const { return StateSet::full(n_); }

    /// Edge list with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<std::uint32_t> adjacency_;  // open neighbourhood masks, index v-1
};

/// Raised by parse_graph; carries the 1-based line of the offending input.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(message), line_(line)
    {
    }

    int line() const { return line_; }

private:
    int line_;
};

/// Reads the graph file format: lines starting with '#' are comments, the
/// first significant line is the vertex count, and every further significant
/// line "u v" declares an undirected edge. Duplicate edge lines are
/// idempotent.
Graph parse_graph(std::string_view text);

}  // namespace autlog
