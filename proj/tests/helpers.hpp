#pragma once

// Shared test fixtures and independent oracles. The oracles recompute
// everything one membership test at a time, straight from the adjacency
// relation or by scanning all subsets, so they share no code path with the
// set-algebra implementations they check.

#include "autlog/graph.hpp"
#include "autlog/poset.hpp"
#include "autlog/state_set.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace th {

using autlog::Graph;
using autlog::Poset;
using autlog::StateSet;

inline Graph path_graph(int n)
{
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n)
{
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n, 1);
    return g;
}

inline Graph complete_graph(int n)
{
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph edgeless_graph(int n)
{
    return Graph(n);
}

inline Graph star_graph(int n)
{
    Graph g(n);
    for (int v = 2; v <= n; ++v) g.add_edge(1, v);
    return g;
}

inline double unit(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (unit(rng) < p) g.add_edge(u, v);
    return g;
}

/// Builds the graph on n vertices whose edge set is encoded by `edge_mask`,
/// bit k covering the k-th pair (u,v), u < v, in lexicographic order.
inline Graph graph_from_edge_mask(int n, std::uint64_t edge_mask)
{
    Graph g(n);
    int bit = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v, ++bit)
            if ((edge_mask >> bit) & 1u) g.add_edge(u, v);
    return g;
}

/// Deterministic mixed bag of graphs with 1..max_n vertices: structured
/// families plus seeded random graphs at several densities.
inline std::vector<Graph> corpus(int max_n)
{
    std::vector<Graph> graphs;
    std::mt19937_64 rng(20240817u);
    for (int n = 1; n <= max_n; ++n) {
        graphs.push_back(path_graph(n));
        graphs.push_back(edgeless_graph(n));
        graphs.push_back(complete_graph(n));
        if (n >= 3) graphs.push_back(cycle_graph(n));
        if (n >= 2) graphs.push_back(star_graph(n));
        for (double p : {0.2, 0.5, 0.8}) graphs.push_back(random_graph(rng, n, p));
    }
    return graphs;
}

// ---- oracles ------------------------------------------------------------

/// Whether probing `probe` answers 1 from `state`, straight from adjacency.
inline bool oracle_answers_one(const Graph& g, int state, int probe)
{
    return state == probe || g.has_edge(state, probe);
}

inline StateSet oracle_perp(const Graph& g, StateSet a)
{
    StateSet out;
    for (int w = 1; w <= g.vertex_count(); ++w) {
        bool all_zero = true;
        for (int x : a.members())
            if (oracle_answers_one(g, w, x)) {
                all_zero = false;
                break;
            }
        if (all_zero) out.insert(w);
    }
    return out;
}

inline StateSet oracle_closure(const Graph& g, StateSet a)
{
    return oracle_perp(g, oracle_perp(g, a));
}

/// All double-perp fixed points found by scanning every one of the 2^n
/// subsets; sorted in report order.
inline std::vector<StateSet> oracle_closed_family(const Graph& g)
{
    std::vector<StateSet> out;
    const std::uint32_t limit = std::uint32_t{1} << g.vertex_count();
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        const StateSet s = StateSet::from_mask(mask);
        if (oracle_closure(g, s) == s) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every set decidable by a single probe: the bounds plus each input's
/// one-answer and zero-answer sets, recomputed per state.
inline std::vector<StateSet> oracle_micro_family(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<StateSet> out{StateSet{}, StateSet::full(n)};
    for (int v = 1; v <= n; ++v) {
        StateSet one;
        for (int u = 1; u <= n; ++u)
            if (oracle_answers_one(g, u, v)) one.insert(u);
        for (StateSet block : {one, one.complement_in(n)})
            if (std::find(out.begin(), out.end(), block) == out.end()) out.push_back(block);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Literal definition of a least upper bound: an upper bound below every
/// upper bound.
inline std::optional<std::size_t> oracle_lub(const Poset& p, std::size_t a, std::size_t b)
{
    for (std::size_t m = 0; m < p.size(); ++m) {
        if (!p.leq(a, m) || !p.leq(b, m)) continue;
        bool least = true;
        for (std::size_t c = 0; c < p.size(); ++c)
            if (p.leq(a, c) && p.leq(b, c) && !p.leq(m, c)) least = false;
        if (least) return m;
    }
    return std::nullopt;
}

inline std::optional<std::size_t> oracle_glb(const Poset& p, std::size_t a, std::size_t b)
{
    for (std::size_t m = 0; m < p.size(); ++m) {
        if (!p.leq(m, a) || !p.leq(m, b)) continue;
        bool greatest = true;
        for (std::size_t c = 0; c < p.size(); ++c)
            if (p.leq(c, a) && p.leq(c, b) && !p.leq(c, m)) greatest = false;
        if (greatest) return m;
    }
    return std::nullopt;
}

/// Calls `f` with the relation matrix of every partial order on k elements
/// whose order respects the numeric labelling (every finite poset can be
/// relabelled this way along a linear extension, and the properties under
/// test are label-invariant). Enumerates all 2^(k(k-1)/2) upper-triangular
/// relations and keeps the transitive ones.
template <typename F>
inline void for_each_small_poset(int k, F&& f)
{
    const int pairs = k * (k - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        std::vector<std::vector<bool>> leq(static_cast<std::size_t>(k),
                                           std::vector<bool>(static_cast<std::size_t>(k)));
        int bit = 0;
        for (int i = 0; i < k; ++i) {
            leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
            for (int j = i + 1; j < k; ++j, ++bit)
                leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    ((mask >> bit) & 1u) != 0;
        }
        bool transitive = true;
        for (int i = 0; i < k && transitive; ++i)
            for (int j = 0; j < k && transitive; ++j)
                for (int l = 0; l < k && transitive; ++l)
                    if (leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
                        leq[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] &&
                        !leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)])
                        transitive = false;
        if (transitive) f(leq);
    }
}

}  // namespace th
