#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace autlog {

/// Finite partially ordered set over labelled elements. The full relation
/// matrix is the source of truth; the covering relation is derived from it.
class Poset {
public:
    /// Throws std::invalid_argument unless `leq` is a square matrix matching
    /// `labels` and is reflexive, antisymmetric and transitive.
    Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);

    std::size_t size() const { return labels_.size(); }
    bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq_[a][b]; }
    const std::string& label(std::size_t i) const { return labels_[i]; }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> leq_;
};

/// Covering pairs (a,b): a < b with no element strictly between. Sorted by
/// (a, b); their transitive closure reproduces the strict order.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const Poset& p);

struct LatticeCheck {
    bool is_lattice = false;
    /// First pair (scanning indices in order) lacking a least upper bound or
    /// a greatest lower bound.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// A lattice needs a least upper bound and a greatest lower bound for every
/// pair of elements.
LatticeCheck is_lattice(const Poset& p);

/// Least upper bound of a pair, when it exists.
std::optional<std::size_t> least_upper_bound(const Poset& p, std::size_t a, std::size_t b);

/// Greatest lower bound of a pair, when it exists.
std::optional<std::size_t> greatest_lower_bound(const Poset& p, std::size_t a, std::size_t b);

/// Hasse diagram as a DOT digraph drawn bottom to top: one node statement
/// per element, one edge statement per cover pair. Byte-identical output for
/// equal inputs.
std::string to_dot(const Poset& p, const std::string& graph_name = "poset");

}  // namespace autlog
