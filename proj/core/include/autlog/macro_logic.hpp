#pragma once

#include "autlog/graph.hpp"
#include "autlog/poset.hpp"

#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace autlog {

/// The states guaranteed to answer 0 to every probe of a member of `a`:
/// the intersection of the zero-blocks of a's members, V when a is empty.
StateSet perp(const Graph& g, StateSet a);

/// Double perp. Extensive, monotone and idempotent; its fixed points are
/// exactly the macro-testable sets.
StateSet closure(const Graph& g, StateSet a);

/// True when b can be certified by the all-zero rows of a protocol,
/// i.e. b == closure(b).
bool is_testable_macro(const Graph& g, StateSet b);

/// The family of closed sets ordered by inclusion, with perp as the
/// orthocomplementation. Always a lattice: meets are intersections, joins
/// are closures of unions. Immutable after build and thread-safe.
class MacroLogic {
public:
    static MacroLogic build(const Graph& g);

    const Graph& graph() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }

    /// All closed sets, smallest first (cardinality, then member order).
    const std::vector<StateSet>& closed_sets() const { return closed_; }
    bool is_closed(StateSet a) const { return members_.count(a.mask()) != 0; }

    /// Throws std::invalid_argument when an operand is not a closed set.
    StateSet ortho(StateSet a) const;
    StateSet meet(StateSet a, StateSet b) const;
    StateSet join(StateSet a, StateSet b) const;

    /// The inclusion order as a labelled poset (element order as above).
    Poset poset() const;

private:
    explicit MacroLogic(Graph g) : graph_(std::move(g)) {}
    void require_closed(StateSet a) const;

    Graph graph_;
    std::vector<StateSet> closed_;
    std::unordered_set<std::uint32_t> members_;
};

/// One verified ortholattice axiom.
struct AxiomCheck {
    std::string axiom;
    bool passed = false;
    std::string counterexample;  // empty when passed
};

struct OrtholatticeReport {
    bool all_passed = false;
    std::vector<AxiomCheck> checks;
};

/// Exhaustively verifies the orthocomplemented-lattice axioms over the
/// closed-set family; failures are report content, not errors.
OrtholatticeReport check_ortholattice(const MacroLogic& m);

struct OrthomodularityResult {
    bool holds = false;
    /// First pair a <= b with b != join(a, meet(ortho(a), b)), scanning the
    /// family in report order.
    std::optional<std::pair<StateSet, StateSet>> counterexample;
};

OrthomodularityResult check_orthomodular(const MacroLogic& m);

/// Micro-testable versus macro-testable families, each list in report order
/// (cardinality, then member order).
struct OverlapReport {
    std::vector<StateSet> micro_family;
    std::vector<StateSet> macro_family;
    std::vector<StateSet> common;
    std::vector<StateSet> micro_only;
    std::vector<StateSet> macro_only;
};

OverlapReport overlap_report(const Graph& g);

}  // namespace autlog
