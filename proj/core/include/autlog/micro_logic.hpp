#pragma once

#include "autlog/graph.hpp"
#include "autlog/poset.hpp"

#include <utility>
#include <vector>

namespace autlog {

/// Two-block split of the state set shared by a class of inputs. Probing
/// with any input of the class separates `zero_block` from `one_block`;
/// `one_block` is the closed neighbourhood of the smallest input in the
/// class (inputs whose neighbourhood is the complementary block induce the
/// same split and are merged into the class).
struct Partition {
    StateSet inputs;
    StateSet zero_block;  // answers 0
    StateSet one_block;   // answers 1

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// (V0, V1) for one input v: V1 is the closed neighbourhood of v, V0 the
/// rest. May be trivial (empty V0) when v sees every vertex.
std::pair<StateSet, StateSet> partition_for_input(const Graph& g, int input);

/// The distinct nontrivial splits, one Partition per class of inputs
/// inducing the same split, ordered by the smallest input of each class.
std::vector<Partition> distinct_partitions(const Graph& g);

/// A state set is micro-testable when a single probe decides membership:
/// the bounds and every partition block qualify, nothing else does.
bool is_testable_micro(const Graph& g, StateSet a);

/// Pasted propositional structure of the partition blocks: the Boolean
/// algebras {bottom, V0, V1, top} of all distinct splits, glued at their
/// shared bounds. For normalized automata this is always an MOn. All
/// queries are pure; instances are immutable and thread-safe.
class MicroLogic {
public:
    static MicroLogic build(const Graph& g);

    int vertex_count() const { return n_; }
    const std::vector<Partition>& partitions() const { return partitions_; }

    /// Bottom, top, then the blocks of each partition (one-block first),
    /// deduplicated in first-seen order.
    const std::vector<StateSet>& elements() const { return elements_; }
    bool contains(StateSet a) const;

    /// Pasted-structure implication. Implies set inclusion but is strictly
    /// weaker: blocks of different partitions never imply one another.
    /// Throws std::invalid_argument when an operand is not an element.
    bool implies(StateSet a, StateSet b) const;

    /// Complement within the vertex set; maps each block to its partner
    /// block and swaps the bounds. An order-reversing involution.
    StateSet negation(StateSet a) const;

    /// The MO order n: the number of distinct splits, which is also the
    /// number of complementary middle-element pairs. Re-verifies the MOn
    /// shape and throws std::logic_error if the structure is malformed.
    int mo_order() const;

    /// The implication order as a labelled poset (element order as above).
    Poset poset() const;

private:
    StateSet top() const { return StateSet::full(n_); }
    void require_element(StateSet a) const;

    int n_ = 0;
    std::vector<Partition> partitions_;
    std::vector<StateSet> elements_;
};

}  // namespace autlog
