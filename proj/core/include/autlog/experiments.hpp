#pragma once

#include "autlog/automaton.hpp"
#include "autlog/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace autlog {

/// Population of identical automata whose per-copy initial states are drawn
/// from `support` with the given weights (uniform by default). Weights are
/// positive and sum to one, aligned with support().members().
class Ensemble {
public:
    Ensemble(Graph g, StateSet support);
    Ensemble(Graph g, StateSet support, std::vector<double> weights);

    const Graph& graph() const { return graph_; }
    StateSet support() const { return support_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    Graph graph_;
    StateSet support_;
    std::vector<double> weights_;
};

/// Observation table of an ensemble experiment: one row of output bits per
/// input, every row the same length. Only the all-zero rows carry
/// information.
class Protocol {
public:
    Protocol(std::vector<std::vector<std::uint8_t>> rows, int samples_per_row,
             std::uint64_t seed);

    int input_count() const { return static_cast<int>(rows_.size()); }
    int samples_per_row() const { return samples_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<std::uint8_t>& row(int input) const;

    /// Inputs whose row is all zeros.
    StateSet zero_rows() const;

    /// One line per input: "input <v>: <bitstring>".
    std::string to_text() const;

    friend bool operator==(const Protocol&, const Protocol&) = default;

private:
    std::vector<std::vector<std::uint8_t>> rows_;
    int samples_;
    std::uint64_t seed_;
};

/// One-shot probe of a single automaton copy with an unknown initial state.
/// The observed bit certifies which block of the probe's partition holds the
/// state; the copy is consumed (it now sits in `probe` or the final state,
/// so nothing more can be learned about where it started).
struct MicroObservation {
    int input = 0;
    int bit = 0;
    StateSet inferred;
};

MicroObservation identify_single(const Graph& g, int hidden_initial, int probe);

/// Samples `samples_per_row` fresh copies per input row and probes each
/// once. Row v draws from its own generator seeded with (seed, v), so rows
/// are independent streams, scheduling cannot change the result, and a
/// longer run extends a shorter one bitwise.
Protocol run_protocol(const Ensemble& e, int samples_per_row, std::uint64_t seed);

/// Deterministic limit of the sampled protocol: probes one copy per support
/// state, in ascending state order.
Protocol run_protocol_exhaustive(const Ensemble& e);

/// perp of the all-zero row set: the tightest closed set the protocol
/// certifies the ensemble to lie in.
StateSet infer_macrostate(const Graph& g, const Protocol& p);

/// Whether ensembles supported on a and b can ever produce different
/// exhaustive protocols: true iff their closures differ.
bool distinguishable(const Graph& g, StateSet a, StateSet b);

}  // namespace autlog
