#include "autlog/experiments.hpp"

#include "autlog/macro_logic.hpp"
#include "autlog/micro_logic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace autlog {

Ensemble::Ensemble(Graph g, StateSet support)
    : Ensemble(std::move(g), support,
               std::vector<double>(static_cast<std::size_t>(support.size()),
                                   support.empty() ? 0.0 : 1.0 / support.size()))
{
}

Ensemble::Ensemble(Graph g, StateSet support, std::vector<double> weights)
    : graph_(std::move(g)), support_(support), weights_(std::move(weights))
{
    if (support_.empty()) throw std::invalid_argument("ensemble support must be nonempty");
    if (!support_.subset_of(graph_.vertices()))
        throw std::invalid_argument("support " + support_.to_string() +
                                    " is not a subset of the vertex set");
    if (weights_.size() != static_cast<std::size_t>(support_.size()))
        throw std::invalid_argument("one weight per support state required");
    double sum = 0.0;
    for (double w : weights_) {
        if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("weights must sum to 1");
}

Protocol::Protocol(std::vector<std::vector<std::uint8_t>> rows, int samples_per_row,
                   std::uint64_t seed)
    : rows_(std::move(rows)), samples_(samples_per_row), seed_(seed)
{
    if (rows_.empty()) throw std::invalid_argument("protocol needs at least one input row");
    if (samples_ < 1) throw std::invalid_argument("samples_per_row must be positive");
    for (const auto& row : rows_) {
        if (row.size() != static_cast<std::size_t>(samples_))
            throw std::invalid_argument("every row must hold samples_per_row bits");
        for (std::uint8_t bit : row)
            if (bit > 1) throw std::invalid_argument("rows may only contain bits");
    }
}

const std::vector<std::uint8_t>& Protocol::row(int input) const
{
    if (input < 1 || input > input_count())
        throw std::out_of_range("input " + std::to_string(input) + " outside 1.." +
                                std::to_string(input_count()));
    return rows_[static_cast<std::size_t>(input - 1)];
}

StateSet Protocol::zero_rows() const
{
    StateSet zeros;
    for (int v = 1; v <= input_count(); ++v) {
        const auto& bits = rows_[static_cast<std::size_t>(v - 1)];
        if (std::all_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b == 0; }))
            zeros.insert(v);
    }
    return zeros;
}

std::string Protocol::to_text() const
{
    std::string out;
    for (int v = 1; v <= input_count(); ++v) {
        out += "input " + std::to_string(v) + ": ";
        for (std::uint8_t bit : rows_[static_cast<std::size_t>(v - 1)])
            out += static_cast<char>('0' + bit);
        out += '\n';
    }
    return out;
}

MicroObservation identify_single(const Graph& g, int hidden_initial, int probe)
{
    if (!g.valid_vertex(hidden_initial))
        throw std::out_of_range("hidden state " + std::to_string(hidden_initial) +
                                " outside 1.." + std::to_string(g.vertex_count()));
    const int bit = output_bit(transition(g, hidden_initial, probe));
    const auto [zero, one] = partition_for_input(g, probe);
    return {probe, bit, bit == 1 ? one : zero};
}

namespace {

// Stream splitting: row v of a protocol draws from a generator seeded with
// (seed, v), so rows can be produced in any order or in parallel.
std::mt19937_64 row_engine(std::uint64_t seed, int input)
{
    std::seed_seq sequence{static_cast<std::uint32_t>(seed & 0xffffffffu),
                           static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(input)};
    return std::mt19937_64(sequence);
}

double unit_interval(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);  // 2^-53
}

}  // namespace

Protocol run_protocol(const Ensemble& e, int samples_per_row, std::uint64_t seed)
{
    if (samples_per_row < 1) throw std::invalid_argument("samples_per_row must be positive");
    const Graph& g = e.graph();
    const std::vector<int> states = e.support().members();
    std::vector<double> cumulative(e.weights().size());
    std::partial_sum(e.weights().begin(), e.weights().end(), cumulative.begin());

    std::vector<std::vector<std::uint8_t>> rows(
        static_cast<std::size_t>(g.vertex_count()));
    for (int v = 1; v <= g.vertex_count(); ++v) {
        auto rng = row_engine(seed, v);
        auto& row = rows[static_cast<std::size_t>(v - 1)];
        row.reserve(static_cast<std::size_t>(samples_per_row));
        for (int s = 0; s < samples_per_row; ++s) {
            const double u = unit_interval(rng);
            std::size_t pick = cumulative.size() - 1;
            for (std::size_t i = 0; i < cumulative.size(); ++i)
                if (u < cumulative[i]) {
                    pick = i;
                    break;
                }
            row.push_back(static_cast<std::uint8_t>(
                output_bit(transition(g, states[pick], v))));
        }
    }
    return Protocol(std::move(rows), samples_per_row, seed);
}

Protocol run_protocol_exhaustive(const Ensemble& e)
{
    const Graph& g = e.graph();
    const std::vector<int> states = e.support().members();
    std::vector<std::vector<std::uint8_t>> rows(
        static_cast<std::size_t>(g.vertex_count()));
    for (int v = 1; v <= g.vertex_count(); ++v) {
        auto& row = rows[static_cast<std::size_t>(v - 1)];
        row.reserve(states.size());
        for (int state : states)
            row.push_back(static_cast<std::uint8_t>(output_bit(transition(g, state, v))));
    }
    return Protocol(std::move(rows), static_cast<int>(states.size()), 0);
}

StateSet infer_macrostate(const Graph& g, const Protocol& p)
{
    if (p.input_count() != g.vertex_count())
        throw std::invalid_argument("protocol rows do not cover the graph's inputs");
    return perp(g, p.zero_rows());
}

bool distinguishable(const Graph& g, StateSet a, StateSet b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("supports must be nonempty");
    if (!a.subset_of(g.vertices()) || !b.subset_of(g.vertices()))
        throw std::invalid_argument("supports must lie inside the vertex set");
    return closure(g, a) != closure(g, b);
}

}  // namespace autlog
