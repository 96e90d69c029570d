#include "autlog/macro_logic.hpp"

#include "autlog/micro_logic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace autlog {

StateSet perp(const Graph& g, StateSet a)
{
    const int n = g.vertex_count();
    if (!a.subset_of(StateSet::full(n)))
        throw std::invalid_argument("set " + a.to_string() + " is not a subset of the vertex set");
    std::uint32_t mask = StateSet::full(n).mask();
    for (int x : a.members()) mask &= ~g.closed_neighborhood(x).mask();
    return StateSet::from_mask(mask);
}

StateSet closure(const Graph& g, StateSet a)
{
    return perp(g, perp(g, a));
}

bool is_testable_macro(const Graph& g, StateSet b)
{
    return closure(g, b) == b;
}

MacroLogic MacroLogic::build(const Graph& g)
{
    MacroLogic m(g);
    std::vector<std::uint32_t> family{g.vertices().mask()};
    m.members_.insert(family[0]);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        const std::uint32_t generator = perp(g, StateSet::single(v)).mask();
        if (m.members_.insert(generator).second) family.push_back(generator);
    }
    // close under pairwise intersection; new members join the worklist
    for (std::size_t i = 1; i < family.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const std::uint32_t meet = family[i] & family[j];
            if (m.members_.insert(meet).second) family.push_back(meet);
        }
    m.closed_.reserve(family.size());
    for (std::uint32_t mask : family) m.closed_.push_back(StateSet::from_mask(mask));
    std::sort(m.closed_.begin(), m.closed_.end());

    if (!m.is_closed(StateSet{}) || !m.is_closed(g.vertices()))
        throw std::logic_error("closed-set family is missing a bound");
    for (StateSet a : m.closed_)
        if (!m.is_closed(perp(g, a)))
            throw std::logic_error("perp of " + a.to_string() + " escaped the family");
    return m;
}

void MacroLogic::require_closed(StateSet a) const
{
    if (!is_closed(a))
        throw std::invalid_argument(a.to_string() + " is not a closed set of this logic");
}

StateSet MacroLogic::ortho(StateSet a) const
{
    require_closed(a);
    return perp(graph_, a);
}

StateSet MacroLogic::meet(StateSet a, StateSet b) const
{
    require_closed(a);
    require_closed(b);
    const StateSet result = a & b;
    if (!is_closed(result))
        throw std::logic_error("intersection " + result.to_string() + " is not closed");
    return result;
}

StateSet MacroLogic::join(StateSet a, StateSet b) const
{
    require_closed(a);
    require_closed(b);
    const StateSet result = closure(graph_, a | b);
    if (!is_closed(result))
        throw std::logic_error("join " + result.to_string() + " is not closed");
    return result;
}

Poset MacroLogic::poset() const
{
    std::vector<std::string> labels;
    labels.reserve(closed_.size());
    for (StateSet s : closed_) labels.push_back(s.to_string());
    std::vector<std::vector<bool>> leq(closed_.size(), std::vector<bool>(closed_.size(), false));
    for (std::size_t i = 0; i < closed_.size(); ++i)
        for (std::size_t j = 0; j < closed_.size(); ++j)
            leq[i][j] = closed_[i].subset_of(closed_[j]);
    return Poset(std::move(labels), std::move(leq));
}

OrtholatticeReport check_ortholattice(const MacroLogic& m)
{
    const auto& family = m.closed_sets();
    const StateSet top = StateSet::full(m.vertex_count());
    OrtholatticeReport report;
    const auto add = [&report](std::string axiom, bool passed, std::string counterexample) {
        report.checks.push_back({std::move(axiom), passed, std::move(counterexample)});
    };

    {
        bool ok = true;
        std::string cex;
        for (StateSet a : family)
            if (m.ortho(m.ortho(a)) != a) {
                ok = false;
                cex = "a=" + a.to_string();
                break;
            }
        add("orthocomplement is an involution", ok, cex);
    }
    {
        bool ok = true;
        std::string cex;
        for (StateSet a : family) {
            for (StateSet b : family)
                if (a.subset_of(b) && !m.ortho(b).subset_of(m.ortho(a))) {
                    ok = false;
                    cex = "a=" + a.to_string() + ", b=" + b.to_string();
                    break;
                }
            if (!ok) break;
        }
        add("orthocomplement reverses the order", ok, cex);
    }
    {
        bool ok = true;
        std::string cex;
        for (StateSet a : family)
            if (!m.meet(a, m.ortho(a)).empty()) {
                ok = false;
                cex = "a=" + a.to_string();
                break;
            }
        add("meet with the orthocomplement is bottom", ok, cex);
    }
    {
        bool ok = true;
        std::string cex;
        for (StateSet a : family)
            if (m.join(a, m.ortho(a)) != top) {
                ok = false;
                cex = "a=" + a.to_string();
                break;
            }
        add("join with the orthocomplement is top", ok, cex);
    }
    {
        // greatest lower bound: the intersection, which must itself be closed
        bool ok = true;
        std::string cex;
        for (StateSet a : family) {
            for (StateSet b : family) {
                const StateSet glb = a & b;
                bool good = m.is_closed(glb);
                for (StateSet c : family)
                    if (good && c.subset_of(a) && c.subset_of(b) && !c.subset_of(glb))
                        good = false;
                if (!good) {
                    ok = false;
                    cex = "a=" + a.to_string() + ", b=" + b.to_string();
                    break;
                }
            }
            if (!ok) break;
        }
        add("every pair has a greatest lower bound", ok, cex);
    }
    {
        // least upper bound: the closure of the union, below every upper bound
        bool ok = true;
        std::string cex;
        for (StateSet a : family) {
            for (StateSet b : family) {
                const StateSet lub = m.join(a, b);
                bool good = a.subset_of(lub) && b.subset_of(lub);
                for (StateSet c : family)
                    if (good && a.subset_of(c) && b.subset_of(c) && !lub.subset_of(c))
                        good = false;
                if (!good) {
                    ok = false;
                    cex = "a=" + a.to_string() + ", b=" + b.to_string();
                    break;
                }
            }
            if (!ok) break;
        }
        add("every pair has a least upper bound", ok, cex);
    }

    report.all_passed = std::all_of(report.checks.begin(), report.checks.end(),
                                    [](const AxiomCheck& c) { return c.passed; });
    return report;
}

OrthomodularityResult check_orthomodular(const MacroLogic& m)
{
    const auto& family = m.closed_sets();
    for (StateSet a : family)
        for (StateSet b : family) {
            if (!a.subset_of(b)) continue;
            if (m.join(a, m.meet(m.ortho(a), b)) != b)
                return {false, std::make_pair(a, b)};
        }
    return {true, std::nullopt};
}

OverlapReport overlap_report(const Graph& g)
{
    OverlapReport report;
    std::set<StateSet> micro{StateSet{}, g.vertices()};
    const auto partitions = distinct_partitions(g);
    for (const Partition& p : partitions) {
        micro.insert(p.zero_block);
        micro.insert(p.one_block);
    }
    report.micro_family.assign(micro.begin(), micro.end());
    report.macro_family = MacroLogic::build(g).closed_sets();

    std::set_intersection(report.micro_family.begin(), report.micro_family.end(),
                          report.macro_family.begin(), report.macro_family.end(),
                          std::back_inserter(report.common));
    std::set_difference(report.micro_family.begin(), report.micro_family.end(),
                        report.macro_family.begin(), report.macro_family.end(),
                        std::back_inserter(report.micro_only));
    std::set_difference(report.macro_family.begin(), report.macro_family.end(),
                        report.micro_family.begin(), report.micro_family.end(),
                        std::back_inserter(report.macro_only));

    // every singleton perp is both a partition block (or bound) and closed,
    // so it must sit in the intersection
    for (int v = 1; v <= g.vertex_count(); ++v) {
        const StateSet zero = perp(g, StateSet::single(v));
        if (!std::binary_search(report.common.begin(), report.common.end(), zero))
            throw std::logic_error("zero block " + zero.to_string() +
                                   " missing from the family intersection");
    }
    return report;
}

}  // namespace autlog
