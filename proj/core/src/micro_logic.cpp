#include "autlog/micro_logic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace autlog {

std::pair<StateSet, StateSet> partition_for_input(const Graph& g, int input)
{
    const StateSet one = g.closed_neighborhood(input);
    return {one.complement_in(g.vertex_count()), one};
}

std::vector<Partition> distinct_partitions(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<Partition> classes;
    // key: the unordered pair of block masks
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> index;
    for (int v = 1; v <= n; ++v) {
        const StateSet one = g.closed_neighborhood(v);
        const StateSet zero = one.complement_in(n);
        if (zero.empty()) continue;  // trivial split, nothing observable
        const auto key = std::make_pair(std::min(one.mask(), zero.mask()),
                                        std::max(one.mask(), zero.mask()));
        const auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, classes.size());
            classes.push_back(Partition{StateSet::single(v), zero, one});
        } else {
            classes[it->second].inputs.insert(v);
        }
    }
    return classes;  // first-seen order = ascending smallest input
}

bool is_testable_micro(const Graph& g, StateSet a)
{
    const int n = g.vertex_count();
    if (!a.subset_of(StateSet::full(n)))
        throw std::invalid_argument("set " + a.to_string() + " is not a subset of the vertex set");
    if (a.empty() || a == StateSet::full(n)) return true;
    for (int v = 1; v <= n; ++v) {
        const StateSet one = g.closed_neighborhood(v);
        if (a == one || a == one.complement_in(n)) return true;
    }
    return false;
}

MicroLogic MicroLogic::build(const Graph& g)
{
    MicroLogic m;
    m.n_ = g.vertex_count();
    m.partitions_ = distinct_partitions(g);
    m.elements_.push_back(StateSet{});
    m.elements_.push_back(g.vertices());
    std::unordered_set<std::uint32_t> seen{0u, g.vertices().mask()};
    for (const Partition& p : m.partitions_)
        for (StateSet block : {p.one_block, p.zero_block})
            if (seen.insert(block.mask()).second) m.elements_.push_back(block);
    return m;
}

bool MicroLogic::contains(StateSet a) const
{
    return std::find(elements_.begin(), elements_.end(), a) != elements_.end();
}

void MicroLogic::require_element(StateSet a) const
{
    if (!contains(a))
        throw std::invalid_argument(a.to_string() + " is not an element of the micro logic");
}

bool MicroLogic::implies(StateSet a, StateSet b) const
{
    require_element(a);
    require_element(b);
    if (a == b || a.empty() || b == top()) return true;
    for (const Partition& p : partitions_) {
        const bool a_in = a == p.zero_block || a == p.one_block;
        const bool b_in = b == p.zero_block || b == p.one_block;
        if (a_in && b_in && a.subset_of(b)) return true;
    }
    return false;
}

StateSet MicroLogic::negation(StateSet a) const
{
    require_element(a);
    const StateSet c = a.complement_in(n_);
    if (!contains(c))
        throw std::logic_error("complement of " + a.to_string() +
                               " escaped the pasted structure");
    return c;
}

int MicroLogic::mo_order() const
{
    const std::size_t middles = elements_.size() - 2;
    if (middles != 2 * partitions_.size())
        throw std::logic_error("middle element count does not match the partition count");
    for (std::size_t i = 2; i < elements_.size(); ++i) {
        const StateSet partner = elements_[i].complement_in(n_);
        if (partner == elements_[i] || !contains(partner) || partner.empty() ||
            partner == top())
            throw std::logic_error("middle element " + elements_[i].to_string() +
                                   " lacks a complementary partner");
    }
    for (std::size_t i = 2; i < elements_.size(); ++i)
        for (std::size_t j = 2; j < elements_.size(); ++j)
            if (i != j && implies(elements_[i], elements_[j]))
                throw std::logic_error("middle elements " + elements_[i].to_string() + " and " +
                                       elements_[j].to_string() + " are comparable");
    return static_cast<int>(partitions_.size());
}

Poset MicroLogic::poset() const
{
    std::vector<std::string> labels;
    labels.reserve(elements_.size());
    for (StateSet e : elements_) labels.push_back(e.to_string());
    std::vector<std::vector<bool>> leq(elements_.size(),
                                       std::vector<bool>(elements_.size(), false));
    for (std::size_t i = 0; i < elements_.size(); ++i)
        for (std::size_t j = 0; j < elements_.size(); ++j)
            leq[i][j] = implies(elements_[i], elements_[j]);
    return Poset(std::move(labels), std::move(leq));
}

}  // namespace autlog
