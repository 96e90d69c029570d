#include "autlog/poset.hpp"

#include <stdexcept>

namespace autlog {

Poset::Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq))
{
    const std::size_t n = labels_.size();
    if (leq_.size() != n)
        throw std::invalid_argument("relation matrix does not match the element count");
    for (const auto& row : leq_)
        if (row.size() != n)
            throw std::invalid_argument("relation matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        if (!leq_[i][i])
            throw std::invalid_argument("relation is not reflexive at element " +
                                        std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && leq_[i][j] && leq_[j][i])
                throw std::invalid_argument("relation is not antisymmetric on elements " +
                                            std::to_string(i) + "," + std::to_string(j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (leq_[i][j])
                for (std::size_t k = 0; k < n; ++k)
                    if (leq_[j][k] && !leq_[i][k])
                        throw std::invalid_argument(
                            "relation is not transitive on elements " + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k));
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const Poset& p)
{
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    const std::size_t n = p.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!p.less(a, b)) continue;
            bool direct = true;
            for (std::size_t c = 0; c < n && direct; ++c)
                if (p.less(a, c) && p.less(c, b)) direct = false;
            if (direct) covers.emplace_back(a, b);
        }
    return covers;
}

std::optional<std::size_t> least_upper_bound(const Poset& p, std::size_t a, std::size_t b)
{
    const std::size_t n = p.size();
    std::vector<std::size_t> uppers;
    for (std::size_t c = 0; c < n; ++c)
        if (p.leq(a, c) && p.leq(b, c)) uppers.push_back(c);
    for (std::size_t l : uppers) {
        bool least = true;
        for (std::size_t c : uppers)
            if (!p.leq(l, c)) {
                least = false;
                break;
            }
        if (least) return l;  // unique by antisymmetry
    }
    return std::nullopt;
}

std::optional<std::size_t> greatest_lower_bound(const Poset& p, std::size_t a, std::size_t b)
{
    const std::size_t n = p.size();
    std::vector<std::size_t> lowers;
    for (std::size_t c = 0; c < n; ++c)
        if (p.leq(c, a) && p.leq(c, b)) lowers.push_back(c);
    for (std::size_t g : lowers) {
        bool greatest = true;
        for (std::size_t c : lowers)
            if (!p.leq(c, g)) {
                greatest = false;
                break;
            }
        if (greatest) return g;
    }
    return std::nullopt;
}

LatticeCheck is_lattice(const Poset& p)
{
    const std::size_t n = p.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (!least_upper_bound(p, a, b) || !greatest_lower_bound(p, a, b))
                return {false, std::make_pair(a, b)};
    return {true, std::nullopt};
}

namespace {

std::string escape_label(const std::string& s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string to_dot(const Poset& p, const std::string& graph_name)
{
    std::string out = "digraph " + graph_name + " {\n";
    out += "  rankdir=BT;\n";
    out += "  node [shape=plaintext];\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        out += "  e" + std::to_string(i) + " [label=\"" + escape_label(p.label(i)) + "\"];\n";
    for (const auto& [a, b] : hasse_edges(p))
        out += "  e" + std::to_string(a) + " -> e" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace autlog
