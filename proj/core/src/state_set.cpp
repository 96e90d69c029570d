#include "autlog/state_set.hpp"

#include <charconv>
#include <stdexcept>

namespace autlog {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

void StateSet::insert(int v)
{
    if (v < 1 || v > max_vertices)
        throw std::out_of_range("state " + std::to_string(v) + " outside 1.." +
                                std::to_string(max_vertices));
    bits_ |= std::uint32_t{1} << (v - 1);
}

void StateSet::erase(int v)
{
    if (v < 1 || v > max_vertices)
        throw std::out_of_range("state " + std::to_string(v) + " outside 1.." +
                                std::to_string(max_vertices));
    bits_ &= ~(std::uint32_t{1} << (v - 1));
}

std::vector<int> StateSet::members() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest) + 1);
    return out;
}

bool operator<(StateSet a, StateSet b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    std::uint32_t ra = a.bits_;
    std::uint32_t rb = b.bits_;
    while (ra != 0 && rb != 0) {
        const int ma = std::countr_zero(ra);
        const int mb = std::countr_zero(rb);
        if (ma != mb) return ma < mb;
        ra &= ra - 1;
        rb &= rb - 1;
    }
    return false;
}

std::string StateSet::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (int v : members()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(v);
    }
    out += '}';
    return out;
}

StateSet parse_state_set(std::string_view text, int max_vertex)
{
    StateSet out;
    if (trim(text).empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view token =
            trim(comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos));
        if (token.empty()) throw std::invalid_argument("empty entry in state list");
        int v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
        if (v < 1 || v > max_vertex)
            throw std::out_of_range("state " + std::to_string(v) + " outside 1.." +
                                    std::to_string(max_vertex));
        out.insert(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace autlog
