#include "autlog/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <optional>

namespace autlog {

Graph::Graph(int n) : n_(n)
{
    if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
    if (n > StateSet::max_vertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) +
                                    " exceeds the supported maximum " +
                                    std::to_string(StateSet::max_vertices));
    adjacency_.assign(static_cast<std::size_t>(n), 0u);
}

void Graph::check_vertex(int v) const
{
    if (!valid_vertex(v))
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." +
                                std::to_string(n_));
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u - 1)] |= std::uint32_t{1} << (v - 1);
    adjacency_[static_cast<std::size_t>(v - 1)] |= std::uint32_t{1} << (u - 1);
}

int Graph::edge_count() const
{
    int twice = 0;
    for (std::uint32_t row : adjacency_) twice += std::popcount(row);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    return ((adjacency_[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1u) != 0;
}

StateSet Graph::closed_neighborhood(int v) const
{
    check_vertex(v);
    return StateSet::from_mask(adjacency_[static_cast<std::size_t>(v - 1)] |
                               (std::uint32_t{1} << (v - 1)));
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (((adjacency_[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1u) != 0)
                out.emplace_back(u, v);
    return out;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_words(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(std::string_view token, int line)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "non-integer token '" + std::string(token) + "'");
    return value;
}

}  // namespace

Graph parse_graph(std::string_view text)
{
    std::optional<Graph> graph;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view raw =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        ++line_no;
        const std::string_view line = trim(raw);
        if (!line.empty() && line.front() != '#') {
            const auto tokens = split_words(line);
            if (!graph) {
                if (tokens.size() != 1)
                    throw ParseError(line_no, "expected the vertex count alone on the first line");
                const int n = parse_int(tokens[0], line_no);
                try {
                    graph.emplace(n);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(line_no, e.what());
                }
            } else {
                if (tokens.size() != 2)
                    throw ParseError(line_no, "expected an edge line 'u v'");
                const int u = parse_int(tokens[0], line_no);
                const int v = parse_int(tokens[1], line_no);
                try {
                    graph->add_edge(u, v);
                } catch (const std::exception& e) {
                    throw ParseError(line_no, e.what());
                }
            }
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    if (!graph) throw ParseError(std::max(line_no, 1), "missing vertex count");
    return *graph;
}

}  // namespace autlog
