#include "autlog/commands.hpp"

#include "autlog/automaton.hpp"
#include "autlog/experiments.hpp"
#include "autlog/graph.hpp"
#include "autlog/macro_logic.hpp"
#include "autlog/micro_logic.hpp"
#include "autlog/poset.hpp"

#include "json.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace autlog::cli {

namespace {

using nlohmann::json;

std::optional<Graph> load_graph(const std::string& path, std::ostream& err)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << path << ": cannot open file\n";
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_graph(buffer.str());
    } catch (const ParseError& e) {
        err << path << ":" << e.line() << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

int reject_dot(std::ostream& err)
{
    err << "dot output is only available for the micro and macro commands\n";
    return 2;
}

json set_json(StateSet s)
{
    return json(s.members());
}

json sets_json(const std::vector<StateSet>& sets)
{
    json out = json::array();
    for (StateSet s : sets) out.push_back(set_json(s));
    return out;
}

void print_family(std::ostream& out, const std::vector<StateSet>& sets)
{
    for (StateSet s : sets) out << " " << s.to_string();
    out << "\n";
}

void print_partitions(std::ostream& out, const std::vector<Partition>& partitions)
{
    out << "partitions: " << partitions.size() << "\n";
    for (const Partition& p : partitions)
        out << "  inputs " << p.inputs.to_string() << ": V0=" << p.zero_block.to_string()
            << " V1=" << p.one_block.to_string() << "\n";
}

json partitions_json(const std::vector<Partition>& partitions)
{
    json out = json::array();
    for (const Partition& p : partitions)
        out.push_back({{"inputs", set_json(p.inputs)},
                       {"v0", set_json(p.zero_block)},
                       {"v1", set_json(p.one_block)}});
    return out;
}

void print_ortholattice(std::ostream& out, const OrtholatticeReport& report)
{
    if (report.all_passed) {
        out << "ortholattice axioms: all hold\n";
        return;
    }
    out << "ortholattice axioms: VIOLATED\n";
    for (const AxiomCheck& check : report.checks)
        if (!check.passed) out << "  " << check.axiom << ": " << check.counterexample << "\n";
}

void print_orthomodular(std::ostream& out, const OrthomodularityResult& result)
{
    if (result.holds) {
        out << "orthomodular: yes\n";
    } else {
        out << "orthomodular: no (a=" << result.counterexample->first.to_string()
            << ", b=" << result.counterexample->second.to_string() << ")\n";
    }
}

json ortholattice_json(const OrtholatticeReport& report)
{
    json checks = json::array();
    for (const AxiomCheck& check : report.checks)
        checks.push_back({{"axiom", check.axiom},
                          {"passed", check.passed},
                          {"counterexample", check.counterexample}});
    return {{"all_passed", report.all_passed}, {"checks", checks}};
}

json orthomodular_json(const OrthomodularityResult& result)
{
    json out = {{"holds", result.holds}, {"counterexample", nullptr}};
    if (!result.holds)
        out["counterexample"] = {{"a", set_json(result.counterexample->first)},
                                 {"b", set_json(result.counterexample->second)}};
    return out;
}

json overlap_json(const OverlapReport& overlap)
{
    return {{"common", sets_json(overlap.common)},
            {"micro_only", sets_json(overlap.micro_only)},
            {"macro_only", sets_json(overlap.macro_only)}};
}

void print_overlap(std::ostream& out, const OverlapReport& overlap)
{
    out << "overlap of testable families:\n";
    out << "  common (" << overlap.common.size() << "):";
    print_family(out, overlap.common);
    out << "  micro only (" << overlap.micro_only.size() << "):";
    print_family(out, overlap.micro_only);
    out << "  macro only (" << overlap.macro_only.size() << "):";
    print_family(out, overlap.macro_only);
}

std::vector<int> parse_word(std::string_view text)
{
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ','))
            ++i;
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != ',') ++j;
        if (j > i) {
            const std::string_view token = text.substr(i, j - i);
            int value = 0;
            const auto [ptr, ec] =
                std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
            out.push_back(value);
        }
        i = j;
    }
    return out;
}

}  // namespace

int cmd_analyze(const Config& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.format == Format::dot) return reject_dot(err);
    const auto g = load_graph(cfg.graph_path, err);
    if (!g) return 1;

    const auto partitions = distinct_partitions(*g);
    const MicroLogic micro = MicroLogic::build(*g);
    const MacroLogic macro = MacroLogic::build(*g);
    const OrtholatticeReport lattice_report = check_ortholattice(macro);
    const OrthomodularityResult omod = check_orthomodular(macro);
    const OverlapReport overlap = overlap_report(*g);

    if (cfg.format == Format::json) {
        json edges = json::array();
        for (const auto& [u, v] : g->edges()) edges.push_back({u, v});
        json doc = {
            {"graph", {{"n", g->vertex_count()}, {"edges", edges}}},
            {"partitions", partitions_json(partitions)},
            {"micro",
             {{"mo_order", micro.mo_order()}, {"elements", sets_json(micro.elements())}}},
            {"macro", {{"closed_sets", sets_json(macro.closed_sets())}}},
            {"ortholattice", ortholattice_json(lattice_report)},
            {"orthomodular", orthomodular_json(omod)},
            {"overlap", overlap_json(overlap)},
        };
        out << doc.dump(2) << "\n";
        return 0;
    }

    out << "graph: n=" << g->vertex_count() << ", edges=" << g->edge_count() << "\n";
    print_partitions(out, partitions);
    out << "micro logic: MO" << micro.mo_order() << " (" << micro.elements().size()
        << " elements)\n";
    out << " ";
    print_family(out, micro.elements());
    out << "macro logic: " << macro.closed_sets().size() << " closed sets\n";
    out << " ";
    print_family(out, macro.closed_sets());
    print_ortholattice(out, lattice_report);
    print_orthomodular(out, omod);
    print_overlap(out, overlap);
    return 0;
}

int cmd_micro(const Config& cfg, std::ostream& out, std::ostream& err)
{
    const auto g = load_graph(cfg.graph_path, err);
    if (!g) return 1;
    const MicroLogic micro = MicroLogic::build(*g);

    if (cfg.format == Format::dot) {
        out << to_dot(micro.poset(), "micro_logic");
        return 0;
    }
    if (cfg.format == Format::json) {
        json doc = {
            {"mo_order", micro.mo_order()},
            {"partitions", partitions_json(micro.partitions())},
            {"elements", sets_json(micro.elements())},
        };
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "micro logic: MO" << micro.mo_order() << " (" << micro.elements().size()
        << " elements)\n";
    print_partitions(out, micro.partitions());
    out << "elements:\n";
    for (StateSet e : micro.elements()) out << "  " << e.to_string() << "\n";
    return 0;
}

int cmd_macro(const Config& cfg, std::ostream& out, std::ostream& err)
{
    const auto g = load_graph(cfg.graph_path, err);
    if (!g) return 1;
    const MacroLogic macro = MacroLogic::build(*g);
    const Poset poset = macro.poset();
    const auto covers = hasse_edges(poset);

    if (cfg.format == Format::dot) {
        out << to_dot(poset, "macro_logic");
        return 0;
    }

    const OrtholatticeReport lattice_report = check_ortholattice(macro);
    const OrthomodularityResult omod = check_orthomodular(macro);

    if (cfg.format == Format::json) {
        json ortho_pairs = json::array();
        for (StateSet s : macro.closed_sets())
            ortho_pairs.push_back({set_json(s), set_json(macro.ortho(s))});
        json edges = json::array();
        for (const auto& [a, b] : covers) edges.push_back({a, b});
        json doc = {
            {"closed_sets", sets_json(macro.closed_sets())},
            {"ortho", ortho_pairs},
            {"cover_edges", edges},
            {"ortholattice", ortholattice_json(lattice_report)},
            {"orthomodular", orthomodular_json(omod)},
        };
        out << doc.dump(2) << "\n";
        return 0;
    }

    out << "macro logic: " << macro.closed_sets().size() << " closed sets\n";
    for (StateSet s : macro.closed_sets())
        out << "  " << s.to_string() << " ortho " << macro.ortho(s).to_string() << "\n";
    out << "cover edges:\n";
    for (const auto& [a, b] : covers)
        out << "  " << poset.label(a) << " -> " << poset.label(b) << "\n";
    print_ortholattice(out, lattice_report);
    print_orthomodular(out, omod);
    return 0;
}

int cmd_compare(const Config& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.format == Format::dot) return reject_dot(err);
    const auto g = load_graph(cfg.graph_path, err);
    if (!g) return 1;
    const OverlapReport overlap = overlap_report(*g);

    if (cfg.format == Format::json) {
        json doc = {
            {"micro_family", sets_json(overlap.micro_family)},
            {"macro_family", sets_json(overlap.macro_family)},
            {"common", sets_json(overlap.common)},
            {"micro_only", sets_json(overlap.micro_only)},
            {"macro_only", sets_json(overlap.macro_only)},
        };
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "micro family (" << overlap.micro_family.size() << "):";
    print_family(out, overlap.micro_family);
    out << "macro family (" << overlap.macro_family.size() << "):";
    print_family(out, overlap.macro_family);
    out << "common (" << overlap.common.size() << "):";
    print_family(out, overlap.common);
    out << "micro only (" << overlap.micro_only.size() << "):";
    print_family(out, overlap.micro_only);
    out << "macro only (" << overlap.macro_only.size() << "):";
    print_family(out, overlap.macro_only);
    return 0;
}

int cmd_simulate(const Config& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.format == Format::dot) return reject_dot(err);
    const auto g = load_graph(cfg.graph_path, err);
    if (!g) return 1;

    StateSet support;
    try {
        support = parse_state_set(cfg.support, g->vertex_count());
    } catch (const std::exception& e) {
        err << "bad support: " << e.what() << "\n";
        return 2;
    }
    if (support.empty()) {
        err << "support must be a nonempty subset of 1.." << g->vertex_count() << "\n";
        return 2;
    }

    const Ensemble ensemble(*g, support);
    const Protocol protocol = cfg.exhaustive
                                  ? run_protocol_exhaustive(ensemble)
                                  : run_protocol(ensemble, cfg.samples, cfg.seed);
    const StateSet zeros = protocol.zero_rows();
    const StateSet inferred = infer_macrostate(*g, protocol);

    if (cfg.format == Format::json) {
        json rows = json::array();
        for (int v = 1; v <= protocol.input_count(); ++v) {
            std::string bits;
            for (std::uint8_t b : protocol.row(v)) bits += static_cast<char>('0' + b);
            rows.push_back({{"input", v}, {"bits", bits}});
        }
        json doc = {
            {"support", set_json(support)},
            {"mode", cfg.exhaustive ? "exhaustive" : "sampled"},
            {"samples_per_row", protocol.samples_per_row()},
            {"seed", protocol.seed()},
            {"rows", rows},
            {"zero_rows", set_json(zeros)},
            {"inferred", set_json(inferred)},
        };
        out << doc.dump(2) << "\n";
        return 0;
    }

    out << "support: " << support.to_string() << "\n";
    if (cfg.exhaustive)
        out << "mode: exhaustive (one probe per support state)\n";
    else
        out << "mode: sampled (samples=" << cfg.samples << ", seed=" << cfg.seed << ")\n";
    out << protocol.to_text();
    out << "zero rows: " << zeros.to_string() << "\n";
    out << "inferred macrostate: " << inferred.to_string() << "\n";
    return 0;
}

int cmd_run(const Config& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.format == Format::dot) return reject_dot(err);
    const auto g = load_graph(cfg.graph_path, err);
    if (!g) return 1;

    std::vector<int> word;
    std::vector<int> bits;
    try {
        word = parse_word(cfg.inputs);
        bits = run(*g, cfg.initial, word);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }

    if (cfg.format == Format::json) {
        json doc = {{"initial", cfg.initial}, {"inputs", word}, {"outputs", bits}};
        out << doc.dump(2) << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < bits.size(); ++i)
        out << (i == 0 ? "" : " ") << bits[i];
    out << "\n";
    return 0;
}

}  // namespace autlog::cli
