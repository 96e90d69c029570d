#include "autlog/commands.hpp"

#include "doctest.h"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace autlog::cli;

namespace {

struct TempFile {
    std::filesystem::path path;

    explicit TempFile(const std::string& contents)
    {
        static std::mt19937_64 rng(std::random_device{}());
        path = std::filesystem::temp_directory_path() /
               ("autlog_test_" + std::to_string(rng()) + ".txt");
        std::ofstream out(path, std::ios::binary);
        out << contents;
    }

    ~TempFile() { std::filesystem::remove(path); }
};

const char* kPathGraph = "# path on four vertices\n4\n1 2\n2 3\n3 4\n";

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <typename Cmd>
Run invoke(Cmd cmd, const Config& cfg)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cmd(cfg, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze summarizes both logics")
{
    const TempFile file(kPathGraph);
    Config cfg;
    cfg.graph_path = file.path.string();

    const Run run = invoke(cmd_analyze, cfg);
    CHECK(run.code == 0);
    CHECK(run.err.empty());
    CHECK(run.out.find("graph: n=4, edges=3") != std::string::npos);
    CHECK(run.out.find("inputs {1,4}: V0={3,4} V1={1,2}") != std::string::npos);
    CHECK(run.out.find("micro logic: MO3 (8 elements)") != std::string::npos);
    CHECK(run.out.find("macro logic: 6 closed sets") != std::string::npos);
    CHECK(run.out.find(" {} {1} {4} {1,2} {3,4} {1,2,3,4}") != std::string::npos);
    CHECK(run.out.find("ortholattice axioms: all hold") != std::string::npos);
    CHECK(run.out.find("orthomodular: no (a={1}, b={1,2})") != std::string::npos);
    CHECK(run.out.find("micro only (2): {1,2,3} {2,3,4}") != std::string::npos);
    CHECK(run.out.find("macro only (0):") != std::string::npos);

    // byte-identical reruns
    CHECK(invoke(cmd_analyze, cfg).out == run.out);
}

TEST_CASE("analyze emits machine-readable json")
{
    const TempFile file(kPathGraph);
    Config cfg;
    cfg.graph_path = file.path.string();
    cfg.format = Format::json;

    const Run run = invoke(cmd_analyze, cfg);
    REQUIRE(run.code == 0);
    const auto doc = nlohmann::json::parse(run.out);
    CHECK(doc["graph"]["n"] == 4);
    CHECK(doc["micro"]["mo_order"] == 3);
    CHECK(doc["micro"]["elements"].size() == 8);
    CHECK(doc["macro"]["closed_sets"].size() == 6);
    CHECK(doc["ortholattice"]["all_passed"] == true);
    CHECK(doc["orthomodular"]["holds"] == false);
    CHECK(doc["orthomodular"]["counterexample"]["a"] == nlohmann::json::array({1}));
    CHECK(doc["overlap"]["micro_only"].size() == 2);
    CHECK(invoke(cmd_analyze, cfg).out == run.out);
}

TEST_CASE("a malformed file reports the line and leaves stdout empty")
{
    const TempFile file("4\n1 2\n1 1\n");
    Config cfg;
    cfg.graph_path = file.path.string();

    const Run run = invoke(cmd_analyze, cfg);
    CHECK(run.code == 1);
    CHECK(run.out.empty());
    CHECK(run.err.find(":3:") != std::string::npos);
    CHECK(run.err.find("self-loop") != std::string::npos);

    Config missing;
    missing.graph_path = "/nonexistent/autlog.txt";
    const Run gone = invoke(cmd_analyze, missing);
    CHECK(gone.code == 1);
    CHECK(gone.out.empty());
    CHECK(gone.err.find("cannot open") != std::string::npos);
}

TEST_CASE("dot output draws the Hasse diagrams only for micro and macro")
{
    const TempFile file(kPathGraph);
    Config cfg;
    cfg.graph_path = file.path.string();
    cfg.format = Format::dot;

    const Run micro = invoke(cmd_micro, cfg);
    CHECK(micro.code == 0);
    CHECK(micro.out.find("digraph micro_logic {") == 0);
    std::size_t arrows = 0;
    for (std::size_t pos = micro.out.find("->"); pos != std::string::npos;
         pos = micro.out.find("->", pos + 1))
        ++arrows;
    CHECK(arrows == 12);

    const Run macro = invoke(cmd_macro, cfg);
    CHECK(macro.code == 0);
    CHECK(macro.out.find("digraph macro_logic {") == 0);
    arrows = 0;
    for (std::size_t pos = macro.out.find("->"); pos != std::string::npos;
         pos = macro.out.find("->", pos + 1))
        ++arrows;
    CHECK(arrows == 6);

    const Run rejected = invoke(cmd_analyze, cfg);
    CHECK(rejected.code == 2);
    CHECK(rejected.out.empty());
}

TEST_CASE("macro text lists ortho partners and covers")
{
    const TempFile file(kPathGraph);
    Config cfg;
    cfg.graph_path = file.path.string();

    const Run run = invoke(cmd_macro, cfg);
    CHECK(run.code == 0);
    CHECK(run.out.find("{1} ortho {3,4}") != std::string::npos);
    CHECK(run.out.find("{1,2} -> {1,2,3,4}") != std::string::npos);
    CHECK(run.out.find("orthomodular: no (a={1}, b={1,2})") != std::string::npos);
}

TEST_CASE("compare contrasts the two testable families")
{
    const TempFile file(kPathGraph);
    Config cfg;
    cfg.graph_path = file.path.string();

    const Run run = invoke(cmd_compare, cfg);
    CHECK(run.code == 0);
    CHECK(run.out.find("micro family (8):") != std::string::npos);
    CHECK(run.out.find("macro family (6):") != std::string::npos);
    CHECK(run.out.find("micro only (2): {1,2,3} {2,3,4}") != std::string::npos);
}

TEST_CASE("simulate infers the macrostate from the protocol")
{
    const TempFile file(kPathGraph);
    Config cfg;
    cfg.graph_path = file.path.string();
    cfg.exhaustive = true;

    cfg.support = "1";
    const Run lone = invoke(cmd_simulate, cfg);
    CHECK(lone.code == 0);
    CHECK(lone.out.find("input 3: 0\n") != std::string::npos);
    CHECK(lone.out.find("zero rows: {3,4}") != std::string::npos);
    CHECK(lone.out.find("inferred macrostate: {1}") != std::string::npos);

    cfg.support = "1,2,3";
    const Run low = invoke(cmd_simulate, cfg);
    CHECK(low.out.find("inferred macrostate: {1,2,3,4}") != std::string::npos);

    cfg.support = "2,3,4";
    const Run high = invoke(cmd_simulate, cfg);
    CHECK(high.out.find("inferred macrostate: {1,2,3,4}") != std::string::npos);

    cfg.exhaustive = false;
    cfg.support = "1";
    cfg.samples = 25;
    cfg.seed = 5;
    const Run sampled = invoke(cmd_simulate, cfg);
    CHECK(sampled.code == 0);
    CHECK(sampled.out.find("mode: sampled (samples=25, seed=5)") != std::string::npos);
    CHECK(invoke(cmd_simulate, cfg).out == sampled.out);

    cfg.support = "5";
    const Run outside = invoke(cmd_simulate, cfg);
    CHECK(outside.code == 2);
    CHECK(outside.out.empty());
    CHECK(outside.err.find("bad support") != std::string::npos);

    cfg.support = "";
    const Run empty = invoke(cmd_simulate, cfg);
    CHECK(empty.code == 2);
}

TEST_CASE("run prints one output bit per input")
{
    const TempFile file(kPathGraph);
    Config cfg;
    cfg.graph_path = file.path.string();

    cfg.initial = 1;
    cfg.inputs = "2 3 3";
    CHECK(invoke(cmd_run, cfg).out == "1 1 1\n");

    cfg.inputs = "3";
    CHECK(invoke(cmd_run, cfg).out == "0\n");

    cfg.initial = 0;
    cfg.inputs = "1";
    CHECK(invoke(cmd_run, cfg).out == "0\n");

    cfg.initial = 1;
    cfg.inputs = "9";
    const Run bad = invoke(cmd_run, cfg);
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());

    cfg.inputs = "2 x";
    CHECK(invoke(cmd_run, cfg).code == 2);

    cfg.initial = 7;
    cfg.inputs = "2";
    CHECK(invoke(cmd_run, cfg).code == 2);
}
