#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace autlog::cli {

enum class Format { text, dot, json };

struct Config {
    std::string graph_path;
    Format format = Format::text;
    std::uint64_t seed = 0;
    int samples = 100;
    bool exhaustive = false;
    std::string support;  // comma-separated, e.g. "1,2,3"
    std::string inputs;   // whitespace-separated, e.g. "2 3 3"
    int initial = 0;
};

// Each command returns the process exit code: 0 on success, 1 when the
// graph file cannot be read or parsed, 2 on a usage error. Results go to
// `out`, diagnostics to `err`; nothing is written to `out` on failure, and
// output is byte-identical across runs with equal inputs.
int cmd_analyze(const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_micro(const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_macro(const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_compare(const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_simulate(const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_run(const Config& cfg, std::ostream& out, std::ostream& err);

}  // namespace autlog::cli
