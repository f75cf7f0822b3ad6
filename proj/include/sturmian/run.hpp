#pragma once

#include <iosfwd>
#include <string>

#include "sturmian/word.hpp"

namespace sturmian {

enum class OutputFormat { Text, Json, Tsv };

// Throws ParseError on anything but "text", "json", "tsv".
OutputFormat parse_format(const std::string& name);

struct RunConfig {
    std::string command;  // generate | analyze | verify | bistandard | bench
    std::string pi_text;  // required except: optional for verify, unused by bench
    std::string seed = "a";
    u64 length_cap = kDefaultLengthCap;
    OutputFormat format = OutputFormat::Text;
    int margin_levels = 1;
    u64 rng_seed = 1;
    int sweep_count = 100;
    int sweep_max_n = 5;
    int sweep_max_p = 4;
    int iterations = 6;   // bistandard chain length; bench size steps
    std::string out_file; // generate: also write the word here, ignoring the
                          // print threshold
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitSizeLimit = 3;

// Words longer than this are reported by their statistics instead of being
// printed inline.
inline constexpr u64 kPrintThreshold = 10'000;

// Executes one command, writing the report to `out` and diagnostics to
// `err`. Returns an exit code instead of throwing: input problems map to
// kExitInputError, cap and overflow conditions to kExitSizeLimit, failed
// verification to kExitVerifyFailed. Output is byte-stable for a fixed
// config, except for the timing figures of bench.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sturmian
