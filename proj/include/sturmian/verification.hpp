#pragma once

#include <string>
#include <vector>

#include "sturmian/counting.hpp"
#include "sturmian/oracle.hpp"
#include "sturmian/palindrome.hpp"
#include "sturmian/word.hpp"

// Formula-vs-oracle comparison harness. Each check pits a closed form or an
// engine result against the brute-force oracle on a margin-protected context
// and reports exact values; nothing here tolerates approximate agreement.

namespace sturmian {

struct CheckResult {
    std::string name;
    i64 formula_value = 0;
    i64 oracle_value = 0;
    bool pass = false;
    u64 incomplete_centers = 0;  // oracle expansions cut off by the context edge
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t failures() const;
    std::string to_json() const;
};

// ----------------------------------------------------------------------------
// Margin contexts
//
// The closed forms describe words embedded in an infinite Sturmian word, so
// comparing them against a bare finite word mixes in boundary effects. The
// harness instead plants a small window inside a padding seed, expands the
// whole thing, and analyzes the window's image: every core center then has
// genuine context on both sides.
//
// The padding seed is the expansion of the last pair of pi applied
// margin_levels times to "a" (deepened automatically until it contains an
// interior aab factor). SingleCenter mode uses the middle a of that factor
// as the window, so the core is exactly the expansion of "a" through pi;
// SeedBlock mode uses the whole aab, which realizes both block shapes and an
// unequal block adjacency at every level.
// ----------------------------------------------------------------------------

enum class WindowMode { SingleCenter, SeedBlock };

struct MarginContext {
    LeveledWord lw;                                // padded expansion
    ContextWindow ctx;                             // core = window image
    std::vector<std::pair<u64, u64>> level_spans;  // window image span per level
    int margin_levels = 1;
};

MarginContext build_margin_context(const DefiningSequence& pi, WindowMode mode,
                                   int margin_levels, u64 cap = kDefaultLengthCap);

// ----------------------------------------------------------------------------
// Check suites
// ----------------------------------------------------------------------------

// Everything below retries with a deeper margin (up to +5 levels) while any
// core expansion is incomplete, then records the residual count.

// Engine distinct set == oracle distinct strings over the core, with the
// cardinality formula. Context-seed artifacts (centers original below level
// 1) are excluded from the oracle side; they belong to the padding, not to
// the expansion of pi.
CheckResult check_distinct_equality(const DefiningSequence& pi, int margin_levels = 1,
                                    u64 cap = kDefaultLengthCap);

// Every distinct maximal palindrome also occurs inside a longer same-centric
// palindrome somewhere in the context. A miss means the context was too
// small, not a disproof, so the result reports misses rather than throwing.
CheckResult check_lemma6_echo(const DefiningSequence& pi, int margin_levels = 2,
                              u64 cap = kDefaultLengthCap);

// Counting checks, occurrence agreement, originality invariants and the
// reversal-closure property for one defining sequence, plus the two checks
// above. Check names are stable identifiers.
VerificationReport verify_sequence(const DefiningSequence& pi, int margin_levels = 1,
                                   u64 cap = kDefaultLengthCap);

// Random defining sequences: each level's pair drawn uniformly from the
// valid pairs with max(p, p') <= max_p, length uniform in 1..max_n.
// Deterministic for a fixed rng_seed.
std::vector<DefiningSequence> random_sequences(u64 rng_seed, int count, int max_n, int max_p);

// Every defining sequence with size <= max_n over pairs with max <= max_p.
std::vector<DefiningSequence> all_sequences(int max_n, int max_p);

// verify_sequence (minus the echo check) over a random batch; check names
// are prefixed with the sequence index and text. The batch is the
// repository's main falsification gate.
VerificationReport verify_sweep(u64 rng_seed, int count, int max_n, int max_p,
                                int margin_levels = 1, u64 cap = kDefaultLengthCap);

}  // namespace sturmian
