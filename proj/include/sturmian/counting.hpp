#pragma once

#include <string>

#include "sturmian/word.hpp"

namespace sturmian {

// Closed-form palindrome counts for one word X = image of Y under a pair,
// where (ya, yb) are Y's letter counts. All arithmetic is 64-bit and
// overflow raises OverflowError; counts never wrap.
struct CountReport {
    u64 k_a = 0;         // a-centered maximal occurrences: p*ya + p'*yb
    u64 k_b = 0;         // b-centered: ya + yb
    u64 k_aa = 0;        // aa-centered: (p-1)*ya + (p'-1)*yb
    u64 k_total = 0;     // k_a + k_b + k_aa == 2|X| - 2|Y|
    u64 originals_total = 0;  // occurrences original at the ultimate level
    u64 m_distinct = 0;  // distinct maximal palindromes of the full word

    std::string to_json() const;
};

// Occurrence counts by center kind for X = image of (ya, yb).
CountReport theorem1_counts(const ParameterPair& pair, u64 ya, u64 yb);

// The total occurrence count written with the shorter block length factored
// out: 2p|Y| + 2|Y|_b when p < p', 2p'|Y| + 2|Y|_a when p > p'. Always equal
// to theorem1_counts(...).k_total; kept separate so the agreement itself is
// a reportable check.
u64 theorem1_case_split(const ParameterPair& pair, u64 ya, u64 yb);

// Occurrences original at the level of X, where X is the image under pair_x
// of Y, itself the image under pair_y of a word with counts (za, zb):
// 2 (p_x - 1)(za p_y + zb p'_y) + 2 (za + zb) p'_x.
u64 lemma3_original_occurrences(const ParameterPair& pair_x, const ParameterPair& pair_y,
                                u64 za, u64 zb);

// Distinct palindromes contributed by one level, split by center kind.
// One b-centered form, one form per odd a-power <= p_min (a-centered), one
// per even a-power <= p_min (aa-centered); total max(p, p').
struct Lemma5Breakdown {
    int b_count = 0;
    int a_count = 0;
    int aa_count = 0;
    int total = 0;
};

Lemma5Breakdown lemma5_breakdown(const ParameterPair& pair);

// Distinct maximal palindromes of the full expansion: sum of max(p, p')
// over all levels. The seed contributes nothing.
u64 theorem2_distinct_count(const DefiningSequence& pi);

}  // namespace sturmian
