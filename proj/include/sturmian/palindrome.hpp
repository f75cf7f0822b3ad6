#pragma once

#include <functional>
#include <vector>

#include "sturmian/word.hpp"

namespace sturmian {

// ============================================================================
// Centers
// ============================================================================

// Every letter of a word is the center of exactly one maximal palindrome
// occurrence (odd length), and so is every adjacent aa pair (even length).
// Adjacent bb pairs never occur in images of the block substitution, so aa
// is the only two-letter center kind.
enum class CenterKind : std::uint8_t { A = 0, B = 1, AA = 2 };

const char* center_kind_label(CenterKind kind);  // "a", "b", "aa"

struct Center {
    CenterKind kind = CenterKind::A;
    u64 position = 0;  // for AA, the left letter of the pair

    bool operator==(const Center& o) const {
        return kind == o.kind && position == o.position;
    }
};

// All centers of a word, sorted by position (A before AA at equal position).
std::vector<Center> enumerate_centers(const BinaryWord& word);

// ============================================================================
// Originality
// ============================================================================

enum class Originality : std::uint8_t { Original, Reflection };

// Classifies one center of level `level` (>= 1) of lw.
//
// a/aa centers are reflections exactly when they sit at the center of their
// a-sequence; b centers are reflections exactly when the a-sequences before
// and after them have equal lengths. A b center in the final block has no
// following a-sequence, which raises InsufficientContext.
Originality classify_center(const LeveledWord& lw, std::size_t level, const Center& center);

// ============================================================================
// Reflection operator
// ============================================================================

// Image of a maximal palindrome one level up:
//   a^p_min b alpha(P) a^p_min.
// Throws NotAPalindrome unless the input is a palindrome, and
// SizeLimitExceeded when the image would exceed cap.
BinaryWord wp_reflect(const ParameterPair& pair, const BinaryWord& palindrome,
                      u64 cap = kDefaultLengthCap);

// ============================================================================
// Distinct maximal palindromes
// ============================================================================

// One distinct maximal palindrome, identified by the level where it is
// original and its form there: a-powers a^1..a^p_min are forms 1..p_min and
// the b-centered form a^p_min b a^p_min is form 0. Length, weight (letter-b
// count) and ultimate center kind are carried as arithmetic; the word itself
// is materialized on demand.
struct DistinctMember {
    std::size_t origin_level = 0;
    int form = 0;           // 0 = b-centered form, m >= 1 = a^m
    u64 length = 0;         // at the ultimate level
    u64 weight = 0;         // letter-b count at the ultimate level
    CenterKind kind = CenterKind::A;  // center kind at the ultimate level
};

class MaximalPalindromeSet {
public:
    MaximalPalindromeSet(DefiningSequence pi, std::vector<DistinctMember> members)
        : pi_(std::move(pi)), members_(std::move(members)) {}

    const std::vector<DistinctMember>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

    // Chains the origin form through every remaining level.
    BinaryWord materialize(std::size_t index, u64 cap = kDefaultLengthCap) const;

private:
    DefiningSequence pi_;
    std::vector<DistinctMember> members_;
};

// Palindromes original at one level with parameters `pair`, as members of a
// single-level set: {a^1, ..., a^p_min, a^p_min b a^p_min}.
MaximalPalindromeSet original_set(const ParameterPair& pair);

// Every level's original set reflected through the remaining levels, in
// (origin_level, form) order with the b-centered form last per level.
// Cardinality is theorem2_distinct_count(pi); the seed contributes nothing.
MaximalPalindromeSet distinct_maximal_set(const DefiningSequence& pi);

// ============================================================================
// Position tracing
// ============================================================================

// Start of the image of letter (level, pos) inside level+1:
//   (p+1) * (#a before pos) + (p'+1) * (#b before pos) + 1
// with (p, p') the pair of level+1. O(1) via the prefix rank index.
u64 trace_position(const LeveledWord& lw, std::size_t level, u64 pos);

// ============================================================================
// Occurrence enumeration
// ============================================================================

struct PalindromeOccurrence {
    Center center;
    u64 length = 0;         // maximal length; see `flagged` for truncation
    std::size_t origin_level = 0;  // level where this occurrence is original
    i64 sequence_id = -1;   // index into distinct_maximal_set, -1 for
                            // seed-origin occurrences
    bool flagged = false;   // classification or span truncated by the word
                            // boundary
};

using OccurrenceSink = std::function<void(const PalindromeOccurrence&)>;

// Streams one occurrence per center of the ultimate word, sorted by
// position, in time linear in the word length. Lengths are computed by
// reflection arithmetic from the origin form, never by re-expansion; for
// the rare centers whose classification runs off the word end the length
// falls back to the longest in-word match and the occurrence is flagged.
void locate_occurrences(const LeveledWord& lw, const OccurrenceSink& sink);

std::vector<PalindromeOccurrence> locate_occurrences(const LeveledWord& lw);

// ============================================================================
// Bistandard prefixes
// ============================================================================

// Reflection chain W_k = wp_1(wp_2(...wp_k("a"))) with pairs drawn
// cyclically from pi and the deepest pair applied innermost. Returns
// [W_0, ..., W_iterations]; every entry is a palindrome and a factor of the
// next, so the chain converges to the bistandard limit word.
std::vector<BinaryWord> bistandard_prefix(const DefiningSequence& pi, int iterations,
                                          u64 cap = kDefaultLengthCap);

}  // namespace sturmian
