#pragma once

#include <string>
#include <vector>

#include "sturmian/palindrome.hpp"
#include "sturmian/word.hpp"

// Brute-force reference implementations. Everything here works by direct
// letter comparison on a context word; none of it consults level structure,
// reflection arithmetic, or closed-form counts, so agreement with the engine
// is evidence rather than tautology.

namespace sturmian {

// A context word with a designated core window. Results are asserted only
// for centers inside the core; the surrounding margin exists so that their
// palindromes can be expanded to their true maximal length.
struct ContextWindow {
    BinaryWord full;
    u64 core_start = 1;
    u64 core_end = 1;

    u64 margin() const;
    bool contains(const Center& center) const;
};

// Whole word as its own core (margin 0).
ContextWindow whole_word_context(BinaryWord word);

struct OracleExpansion {
    u64 first = 0;   // span of the palindrome in the full word
    u64 last = 0;
    u64 length = 0;
    bool complete = false;  // expansion stopped on a mismatch, not the word edge
};

// Symmetric expansion from a center, by letter comparison only.
OracleExpansion longest_palindrome_at(const ContextWindow& ctx, const Center& center);

// Centers inside the core in canonical order: by position, the single-letter
// center before an aa center starting at the same position.
std::vector<Center> core_centers(const ContextWindow& ctx);

// One occurrence per core center via longest_palindrome_at. No level
// information: origin_level is 0, sequence_id -1, flagged = not complete.
std::vector<PalindromeOccurrence> brute_occurrences(const ContextWindow& ctx);

// Distinct strings of the complete occurrences among the core centers,
// sorted; incomplete centers contribute nothing.
std::vector<std::string> brute_distinct(const ContextWindow& ctx);

// True iff the palindrome has an occurrence in the full word whose two
// neighbor letters are equal, i.e. an occurrence strictly inside a longer
// palindrome with the same center. False signals insufficient context,
// not a disproof.
bool lemma6_check(const ContextWindow& ctx, const BinaryWord& palindrome);

// True iff the reverse of every core factor of length <= max_len occurs
// somewhere in the full word. max_len is capped at 32 letters so factors
// pack into machine words.
bool reversal_closure_check(const ContextWindow& ctx, int max_len);

}  // namespace sturmian
