#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sturmian {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// ============================================================================
// Errors
// ============================================================================

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidPair final : Error { using Error::Error; };
struct NotBlockComplete final : Error { using Error::Error; };
struct SizeLimitExceeded final : Error { using Error::Error; };
struct NotAPalindrome final : Error { using Error::Error; };
struct InsufficientContext final : Error { using Error::Error; };
struct OutOfRange final : Error { using Error::Error; };
struct ParseError final : Error { using Error::Error; };
struct OverflowError final : Error { using Error::Error; };

// Default cap on any materialized word length.
inline constexpr u64 kDefaultLengthCap = 100'000'000;

// ============================================================================
// Letters and words
// ============================================================================

enum class Letter : std::uint8_t { A = 0, B = 1 };

inline char to_char(Letter l) { return l == Letter::A ? 'a' : 'b'; }

// Binary word over {a, b}, 1-based positions throughout.
//
// Storage is one bit per letter (b = 1) plus a per-64-letter rank index, so
// prefix letter counts are O(1) after finalize(). Words at benchmark scale
// (10^7..10^8 letters) stay in the tens of megabytes.
class BinaryWord {
public:
    BinaryWord() = default;

    static BinaryWord from_string(std::string_view text);

    // Pre-sizes the bit buffer; appends beyond the reservation still work.
    void reserve(u64 letters);

    void append(Letter l);
    // Appends `count` copies of 'a'. Zero bits are the buffer default, so
    // this is O(1) amortized.
    void append_a_run(u64 count);

    u64 size() const { return size_; }
    bool empty() const { return size_ == 0; }

    Letter letter_at(u64 pos) const;       // 1-based, bounds-checked
    Letter letter_unchecked(u64 pos) const {
        return static_cast<Letter>((bits_[(pos - 1) >> 6] >> ((pos - 1) & 63)) & 1);
    }

    u64 count_a() const;
    u64 count_b() const;

    // Letters 'b' within positions [1, k]. O(1) once the rank index exists.
    u64 count_b_prefix(u64 k) const;
    u64 count_a_prefix(u64 k) const { return k - count_b_prefix(k); }

    // Position of the next 'b' at or after pos, or 0 if none. O(gap/64).
    u64 next_b(u64 pos) const;

    std::string to_string() const;
    BinaryWord factor(u64 first, u64 last) const;  // inclusive 1-based span
    BinaryWord reversed() const;

    bool operator==(const BinaryWord& other) const;
    bool operator!=(const BinaryWord& other) const { return !(*this == other); }

private:
    void ensure_rank() const;

    std::vector<u64> bits_;
    u64 size_ = 0;
    mutable std::vector<u64> rank_;  // rank_[i] = count of b in bits_[0..i)
    mutable bool rank_valid_ = false;
};

bool is_palindrome(const BinaryWord& word);

// ============================================================================
// Morphism parameters
// ============================================================================

// Parameters of the block substitution a -> a^p b, b -> a^p' b.
// Valid pairs satisfy p, p' >= 1 and |p - p'| = 1; exactly one block shape is
// one letter longer than the other.
struct ParameterPair {
    int p = 0;
    int p_prime = 0;

    int p_min() const { return p < p_prime ? p : p_prime; }
    int p_max() const { return p_min() + 1; }
    int run_of(Letter l) const { return l == Letter::A ? p : p_prime; }
    bool operator==(const ParameterPair& o) const {
        return p == o.p && p_prime == o.p_prime;
    }
};

// Throws InvalidPair unless the constraints above hold.
ParameterPair validate_pair(int p, int p_prime);

// Ordered morphism parameters, applied first-to-last during expansion.
// Text form: "p,p';p,p';..." with arbitrary whitespace, e.g. "1,2;2,1;3,2".
struct DefiningSequence {
    std::vector<ParameterPair> pairs;

    static DefiningSequence parse(std::string_view text);

    std::size_t size() const { return pairs.size(); }
    // 1-based level accessor: level i of an expansion uses pair_for_level(i).
    const ParameterPair& pair_for_level(std::size_t level) const;
    std::string to_text() const;
};

// ============================================================================
// Morphism application
// ============================================================================

struct PredictedCounts {
    u64 length = 0;
    u64 count_a = 0;
    u64 count_b = 0;
};

// Image statistics of a word with (count_a, count_b) = (ya, yb):
// |X| = (p+1) ya + (p'+1) yb, |X|_a = p ya + p' yb, |X|_b = ya + yb.
// Throws OverflowError if any value exceeds 64 bits.
PredictedCounts predicted_counts(const ParameterPair& pair, u64 ya, u64 yb);

BinaryWord apply_morphism(const ParameterPair& pair, const BinaryWord& word);

// Inverse substitution: returns Y with apply_morphism(pair, Y) == word.
// Throws NotBlockComplete when the word is not a concatenation of full
// blocks a^p b / a^p' b.
BinaryWord invert_morphism(const ParameterPair& pair, const BinaryWord& word);

// One maximal run of 'a' together with its terminating block, tagged by
// shape. position/a_length describe the run; the block adds the final b.
struct Block {
    u64 position = 0;   // 1-based start of the a-run
    int a_length = 0;
    bool is_long = false;  // run length == p_max
};

struct BlockDecomposition {
    std::vector<Block> blocks;
};

// Decomposes a block-complete word; throws NotBlockComplete otherwise.
// The blocks double as the a-sequence list: every maximal a-run of a
// block-complete word is exactly one block's run.
BlockDecomposition block_decompose(const ParameterPair& pair, const BinaryWord& word);

// ============================================================================
// Leveled expansion
// ============================================================================

// Seed plus every intermediate image. level(0) is the seed; level(i) is the
// image of level(i-1) under pair_for_level(i). ultimate() = level(n).
class LeveledWord {
public:
    LeveledWord(DefiningSequence pi, std::vector<BinaryWord> levels)
        : pi_(std::move(pi)), levels_(std::move(levels)) {}

    const DefiningSequence& pi() const { return pi_; }
    std::size_t ultimate_level() const { return levels_.size() - 1; }
    const BinaryWord& level(std::size_t i) const;
    const BinaryWord& seed() const { return levels_.front(); }
    const BinaryWord& ultimate() const { return levels_.back(); }

private:
    DefiningSequence pi_;
    std::vector<BinaryWord> levels_;
};

// Expands seed through every pair of pi. Throws SizeLimitExceeded (naming
// the offending level) before materializing any level longer than cap.
LeveledWord expand(const DefiningSequence& pi, const BinaryWord& seed,
                   u64 cap = kDefaultLengthCap);

}  // namespace sturmian
