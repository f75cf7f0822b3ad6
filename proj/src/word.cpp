#include "sturmian/word.hpp"

#include <bit>
#include <cctype>
#include <charconv>

namespace sturmian {

namespace {

u64 checked_add(u64 a, u64 b) {
    u64 r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("count overflow in addition");
    return r;
}

u64 checked_mul(u64 a, u64 b) {
    u64 r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("count overflow in multiplication");
    return r;
}

}  // namespace

// ============================================================================
// BinaryWord
// ============================================================================

BinaryWord BinaryWord::from_string(std::string_view text) {
    BinaryWord w;
    w.reserve(text.size());
    for (char c : text) {
        if (c == 'a') {
            w.append(Letter::A);
        } else if (c == 'b') {
            w.append(Letter::B);
        } else {
            throw ParseError(std::string("unexpected letter '") + c + "', want 'a' or 'b'");
        }
    }
    return w;
}

void BinaryWord::reserve(u64 letters) {
    bits_.reserve((letters >> 6) + 1);
}

void BinaryWord::append(Letter l) {
    const u64 word_index = size_ >> 6;
    if (word_index >= bits_.size()) bits_.resize(word_index + 1, 0);
    if (l == Letter::B) bits_[word_index] |= u64{1} << (size_ & 63);
    ++size_;
    rank_valid_ = false;
}

void BinaryWord::append_a_run(u64 count) {
    size_ += count;
    const u64 need = (size_ >> 6) + 1;
    if (need > bits_.size()) bits_.resize(need, 0);
    rank_valid_ = false;
}

Letter BinaryWord::letter_at(u64 pos) const {
    if (pos == 0 || pos > size_) {
        throw OutOfRange("position " + std::to_string(pos) + " outside word of length " +
                         std::to_string(size_));
    }
    return letter_unchecked(pos);
}

void BinaryWord::ensure_rank() const {
    if (rank_valid_) return;
    rank_.assign(bits_.size() + 1, 0);
    u64 total = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        rank_[i] = total;
        total += static_cast<u64>(std::popcount(bits_[i]));
    }
    rank_[bits_.size()] = total;
    rank_valid_ = true;
}

u64 BinaryWord::count_b_prefix(u64 k) const {
    if (k > size_) throw OutOfRange("prefix length " + std::to_string(k) + " exceeds word");
    ensure_rank();
    const u64 word_index = k >> 6;
    const u64 rem = k & 63;
    u64 total = rank_[word_index];
    if (rem != 0) {
        total += static_cast<u64>(std::popcount(bits_[word_index] & ((u64{1} << rem) - 1)));
    }
    return total;
}

u64 BinaryWord::count_b() const { return count_b_prefix(size_); }
u64 BinaryWord::count_a() const { return size_ - count_b(); }

u64 BinaryWord::next_b(u64 pos) const {
    if (pos == 0 || pos > size_) return 0;
    u64 idx = pos - 1;
    u64 word_index = idx >> 6;
    u64 masked = bits_[word_index] & (~u64{0} << (idx & 63));
    while (masked == 0) {
        ++word_index;
        if (word_index >= bits_.size()) return 0;
        masked = bits_[word_index];
    }
    const u64 found = (word_index << 6) + static_cast<u64>(std::countr_zero(masked)) + 1;
    return found <= size_ ? found : 0;
}

std::string BinaryWord::to_string() const {
    std::string out;
    out.reserve(size_);
    for (u64 i = 1; i <= size_; ++i) out.push_back(to_char(letter_unchecked(i)));
    return out;
}

BinaryWord BinaryWord::factor(u64 first, u64 last) const {
    if (first == 0 || last > size_ || first > last + 1) {
        throw OutOfRange("factor span [" + std::to_string(first) + ", " + std::to_string(last) +
                         "] outside word of length " + std::to_string(size_));
    }
    BinaryWord out;
    if (first > last) return out;
    out.reserve(last - first + 1);
    for (u64 i = first; i <= last; ++i) out.append(letter_unchecked(i));
    return out;
}

BinaryWord BinaryWord::reversed() const {
    BinaryWord out;
    out.reserve(size_);
    for (u64 i = size_; i >= 1; --i) out.append(letter_unchecked(i));
    return out;
}

bool BinaryWord::operator==(const BinaryWord& other) const {
    if (size_ != other.size_) return false;
    const u64 full = size_ >> 6;
    for (u64 i = 0; i < full; ++i) {
        if (bits_[i] != other.bits_[i]) return false;
    }
    const u64 rem = size_ & 63;
    if (rem != 0) {
        const u64 mask = (u64{1} << rem) - 1;
        if ((bits_[full] & mask) != (other.bits_[full] & mask)) return false;
    }
    return true;
}

bool is_palindrome(const BinaryWord& word) {
    u64 lo = 1, hi = word.size();
    while (lo < hi) {
        if (word.letter_unchecked(lo) != word.letter_unchecked(hi)) return false;
        ++lo;
        --hi;
    }
    return true;
}

// ============================================================================
// ParameterPair / DefiningSequence
// ============================================================================

ParameterPair validate_pair(int p, int p_prime) {
    if (p < 1 || p_prime < 1) {
        throw InvalidPair("pair (" + std::to_string(p) + "," + std::to_string(p_prime) +
                          "): both parameters must be >= 1");
    }
    const int diff = p - p_prime;
    if (diff != 1 && diff != -1) {
        throw InvalidPair("pair (" + std::to_string(p) + "," + std::to_string(p_prime) +
                          "): parameters must differ by exactly 1");
    }
    return ParameterPair{p, p_prime};
}

DefiningSequence DefiningSequence::parse(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    if (compact.empty()) throw ParseError("defining sequence is empty");

    DefiningSequence out;
    std::size_t start = 0;
    std::size_t pair_index = 1;
    while (start <= compact.size()) {
        std::size_t end = compact.find(';', start);
        if (end == std::string::npos) end = compact.size();
        const std::string_view entry(compact.data() + start, end - start);
        const std::string where = "pair " + std::to_string(pair_index);
        const std::size_t comma = entry.find(',');
        if (entry.empty() || comma == std::string_view::npos) {
            throw ParseError(where + ": expected \"p,p'\", got \"" + std::string(entry) + "\"");
        }
        int p = 0, pp = 0;
        const auto r1 = std::from_chars(entry.data(), entry.data() + comma, p);
        const auto r2 = std::from_chars(entry.data() + comma + 1, entry.data() + entry.size(), pp);
        if (r1.ec != std::errc{} || r1.ptr != entry.data() + comma ||
            r2.ec != std::errc{} || r2.ptr != entry.data() + entry.size()) {
            throw ParseError(where + ": expected \"p,p'\", got \"" + std::string(entry) + "\"");
        }
        try {
            out.pairs.push_back(validate_pair(p, pp));
        } catch (const InvalidPair& e) {
            throw InvalidPair(where + ": " + e.what());
        }
        start = end + 1;
        ++pair_index;
        if (end == compact.size()) break;
    }
    return out;
}

const ParameterPair& DefiningSequence::pair_for_level(std::size_t level) const {
    if (level == 0 || level > pairs.size()) {
        throw OutOfRange("level " + std::to_string(level) + " has no parameter pair");
    }
    return pairs[level - 1];
}

std::string DefiningSequence::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i != 0) out.push_back(';');
        out += std::to_string(pairs[i].p) + "," + std::to_string(pairs[i].p_prime);
    }
    return out;
}

// ============================================================================
// Morphism application
// ============================================================================

PredictedCounts predicted_counts(const ParameterPair& pair, u64 ya, u64 yb) {
    const u64 p = static_cast<u64>(pair.p);
    const u64 pp = static_cast<u64>(pair.p_prime);
    PredictedCounts out;
    out.count_a = checked_add(checked_mul(p, ya), checked_mul(pp, yb));
    out.count_b = checked_add(ya, yb);
    out.length = checked_add(out.count_a, out.count_b);
    return out;
}

BinaryWord apply_morphism(const ParameterPair& pair, const BinaryWord& word) {
    const PredictedCounts pred = predicted_counts(pair, word.count_a(), word.count_b());
    BinaryWord out;
    out.reserve(pred.length);
    for (u64 i = 1; i <= word.size(); ++i) {
        out.append_a_run(static_cast<u64>(pair.run_of(word.letter_unchecked(i))));
        out.append(Letter::B);
    }
    return out;
}

BinaryWord invert_morphism(const ParameterPair& pair, const BinaryWord& word) {
    BinaryWord out;
    u64 pos = 1;
    while (pos <= word.size()) {
        const u64 b_pos = word.next_b(pos);
        if (b_pos == 0) {
            throw NotBlockComplete("trailing a-run at position " + std::to_string(pos) +
                                   " is not closed by b");
        }
        const u64 run = b_pos - pos;
        if (run == static_cast<u64>(pair.p)) {
            out.append(Letter::A);
        } else if (run == static_cast<u64>(pair.p_prime)) {
            out.append(Letter::B);
        } else {
            throw NotBlockComplete("a-run of length " + std::to_string(run) + " at position " +
                                   std::to_string(pos) + " matches neither block shape");
        }
        pos = b_pos + 1;
    }
    return out;
}

BlockDecomposition block_decompose(const ParameterPair& pair, const BinaryWord& word) {
    BlockDecomposition out;
    u64 pos = 1;
    while (pos <= word.size()) {
        const u64 b_pos = word.next_b(pos);
        if (b_pos == 0) {
            throw NotBlockComplete("trailing a-run at position " + std::to_string(pos) +
                                   " is not closed by b");
        }
        const u64 run = b_pos - pos;
        if (run != static_cast<u64>(pair.p) && run != static_cast<u64>(pair.p_prime)) {
            throw NotBlockComplete("a-run of length " + std::to_string(run) + " at position " +
                                   std::to_string(pos) + " matches neither block shape");
        }
        out.blocks.push_back(Block{pos, static_cast<int>(run), run == static_cast<u64>(pair.p_max())});
        pos = b_pos + 1;
    }
    return out;
}

// ============================================================================
// LeveledWord / expand
// ============================================================================

const BinaryWord& LeveledWord::level(std::size_t i) const {
    if (i >= levels_.size()) {
        throw OutOfRange("level " + std::to_string(i) + " beyond ultimate level " +
                         std::to_string(levels_.size() - 1));
    }
    return levels_[i];
}

LeveledWord expand(const DefiningSequence& pi, const BinaryWord& seed, u64 cap) {
    if (pi.pairs.empty()) throw ParseError("defining sequence must contain at least one pair");
    std::vector<BinaryWord> levels;
    levels.reserve(pi.pairs.size() + 1);
    levels.push_back(seed);
    for (std::size_t i = 1; i <= pi.pairs.size(); ++i) {
        const ParameterPair& pair = pi.pair_for_level(i);
        const BinaryWord& prev = levels.back();
        const PredictedCounts pred = predicted_counts(pair, prev.count_a(), prev.count_b());
        if (pred.length > cap) {
            throw SizeLimitExceeded("level " + std::to_string(i) + " would have " +
                                    std::to_string(pred.length) + " letters, cap is " +
                                    std::to_string(cap));
        }
        levels.push_back(apply_morphism(pair, prev));
    }
    return LeveledWord(pi, std::move(levels));
}

}  // namespace sturmian
