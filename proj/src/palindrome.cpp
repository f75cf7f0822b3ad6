#include "sturmian/palindrome.hpp"

#include <algorithm>

#include "sturmian/counting.hpp"

namespace sturmian {

namespace {

u64 checked_add(u64 a, u64 b) {
    u64 r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("length overflow in addition");
    return r;
}

u64 checked_mul(u64 a, u64 b) {
    u64 r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("length overflow in multiplication");
    return r;
}

// ----------------------------------------------------------------------------
// Reflection arithmetic
//
// Reflecting a palindrome with letter counts (la, lb) through one level wraps
// the image in a^p_min b ... a^p_min, so
//   la' = 2 p_min + p la + p' lb,   lb' = 1 + la + lb.
// The center kind follows the wrapped image's middle: a single-letter center
// becomes the middle of one block's a-run, an aa pair becomes the b between
// two equal blocks.
// ----------------------------------------------------------------------------

struct ChainState {
    u64 la = 0;
    u64 lb = 0;
    CenterKind kind = CenterKind::A;
};

ChainState reflect_state(const ParameterPair& pair, const ChainState& s) {
    ChainState out;
    const u64 p = static_cast<u64>(pair.p);
    const u64 pp = static_cast<u64>(pair.p_prime);
    out.la = checked_add(checked_add(checked_mul(p, s.la), checked_mul(pp, s.lb)),
                         2 * static_cast<u64>(pair.p_min()));
    out.lb = checked_add(checked_add(s.la, s.lb), 1);
    switch (s.kind) {
        case CenterKind::A:
            out.kind = (pair.p % 2 == 1) ? CenterKind::A : CenterKind::AA;
            break;
        case CenterKind::B:
            out.kind = (pair.p_prime % 2 == 1) ? CenterKind::A : CenterKind::AA;
            break;
        case CenterKind::AA:
            out.kind = CenterKind::B;
            break;
    }
    return out;
}

// Initial state of a form original at its level: a^m, or the b-centered
// a^p_min b a^p_min when form == 0.
ChainState form_state(const ParameterPair& pair, int form) {
    if (form == 0) {
        const u64 pm = static_cast<u64>(pair.p_min());
        return ChainState{2 * pm, 1, CenterKind::B};
    }
    const u64 m = static_cast<u64>(form);
    return ChainState{m, 0, m % 2 == 1 ? CenterKind::A : CenterKind::AA};
}

// Seed-origin forms: the four possible level-0 centers.
enum SeedForm : int { kSeedA = 0, kSeedB = 1, kSeedAA = 2, kSeedBB = 3 };

ChainState seed_state(int form) {
    switch (form) {
        case kSeedA:  return ChainState{1, 0, CenterKind::A};
        case kSeedB:  return ChainState{0, 1, CenterKind::B};
        case kSeedAA: return ChainState{2, 0, CenterKind::AA};
        default:      return ChainState{0, 2, CenterKind::AA};
    }
}

// ----------------------------------------------------------------------------
// Center geometry
// ----------------------------------------------------------------------------

struct RunInfo {
    u64 start = 0;
    int length = 0;
    u64 block_index = 0;  // position of the generating letter one level down
};

u64 image_start(const BinaryWord& lower, const ParameterPair& pair, u64 pos) {
    const u64 a_before = lower.count_a_prefix(pos - 1);
    const u64 b_before = lower.count_b_prefix(pos - 1);
    return (static_cast<u64>(pair.p) + 1) * a_before +
           (static_cast<u64>(pair.p_prime) + 1) * b_before + 1;
}

// Run containing the a at `pos` of level `level` (>= 1), located through the
// level below: the run belongs to block j, starts at j's image and has the
// length dictated by the generating letter. O(1).
RunInfo run_at(const LeveledWord& lw, std::size_t level, u64 pos) {
    const BinaryWord& word = lw.level(level);
    const BinaryWord& lower = lw.level(level - 1);
    const ParameterPair& pair = lw.pi().pair_for_level(level);
    RunInfo info;
    info.block_index = word.count_b_prefix(pos - 1) + 1;
    info.start = image_start(lower, pair, info.block_index);
    info.length = pair.run_of(lower.letter_at(info.block_index));
    return info;
}

bool is_run_center(const RunInfo& run, const Center& c) {
    if (c.kind == CenterKind::A) {
        return run.length % 2 == 1 &&
               c.position == run.start + static_cast<u64>(run.length - 1) / 2;
    }
    return run.length % 2 == 0 &&
           c.position == run.start + static_cast<u64>(run.length) / 2 - 1;
}

// Length of the original palindrome at a non-central a/aa center: twice the
// shorter arm within the run, plus the center itself.
int original_a_power(const RunInfo& run, const Center& c) {
    const u64 left = c.position - run.start;
    const u64 right_end = run.start + static_cast<u64>(run.length) - 1;
    if (c.kind == CenterKind::A) {
        return static_cast<int>(2 * std::min(left, right_end - c.position) + 1);
    }
    return static_cast<int>(2 * std::min(left, right_end - (c.position + 1)) + 2);
}

// Longest palindrome around `center` that fits inside the word; used only
// for boundary-flagged centers where reflection arithmetic cannot finish.
u64 in_word_expansion(const BinaryWord& word, const Center& center) {
    u64 left, right, length;
    if (center.kind == CenterKind::AA) {
        left = center.position;
        right = center.position + 1;
        length = 2;
    } else {
        left = right = center.position;
        length = 1;
    }
    while (left > 1 && right < word.size() &&
           word.letter_unchecked(left - 1) == word.letter_unchecked(right + 1)) {
        --left;
        ++right;
        length += 2;
    }
    return length;
}

// Result of walking one center down to the level where it is original.
struct Origin {
    std::size_t level = 0;
    int form = 0;        // DistinctMember convention, or SeedForm at level 0
    bool stalled = false;
};

Origin resolve_origin(const LeveledWord& lw, Center c) {
    std::size_t i = lw.ultimate_level();
    while (true) {
        if (i == 0) {
            const BinaryWord& seed = lw.seed();
            Origin o;
            o.level = 0;
            if (c.kind == CenterKind::A) {
                o.form = kSeedA;
            } else if (c.kind == CenterKind::B) {
                o.form = kSeedB;
            } else {
                o.form = seed.letter_at(c.position) == Letter::A ? kSeedAA : kSeedBB;
            }
            return o;
        }
        const BinaryWord& word = lw.level(i);
        const BinaryWord& lower = lw.level(i - 1);
        const ParameterPair& pair = lw.pi().pair_for_level(i);
        if (c.kind == CenterKind::B) {
            const u64 j = word.count_b_prefix(c.position);
            if (j + 1 > lower.size()) {
                return Origin{i, 0, true};
            }
            const int before = pair.run_of(lower.letter_at(j));
            const int after = pair.run_of(lower.letter_at(j + 1));
            if (before != after) {
                return Origin{i, 0, false};
            }
            c = Center{CenterKind::AA, j};
            --i;
        } else {
            const RunInfo run = run_at(lw, i, c.position);
            if (!is_run_center(run, c)) {
                return Origin{i, original_a_power(run, c), false};
            }
            const Letter l = lower.letter_at(run.block_index);
            c = Center{l == Letter::A ? CenterKind::A : CenterKind::B, run.block_index};
            --i;
        }
    }
}

}  // namespace

// ============================================================================
// Centers
// ============================================================================

const char* center_kind_label(CenterKind kind) {
    switch (kind) {
        case CenterKind::A: return "a";
        case CenterKind::B: return "b";
        default: return "aa";
    }
}

std::vector<Center> enumerate_centers(const BinaryWord& word) {
    std::vector<Center> out;
    out.reserve(word.size());
    for (u64 pos = 1; pos <= word.size(); ++pos) {
        if (word.letter_unchecked(pos) == Letter::B) {
            out.push_back(Center{CenterKind::B, pos});
            continue;
        }
        out.push_back(Center{CenterKind::A, pos});
        if (pos < word.size() && word.letter_unchecked(pos + 1) == Letter::A) {
            out.push_back(Center{CenterKind::AA, pos});
        }
    }
    return out;
}

// ============================================================================
// Classification
// ============================================================================

Originality classify_center(const LeveledWord& lw, std::size_t level, const Center& center) {
    if (level == 0 || level > lw.ultimate_level()) {
        throw OutOfRange("classification requires a level in 1.." +
                         std::to_string(lw.ultimate_level()));
    }
    const BinaryWord& word = lw.level(level);
    const BinaryWord& lower = lw.level(level - 1);
    const ParameterPair& pair = lw.pi().pair_for_level(level);

    if (center.kind == CenterKind::B) {
        if (word.letter_at(center.position) != Letter::B) {
            throw OutOfRange("no b at position " + std::to_string(center.position));
        }
        const u64 j = word.count_b_prefix(center.position);
        if (j + 1 > lower.size()) {
            throw InsufficientContext("b center at position " + std::to_string(center.position) +
                                      " lies in the final block; the following a-sequence is "
                                      "beyond the word end");
        }
        const int before = pair.run_of(lower.letter_at(j));
        const int after = pair.run_of(lower.letter_at(j + 1));
        return before != after ? Originality::Original : Originality::Reflection;
    }

    if (word.letter_at(center.position) != Letter::A ||
        (center.kind == CenterKind::AA && (center.position + 1 > word.size() ||
                                           word.letter_at(center.position + 1) != Letter::A))) {
        throw OutOfRange("center does not match word content at position " +
                         std::to_string(center.position));
    }
    const RunInfo run = run_at(lw, level, center.position);
    return is_run_center(run, center) ? Originality::Reflection : Originality::Original;
}

// ============================================================================
// Reflection operator
// ============================================================================

BinaryWord wp_reflect(const ParameterPair& pair, const BinaryWord& palindrome, u64 cap) {
    if (!is_palindrome(palindrome)) {
        throw NotAPalindrome("reflection input of length " + std::to_string(palindrome.size()) +
                             " is not a palindrome");
    }
    const PredictedCounts pred =
        predicted_counts(pair, palindrome.count_a(), palindrome.count_b());
    const u64 pm = static_cast<u64>(pair.p_min());
    const u64 total = checked_add(pred.length, checked_add(2 * pm, 1));
    if (total > cap) {
        throw SizeLimitExceeded("reflected palindrome would have " + std::to_string(total) +
                                " letters, cap is " + std::to_string(cap));
    }
    BinaryWord out;
    out.reserve(total);
    out.append_a_run(pm);
    out.append(Letter::B);
    for (u64 i = 1; i <= palindrome.size(); ++i) {
        out.append_a_run(static_cast<u64>(pair.run_of(palindrome.letter_unchecked(i))));
        out.append(Letter::B);
    }
    out.append_a_run(pm);
    return out;
}

// ============================================================================
// Distinct maximal palindromes
// ============================================================================

namespace {

// Members of one origin level in canonical order: a^1..a^p_min, then the
// b-centered form, each chained through levels origin+1..n of pi.
void append_level_members(const DefiningSequence& pi, std::size_t origin,
                          std::vector<DistinctMember>& out) {
    const ParameterPair& pair = pi.pair_for_level(origin);
    const int pm = pair.p_min();
    for (int form = 1; form <= pm + 1; ++form) {
        const int actual_form = form <= pm ? form : 0;
        ChainState state = form_state(pair, actual_form);
        for (std::size_t level = origin + 1; level <= pi.size(); ++level) {
            state = reflect_state(pi.pair_for_level(level), state);
        }
        DistinctMember m;
        m.origin_level = origin;
        m.form = actual_form;
        m.length = checked_add(state.la, state.lb);
        m.weight = state.lb;
        m.kind = state.kind;
        out.push_back(m);
    }
}

}  // namespace

BinaryWord MaximalPalindromeSet::materialize(std::size_t index, u64 cap) const {
    if (index >= members_.size()) {
        throw OutOfRange("member index " + std::to_string(index) + " outside set of size " +
                         std::to_string(members_.size()));
    }
    const DistinctMember& m = members_[index];
    const ParameterPair& pair = pi_.pair_for_level(m.origin_level);
    BinaryWord word;
    if (m.form == 0) {
        const u64 pm = static_cast<u64>(pair.p_min());
        word.append_a_run(pm);
        word.append(Letter::B);
        word.append_a_run(pm);
    } else {
        word.append_a_run(static_cast<u64>(m.form));
    }
    for (std::size_t level = m.origin_level + 1; level <= pi_.size(); ++level) {
        word = wp_reflect(pi_.pair_for_level(level), word, cap);
    }
    return word;
}

MaximalPalindromeSet original_set(const ParameterPair& pair) {
    DefiningSequence pi;
    pi.pairs.push_back(pair);
    std::vector<DistinctMember> members;
    append_level_members(pi, 1, members);
    return MaximalPalindromeSet(std::move(pi), std::move(members));
}

MaximalPalindromeSet distinct_maximal_set(const DefiningSequence& pi) {
    if (pi.pairs.empty()) throw ParseError("defining sequence must contain at least one pair");
    std::vector<DistinctMember> members;
    for (std::size_t origin = 1; origin <= pi.size(); ++origin) {
        append_level_members(pi, origin, members);
    }
    return MaximalPalindromeSet(pi, std::move(members));
}

// ============================================================================
// Position tracing
// ============================================================================

u64 trace_position(const LeveledWord& lw, std::size_t level, u64 pos) {
    if (level >= lw.ultimate_level()) {
        throw OutOfRange("level " + std::to_string(level) + " has no image level above it");
    }
    const BinaryWord& word = lw.level(level);
    if (pos == 0 || pos > word.size() + 1) {
        throw OutOfRange("position " + std::to_string(pos) + " outside level of length " +
                         std::to_string(word.size()));
    }
    return image_start(word, lw.pi().pair_for_level(level + 1), pos);
}

// ============================================================================
// Occurrence enumeration
// ============================================================================

void locate_occurrences(const LeveledWord& lw, const OccurrenceSink& sink) {
    const std::size_t n = lw.ultimate_level();
    const BinaryWord& word = lw.ultimate();
    const DefiningSequence& pi = lw.pi();

    // Ultimate length, weight and kind per (origin level, form), plus the
    // member index base per level. Seed-origin chains sit in seed_chains.
    std::vector<std::vector<ChainState>> chains(n + 1);
    std::vector<i64> base(n + 1, 0);
    for (std::size_t origin = 1; origin <= n; ++origin) {
        const ParameterPair& pair = pi.pair_for_level(origin);
        const int pm = pair.p_min();
        base[origin] = origin == 1 ? 0 : base[origin - 1] + pi.pair_for_level(origin - 1).p_max();
        chains[origin].reserve(static_cast<std::size_t>(pm) + 1);
        for (int form = 1; form <= pm + 1; ++form) {
            ChainState state = form_state(pair, form <= pm ? form : 0);
            for (std::size_t level = origin + 1; level <= n; ++level) {
                state = reflect_state(pi.pair_for_level(level), state);
            }
            chains[origin].push_back(state);
        }
    }
    std::vector<ChainState> seed_chains;
    for (int form = kSeedA; form <= kSeedBB; ++form) {
        ChainState state = seed_state(form);
        for (std::size_t level = 1; level <= n; ++level) {
            state = reflect_state(pi.pair_for_level(level), state);
        }
        seed_chains.push_back(state);
    }

    const auto emit = [&](const Center& center) {
        const Origin origin = resolve_origin(lw, center);
        PalindromeOccurrence occ;
        occ.center = center;
        occ.origin_level = origin.level;
        if (origin.stalled) {
            occ.length = in_word_expansion(word, center);
            occ.sequence_id = -1;
            occ.flagged = true;
        } else {
            const ChainState& state =
                origin.level == 0
                    ? seed_chains[static_cast<std::size_t>(origin.form)]
                    : chains[origin.level][static_cast<std::size_t>(
                          origin.form == 0 ? pi.pair_for_level(origin.level).p_min()
                                           : origin.form - 1)];
            occ.length = state.la + state.lb;
            occ.sequence_id =
                origin.level == 0
                    ? -1
                    : base[origin.level] +
                          (origin.form == 0 ? pi.pair_for_level(origin.level).p_min()
                                            : origin.form - 1);
            // Span check: palindromes longer than their surroundings spill
            // over the word boundary and are reported flagged.
            const u64 arm = (occ.length - (center.kind == CenterKind::AA ? 2 : 1)) / 2;
            const u64 right = center.kind == CenterKind::AA ? center.position + 1 : center.position;
            occ.flagged = arm >= center.position || right + arm > word.size();
        }
        sink(occ);
    };

    u64 pos = 1;
    while (pos <= word.size()) {
        const u64 b_pos = word.next_b(pos);
        if (b_pos == 0) {
            // The ultimate level of any expansion ends with b; a trailing
            // a-run means the structure is corrupt.
            throw NotBlockComplete("ultimate level does not end with b");
        }
        for (u64 q = pos; q < b_pos; ++q) {
            emit(Center{CenterKind::A, q});
            if (q + 1 < b_pos) emit(Center{CenterKind::AA, q});
        }
        emit(Center{CenterKind::B, b_pos});
        pos = b_pos + 1;
    }
}

std::vector<PalindromeOccurrence> locate_occurrences(const LeveledWord& lw) {
    std::vector<PalindromeOccurrence> out;
    out.reserve(2 * lw.ultimate().count_a());
    locate_occurrences(lw, [&](const PalindromeOccurrence& occ) { out.push_back(occ); });
    return out;
}

// ============================================================================
// Bistandard prefixes
// ============================================================================

std::vector<BinaryWord> bistandard_prefix(const DefiningSequence& pi, int iterations, u64 cap) {
    if (pi.pairs.empty()) throw ParseError("defining sequence must contain at least one pair");
    if (iterations < 1) {
        throw OutOfRange("iterations must be >= 1, got " + std::to_string(iterations));
    }
    // W_k applies the deepest pair innermost: W_k = wp_1(wp_2(...wp_k(a))).
    // Composed this way consecutive words nest, W_{k-1} a factor of W_k, so
    // the chain converges to the bistandard limit.
    std::vector<BinaryWord> chain;
    chain.reserve(static_cast<std::size_t>(iterations) + 1);
    chain.push_back(BinaryWord::from_string("a"));
    for (int k = 1; k <= iterations; ++k) {
        BinaryWord w = BinaryWord::from_string("a");
        for (int i = k; i >= 1; --i) {
            const ParameterPair& pair =
                pi.pairs[static_cast<std::size_t>(i - 1) % pi.pairs.size()];
            w = wp_reflect(pair, w, cap);
        }
        chain.push_back(std::move(w));
    }
    return chain;
}

}  // namespace sturmian
