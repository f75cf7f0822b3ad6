#include "sturmian/oracle.hpp"

#include <algorithm>
#include <unordered_set>

namespace sturmian {

u64 ContextWindow::margin() const {
    return std::min(core_start - 1, full.size() - core_end);
}

bool ContextWindow::contains(const Center& center) const {
    const u64 last = center.kind == CenterKind::AA ? center.position + 1 : center.position;
    return center.position >= core_start && last <= core_end;
}

ContextWindow whole_word_context(BinaryWord word) {
    ContextWindow ctx;
    ctx.core_start = 1;
    ctx.core_end = word.size();
    ctx.full = std::move(word);
    return ctx;
}

OracleExpansion longest_palindrome_at(const ContextWindow& ctx, const Center& center) {
    const BinaryWord& w = ctx.full;
    OracleExpansion r;
    if (center.kind == CenterKind::AA) {
        if (w.letter_at(center.position) != w.letter_at(center.position + 1)) {
            throw OutOfRange("pair center at position " + std::to_string(center.position) +
                             " has unequal letters");
        }
        r.first = center.position;
        r.last = center.position + 1;
    } else {
        r.first = r.last = center.position;
        (void)w.letter_at(center.position);
    }
    while (r.first > 1 && r.last < w.size() &&
           w.letter_unchecked(r.first - 1) == w.letter_unchecked(r.last + 1)) {
        --r.first;
        ++r.last;
    }
    r.length = r.last - r.first + 1;
    r.complete = r.first > 1 && r.last < w.size();
    return r;
}

std::vector<Center> core_centers(const ContextWindow& ctx) {
    std::vector<Center> out;
    for (u64 pos = ctx.core_start; pos <= ctx.core_end; ++pos) {
        if (ctx.full.letter_at(pos) == Letter::B) {
            out.push_back(Center{CenterKind::B, pos});
            continue;
        }
        out.push_back(Center{CenterKind::A, pos});
        if (pos < ctx.core_end && ctx.full.letter_at(pos + 1) == Letter::A) {
            out.push_back(Center{CenterKind::AA, pos});
        }
    }
    return out;
}

std::vector<PalindromeOccurrence> brute_occurrences(const ContextWindow& ctx) {
    std::vector<PalindromeOccurrence> out;
    for (const Center& center : core_centers(ctx)) {
        const OracleExpansion e = longest_palindrome_at(ctx, center);
        PalindromeOccurrence occ;
        occ.center = center;
        occ.length = e.length;
        occ.origin_level = 0;
        occ.sequence_id = -1;
        occ.flagged = !e.complete;
        out.push_back(occ);
    }
    return out;
}

std::vector<std::string> brute_distinct(const ContextWindow& ctx) {
    std::vector<std::string> out;
    for (const Center& center : core_centers(ctx)) {
        const OracleExpansion e = longest_palindrome_at(ctx, center);
        if (e.complete) out.push_back(ctx.full.factor(e.first, e.last).to_string());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool lemma6_check(const ContextWindow& ctx, const BinaryWord& palindrome) {
    if (!is_palindrome(palindrome)) {
        throw NotAPalindrome("echo check input is not a palindrome");
    }
    const std::string haystack = ctx.full.to_string();
    const std::string needle = palindrome.to_string();
    for (std::size_t at = haystack.find(needle); at != std::string::npos;
         at = haystack.find(needle, at + 1)) {
        if (at == 0 || at + needle.size() >= haystack.size()) continue;
        if (haystack[at - 1] == haystack[at + needle.size()]) return true;
    }
    return false;
}

namespace {

// Factors up to 32 letters pack into (length << 32) | bits keys, one letter
// per bit, earliest letter in the lowest bit.
void collect_factor_keys(const BinaryWord& w, u64 first, u64 last, int max_len,
                         std::unordered_set<u64>& keys) {
    for (u64 pos = first; pos <= last; ++pos) {
        u64 bits = 0;
        for (int len = 1; len <= max_len && pos + static_cast<u64>(len) - 1 <= last; ++len) {
            bits |= static_cast<u64>(w.letter_unchecked(pos + static_cast<u64>(len) - 1)) << (len - 1);
            keys.insert((static_cast<u64>(len) << 32) | bits);
        }
    }
}

u64 reverse_key(u64 key) {
    const int len = static_cast<int>(key >> 32);
    const u64 bits = key & 0xffffffffu;
    u64 rev = 0;
    for (int i = 0; i < len; ++i) rev |= ((bits >> i) & 1u) << (len - 1 - i);
    return (static_cast<u64>(len) << 32) | rev;
}

}  // namespace

bool reversal_closure_check(const ContextWindow& ctx, int max_len) {
    if (max_len < 1 || max_len > 32) {
        throw OutOfRange("factor length bound must be in 1..32, got " + std::to_string(max_len));
    }
    std::unordered_set<u64> full_keys;
    collect_factor_keys(ctx.full, 1, ctx.full.size(), max_len, full_keys);
    std::unordered_set<u64> core_keys;
    collect_factor_keys(ctx.full, ctx.core_start, ctx.core_end, max_len, core_keys);
    for (const u64 key : core_keys) {
        if (!full_keys.count(reverse_key(key))) return false;
    }
    return true;
}

}  // namespace sturmian
