#include "sturmian/verification.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <set>

#include "json.hpp"

namespace sturmian {

namespace {

constexpr int kMaxExtraMargin = 5;   // deepening attempts on incomplete expansions
constexpr int kReversalMaxLen = 8;   // factor length bound for reversal closure

}  // namespace

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["all_pass"] = all_pass();
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["formula"] = c.formula_value;
        e["oracle"] = c.oracle_value;
        e["pass"] = c.pass;
        e["incomplete_centers"] = c.incomplete_centers;
        e["detail"] = c.detail;
        j["checks"].push_back(std::move(e));
    }
    return j.dump(2);
}

// ============================================================================
// Margin context construction
// ============================================================================

MarginContext build_margin_context(const DefiningSequence& pi, WindowMode mode,
                                   int margin_levels, u64 cap) {
    if (pi.pairs.empty()) throw ParseError("defining sequence must contain at least one pair");
    if (margin_levels < 1) {
        throw OutOfRange("margin_levels must be >= 1, got " + std::to_string(margin_levels));
    }
    const ParameterPair tail = pi.pairs.back();
    const BinaryWord seed_a = BinaryWord::from_string("a");
    for (int depth = margin_levels; depth <= margin_levels + 8; ++depth) {
        DefiningSequence pad;
        pad.pairs.assign(static_cast<std::size_t>(depth), tail);
        const BinaryWord s = expand(pad, seed_a, cap).ultimate();
        // Interior aab occurrence with two letters of slack on each side, so
        // the window's image keeps real margins at every level.
        u64 j = 0;
        for (u64 q = 3; q + 4 <= s.size(); ++q) {
            if (s.letter_unchecked(q) == Letter::A && s.letter_unchecked(q + 1) == Letter::A &&
                s.letter_unchecked(q + 2) == Letter::B) {
                j = q;
                break;
            }
        }
        if (j == 0) continue;
        MarginContext mc{expand(pi, s, cap), ContextWindow{}, {}, depth};
        const u64 w_lo = mode == WindowMode::SingleCenter ? j + 1 : j;
        const u64 w_hi = mode == WindowMode::SingleCenter ? j + 1 : j + 2;
        mc.level_spans.push_back({w_lo, w_hi});
        for (std::size_t k = 0; k < pi.size(); ++k) {
            const auto [lo, hi] = mc.level_spans.back();
            mc.level_spans.push_back(
                {trace_position(mc.lw, k, lo), trace_position(mc.lw, k, hi + 1) - 1});
        }
        mc.ctx.full = mc.lw.ultimate();
        mc.ctx.core_start = mc.level_spans.back().first;
        mc.ctx.core_end = mc.level_spans.back().second;
        return mc;
    }
    throw InsufficientContext("padding for " + pi.to_text() + " developed no interior aab by depth " +
                              std::to_string(margin_levels + 8));
}

// ============================================================================
// Core analysis
// ============================================================================

namespace {

// Which centers must have complete oracle expansions before the analysis is
// accepted: all of them, or only those the engine traces to level >= 1
// (padding-origin centers are bystanders in the distinct checks).
enum class CompletenessScope { kAllCenters, kEngineLevels };

struct CoreAnalysis {
    MarginContext mc;
    std::vector<Center> centers;               // oracle enumeration of the core
    std::vector<OracleExpansion> oracle;       // parallel to centers
    std::vector<PalindromeOccurrence> engine;  // parallel when centers_align
    bool centers_align = false;
    u64 incomplete = 0;
};

CoreAnalysis analyze_core(const DefiningSequence& pi, WindowMode mode, int margin_levels,
                          u64 cap, CompletenessScope scope) {
    for (int extra = 0;; ++extra) {
        CoreAnalysis ca{build_margin_context(pi, mode, margin_levels + extra, cap), {}, {}, {},
                        false, 0};
        ca.centers = core_centers(ca.mc.ctx);
        ca.oracle.reserve(ca.centers.size());
        for (const Center& c : ca.centers) {
            ca.oracle.push_back(longest_palindrome_at(ca.mc.ctx, c));
        }
        ca.engine.reserve(ca.centers.size());
        locate_occurrences(ca.mc.lw, [&](const PalindromeOccurrence& occ) {
            if (ca.mc.ctx.contains(occ.center)) ca.engine.push_back(occ);
        });
        ca.centers_align = ca.engine.size() == ca.centers.size();
        if (ca.centers_align) {
            for (std::size_t i = 0; i < ca.centers.size(); ++i) {
                if (!(ca.engine[i].center == ca.centers[i])) {
                    ca.centers_align = false;
                    break;
                }
            }
        }
        for (std::size_t i = 0; i < ca.centers.size(); ++i) {
            if (scope == CompletenessScope::kEngineLevels && ca.centers_align &&
                ca.engine[i].origin_level == 0) {
                continue;
            }
            if (!ca.oracle[i].complete) ++ca.incomplete;
        }
        if (ca.incomplete == 0 || extra == kMaxExtraMargin) return ca;
    }
}

std::pair<u64, u64> span_letter_counts(const CoreAnalysis& ca, std::size_t level) {
    const BinaryWord& w = ca.mc.lw.level(level);
    const auto [lo, hi] = ca.mc.level_spans[level];
    const u64 b = w.count_b_prefix(hi) - w.count_b_prefix(lo - 1);
    return {(hi - lo + 1) - b, b};
}

u64 palindrome_weight(const BinaryWord& full, const OracleExpansion& e) {
    return full.count_b_prefix(e.last) - full.count_b_prefix(e.first - 1);
}

CheckResult make_check(std::string name, i64 formula, i64 oracle, bool pass, u64 incomplete,
                       std::string detail = "") {
    return CheckResult{std::move(name), formula, oracle, pass, incomplete, std::move(detail)};
}

// Counting formulas, per-center agreement and originality invariants over a
// SingleCenter core (content-identical to the bare expansion of pi).
void occurrence_checks(const DefiningSequence& pi, const CoreAnalysis& ca,
                       VerificationReport& rep) {
    const std::size_t n = pi.size();
    const ParameterPair& last = pi.pair_for_level(n);
    const BinaryWord& full = ca.mc.ctx.full;

    rep.checks.push_back(make_check("centers_align", static_cast<i64>(ca.centers.size()),
                                    static_cast<i64>(ca.engine.size()), ca.centers_align,
                                    ca.incomplete));

    const auto [ya, yb] = span_letter_counts(ca, n - 1);
    const CountReport cr = theorem1_counts(last, ya, yb);
    u64 na = 0, nb = 0, naa = 0;
    for (const Center& c : ca.centers) {
        if (c.kind == CenterKind::A) ++na;
        else if (c.kind == CenterKind::B) ++nb;
        else ++naa;
    }
    rep.checks.push_back(make_check("theorem1_k_total", static_cast<i64>(cr.k_total),
                                    static_cast<i64>(ca.centers.size()),
                                    cr.k_total == ca.centers.size(), ca.incomplete));
    rep.checks.push_back(make_check("theorem1_k_a", static_cast<i64>(cr.k_a),
                                    static_cast<i64>(na), cr.k_a == na, 0));
    rep.checks.push_back(make_check("theorem1_k_b", static_cast<i64>(cr.k_b),
                                    static_cast<i64>(nb), cr.k_b == nb, 0));
    rep.checks.push_back(make_check("theorem1_k_aa", static_cast<i64>(cr.k_aa),
                                    static_cast<i64>(naa), cr.k_aa == naa, 0));

    const u64 split = theorem1_case_split(last, ya, yb);
    rep.checks.push_back(make_check("theorem1_case_split", static_cast<i64>(cr.k_total),
                                    static_cast<i64>(split), split == cr.k_total, 0,
                                    "factored form vs unconditional form"));

    u64 compared = 0, agreed = 0;
    const std::size_t aligned = ca.centers_align ? ca.centers.size() : 0;
    for (std::size_t i = 0; i < aligned; ++i) {
        if (!ca.oracle[i].complete) continue;
        ++compared;
        if (!ca.engine[i].flagged && ca.engine[i].length == ca.oracle[i].length) ++agreed;
    }
    rep.checks.push_back(make_check("occurrence_lengths", static_cast<i64>(compared),
                                    static_cast<i64>(agreed),
                                    ca.centers_align && compared == agreed, ca.incomplete));

    u64 engine_originals = 0;
    for (std::size_t i = 0; i < aligned; ++i) {
        if (ca.engine[i].origin_level == n) ++engine_originals;
    }
    i64 lemma3_formula;
    std::string lemma3_detail;
    if (n >= 2) {
        const auto [za, zb] = span_letter_counts(ca, n - 2);
        lemma3_formula = static_cast<i64>(
            lemma3_original_occurrences(last, pi.pair_for_level(n - 1), za, zb));
    } else {
        // One level: every core center except the window letter's own chain.
        lemma3_formula = static_cast<i64>(cr.k_total) - 1;
        lemma3_detail = "single level: core total minus the window center";
    }
    rep.checks.push_back(make_check("lemma3_ultimate_originals", lemma3_formula,
                                    static_cast<i64>(engine_originals),
                                    ca.centers_align &&
                                        lemma3_formula == static_cast<i64>(engine_originals),
                                    ca.incomplete, std::move(lemma3_detail)));

    const u64 pm = static_cast<u64>(last.p_min());
    u64 lemma4_violations = 0, property2_violations = 0, weighted = 0;
    for (std::size_t i = 0; i < aligned; ++i) {
        if (!ca.oracle[i].complete) continue;
        const OracleExpansion& e = ca.oracle[i];
        const u64 weight = palindrome_weight(full, e);
        if (ca.engine[i].origin_level == n) {
            const bool a_power = weight == 0 && e.length <= pm;
            const bool b_form = weight == 1 && e.length == 2 * pm + 1;
            if (!a_power && !b_form) ++lemma4_violations;
        } else if (weight < 2) {
            ++lemma4_violations;
        }
        if (weight >= 1) {
            ++weighted;
            const bool fits = e.length >= 2 * pm + 1;
            const bool prefix = fits &&
                                full.count_b_prefix(e.first + pm - 1) ==
                                    full.count_b_prefix(e.first - 1) &&
                                full.letter_at(e.first + pm) == Letter::B;
            const bool suffix = fits &&
                                full.count_b_prefix(e.last) == full.count_b_prefix(e.last - pm) &&
                                full.letter_at(e.last - pm) == Letter::B;
            if (!prefix || !suffix) ++property2_violations;
        }
    }
    rep.checks.push_back(make_check("lemma4_originality_weight", 0,
                                    static_cast<i64>(lemma4_violations),
                                    ca.centers_align && lemma4_violations == 0, ca.incomplete,
                                    "violations among complete centers"));
    rep.checks.push_back(make_check("property2_affixes", 0,
                                    static_cast<i64>(property2_violations),
                                    ca.centers_align && property2_violations == 0, ca.incomplete,
                                    std::to_string(weighted) + " weighted palindromes checked"));

    const bool closed = reversal_closure_check(ca.mc.ctx, kReversalMaxLen);
    rep.checks.push_back(make_check("reversal_closure", 1, closed ? 1 : 0, closed, 0,
                                    "core factors up to length " +
                                        std::to_string(kReversalMaxLen)));
}

// Distinct-set equality and per-level form realization over a SeedBlock core.
void distinct_checks(const DefiningSequence& pi, const CoreAnalysis& ca, u64 cap,
                     VerificationReport& rep) {
    const std::size_t n = pi.size();
    const BinaryWord& full = ca.mc.ctx.full;
    const MaximalPalindromeSet dset = distinct_maximal_set(pi);
    std::vector<std::string> member_str(dset.size());
    for (std::size_t i = 0; i < dset.size(); ++i) {
        member_str[i] = dset.materialize(i, cap).to_string();
    }
    const std::set<std::string> engine_set(member_str.begin(), member_str.end());

    std::set<std::string> oracle_set;
    std::map<std::size_t, std::set<int>> realized;  // origin level -> forms seen
    u64 mismatches = 0;
    const std::size_t aligned = ca.centers_align ? ca.centers.size() : 0;
    for (std::size_t i = 0; i < aligned; ++i) {
        const PalindromeOccurrence& occ = ca.engine[i];
        if (occ.origin_level == 0) continue;  // padding-origin chain, not part of pi's word
        if (!ca.oracle[i].complete) continue;
        const OracleExpansion& e = ca.oracle[i];
        const std::string str = full.factor(e.first, e.last).to_string();
        oracle_set.insert(str);
        if (occ.flagged || occ.sequence_id < 0 ||
            occ.sequence_id >= static_cast<i64>(dset.size()) ||
            member_str[static_cast<std::size_t>(occ.sequence_id)] != str) {
            ++mismatches;
        } else {
            realized[occ.origin_level].insert(
                dset.members()[static_cast<std::size_t>(occ.sequence_id)].form);
        }
    }

    const u64 t2 = theorem2_distinct_count(pi);
    const bool equal = engine_set == oracle_set && engine_set.size() == dset.size() &&
                       dset.size() == t2;
    rep.checks.push_back(make_check("distinct_set_equality", static_cast<i64>(t2),
                                    static_cast<i64>(oracle_set.size()),
                                    ca.centers_align && equal && mismatches == 0, ca.incomplete,
                                    "per-center string mismatches: " +
                                        std::to_string(mismatches)));

    u64 realized_total = 0;
    bool forms_complete = true;
    for (std::size_t level = 1; level <= n; ++level) {
        const int pm = pi.pair_for_level(level).p_min();
        const auto it = realized.find(level);
        const std::size_t have = it == realized.end() ? 0 : it->second.size();
        realized_total += have;
        if (have != static_cast<std::size_t>(pm) + 1) forms_complete = false;
    }
    rep.checks.push_back(make_check("lemma5_realized_forms", static_cast<i64>(t2),
                                    static_cast<i64>(realized_total),
                                    ca.centers_align && forms_complete, ca.incomplete,
                                    "every origin form occurs in the core"));
}

VerificationReport verify_impl(const DefiningSequence& pi, int margin_levels, u64 cap,
                               bool with_echo) {
    VerificationReport rep;
    const CoreAnalysis occ =
        analyze_core(pi, WindowMode::SingleCenter, margin_levels, cap,
                     CompletenessScope::kAllCenters);
    occurrence_checks(pi, occ, rep);
    const CoreAnalysis dis =
        analyze_core(pi, WindowMode::SeedBlock, margin_levels, cap,
                     CompletenessScope::kEngineLevels);
    distinct_checks(pi, dis, cap, rep);
    if (with_echo) {
        rep.checks.push_back(check_lemma6_echo(pi, std::max(margin_levels, 2), cap));
    }
    return rep;
}

}  // namespace

// ============================================================================
// Public checks
// ============================================================================

CheckResult check_distinct_equality(const DefiningSequence& pi, int margin_levels, u64 cap) {
    const CoreAnalysis ca = analyze_core(pi, WindowMode::SeedBlock, margin_levels, cap,
                                         CompletenessScope::kEngineLevels);
    VerificationReport rep;
    distinct_checks(pi, ca, cap, rep);
    return rep.checks.front();
}

CheckResult check_lemma6_echo(const DefiningSequence& pi, int margin_levels, u64 cap) {
    const MaximalPalindromeSet dset = distinct_maximal_set(pi);
    std::vector<BinaryWord> members;
    members.reserve(dset.size());
    for (std::size_t i = 0; i < dset.size(); ++i) members.push_back(dset.materialize(i, cap));
    for (int extra = 0;; ++extra) {
        const MarginContext mc =
            build_margin_context(pi, WindowMode::SeedBlock, margin_levels + extra, cap);
        u64 found = 0;
        for (const BinaryWord& m : members) {
            if (lemma6_check(mc.ctx, m)) ++found;
        }
        if (found == members.size() || extra == kMaxExtraMargin) {
            return make_check("lemma6_echo", static_cast<i64>(members.size()),
                              static_cast<i64>(found), found == members.size(), 0,
                              "context depth " + std::to_string(mc.margin_levels));
        }
    }
}

VerificationReport verify_sequence(const DefiningSequence& pi, int margin_levels, u64 cap) {
    return verify_impl(pi, margin_levels, cap, true);
}

// ============================================================================
// Sequence generation and sweeps
// ============================================================================

namespace {

std::vector<ParameterPair> pair_table(int max_p) {
    if (max_p < 2) throw OutOfRange("max_p must be >= 2, got " + std::to_string(max_p));
    std::vector<ParameterPair> t;
    for (int k = 1; k < max_p; ++k) {
        t.push_back(ParameterPair{k, k + 1});
        t.push_back(ParameterPair{k + 1, k});
    }
    return t;
}

}  // namespace

std::vector<DefiningSequence> random_sequences(u64 rng_seed, int count, int max_n, int max_p) {
    if (max_n < 1) throw OutOfRange("max_n must be >= 1, got " + std::to_string(max_n));
    if (count < 0) throw OutOfRange("count must be >= 0");
    const std::vector<ParameterPair> table = pair_table(max_p);
    std::mt19937_64 rng(rng_seed);
    std::vector<DefiningSequence> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        DefiningSequence pi;
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % static_cast<u64>(max_n));
        for (std::size_t k = 0; k < n; ++k) {
            pi.pairs.push_back(table[static_cast<std::size_t>(rng() % table.size())]);
        }
        out.push_back(std::move(pi));
    }
    return out;
}

std::vector<DefiningSequence> all_sequences(int max_n, int max_p) {
    if (max_n < 1) throw OutOfRange("max_n must be >= 1, got " + std::to_string(max_n));
    const std::vector<ParameterPair> table = pair_table(max_p);
    std::vector<DefiningSequence> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
        while (true) {
            DefiningSequence pi;
            for (const std::size_t k : idx) pi.pairs.push_back(table[k]);
            out.push_back(std::move(pi));
            std::size_t d = idx.size();
            while (d > 0 && ++idx[d - 1] == table.size()) idx[--d] = 0;
            if (d == 0) break;
        }
    }
    return out;
}

VerificationReport verify_sweep(u64 rng_seed, int count, int max_n, int max_p,
                                int margin_levels, u64 cap) {
    VerificationReport rep;
    const std::vector<DefiningSequence> seqs = random_sequences(rng_seed, count, max_n, max_p);
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        char prefix[32];
        std::snprintf(prefix, sizeof prefix, "seq %03zu ", i);
        VerificationReport one = verify_impl(seqs[i], margin_levels, cap, false);
        for (CheckResult& c : one.checks) {
            c.name = std::string(prefix) + "[" + seqs[i].to_text() + "] " + c.name;
            rep.checks.push_back(std::move(c));
        }
    }
    return rep;
}

}  // namespace sturmian
