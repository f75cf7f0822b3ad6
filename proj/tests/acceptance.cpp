// Acceptance gate: nine numbered criteria, one PASS/FAIL line each, exit 1
// on any failure. Every bound is pinned here as a named constant.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "sturmian/counting.hpp"
#include "sturmian/oracle.hpp"
#include "sturmian/palindrome.hpp"
#include "sturmian/verification.hpp"
#include "sturmian/word.hpp"

using namespace sturmian;

namespace {

// Sweep shared by criteria 2, 4, 5 and 7.
constexpr u64 kSweepSeed = 1;
constexpr int kSweepCount = 100;
constexpr int kSweepMaxN = 5;
constexpr int kSweepMaxP = 4;
constexpr double kFixtureBudgetSeconds = 1.0;
constexpr double kSweepBudgetSeconds = 60.0;

// Criterion 9: per-doubling growth bound, its amortized form, and the wall
// budget for the largest word.
constexpr double kDoublingFactorBound = 3.0;
constexpr double kAmortizedFactorBound = 3.0;  // 1.5 x the ideal factor of 2
constexpr double kTenMillionBudgetSeconds = 10.0;
constexpr u64 kBenchTarget = 10'000'000;
constexpr int kBenchRepeats = 5;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d %s %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++g_failures;
}

void run_criterion(int criterion, const std::function<std::pair<bool, std::string>()>& body) {
    try {
        const auto [pass, detail] = body();
        report(criterion, pass, detail);
    } catch (const std::exception& e) {
        report(criterion, false, std::string("exception: ") + e.what());
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool sweep_checks_pass(const VerificationReport& rep, const std::string& suffix,
                       std::size_t& counted) {
    bool ok = true;
    for (const CheckResult& c : rep.checks) {
        if (c.name.size() < suffix.size() ||
            c.name.compare(c.name.size() - suffix.size(), suffix.size(), suffix) != 0) {
            continue;
        }
        ++counted;
        ok = ok && c.pass;
    }
    return ok && counted > 0;
}

// ---------------------------------------------------------------------------

std::pair<bool, std::string> criterion1_fibonacci() {
    const auto t0 = std::chrono::steady_clock::now();
    const ContextWindow ctx =
        whole_word_context(BinaryWord::from_string("abaababaabaababaababa"));

    const OracleExpansion b5 = longest_palindrome_at(ctx, {CenterKind::B, 5});
    const bool b5_ok =
        b5.complete && ctx.full.factor(b5.first, b5.last).to_string() == "aba";
    const OracleExpansion aa3 = longest_palindrome_at(ctx, {CenterKind::AA, 3});
    const OracleExpansion a6 = longest_palindrome_at(ctx, {CenterKind::A, 6});
    const bool centers_ok = b5_ok && aa3.length == 6 && a6.length == 11;
    // Position 1 holds an a, so no b-centered occurrence exists there and
    // none is asserted.
    const bool no_b1 = ctx.full.letter_at(1) == Letter::A;

    const std::vector<std::string> distinct = brute_distinct(ctx);
    const auto has = [&](const char* s) {
        return std::find(distinct.begin(), distinct.end(), s) != distinct.end();
    };
    const bool contains_ok = has("a") && has("aba") && has("abaaba");
    const bool excludes_ok = !has("aa") && !has("aabaa");

    const double dt = seconds_since(t0);
    const bool pass = centers_ok && no_b1 && contains_ok && excludes_ok &&
                      dt < kFixtureBudgetSeconds;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "fibonacci fixture: centers %s, distinct %s/%s, %.3fs",
                  centers_ok ? "ok" : "bad", contains_ok ? "in" : "missing",
                  excludes_ok ? "out" : "leaked", dt);
    return {pass, buf};
}

std::pair<bool, std::string> criterion2_theorem1(const VerificationReport& sweep,
                                                 double sweep_seconds) {
    std::size_t totals = 0, aligns = 0;
    const bool totals_ok = sweep_checks_pass(sweep, "theorem1_k_total", totals);
    const bool align_ok = sweep_checks_pass(sweep, "centers_align", aligns);
    std::size_t kinds = 0;
    const bool kinds_ok = sweep_checks_pass(sweep, "theorem1_k_a", kinds) &&
                          sweep_checks_pass(sweep, "theorem1_k_b", kinds) &&
                          sweep_checks_pass(sweep, "theorem1_k_aa", kinds) &&
                          sweep_checks_pass(sweep, "theorem1_case_split", kinds);
    const bool in_budget = sweep_seconds < kSweepBudgetSeconds;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "occurrence totals: %zu sequences, %zu exact totals, %.1fs",
                  static_cast<std::size_t>(kSweepCount), totals, sweep_seconds);
    return {totals_ok && align_ok && kinds_ok && in_budget, buf};
}

std::pair<bool, std::string> criterion3_distinct_sets() {
    const std::vector<DefiningSequence> seqs = all_sequences(4, 3);
    std::size_t failures = 0;
    for (const DefiningSequence& pi : seqs) {
        const CheckResult c = check_distinct_equality(pi);
        if (!c.pass) ++failures;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "distinct sets: %zu sequences, %zu mismatches",
                  seqs.size(), failures);
    return {failures == 0 && seqs.size() == 340, buf};
}

std::pair<bool, std::string> criterion4_lemma3(const VerificationReport& sweep) {
    // Symbolic: the closed form equals K_X - K_Y for every pair combination
    // and every seed profile with |Z| <= 20.
    std::size_t symbolic = 0, symbolic_bad = 0;
    const std::vector<ParameterPair> pairs = {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 3}};
    for (const ParameterPair& px : pairs) {
        for (const ParameterPair& py : pairs) {
            for (u64 za = 0; za <= 20; ++za) {
                for (u64 zb = (za ? 0 : 1); za + zb <= 20; ++zb) {
                    const PredictedCounts y = predicted_counts(py, za, zb);
                    const u64 kx = theorem1_counts(px, y.count_a, y.count_b).k_total;
                    const u64 ky = theorem1_counts(py, za, zb).k_total;
                    ++symbolic;
                    if (lemma3_original_occurrences(px, py, za, zb) != kx - ky) ++symbolic_bad;
                }
            }
        }
    }

    // Materialized: every two-level expansion of the seed letter, counted
    // over a margin-protected core, plus the sweep's deeper instances.
    std::size_t materialized = 0, materialized_bad = 0;
    for (const ParameterPair& px : pairs) {
        for (const ParameterPair& py : pairs) {
            const DefiningSequence pi{{py, px}};
            const VerificationReport rep = verify_sequence(pi);
            for (const CheckResult& c : rep.checks) {
                if (c.name == "lemma3_ultimate_originals") {
                    ++materialized;
                    if (!c.pass) ++materialized_bad;
                }
            }
        }
    }
    std::size_t swept = 0;
    const bool sweep_ok = sweep_checks_pass(sweep, "lemma3_ultimate_originals", swept);

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "lemma3: %zu symbolic (%zu bad), %zu+%zu materialized (%zu bad)",
                  symbolic, symbolic_bad, materialized, swept, materialized_bad);
    return {symbolic_bad == 0 && materialized_bad == 0 && materialized == 36 && sweep_ok, buf};
}

std::pair<bool, std::string> criterion5_invariants(const VerificationReport& sweep) {
    std::size_t w = 0, p = 0, f = 0;
    const bool weight_ok = sweep_checks_pass(sweep, "lemma4_originality_weight", w);
    const bool affix_ok = sweep_checks_pass(sweep, "property2_affixes", p);
    const bool forms_ok = sweep_checks_pass(sweep, "lemma5_realized_forms", f);
    char buf[160];
    std::snprintf(buf, sizeof buf, "invariants: %zu weight, %zu affix, %zu form checks",
                  w, p, f);
    return {weight_ok && affix_ok && forms_ok, buf};
}

std::pair<bool, std::string> criterion6_echo() {
    const CheckResult c = check_lemma6_echo(DefiningSequence::parse("1,2;2,1;1,2"), 2);
    char buf[160];
    std::snprintf(buf, sizeof buf, "echoes: %lld of %lld found (%s)",
                  static_cast<long long>(c.oracle_value),
                  static_cast<long long>(c.formula_value), c.detail.c_str());
    return {c.pass && c.oracle_value == c.formula_value, buf};
}

std::pair<bool, std::string> criterion7_reversal(const VerificationReport& sweep) {
    std::size_t n = 0;
    const bool sweep_ok = sweep_checks_pass(sweep, "reversal_closure", n);
    const bool control_fails =
        !reversal_closure_check(whole_word_context(BinaryWord::from_string("aabb")), 2);
    char buf[160];
    std::snprintf(buf, sizeof buf, "reversal closure: %zu words, control %s", n,
                  control_fails ? "rejected" : "accepted");
    return {sweep_ok && control_fails, buf};
}

std::pair<bool, std::string> criterion8_bistandard() {
    const std::vector<BinaryWord> chain =
        bistandard_prefix(DefiningSequence::parse("1,2;2,1"), 6);
    bool ok = chain.size() == 7;
    for (const BinaryWord& w : chain) ok = ok && is_palindrome(w);
    for (std::size_t k = 0; ok && k + 1 < chain.size(); ++k) {
        ok = chain[k + 1].to_string().find(chain[k].to_string()) != std::string::npos;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "reflection chain: %zu palindromes, final length %llu",
                  chain.size(),
                  static_cast<unsigned long long>(chain.empty() ? 0 : chain.back().size()));
    return {ok, buf};
}

std::pair<bool, std::string> criterion9_linearity() {
    struct Point {
        u64 length;
        double seconds;
    };
    std::vector<Point> points;
    DefiningSequence pi;
    for (std::size_t n = 1;; ++n) {
        pi.pairs.push_back(n % 2 == 1 ? ParameterPair{1, 2} : ParameterPair{2, 1});
        u64 ya = 1, yb = 0;
        for (const ParameterPair& pair : pi.pairs) {
            const PredictedCounts pc = predicted_counts(pair, ya, yb);
            ya = pc.count_a;
            yb = pc.count_b;
        }
        const u64 length = ya + yb;
        if (length < 100'000) continue;
        const LeveledWord lw = expand(pi, BinaryWord::from_string("a"));
        double best = 1e18;
        u64 occurrences = 0;
        for (int rep = 0; rep < kBenchRepeats; ++rep) {
            u64 count = 0;
            const auto t0 = std::chrono::steady_clock::now();
            locate_occurrences(lw, [&](const PalindromeOccurrence&) { ++count; });
            best = std::min(best, seconds_since(t0));
            occurrences = count;
        }
        (void)occurrences;
        points.push_back({length, best});
        if (length >= kBenchTarget) break;
    }

    bool growth_ok = true;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const double doublings =
            std::log2(double(points[i + 1].length) / double(points[i].length));
        const double ratio =
            std::max(points[i + 1].seconds, 1e-4) / std::max(points[i].seconds, 1e-4);
        if (std::pow(ratio, 1.0 / doublings) > kDoublingFactorBound) growth_ok = false;
    }
    const double total_doublings =
        std::log2(double(points.back().length) / double(points.front().length));
    const double total_ratio =
        std::max(points.back().seconds, 1e-4) / std::max(points.front().seconds, 1e-4);
    const double amortized = std::pow(total_ratio, 1.0 / total_doublings);
    const bool amortized_ok = amortized <= kAmortizedFactorBound;
    const bool budget_ok = points.back().length >= kBenchTarget &&
                           points.back().seconds < kTenMillionBudgetSeconds;

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "linearity: %zu sizes up to %llu, amortized x%.2f per doubling, top %.2fs",
                  points.size(), static_cast<unsigned long long>(points.back().length),
                  amortized, points.back().seconds);
    return {growth_ok && amortized_ok && budget_ok, buf};
}

}  // namespace

int main() {
    run_criterion(1, criterion1_fibonacci);

    VerificationReport sweep;
    double sweep_seconds = 0;
    try {
        const auto t0 = std::chrono::steady_clock::now();
        sweep = verify_sweep(kSweepSeed, kSweepCount, kSweepMaxN, kSweepMaxP);
        sweep_seconds = seconds_since(t0);
    } catch (const std::exception& e) {
        std::printf("sweep aborted: %s\n", e.what());
    }

    run_criterion(2, [&] { return criterion2_theorem1(sweep, sweep_seconds); });
    run_criterion(3, criterion3_distinct_sets);
    run_criterion(4, [&] { return criterion4_lemma3(sweep); });
    run_criterion(5, [&] { return criterion5_invariants(sweep); });
    run_criterion(6, criterion6_echo);
    run_criterion(7, [&] { return criterion7_reversal(sweep); });
    run_criterion(8, criterion8_bistandard);
    run_criterion(9, criterion9_linearity);

    if (g_failures > 0) {
        std::printf("%d of 9 criteria failed\n", g_failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
