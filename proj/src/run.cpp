#include "sturmian/run.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <vector>

#include "json.hpp"
#include "sturmian/counting.hpp"
#include "sturmian/palindrome.hpp"
#include "sturmian/verification.hpp"

namespace sturmian {

namespace {

using nlohmann::ordered_json;

const char* flag_text(bool flagged) { return flagged ? "yes" : "no"; }

std::string word_or_note(const BinaryWord& w) {
    if (w.size() <= kPrintThreshold) return w.to_string();
    return "(elided, " + std::to_string(w.size()) + " letters)";
}

// Occurrence counts of the ultimate level, with the originals and distinct
// totals filled in from the level below.
CountReport full_report(const DefiningSequence& pi, const LeveledWord& lw) {
    const BinaryWord& penult = lw.level(pi.size() - 1);
    CountReport cr = theorem1_counts(pi.pair_for_level(pi.size()), penult.count_a(),
                                     penult.count_b());
    cr.originals_total = cr.k_total - enumerate_centers(penult).size();
    cr.m_distinct = theorem2_distinct_count(pi);
    return cr;
}

int run_generate(const RunConfig& cfg, std::ostream& out) {
    const DefiningSequence pi = DefiningSequence::parse(cfg.pi_text);
    const LeveledWord lw = expand(pi, BinaryWord::from_string(cfg.seed), cfg.length_cap);
    const BinaryWord& word = lw.ultimate();
    if (!cfg.out_file.empty()) {
        std::ofstream f(cfg.out_file, std::ios::binary);
        if (!f) throw ParseError("cannot open output file " + cfg.out_file);
        f << word.to_string() << '\n';
    }
    switch (cfg.format) {
        case OutputFormat::Json: {
            ordered_json j;
            j["pi"] = pi.to_text();
            j["seed"] = cfg.seed;
            j["length"] = word.size();
            j["count_a"] = word.count_a();
            j["count_b"] = word.count_b();
            if (word.size() <= kPrintThreshold) j["word"] = word.to_string();
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::Tsv:
            out << "pi\tseed\tlength\tcount_a\tcount_b\tword\n"
                << pi.to_text() << '\t' << cfg.seed << '\t' << word.size() << '\t'
                << word.count_a() << '\t' << word.count_b() << '\t' << word_or_note(word)
                << '\n';
            break;
        case OutputFormat::Text:
            out << "pi " << pi.to_text() << "\nseed " << cfg.seed << "\nlength " << word.size()
                << "\ncount_a " << word.count_a() << "\ncount_b " << word.count_b() << "\nword "
                << word_or_note(word) << '\n';
            break;
    }
    return kExitOk;
}

int run_analyze(const RunConfig& cfg, std::ostream& out) {
    const DefiningSequence pi = DefiningSequence::parse(cfg.pi_text);
    const LeveledWord lw = expand(pi, BinaryWord::from_string(cfg.seed), cfg.length_cap);
    const BinaryWord& word = lw.ultimate();
    const CountReport cr = full_report(pi, lw);
    const std::vector<PalindromeOccurrence> occs = locate_occurrences(lw);
    const MaximalPalindromeSet dset = distinct_maximal_set(pi);

    switch (cfg.format) {
        case OutputFormat::Json: {
            ordered_json j;
            j["pi"] = pi.to_text();
            j["length"] = word.size();
            if (word.size() <= kPrintThreshold) j["word"] = word.to_string();
            j["counts"] = ordered_json::parse(cr.to_json());
            j["occurrences"] = ordered_json::array();
            for (const PalindromeOccurrence& o : occs) {
                ordered_json e;
                e["position"] = o.center.position;
                e["kind"] = center_kind_label(o.center.kind);
                e["length"] = o.length;
                e["origin_level"] = o.origin_level;
                e["sequence_id"] = o.sequence_id;
                e["flagged"] = o.flagged;
                j["occurrences"].push_back(std::move(e));
            }
            j["distinct"] = ordered_json::array();
            for (std::size_t i = 0; i < dset.size(); ++i) {
                const DistinctMember& m = dset.members()[i];
                ordered_json e;
                e["sequence_id"] = i;
                e["origin_level"] = m.origin_level;
                e["form"] = m.form;
                e["length"] = m.length;
                e["weight"] = m.weight;
                e["kind"] = center_kind_label(m.kind);
                if (m.length <= kPrintThreshold) {
                    e["word"] = dset.materialize(i, cfg.length_cap).to_string();
                }
                j["distinct"].push_back(std::move(e));
            }
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::Tsv:
            out << "position\tkind\tlength\torigin_level\tsequence_id\tflagged\n";
            for (const PalindromeOccurrence& o : occs) {
                out << o.center.position << '\t' << center_kind_label(o.center.kind) << '\t'
                    << o.length << '\t' << o.origin_level << '\t' << o.sequence_id << '\t'
                    << (o.flagged ? 1 : 0) << '\n';
            }
            break;
        case OutputFormat::Text: {
            out << "pi " << pi.to_text() << "\nlength " << word.size() << "\nword "
                << word_or_note(word) << '\n';
            out << "k_a " << cr.k_a << "\nk_b " << cr.k_b << "\nk_aa " << cr.k_aa
                << "\nk_total " << cr.k_total << "\noriginals_total " << cr.originals_total
                << "\nm_distinct " << cr.m_distinct << '\n';
            out << "occurrences position kind length origin_level sequence_id flagged\n";
            for (const PalindromeOccurrence& o : occs) {
                out << "  " << o.center.position << ' ' << center_kind_label(o.center.kind)
                    << ' ' << o.length << ' ' << o.origin_level << ' ' << o.sequence_id << ' '
                    << flag_text(o.flagged) << '\n';
            }
            out << "distinct sequence_id origin_level form length weight kind word\n";
            for (std::size_t i = 0; i < dset.size(); ++i) {
                const DistinctMember& m = dset.members()[i];
                out << "  " << i << ' ' << m.origin_level << ' ' << m.form << ' ' << m.length
                    << ' ' << m.weight << ' ' << center_kind_label(m.kind) << ' '
                    << (m.length <= kPrintThreshold
                            ? dset.materialize(i, cfg.length_cap).to_string()
                            : "(elided)")
                    << '\n';
            }
            break;
        }
    }
    return kExitOk;
}

void print_check_line(std::ostream& out, const CheckResult& c) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << " formula=" << c.formula_value
        << " oracle=" << c.oracle_value << " incomplete=" << c.incomplete_centers;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
    const bool has_pi = !cfg.pi_text.empty();
    VerificationReport seq_report;
    if (has_pi) {
        seq_report = verify_sequence(DefiningSequence::parse(cfg.pi_text), cfg.margin_levels,
                                     cfg.length_cap);
    }
    const VerificationReport sweep = verify_sweep(cfg.rng_seed, cfg.sweep_count, cfg.sweep_max_n,
                                                  cfg.sweep_max_p, cfg.margin_levels,
                                                  cfg.length_cap);
    const bool ok = (!has_pi || seq_report.all_pass()) && sweep.all_pass();

    switch (cfg.format) {
        case OutputFormat::Json: {
            ordered_json j;
            j["sequence"] = has_pi ? ordered_json::parse(seq_report.to_json())
                                   : ordered_json(nullptr);
            j["sweep"] = ordered_json::parse(sweep.to_json());
            j["all_pass"] = ok;
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::Tsv:
            out << "name\tformula\toracle\tpass\tincomplete\tdetail\n";
            for (const VerificationReport* rep :
                 {static_cast<const VerificationReport*>(&seq_report), &sweep}) {
                for (const CheckResult& c : rep->checks) {
                    out << c.name << '\t' << c.formula_value << '\t' << c.oracle_value << '\t'
                        << (c.pass ? 1 : 0) << '\t' << c.incomplete_centers << '\t' << c.detail
                        << '\n';
                }
            }
            break;
        case OutputFormat::Text:
            if (has_pi) {
                out << "sequence report for " << cfg.pi_text << '\n';
                for (const CheckResult& c : seq_report.checks) print_check_line(out, c);
                out << "sequence checks " << seq_report.checks.size() << " failures "
                    << seq_report.failures() << '\n';
            }
            out << "sweep " << cfg.sweep_count << " sequences rng_seed " << cfg.rng_seed
                << " max_n " << cfg.sweep_max_n << " max_p " << cfg.sweep_max_p << '\n';
            for (const CheckResult& c : sweep.checks) {
                if (!c.pass) print_check_line(out, c);
            }
            out << "sweep checks " << sweep.checks.size() << " failures " << sweep.failures()
                << '\n';
            out << "result " << (ok ? "PASS" : "FAIL") << '\n';
            break;
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

int run_bistandard(const RunConfig& cfg, std::ostream& out) {
    const DefiningSequence pi = DefiningSequence::parse(cfg.pi_text);
    const std::vector<BinaryWord> chain = bistandard_prefix(pi, cfg.iterations, cfg.length_cap);
    switch (cfg.format) {
        case OutputFormat::Json: {
            ordered_json j = ordered_json::array();
            for (std::size_t k = 0; k < chain.size(); ++k) {
                ordered_json e;
                e["iteration"] = k;
                e["length"] = chain[k].size();
                if (chain[k].size() <= kPrintThreshold) e["word"] = chain[k].to_string();
                j.push_back(std::move(e));
            }
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::Tsv:
            out << "iteration\tlength\tword\n";
            for (std::size_t k = 0; k < chain.size(); ++k) {
                out << k << '\t' << chain[k].size() << '\t' << word_or_note(chain[k]) << '\n';
            }
            break;
        case OutputFormat::Text:
            for (std::size_t k = 0; k < chain.size(); ++k) {
                out << "W" << k << " length " << chain[k].size() << ' ' << word_or_note(chain[k])
                    << '\n';
            }
            break;
    }
    return kExitOk;
}

// Times the occurrence scan over an alternating-pair family whose ultimate
// lengths grow by ~x2.4 per level, ending above 10^7 letters.
int run_bench(const RunConfig& cfg, std::ostream& out) {
    constexpr u64 kBenchFloor = 80'000;
    constexpr u64 kBenchCeiling = 24'000'000;
    struct Row {
        u64 length;
        u64 occurrences;
        double seconds;
    };
    if (cfg.iterations < 1) throw ParseError("iterations must be >= 1");
    std::vector<Row> rows;
    DefiningSequence pi;
    for (std::size_t n = 1;; ++n) {
        if (rows.size() == static_cast<std::size_t>(cfg.iterations)) break;
        pi.pairs.push_back(n % 2 == 1 ? ParameterPair{1, 2} : ParameterPair{2, 1});
        u64 ya = 1, yb = 0;
        for (const ParameterPair& pair : pi.pairs) {
            const PredictedCounts pc = predicted_counts(pair, ya, yb);
            ya = pc.count_a;
            yb = pc.count_b;
        }
        const u64 length = ya + yb;
        if (length > kBenchCeiling || length > cfg.length_cap) break;
        if (length < kBenchFloor) continue;
        const LeveledWord lw = expand(pi, BinaryWord::from_string("a"), cfg.length_cap);
        u64 occurrences = 0;
        const auto t0 = std::chrono::steady_clock::now();
        locate_occurrences(lw, [&](const PalindromeOccurrence&) { ++occurrences; });
        const auto t1 = std::chrono::steady_clock::now();
        rows.push_back(Row{length, occurrences, std::chrono::duration<double>(t1 - t0).count()});
    }
    switch (cfg.format) {
        case OutputFormat::Json: {
            ordered_json j = ordered_json::array();
            for (const Row& r : rows) {
                ordered_json e;
                e["length"] = r.length;
                e["occurrences"] = r.occurrences;
                e["seconds"] = r.seconds;
                j.push_back(std::move(e));
            }
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::Tsv:
            out << "length\toccurrences\tseconds\n";
            for (const Row& r : rows) {
                out << r.length << '\t' << r.occurrences << '\t' << r.seconds << '\n';
            }
            break;
        case OutputFormat::Text:
            for (const Row& r : rows) {
                out << "length " << r.length << " occurrences " << r.occurrences << " seconds "
                    << r.seconds << '\n';
            }
            break;
    }
    return kExitOk;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "tsv") return OutputFormat::Tsv;
    throw ParseError("unknown output format \"" + name + "\" (expected text, json or tsv)");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.length_cap < 1) throw ParseError("length cap must be >= 1");
        if (cfg.command == "generate") return run_generate(cfg, out);
        if (cfg.command == "analyze") return run_analyze(cfg, out);
        if (cfg.command == "verify") return run_verify(cfg, out);
        if (cfg.command == "bistandard") return run_bistandard(cfg, out);
        if (cfg.command == "bench") return run_bench(cfg, out);
        throw ParseError("unknown command \"" + cfg.command + "\"");
    } catch (const SizeLimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitSizeLimit;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kExitSizeLimit;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace sturmian
