#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "json.hpp"
#include "sturmian/counting.hpp"

using namespace sturmian;

namespace {

const std::vector<ParameterPair> kSmallPairs = {
    {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 3},
};

}  // namespace

TEST_CASE("theorem1_counts on a tiny image") {
    const CountReport cr = theorem1_counts(ParameterPair{2, 1}, 1, 1);
    REQUIRE(cr.k_a == 3);
    REQUIRE(cr.k_b == 2);
    REQUIRE(cr.k_aa == 1);
    REQUIRE(cr.k_total == 6);
}

TEST_CASE("theorem1 totals equal 2|X| - 2|Y|") {
    for (const ParameterPair& pair : kSmallPairs) {
        for (u64 ya = 0; ya <= 12; ++ya) {
            for (u64 yb = ya ? 0 : 1; ya + yb <= 12; ++yb) {
                const CountReport cr = theorem1_counts(pair, ya, yb);
                const PredictedCounts pc = predicted_counts(pair, ya, yb);
                REQUIRE(cr.k_total == cr.k_a + cr.k_b + cr.k_aa);
                REQUIRE(cr.k_total == 2 * pc.length - 2 * (ya + yb));
                REQUIRE(cr.k_total == theorem1_case_split(pair, ya, yb));
            }
        }
    }
}

TEST_CASE("counting overflows are reported, never wrapped") {
    const u64 huge = u64(1) << 62;
    REQUIRE_THROWS_AS(theorem1_counts(ParameterPair{4, 3}, huge, huge), OverflowError);
    REQUIRE_THROWS_AS(theorem1_case_split(ParameterPair{3, 4}, huge, huge), OverflowError);
    REQUIRE_THROWS_AS(lemma3_original_occurrences(ParameterPair{4, 3}, ParameterPair{4, 3},
                                                  huge, huge),
                      OverflowError);
}

TEST_CASE("lemma3 equals the difference of consecutive totals") {
    for (const ParameterPair& px : kSmallPairs) {
        for (const ParameterPair& py : kSmallPairs) {
            for (u64 za = 0; za <= 6; ++za) {
                for (u64 zb = za ? 0 : 1; za + zb <= 6; ++zb) {
                    const PredictedCounts y = predicted_counts(py, za, zb);
                    const u64 kx = theorem1_counts(px, y.count_a, y.count_b).k_total;
                    const u64 ky = theorem1_counts(py, za, zb).k_total;
                    REQUIRE(lemma3_original_occurrences(px, py, za, zb) == kx - ky);
                }
            }
        }
    }
}

TEST_CASE("lemma5 breakdown by center kind") {
    const Lemma5Breakdown one = lemma5_breakdown(ParameterPair{2, 1});
    REQUIRE(one.b_count == 1);
    REQUIRE(one.a_count == 1);
    REQUIRE(one.aa_count == 0);
    REQUIRE(one.total == 2);

    const Lemma5Breakdown two = lemma5_breakdown(ParameterPair{3, 2});
    REQUIRE(two.b_count == 1);
    REQUIRE(two.a_count == 1);
    REQUIRE(two.aa_count == 1);
    REQUIRE(two.total == 3);

    const Lemma5Breakdown four = lemma5_breakdown(ParameterPair{5, 4});
    REQUIRE(four.b_count == 1);
    REQUIRE(four.a_count == 2);
    REQUIRE(four.aa_count == 2);
    REQUIRE(four.total == 5);

    for (const ParameterPair& pair : kSmallPairs) {
        const Lemma5Breakdown b = lemma5_breakdown(pair);
        REQUIRE(b.total == pair.p_max());
        REQUIRE(b.b_count == 1);
        REQUIRE(b.a_count == (pair.p_min() + 1) / 2);
        REQUIRE(b.aa_count == pair.p_min() / 2);
        REQUIRE(b.b_count + b.a_count + b.aa_count == b.total);
    }
}

TEST_CASE("theorem2 sums the per-level maxima") {
    REQUIRE(theorem2_distinct_count(DefiningSequence::parse("1,2;2,1")) == 4);
    REQUIRE(theorem2_distinct_count(DefiningSequence::parse("3,4")) == 4);
    REQUIRE(theorem2_distinct_count(DefiningSequence::parse("1,2;2,3;3,4;4,3")) == 13);
    for (const ParameterPair& pair : kSmallPairs) {
        REQUIRE(theorem2_distinct_count(DefiningSequence{{pair}}) ==
                u64(lemma5_breakdown(pair).total));
    }
}

TEST_CASE("CountReport serializes every field") {
    CountReport cr = theorem1_counts(ParameterPair{2, 1}, 1, 1);
    cr.originals_total = 4;
    cr.m_distinct = 2;
    const nlohmann::json j = nlohmann::json::parse(cr.to_json());
    REQUIRE(j.at("k_a") == 3);
    REQUIRE(j.at("k_b") == 2);
    REQUIRE(j.at("k_aa") == 1);
    REQUIRE(j.at("k_total") == 6);
    REQUIRE(j.at("originals_total") == 4);
    REQUIRE(j.at("m_distinct") == 2);
}
