#include "sturmian/counting.hpp"

#include "json.hpp"

namespace sturmian {

namespace {

u64 add(u64 a, u64 b) {
    u64 r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("count overflow in addition");
    return r;
}

u64 mul(u64 a, u64 b) {
    u64 r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("count overflow in multiplication");
    return r;
}

}  // namespace

std::string CountReport::to_json() const {
    nlohmann::ordered_json j;
    j["k_a"] = k_a;
    j["k_b"] = k_b;
    j["k_aa"] = k_aa;
    j["k_total"] = k_total;
    j["originals_total"] = originals_total;
    j["m_distinct"] = m_distinct;
    return j.dump();
}

CountReport theorem1_counts(const ParameterPair& pair, u64 ya, u64 yb) {
    const u64 p = static_cast<u64>(pair.p);
    const u64 pp = static_cast<u64>(pair.p_prime);
    CountReport r;
    r.k_a = add(mul(p, ya), mul(pp, yb));
    r.k_b = add(ya, yb);
    r.k_aa = add(mul(p - 1, ya), mul(pp - 1, yb));
    r.k_total = add(add(r.k_a, r.k_b), r.k_aa);
    return r;
}

u64 theorem1_case_split(const ParameterPair& pair, u64 ya, u64 yb) {
    const u64 len_y = add(ya, yb);
    if (pair.p < pair.p_prime) {
        return add(mul(2, mul(static_cast<u64>(pair.p), len_y)), mul(2, yb));
    }
    return add(mul(2, mul(static_cast<u64>(pair.p_prime), len_y)), mul(2, ya));
}

u64 lemma3_original_occurrences(const ParameterPair& pair_x, const ParameterPair& pair_y,
                                u64 za, u64 zb) {
    const u64 px = static_cast<u64>(pair_x.p);
    const u64 ppx = static_cast<u64>(pair_x.p_prime);
    const u64 py = static_cast<u64>(pair_y.p);
    const u64 ppy = static_cast<u64>(pair_y.p_prime);
    const u64 inner = add(mul(za, py), mul(zb, ppy));
    return add(mul(2, mul(px - 1, inner)), mul(2, mul(add(za, zb), ppx)));
}

Lemma5Breakdown lemma5_breakdown(const ParameterPair& pair) {
    Lemma5Breakdown b;
    b.b_count = 1;
    const int pm = pair.p_min();
    b.a_count = (pm + 1) / 2;   // odd powers 1, 3, ... <= p_min
    b.aa_count = pm / 2;        // even powers 2, 4, ... <= p_min
    b.total = b.b_count + b.a_count + b.aa_count;
    return b;
}

u64 theorem2_distinct_count(const DefiningSequence& pi) {
    u64 total = 0;
    for (const ParameterPair& pair : pi.pairs) {
        total = add(total, static_cast<u64>(pair.p_max()));
    }
    return total;
}

}  // namespace sturmian
