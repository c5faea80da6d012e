#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qrr/rogers_ramanujan.hpp"

using namespace qrr;

namespace {

// sum-side oracles: G = sum q^{n^2}/(q;q)_n, H = sum q^{n(n+1)}/(q;q)_n
Series rr_sum_form(bool g, const Rat& prec) {
    Series acc = Series::zero(prec);
    for (long n = 0;; ++n) {
        long e = g ? n * n : n * (n + 1);
        if (e >= prec) break;
        Series term = invert(pochhammer_finite(qpow(1), 1, n, prec));
        acc = add(acc, shifted(term, 1, e));
    }
    return acc;
}

Series E_at(long k, const Rat& p) {
    return at_base([](const Rat& pp) { return euler_E(pp); }, k, false, p);
}
Series phi_at(long k, const Rat& p) {
    return at_base([](const Rat& pp) { return phi(pp); }, k, false, p);
}

}  // namespace

TEST_CASE("G and H count restricted partitions") {
    const int n = 100;
    Series g = rr_G(n + 1), h = rr_H(n + 1);
    auto pg = oracle::partition_counts(n, [](int k) { return k % 5 == 1 || k % 5 == 4; });
    auto ph = oracle::partition_counts(n, [](int k) { return k % 5 == 2 || k % 5 == 3; });
    for (int v = 0; v <= n; ++v) {
        CHECK(g.coefficient_at(v) == Rat(pg[static_cast<std::size_t>(v)]));
        CHECK(h.coefficient_at(v) == Rat(ph[static_cast<std::size_t>(v)]));
    }
}

TEST_CASE("Rogers-Ramanujan: sum form equals product form") {
    CHECK(equals_to_order(rr_G(120), rr_sum_form(true, 120), 120));
    CHECK(equals_to_order(rr_H(120), rr_sum_form(false, 120), 120));
}

TEST_CASE("G E = f(-q^2,-q^3) and H E = f(-q,-q^4)") {
    Rat P = 150;
    CHECK(equals_to_order(mul(rr_G(P), euler_E(P)),
                          theta_f(neg_qpow(2), neg_qpow(3), P), P));
    CHECK(equals_to_order(mul(rr_H(P), euler_E(P)),
                          theta_f(neg_qpow(1), neg_qpow(4), P), P));
}

TEST_CASE("G H E(q) = E(q^5)") {
    Rat P = 150;
    Series lhs = mul(mul(rr_G(P), rr_H(P)), euler_E(P));
    CHECK(equals_to_order(lhs, E_at(5, P), P));
}

TEST_CASE("U branch selection and U(1,1) = 0") {
    CHECK(rr_U(1, 1, 80).is_zero());
    CHECK_THROWS_AS(rr_U(1, 2, 40), DomainError);
    CHECK_THROWS_AS(rr_U(0, 5, 40), DomainError);
}

TEST_CASE("Ramanujan entries 2 and 3") {
    Rat P = 150;
    // (G(q)G(q^4) + q H(q)H(q^4)) E(q^2) = phi(q)
    Series lhs = mul(rr_U(1, 4, P), E_at(2, P));
    CHECK(equals_to_order(lhs, phi(P), P));
    // (G(q)G(q^4) - q H(q)H(q^4)) E(q^2) = phi(q^5)
    Series gg = mul(detail::rr_G_at(1, P), detail::rr_G_at(4, P));
    Series hh = shifted(mul(detail::rr_H_at(1, P - 1), detail::rr_H_at(4, P - 1)), 1, 1);
    Series diff = mul(sub(gg, hh), E_at(2, P));
    CHECK(equals_to_order(diff, phi_at(5, P), P));
}

TEST_CASE("Watson's odd-even dissections of G and H") {
    Rat P = 200;
    Series e8_over_e2 = mul(E_at(8, P), invert(E_at(2, P)));
    Series g16 = detail::rr_G_at(16, P);
    Series h_m4 = at_base([](const Rat& p) { return rr_H(p); }, 4, true, P - 1);
    Series rhs_g = mul(e8_over_e2, add(g16, shifted(h_m4, 1, 1)));
    CHECK(equals_to_order(rr_G(P), rhs_g, P));

    Series h16 = detail::rr_H_at(16, P - 3);
    Series g_m4 = at_base([](const Rat& p) { return rr_G(p); }, 4, true, P);
    Series rhs_h = mul(e8_over_e2, add(shifted(h16, 1, 3), g_m4));
    CHECK(equals_to_order(rr_H(P), rhs_h, P));
}

TEST_CASE("5-dissection core: E(q)/E(Q) = G^2(Q) - q^2 H^2(Q) - q E(Q^5)/E(Q)") {
    Rat P = 150;
    // cross-multiplied: E(q) = E(Q)(G^2(Q) - q^2 H^2(Q)) - q E(Q^25)
    Series gq5 = detail::rr_G_at(5, P);
    Series hq5 = detail::rr_H_at(5, P - 2);
    Series rhs = sub(mul(E_at(5, P), sub(pow_int(gq5, 2), shifted(pow_int(hq5, 2), 1, 2))),
                     shifted(E_at(25, P - 1), 1, 1));
    CHECK(equals_to_order(euler_E(P), rhs, P));
}

TEST_CASE("U5(E(q^r)E(q^s)) identity for sample pairs") {
    std::mt19937 rng(61);
    std::uniform_int_distribution<int> pick(1, 14);
    int done = 0;
    while (done < 8) {
        long r = pick(rng), s = pick(rng);
        if ((r + s) % 5 != 0) continue;
        ++done;
        Rat P = 60;
        long t = (r + s) / 5;
        Series ers = mul(E_at(r, 5 * P), E_at(s, 5 * P));
        Series lhs = add(u5(ers), shifted(mul(E_at(5 * r, P - t), E_at(5 * s, P - t)), 1, t));
        Series rhs = mul(mul(E_at(r, P), E_at(s, P)), pow_int(rr_U(r, s, P), 2));
        CHECK(equals_to_order(lhs, rhs, P));
    }
}

TEST_CASE("theta product via U: a7") {
    for (auto [r, s] : {std::pair<long, long>{2, 3}, {1, 4}, {1, 9}}) {
        Rat P = 80;
        // the Laurent-valued U factors can lose a few units of precision in
        // products, so evaluate them with headroom and compare at P
        Rat Q = P + 4 * r;
        Series lhs = mul(phi_at(r, P), phi_at(s, P));
        Series inner = add(mul(rr_U(r, s, Q), rr_U(4 * r, 4 * s, Q)),
                           shifted(mul(rr_U(r, 4 * s, Q - r), rr_U(4 * r, s, Q - r)), 1, r));
        Series rhs = truncated(mul(mul(E_at(2 * r, Q), E_at(2 * s, Q)), inner), P);
        CHECK(equals_to_order(lhs, rhs, P));
    }
}

TEST_CASE("A and B theta quotients: a2") {
    Rat P = 150;
    Series a = theta_f(qpow(3), qpow(7), P);
    Series b = theta_f(qpow(1), qpow(9), P);
    CHECK(equals_to_order(a, mul(mul(E_at(2, P), rr_H(P)), detail::rr_G_at(4, P)), P));
    CHECK(equals_to_order(b, mul(mul(E_at(2, P), rr_G(P)), detail::rr_H_at(4, P)), P));
}

TEST_CASE("Hecke-type theta relations: sample of Theorems with T5") {
    // 2 theta(q^r)theta(q^s) + T5(...) = 4 E(q^2r)E(q^2s) U(r,s) U(4r,4s)
    for (auto [r, s] : {std::pair<long, long>{1, 4}, {2, 3}}) {
        Rat P = 60;
        Series tt = mul(phi_at(r, 5 * P), phi_at(s, 5 * P));
        Series lhs = add(shifted(truncated(tt, P), 2, 0), t5(tt));
        Series rhs = shifted(mul(mul(E_at(2 * r, P), E_at(2 * s, P)),
                                 mul(rr_U(r, s, P), rr_U(4 * r, 4 * s, P))),
                             4, 0);
        CHECK(equals_to_order(lhs, rhs, P));
    }
}

TEST_CASE("U with transformed bases") {
    Rat P = 60;
    Series u = rr_U(1, 4, P);
    Series u2 = rr_U_base(1, 4, 2, false, 2 * P);
    CHECK(equals_to_order(rescale_variable(u, 2), u2, 2 * P));
    Series um = rr_U_base(1, 4, 1, true, P);
    CHECK(equals_to_order(negate_variable(u), um, P));
}
