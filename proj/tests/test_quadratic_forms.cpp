#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qrr/quadratic_forms.hpp"

using namespace qrr;

namespace {

Series E_at(long k, const Rat& p) {
    return at_base([](const Rat& pp) { return euler_E(pp); }, k, false, p);
}
Series psi_at(long k, const Rat& p) {
    return at_base([](const Rat& pp) { return psi(pp); }, k, false, p);
}
Series phi_at(long k, const Rat& p) {
    return at_base([](const Rat& pp) { return phi(pp); }, k, false, p);
}

// random valid R-parameter tuples
RParams random_rparams(std::mt19937& rng) {
    std::uniform_int_distribution<int> small(1, 4), msmall(-3, 3), bit(0, 1);
    std::uniform_int_distribution<int> lt(0, 3);
    const Rat lt_choices[] = {Rat(0), Rat(1), Rat(-1), Rat(1, 2)};
    for (;;) {
        long alpha = small(rng), m = msmall(rng);
        long p = small(rng) + 1, lambda = small(rng) + 1;
        long beta = p * lambda - alpha * m * m;
        if (beta <= 0) continue;
        long eps = bit(rng), delta = bit(rng);
        return RParams{eps, delta, lt_choices[lt(rng)], lt_choices[lt(rng)],
                       alpha, beta, m, p, lambda};
    }
}

}  // namespace

TEST_CASE("theta series of a form counts lattice representations") {
    Series s = theta_of_form({1, 0, 1}, 30);
    CHECK(s.coefficient_at(0) == 1);
    CHECK(s.coefficient_at(1) == 4);
    CHECK(s.coefficient_at(2) == 4);
    CHECK(s.coefficient_at(3) == 0);
    CHECK(s.coefficient_at(4) == 4);
    CHECK(s.coefficient_at(5) == 8);
    auto r1 = oracle::form_representations(1, 0, 1, 30);
    for (int n = 0; n < 30; ++n)
        CHECK(s.coefficient_at(n) == Rat(r1[static_cast<std::size_t>(n)]));

    Series t = theta_of_form({2, 1, 5}, 60);
    auto r2 = oracle::form_representations(2, 1, 5, 60);
    for (int n = 0; n < 60; ++n)
        CHECK(t.coefficient_at(n) == Rat(r2[static_cast<std::size_t>(n)]));

    CHECK_THROWS_AS(theta_of_form({1, 2, 1}, 10), DomainError);
}

TEST_CASE("(1,1,10) = theta(q)theta(q^39) + 4q^10 psi(q^2)psi(q^78)") {
    Rat P = 200;
    Series lhs = theta_of_form({1, 1, 10}, P);
    Series rhs = add(mul(phi_at(1, P), phi_at(39, P)),
                     shifted(mul(psi_at(2, P), psi_at(78, P)), 4, 10));
    CHECK(equals_to_order(lhs, rhs, P));
}

TEST_CASE("theta series is invariant under b -> -b") {
    CHECK(equals_to_order(theta_of_form({2, 1, 5}, 200),
                          theta_of_form({2, -1, 5}, 200), 200));
}

TEST_CASE("reduced form enumeration") {
    auto r39 = reduced_forms(-39);
    REQUIRE(r39.size() == 4);
    CHECK(r39[0].form == QuadForm{1, 1, 10});
    CHECK(r39[1].form == QuadForm{2, -1, 5});
    CHECK(r39[2].form == QuadForm{2, 1, 5});
    CHECK(r39[3].form == QuadForm{3, 3, 4});
    for (const auto& rf : r39) CHECK(rf.primitive);

    auto reps71 = form_representatives(-71);
    REQUIRE(reps71.size() == 4);
    CHECK(reps71[0].form == QuadForm{1, 1, 18});
    CHECK(reps71[1].form == QuadForm{2, 1, 9});
    CHECK(reps71[2].form == QuadForm{3, 1, 6});
    CHECK(reps71[3].form == QuadForm{4, 3, 5});

    auto r3 = reduced_forms(-3);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].form == QuadForm{1, 1, 1});

    // imprimitive forms are kept and tagged
    auto r80 = form_representatives(-80);
    int imprimitive = 0;
    for (const auto& rf : r80)
        if (!rf.primitive) ++imprimitive;
    CHECK(imprimitive == 2);

    CHECK_THROWS_AS(reduced_forms(4), DomainError);
    CHECK_THROWS_AS(reduced_forms(-6), DomainError);
}

TEST_CASE("every reduced form's discriminant and invariants hold") {
    for (long D : {-39L, -56L, -71L, -80L, -84L, -104L}) {
        for (const auto& rf : reduced_forms(D)) {
            CHECK(rf.form.disc() == D);
            CHECK(rf.form.a <= rf.form.c);
            CHECK(std::abs(rf.form.b) <= rf.form.a);
        }
    }
}

TEST_CASE("R-function worked instances") {
    // R(0,0,0,0,1,39,1,4,10) is the theta series of (2,1,5)
    RParams P1{0, 0, 0, 0, 1, 39, 1, 4, 10};
    CHECK(equals_to_order(r_function(P1, 120), theta_of_form({2, 1, 5}, 120), 120));

    // R(0,1,0,1,9,39,1,3,16) = 2 q^2 E(q^9) E(q^39)
    RParams P2{0, 1, 0, 1, 9, 39, 1, 3, 16};
    Rat P = 120;
    Series rhs = shifted(mul(E_at(9, P), E_at(39, P)), 2, 2);
    CHECK(equals_to_order(r_function(P2, P), rhs, P));

    // symmetry transformation target: R(1,0,1,0,1,351,9,16,27)
    RParams P3{1, 0, 1, 0, 1, 351, 9, 16, 27};
    CHECK(equals_to_order(r_function(P2, P), r_function(P3, P), P));

    CHECK_THROWS_AS(r_function(RParams{0, 0, 0, 0, 1, 40, 1, 4, 10}, 20),
                    ParameterError);
    CHECK_THROWS_AS(r_function(RParams{0, 0, 0, 0, 1, -4, 1, 5, -1}, 20),
                    ParameterError);
}

TEST_CASE("double-sum form of R") {
    // eps=delta=l=t=0, (alpha,beta,m,p,lambda)=(1,3,1,2,2): theta of (1,1,1)
    RParams P0{0, 0, 0, 0, 1, 3, 1, 2, 2};
    CHECK(equals_to_order(r_double_sum(P0, 100), theta_of_form({1, 1, 1}, 100), 100));

    std::mt19937 rng(71);
    for (int rep = 0; rep < 10; ++rep) {
        RParams P = random_rparams(rng);
        CHECK(equals_to_order(r_function(P, 60), r_double_sum(P, 60), 60));
    }
}

TEST_CASE("qrr parameters reproduce form theta series") {
    for (const auto& rf : reduced_forms(-39)) {
        RParams P = qrr_params(rf.form);
        CHECK(equals_to_order(r_double_sum(P, 80), theta_of_form(rf.form, 80), 80));
        CHECK(equals_to_order(r_function(P, 80), theta_of_form(rf.form, 80), 80));
    }
}

TEST_CASE("R transformation laws") {
    std::mt19937 rng(79);
    for (int rep = 0; rep < 10; ++rep) {
        RParams P = random_rparams(rng);
        RParams Q = prtt1_transform(P);
        CHECK(equals_to_order(r_function(P, 50), r_function(Q, 50), 50));
    }

    // R(0,0,0,0,1,39,1,4,10) = R(0,0,0,0,3,13,-3,4,10)
    RParams P1{0, 0, 0, 0, 1, 39, 1, 4, 10};
    RParams Q1 = prt1_transform(P1, 3, 13, -3, 4);
    CHECK(Q1.alpha == 3);
    CHECK(Q1.beta == 13);
    CHECK(Q1.m == -3);
    CHECK(equals_to_order(r_function(P1, 100), r_function(Q1, 100), 100));

    CHECK_THROWS_AS(prt1_transform(P1, 3, 14, -3, 4), ParameterError);
}

TEST_CASE("decomposition in the class basis") {
    // basis element decomposes as itself
    auto d = decompose_in_class_basis(theta_of_form({1, 1, 10}, 60), -39, 60);
    REQUIRE(d.size() == 3);
    for (const auto& [F, x] : d)
        CHECK(x == (F == QuadForm{1, 1, 10} ? Rat(1) : Rat(0)));

    // T5(2,1,44) = (9,3,10) + (10,7,10) at D = -351
    Series f = t5(theta_of_form({2, 1, 44}, 5 * 80));
    auto d351 = decompose_in_class_basis(f, -351, 80);
    for (const auto& [F, x] : d351) {
        if (F == QuadForm{9, 3, 10} || F == QuadForm{10, 7, 10})
            CHECK(x == 1);
        else
            CHECK(x == 0);
    }

    // T5(1,0,39) = 2(5,2,8) at D = -156
    auto d156 = decompose_in_class_basis(t5(theta_of_form({1, 0, 39}, 5 * 80)), -156, 80);
    for (const auto& [F, x] : d156)
        CHECK(x == (F == QuadForm{5, 2, 8} ? Rat(2) : Rat(0)));

    // T5(3,1,6) = (4,3,5) + (2,1,9) at D = -71
    auto d71 = decompose_in_class_basis(t5(theta_of_form({3, 1, 6}, 5 * 80)), -71, 80);
    for (const auto& [F, x] : d71) {
        if (F == QuadForm{4, 3, 5} || F == QuadForm{2, 1, 9})
            CHECK(x == 1);
        else
            CHECK(x == 0);
    }

    CHECK_THROWS_AS(decompose_in_class_basis(Series::one(60), -39, 60),
                    NotInSpanError);
    CHECK_THROWS_AS(decompose_in_class_basis(theta_of_form({1, 1, 10}, 20), -39, 20),
                    ParameterError);
}
