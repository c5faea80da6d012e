#include <catch2/catch_amalgamated.hpp>

#include "qrr/dsl.hpp"

using namespace qrr;

TEST_CASE("parse shapes") {
    ExprPtr e = parse("G(q)*H(q)*E(q) - E(q^5)");
    REQUIRE(e->kind == Expr::Kind::Difference);
    CHECK(e->args[0]->kind == Expr::Kind::Product);
    CHECK(e->args[1]->kind == Expr::Kind::Call);
    CHECK(e->args[1]->name == "E");

    ExprPtr u = parse("U(1,39;-q)");
    REQUIRE(u->kind == Expr::Kind::Call);
    REQUIRE(u->args.size() == 3);
    CHECK(u->args[2]->kind == Expr::Kind::Negate);
    CHECK(u->args[2]->args[0]->kind == Expr::Kind::Monomial);

    // "," also accepted before a base argument
    CHECK(print(parse("U(1,39,-q)")) == print(u));

    ExprPtr m = parse("q^3/2");
    CHECK(m->kind == Expr::Kind::Monomial);
    CHECK(m->value == Rat(3, 2));
}

TEST_CASE("parse errors carry byte offsets") {
    try {
        parse("phi(q");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 6);
        CHECK(std::string(e.what()).find(")") != std::string::npos);
    }

    CHECK_THROWS_AS(parse("zeta(q)"), ParseError);
    CHECK_THROWS_AS(parse("U(1)"), ParseError);
    CHECK_THROWS_AS(parse("phi(q,q)"), ParseError);
    CHECK_THROWS_AS(parse("1 + "), ParseError);
    CHECK_THROWS_AS(parse("q @ 2"), ParseError);

    try {
        parse("E(q) ! 3");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 6);
    }
}

TEST_CASE("canonical print round-trips") {
    const char* samples[] = {
        "G(q)*H(q)*E(q) - E(q^5)",
        "U(1,39;-q)",
        "-q^2 + (1/2)*phi(q^3)",
        "form(1,1,10;q^4) / kappa(-q^2)",
        "T5(q^5*E(q)*E(q^119))",
        "R(0,0,0,0,1,39,1,4,10)^2",
        "poch(-q,2,inf) - eta()",
        "f(-q,-q^4)*psi(q^2)^3",
        "(phi(q) - phi(q^4))/2",
        "q - -q",
    };
    for (const char* s : samples) {
        std::string once = print(parse(s));
        CHECK(print(parse(once)) == once);
    }
}

TEST_CASE("evaluation is a homomorphism over the operators") {
    Rat P = 50;
    Series a = evaluate(parse("phi(q)"), P);
    Series b = evaluate(parse("psi(q^2)"), P);
    CHECK(equals_to_order(evaluate(parse("phi(q)+psi(q^2)"), P), add(a, b), P));
    CHECK(equals_to_order(evaluate(parse("phi(q)-psi(q^2)"), P), sub(a, b), P));
    CHECK(equals_to_order(evaluate(parse("phi(q)*psi(q^2)"), P), mul(a, b), P));
    Series q = evaluate(parse("phi(q)/psi(q^2)"), P);
    CHECK(equals_to_order(q, mul(a, invert(b)), q.prec()));
    CHECK(equals_to_order(evaluate(parse("psi(q^2)^3"), P), pow_int(b, 3), P));
}

TEST_CASE("evaluation matches the kernel constructors") {
    Rat P = 60;
    CHECK(equals_to_order(evaluate(parse("G(q)*H(q)*E(q)"), P),
                          rescale_variable(euler_E(P / 5), 5), P));
    CHECK(equals_to_order(evaluate(parse("form(1,1,10)"), P),
                          theta_of_form({1, 1, 10}, P), P));
    CHECK(equals_to_order(evaluate(parse("R(0,0,0,0,1,39,1,4,10)"), P),
                          theta_of_form({2, 1, 5}, P), P));
    CHECK(equals_to_order(evaluate(parse("U(1,39;-q)"), P),
                          rr_U_base(1, 39, 1, true, P), P));
    CHECK(equals_to_order(evaluate(parse("poch(-q,2,inf)"), P), kappa(P), P));
    CHECK(equals_to_order(evaluate(parse("f(-q,-q^2)"), P), euler_E(P), P));
    CHECK(equals_to_order(evaluate(parse("H(-q^4)"), P),
                          at_base([](const Rat& p) { return rr_H(p); }, 4, true, P),
                          P));
    CHECK(evaluate(parse("eta()"), 10).valuation() == Rat(1, 24));
    CHECK(evaluate(parse("q^1/2*q^1/2"), 10).coefficient_at(1) == 1);
    CHECK(evaluate(parse("-2^2"), 10).coefficient_at(0) == -4);

    // T5 lowers the achieved precision by a factor of 5
    Series t = evaluate(parse("T5(form(1,0,19))"), 150);
    CHECK(t.prec() == 30);
    CHECK(equals_to_order(t, shifted(theta_of_form({4, 2, 5}, 30), 2, 0), 30));
}

TEST_CASE("evaluation argument validation") {
    CHECK_THROWS_AS(evaluate(parse("phi(2)"), 20), ParseError);
    CHECK_THROWS_AS(evaluate(parse("U(q,4)"), 20), ParseError);
    CHECK_THROWS_AS(evaluate(parse("phi(q^0)"), 20), ParseError);
    CHECK_THROWS_AS(evaluate(parse("inf"), 20), ParseError);
    CHECK_THROWS_AS(evaluate(parse("poch(-q,2,-1)"), 20), ParseError);
    CHECK_THROWS_AS(evaluate(parse("R(0,0,0,0,1,40,1,4,10)"), 20), ParameterError);
}
