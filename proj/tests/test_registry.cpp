#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "qrr/registry.hpp"

using namespace qrr;

TEST_CASE("registry membership and hygiene") {
    const auto& recs = registry_list();
    CHECK(recs.size() >= 48);

    std::set<std::string> names;
    for (const auto& r : recs) names.insert(r.name);
    CHECK(names.size() == recs.size());

    for (const char* expected :
         {"ghp", "b5", "he1", "tk1", "tkmm5", "gz5", "cnj1", "rmp", "u37"})
        CHECK(names.count(expected) == 1);

    std::set<std::string> tags = {"proved", "quoted", "conjectured"};
    for (const auto& r : recs) {
        CHECK(tags.count(r.status_tag) == 1);
        CHECK(r.default_order > 0);
        CHECK(!r.description.empty());
    }
}

TEST_CASE("every catalogued expression parses and round-trips") {
    for (const auto& r : registry_list()) {
        INFO(r.name);
        std::string lhs = print(parse(r.lhs));
        std::string rhs = print(parse(r.rhs));
        CHECK(print(parse(lhs)) == lhs);
        CHECK(print(parse(rhs)) == rhs);
    }
}

TEST_CASE("sample identities verify") {
    for (const char* name : {"ghp", "tdis", "b5", "tk1", "vc1c", "rem1"}) {
        auto rep = verify_identity(name, 120);
        INFO(name << ": " << rep.message);
        CHECK(rep.status == "pass");
        CHECK(!rep.first_mismatch.has_value());
        CHECK(rep.order == 120);
    }
    CHECK(verify_identity("tkmm5", 200).status == "pass");
    CHECK_THROWS_AS(verify_identity("no_such_identity", 10), DomainError);
}

TEST_CASE("a planted defect is reported at its valuation") {
    IdentityRecord bad{"ghp_defect", "G(q)*H(q)*E(q)", "E(q^5)*(1 + q^7)",
                       "perturbed on purpose", 120, "proved"};
    auto rep = verify_record(bad, 120);
    CHECK(rep.status == "fail");
    REQUIRE(rep.first_mismatch.has_value());
    CHECK(rep.first_mismatch->exponent == 7);
    CHECK(rep.first_mismatch->lhs != rep.first_mismatch->rhs);

    IdentityRecord broken{"oops", "phi(q", "E(q)", "syntax error", 50, "proved"};
    CHECK(verify_record(broken, 50).status == "error");
}

TEST_CASE("parallel verification is deterministic") {
    std::vector<IdentityRecord> subset(registry_list().begin(),
                                       registry_list().begin() + 12);
    auto seq = verify_records(subset, Rat(60), 1);
    auto par = verify_records(subset, Rat(60), 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].name == par[i].name);
        CHECK(seq[i].status == par[i].status);
        CHECK(seq[i].first_mismatch.has_value() ==
              par[i].first_mismatch.has_value());
    }
}

TEST_CASE("reports round-trip through JSON") {
    auto rep = verify_identity("ghp", 80);
    auto back = report_from_json(report_to_json(rep));
    CHECK(back.name == rep.name);
    CHECK(back.order == rep.order);
    CHECK(back.status == rep.status);
    CHECK(back.first_mismatch.has_value() == rep.first_mismatch.has_value());

    IdentityRecord bad{"d", "phi(q)", "phi(q) + q^3/2", "", 40, "proved"};
    auto fail = verify_record(bad, 40);
    auto fb = report_from_json(report_to_json(fail));
    REQUIRE(fb.first_mismatch.has_value());
    CHECK(fb.first_mismatch->exponent == Rat(3, 2));
    CHECK(report_to_json(fail) == report_to_json(fb));
}

TEST_CASE("identity files load") {
    std::istringstream in(
        "# comment line\n"
        "\n"
        "pent | 100 | E(q) | poch(q,1,inf)   # trailing note\n"
        "dis  | 60  | phi(q) | phi(q^4) + 2*q*psi(q^8)\n");
    auto recs = load_identity_file(in);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].name == "pent");
    CHECK(recs[0].default_order == 100);
    CHECK(recs[1].rhs == "phi(q^4) + 2*q*psi(q^8)");
    auto reports = verify_records(recs, std::nullopt, 2);
    CHECK(reports[0].status == "pass");
    CHECK(reports[1].status == "pass");

    std::istringstream broken("only | three | fields\n");
    CHECK_THROWS_AS(load_identity_file(broken), ParseError);
}
