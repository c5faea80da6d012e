#pragma once

#include <atomic>
#include <chrono>
#include <istream>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qrr/dsl.hpp"

namespace qrr {

/// One catalogued identity: both sides as expression-language strings.
/// Quotient identities are stored cross-multiplied so both sides stay
/// polynomial-valued.
struct IdentityRecord {
    std::string name;
    std::string lhs, rhs;
    std::string description;
    Rat default_order = 200;
    // "proved": derived here from the kernel's primitives;
    // "quoted": classical result taken as given; "conjectured": unproved.
    std::string status_tag = "proved";
};

struct VerificationReport {
    std::string name;
    Rat order;
    std::string status;  // "pass" | "fail" | "error"
    std::optional<Mismatch> first_mismatch;
    std::string message;  // for status == "error"
    long long millis = 0;
};

/// Evaluates both sides and compares coefficients up to `order`.  Operators
/// like T5 divide the achieved precision, so evaluation retries with a
/// proportionally larger target until the comparison order is reached.
inline VerificationReport verify_record(const IdentityRecord& rec,
                                        const Rat& order) {
    VerificationReport rep;
    rep.name = rec.name;
    rep.order = order;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ExprPtr lhs = parse(rec.lhs), rhs = parse(rec.rhs);
        Rat target = order;
        for (int iter = 0;; ++iter) {
            Series L = evaluate(lhs, target);
            Series R = evaluate(rhs, target);
            Rat achieved = std::min(L.prec(), R.prec());
            if (achieved >= order) {
                Mismatch mis;
                if (equals_to_order(L, R, order, &mis)) {
                    rep.status = "pass";
                } else {
                    rep.status = "fail";
                    rep.first_mismatch = mis;
                }
                break;
            }
            if (iter >= 8)
                throw PrecisionError("verification could not reach order " +
                                     to_string(order));
            if (achieved <= 0)
                target *= 2;
            else
                target *= order / achieved;
        }
    } catch (const Error& e) {
        rep.status = "error";
        rep.message = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    rep.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rep;
}

const std::vector<IdentityRecord>& registry_list();

inline const IdentityRecord* find_record(const std::string& name) {
    for (const auto& r : registry_list())
        if (r.name == name) return &r;
    return nullptr;
}

inline VerificationReport verify_identity(const std::string& name,
                                          const Rat& order) {
    const IdentityRecord* rec = find_record(name);
    if (!rec) throw DomainError("unknown identity: " + name);
    return verify_record(*rec, order);
}

/// Runs each record at its default order unless an override is given.
/// Results are indexed by record, so the output is deterministic for any
/// number of worker threads.
inline std::vector<VerificationReport> verify_records(
    const std::vector<IdentityRecord>& records,
    const std::optional<Rat>& order_override, unsigned jobs) {
    if (jobs == 0) jobs = 1;
    std::vector<VerificationReport> out(records.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= records.size()) return;
            out[i] = verify_record(records[i], order_override
                                                   ? *order_override
                                                   : records[i].default_order);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return out;
}

inline std::vector<VerificationReport> verify_all(
    const std::optional<Rat>& order_override = std::nullopt,
    unsigned jobs = 1) {
    return verify_records(registry_list(), order_override, jobs);
}

inline nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["identity"] = r.name;
    j["order"] = to_string(r.order);
    j["status"] = r.status;
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"exponent", to_string(r.first_mismatch->exponent)},
                               {"lhs", to_string(r.first_mismatch->lhs)},
                               {"rhs", to_string(r.first_mismatch->rhs)}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["millis"] = r.millis;
    if (!r.message.empty()) j["message"] = r.message;
    return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.name = j.at("identity").get<std::string>();
    r.order = parse_rat(j.at("order").get<std::string>());
    r.status = j.at("status").get<std::string>();
    if (!j.at("first_mismatch").is_null()) {
        const auto& m = j.at("first_mismatch");
        r.first_mismatch =
            Mismatch{parse_rat(m.at("exponent").get<std::string>()),
                     parse_rat(m.at("lhs").get<std::string>()),
                     parse_rat(m.at("rhs").get<std::string>())};
    }
    r.millis = j.at("millis").get<long long>();
    if (j.contains("message")) r.message = j.at("message").get<std::string>();
    return r;
}

/// Loads `name | order | lhs | rhs` lines; '#' comments and blank lines are
/// ignored.
inline std::vector<IdentityRecord> load_identity_file(std::istream& in) {
    std::vector<IdentityRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        if (stripped.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (;;) {
            std::size_t bar = stripped.find('|', start);
            parts.push_back(stripped.substr(
                start, bar == std::string::npos ? bar : bar - start));
            if (bar == std::string::npos) break;
            start = bar + 1;
        }
        if (parts.size() != 4)
            throw ParseError(lineno, "identity file line " +
                                         std::to_string(lineno) +
                                         ": expected name | order | lhs | rhs");
        auto trim = [](std::string s) {
            std::size_t b = s.find_first_not_of(" \t\r");
            std::size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        IdentityRecord rec;
        rec.name = trim(parts[0]);
        rec.default_order = parse_rat(trim(parts[1]));
        rec.lhs = trim(parts[2]);
        rec.rhs = trim(parts[3]);
        rec.description = "external identity file";
        rec.status_tag = "external";
        out.push_back(std::move(rec));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Built-in catalogue.
// ---------------------------------------------------------------------------

inline const std::vector<IdentityRecord>& registry_list() {
    auto rec = [](std::string name, std::string lhs, std::string rhs,
                  std::string desc, Rat order = 200,
                  std::string tag = "proved") {
        return IdentityRecord{std::move(name), std::move(lhs), std::move(rhs),
                              std::move(desc), std::move(order), std::move(tag)};
    };
    static const std::vector<IdentityRecord> records = {
        // --- classical theta and Rogers-Ramanujan material ---
        rec("phi_prod", "phi(q)", "kappa(q)^2*E(q^2)",
            "product form of the theta series of squares"),
        rec("psi_prod", "psi(q)*poch(q,2,inf)", "E(q^2)",
            "product form of the triangular-number theta series"),
        rec("e_prod", "E(q)", "poch(q,1,inf)",
            "pentagonal-number series as an infinite product"),
        rec("jtp_23", "f(q^2,q^3)",
            "poch(-q^2,5,inf)*poch(-q^3,5,inf)*poch(q^5,5,inf)",
            "triple-product witness with positive arguments"),
        rec("jtp_n14", "f(-q,-q^4)",
            "poch(q,5,inf)*poch(q^4,5,inf)*poch(q^5,5,inf)",
            "triple-product witness with negative arguments"),
        rec("tdis", "phi(q)", "phi(q^4) + 2*q*psi(q^8)",
            "even-odd dissection of the square theta series"),
        rec("pdis", "psi(q)", "f(q^6,q^10) + q*f(q^2,q^14)",
            "even-odd dissection of the triangular theta series"),
        rec("ghd_g", "G(q)*E(q)", "f(-q^2,-q^3)",
            "theta-quotient form of G"),
        rec("ghd_h", "H(q)*E(q)", "f(-q,-q^4)",
            "theta-quotient form of H"),
        rec("ghp", "G(q)*H(q)*E(q)", "E(q^5)",
            "product of the two Rogers-Ramanujan functions"),
        rec("gh2dis_g", "G(q)*E(q^2)", "E(q^8)*(G(q^16) + q*H(-q^4))",
            "even-odd dissection of G"),
        rec("gh2dis_h", "H(q)*E(q^2)", "E(q^8)*(q^3*H(q^16) + G(-q^4))",
            "even-odd dissection of H"),
        rec("entry2", "phi(q)", "E(q^2)*(G(q)*G(q^4) + q*H(q)*H(q^4))",
            "bilinear Rogers-Ramanujan form of theta(q)"),
        rec("entry3", "phi(q^5)", "E(q^2)*(G(q)*G(q^4) - q*H(q)*H(q^4))",
            "bilinear Rogers-Ramanujan form of theta(q^5)"),
        rec("b1", "E(q)*E(q^5)",
            "f(-q^10,-q^15)^2 - q^2*f(-q^5,-q^20)^2 - q*E(q^5)*E(q^25)",
            "5-dissection of the pentagonal series, theta form"),
        rec("b2", "E(q)",
            "E(q^5)*(G(q^5)^2 - q^2*H(q^5)^2) - q*E(q^25)",
            "5-dissection of the pentagonal series, G/H form"),
        rec("a1", "phi(q)",
            "phi(q^25) + 2*q*f(q^15,q^35) + 2*q^4*f(q^5,q^45)",
            "5-dissection of theta(q)"),
        rec("a2_a", "f(q^3,q^7)", "E(q^2)*H(q)*G(q^4)",
            "octagonal-gap theta as a Rogers-Ramanujan product"),
        rec("a2_b", "f(q,q^9)", "E(q^2)*G(q)*H(q^4)",
            "decagonal-gap theta as a Rogers-Ramanujan product"),
        rec("a4_14", "U5(phi(q)*phi(q^4))",
            "phi(q^5)*phi(q^20) + 4*q*f(q^3,q^7)*f(q^12,q^28)"
            " + 4*q^4*f(q,q^9)*f(q^4,q^36)",
            "U5 image of a theta product, witness (1,4)"),
        rec("a7_23", "phi(q^2)*phi(q^3)",
            "E(q^4)*E(q^6)*(U(2,3)*U(8,12) + q^2*U(2,12)*U(8,3))",
            "determinant expansion of a theta product, witness (2,3)"),
        // --- Hecke action on eta products and theta products ---
        rec("b5", "U5(E(q)*E(q^4)) + q*E(q^5)*E(q^20)",
            "E(q)*E(q^4)*U(1,4)^2",
            "U5 of a pentagonal product, witness (1,4)"),
        rec("b5_23", "U5(E(q^2)*E(q^3)) + q*E(q^10)*E(q^15)",
            "E(q^2)*E(q^3)*U(2,3)^2",
            "U5 of a pentagonal product, witness (2,3)"),
        rec("thr3p1_1_119", "T5(q^5*E(q)*E(q^119))",
            "q*E(q)*E(q^119)*U(1,119)^2",
            "T5 on an eta product, sum case, witness (1,119)", 100),
        rec("thr3p1_49_71", "T5(q^5*E(q^49)*E(q^71))",
            "q*E(q^49)*E(q^71)*U(49,71)^2",
            "T5 on an eta product, sum case, witness (49,71)", 100),
        rec("thr3p2_7_17", "T5(q*E(q^7)*E(q^17))",
            "-q^3*E(q^7)*E(q^17)*U(7,17)^2",
            "T5 on an eta product, difference case, witness (7,17)", 100),
        rec("thr3p2_19_29", "T5(q^2*E(q^19)*E(q^29))",
            "-q^8*E(q^19)*E(q^29)*U(19,29)^2",
            "T5 on an eta product, difference case, witness (19,29)", 100),
        rec("he1", "2*phi(q)*phi(q^4) + T5(phi(q)*phi(q^4))",
            "4*E(q^2)*E(q^8)*U(1,4)*U(4,16)",
            "T5 on a theta product, sum case, witness (1,4)"),
        rec("he1_23", "2*phi(q^2)*phi(q^3) + T5(phi(q^2)*phi(q^3))",
            "4*E(q^4)*E(q^6)*U(2,3)*U(8,12)",
            "T5 on a theta product, sum case, witness (2,3)"),
        rec("he1_114", "2*phi(q)*phi(q^14) + T5(phi(q)*phi(q^14))",
            "4*E(q^2)*E(q^28)*U(1,14)*U(4,56)",
            "T5 on a theta product, sum case, witness (1,14)"),
        rec("he2_14", "2*phi(q)*phi(q^4) - T5(phi(q)*phi(q^4))",
            "4*q*E(q^2)*E(q^8)*U(1,16)*U(4,4)",
            "complementary T5 relation degenerating to zero, witness (1,4)"),
        rec("he2_23", "2*phi(q^2)*phi(q^3) - T5(phi(q^2)*phi(q^3))",
            "4*q^2*E(q^4)*E(q^6)*U(2,12)*U(8,3)",
            "complementary T5 relation, sum case, witness (2,3)"),
        rec("he2_114", "2*phi(q)*phi(q^14) - T5(phi(q)*phi(q^14))",
            "4*q*E(q^2)*E(q^28)*U(1,56)*U(4,14)",
            "complementary T5 relation, sum case, witness (1,14)"),
        rec("thr2a_16", "2*phi(q)*phi(q^6) + T5(phi(q)*phi(q^6))",
            "4*E(q^2)*E(q^12)*U(1,24)*U(6,4)",
            "T5 on a theta product, difference case, witness (1,6)"),
        rec("thr2a_27", "2*phi(q^2)*phi(q^7) + T5(phi(q^2)*phi(q^7))",
            "4*E(q^4)*E(q^14)*U(2,28)*U(7,8)",
            "T5 on a theta product, difference case, witness (2,7)"),
        rec("thr2a_313", "2*phi(q^3)*phi(q^13) + T5(phi(q^3)*phi(q^13))",
            "4*E(q^6)*E(q^26)*U(3,52)*U(13,12)",
            "T5 on a theta product, difference case, witness (3,13)"),
        rec("thr2b_16", "2*phi(q)*phi(q^6) - T5(phi(q)*phi(q^6))",
            "4*q*E(q^2)*E(q^12)*U(1,6)*U(4,24)",
            "complementary T5 relation, difference case, witness (1,6)"),
        rec("thr2b_27", "2*phi(q^2)*phi(q^7) - T5(phi(q^2)*phi(q^7))",
            "4*q^2*E(q^4)*E(q^14)*U(2,7)*U(8,28)",
            "complementary T5 relation, difference case, witness (2,7)"),
        rec("thr2b_313", "2*phi(q^3)*phi(q^13) - T5(phi(q^3)*phi(q^13))",
            "4*q^3*E(q^6)*E(q^26)*U(3,13)*U(12,52)",
            "complementary T5 relation, difference case, witness (3,13)"),
        // --- discriminants -39 and -156 ---
        rec("prt1_39", "R(0,0,0,0,1,39,1,4,10)", "R(0,0,0,0,3,13,-3,4,10)",
            "parameter transformation of the lattice double sum"),
        rec("qrr_215", "form(2,1,5)", "R(0,0,0,0,1,39,1,4,10)",
            "form theta series as a lattice double sum"),
        rec("i215a", "form(2,1,5)",
            "phi(q^2)*phi(q^78) + 2*q^5*psi(q)*psi(q^39)"
            " + 4*q^20*psi(q^4)*psi(q^156)",
            "theta expansion of (2,1,5), first form"),
        rec("i215b", "form(2,1,5)",
            "phi(q^6)*phi(q^26) + 2*q^2*psi(q^3)*psi(q^13)"
            " + 4*q^8*psi(q^12)*psi(q^52)",
            "theta expansion of (2,1,5), second form"),
        rec("i1110", "form(1,1,10)",
            "phi(q)*phi(q^39) + 4*q^10*psi(q^2)*psi(q^78)",
            "theta expansion of (1,1,10)"),
        rec("i334", "form(3,3,4)",
            "phi(q^3)*phi(q^13) + 4*q^4*psi(q^6)*psi(q^26)",
            "theta expansion of (3,3,4)"),
        rec("i528a", "form(5,2,8)",
            "phi(q^24)*phi(q^104) + 2*q^8*psi(q^12)*psi(q^52)"
            " + 4*q^32*psi(q^48)*psi(q^208)"
            " + 2*q^5*f(q^6,q^42)*f(q^78,q^130)"
            " + 2*q^15*f(q^18,q^30)*f(q^26,q^182)",
            "theta expansion of (5,2,8), first form"),
        rec("i528b", "form(5,2,8)",
            "phi(q^8)*phi(q^312) + 2*q^20*psi(q^4)*psi(q^156)"
            " + 4*q^80*psi(q^16)*psi(q^624)"
            " + 2*q^5*f(q^234,q^390)*f(q^6,q^10)"
            " + 2*q^45*f(q^78,q^546)*f(q^2,q^14)",
            "theta expansion of (5,2,8), second form"),
        rec("trsdis_13", "phi(q)*phi(q^3)",
            "phi(q^4)*phi(q^12) + 4*q^4*psi(q^8)*psi(q^24)"
            " + 2*q^3*phi(q^4)*psi(q^24) + 2*q*phi(q^12)*psi(q^8)",
            "4-dissection of a theta product, witness (1,3)"),
        rec("fpr1", "4*E(q^2)*E(q^78)*U(1,39)*U(1,39;q^4)",
            "2*form(1,0,39) + 2*form(5,2,8)",
            "T5 decomposition behind the discriminant -39 set"),
        rec("fpr7", "4*q^3*E(q^6)*E(q^26)*U(3,13)*U(3,13;q^4)",
            "2*form(3,0,13) - 2*form(5,2,8)",
            "complementary decomposition for discriminant -156"),
        rec("udis_39", "E(q^2)*E(q^78)*U(1,39)",
            "E(q^8)*E(q^312)*(U(1,39;q^16) + q^8*U(1,39;-q^4)"
            " + q*U(1,156;-q^4) + q^39*U(39,4;-q^4))",
            "even-odd dissection of U(1,39)"),
        rec("ap2", "2*q^2*E(q^2)*E(q^78)*U(1,39)*U(1,39;-q)",
            "form(1,1,10) + form(2,1,5) - form(1,0,39) - form(5,2,8)",
            "bilinear U value as a four-form combination"),
        rec("ap3", "2*q^2*E(q^6)*E(q^26)*U(3,13)*U(3,13;-q)",
            "form(3,0,13) + form(2,1,5) - form(3,3,4) - form(5,2,8)",
            "companion four-form combination"),
        rec("ap4",
            "(form(3,0,13) - form(5,2,8))*psi(-q^3)*psi(-q^13)",
            "q^3*psi(-q)*psi(-q^39)*(form(1,0,39) + form(5,2,8))",
            "form quotient equals a psi quotient (cross-multiplied)"),
        rec("ap5",
            "(form(1,1,10) + form(2,1,5) - form(1,0,39) - form(5,2,8))"
            "*phi(-q^2)*phi(-q^78)",
            "phi(-q^6)*phi(-q^26)"
            "*(form(3,0,13) + form(2,1,5) - form(3,3,4) - form(5,2,8))",
            "form quotient equals a theta quotient (cross-multiplied)"),
        rec("rmp", "E(q)*E(q^39)*U(1,39)", "E(q^3)*E(q^13)*U(3,13)",
            "balanced product relation between U(1,39) and U(3,13)", 200,
            "quoted"),
        rec("rem1", "2*E(q^3)*E(q^13)*U(1,39)", "form(1,1,10) + form(2,1,5)",
            "two-form value of U(1,39)"),
        rec("rem2", "2*q^2*E(q)*E(q^39)*U(3,13)", "form(2,1,5) - form(3,3,4)",
            "two-form value of U(3,13)"),
        rec("rem3a", "2*q*E(q)*E(q^39)*U(1,39)", "form(1,1,10) - form(3,3,4)",
            "difference-form value of U(1,39)"),
        rec("rem3b", "2*q*E(q^3)*E(q^13)*U(3,13)", "form(1,1,10) - form(3,3,4)",
            "difference-form value of U(3,13)"),
        rec("rem_sq",
            "(form(2,1,5) - form(3,3,4))*(form(1,1,10) + form(2,1,5))",
            "(form(1,1,10) - form(3,3,4))^2",
            "square relation among the discriminant -39 forms"),
        rec("rem_ratio",
            "(form(1,1,10) - form(3,3,4))*E(q^3)*E(q^13)",
            "q*E(q)*E(q^39)*(form(1,1,10) + form(2,1,5))",
            "form ratio equals a pentagonal-product ratio"),
        // --- discriminant -351 ---
        rec("tk1", "form(2,1,44) - form(8,1,11)", "2*q^2*E(q^9)*E(q^39)",
            "form difference equals an eta-type product"),
        rec("tk2", "form(5,3,18) - form(8,1,11)", "2*q^5*E(q^3)*E(q^117)",
            "second form difference for discriminant -351"),
        rec("tk3", "form(4,1,22) - form(10,7,10)",
            "2*q^4*E(q^9)*E(q^39)*U(3,13;q^3)^2",
            "form difference with a squared U factor"),
        rec("tk4", "form(1,1,88) - form(9,3,10)",
            "2*q*E(q^3)*E(q^117)*U(1,39;q^3)^2",
            "companion form difference with a squared U factor"),
        rec("tk5a",
            "(form(4,1,22) - form(10,7,10))*E(q^9)*E(q^39)",
            "q^3*E(q^3)*E(q^117)*(form(1,1,88) - form(9,3,10))",
            "ratio of the squared-U differences (cross-multiplied)"),
        rec("tk5b",
            "(form(5,3,18) - form(8,1,11))*E(q^9)*E(q^39)",
            "q^3*E(q^3)*E(q^117)*(form(2,1,44) - form(8,1,11))",
            "ratio of the plain differences (cross-multiplied)"),
        rec("tk6a", "form(2,1,44)", "R(0,0,0,0,1,351,1,4,88)",
            "(2,1,44) as a lattice double sum"),
        rec("tk6b", "form(2,1,44)",
            "phi(q^2)*phi(q^702) + 2*q^44*psi(q)*psi(q^351)"
            " + 4*q^176*psi(q^4)*psi(q^1404)",
            "theta expansion of (2,1,44)"),
        rec("tk7a", "form(8,1,11)", "R(0,0,0,0,1,351,1,16,22)",
            "(8,1,11) as a lattice double sum"),
        rec("tk7b", "form(8,1,11)",
            "phi(q^8)*phi(q^2808)"
            " + 2*q^11*f(q^7,q^9)*f(q^2457,q^3159)"
            " + 2*q^44*f(q^6,q^10)*f(q^2106,q^3510)"
            " + 2*q^99*f(q^5,q^11)*f(q^1755,q^3861)"
            " + 2*q^176*psi(q^4)*psi(q^1404)"
            " + 2*q^275*f(q^3,q^13)*f(q^1053,q^4563)"
            " + 2*q^396*f(q^2,q^14)*f(q^702,q^4914)"
            " + 2*q^539*f(q,q^15)*f(q^351,q^5265)"
            " + 4*q^704*psi(q^16)*psi(q^5616)",
            "theta expansion of (8,1,11)"),
        rec("tk11", "form(2,1,44) - form(8,1,11)",
            "2*q^2*psi(q^16)*phi(q^2808)"
            " - 2*q^11*f(q^7,q^9)*f(q^2457,q^3159)"
            " + 2*q^45*f(q^2,q^14)*f(q^2106,q^3510)"
            " - 2*q^99*f(q^5,q^11)*f(q^1755,q^3861)"
            " + 2*q^176*f(q^4,q^12)*f(q^1404,q^4212)"
            " - 2*q^275*f(q^3,q^13)*f(q^1053,q^4563)"
            " + 2*q^395*f(q^6,q^10)*f(q^702,q^4914)"
            " - 2*q^539*f(q,q^15)*f(q^351,q^5265)"
            " + 2*q^702*phi(q^8)*psi(q^5616)",
            "term-by-term difference of the two expansions"),
        rec("tk_r16", "R(0,1,0,1,9,39,1,3,16)", "2*q^2*E(q^9)*E(q^39)",
            "signed double sum collapsing to an eta-type product"),
        rec("tk_prtt1", "R(0,1,0,1,9,39,1,3,16)", "R(1,0,1,0,1,351,9,16,27)",
            "symmetry transformation of the double sum"),
        rec("tk_t5", "T5(2*q^2*E(q^9)*E(q^39))",
            "form(10,7,10) - form(4,1,22)",
            "T5 image of the discriminant -351 product"),
        rec("hecke_2144", "T5(form(2,1,44))", "form(9,3,10) + form(10,7,10)",
            "class-basis decomposition of T5 on (2,1,44)"),
        rec("hecke_8111", "T5(form(8,1,11))", "form(4,1,22) + form(9,3,10)",
            "class-basis decomposition of T5 on (8,1,11)"),
        rec("bse1a", "(E(q^3)*E(q^13)*U(3,13))^2",
            "(E(q)*E(q^39)*U(1,39))^2",
            "squared balanced products agree"),
        rec("bse1b", "(E(q)*E(q^39)*U(1,39))^2",
            "phi(-q^2)*phi(-q^78)*psi(-q^13)*psi(-q^3)"
            " - q^3*phi(-q^26)*phi(-q^6)*psi(-q)*psi(-q^39)",
            "squared balanced product in theta form"),
        rec("bse_kappa",
            "U(1,39)*U(3,13)*kappa(-q^6)*kappa(-q^26)*kappa(-q^78)*kappa(-q^2)",
            "kappa(q)*kappa(q^39)*kappa(-q^78)*kappa(-q^2)"
            " - q^3*kappa(q^13)*kappa(q^3)*kappa(-q^6)*kappa(-q^26)",
            "bilinear U value in kappa form (cross-multiplied)"),
        // --- discriminant -71 ---
        rec("tkmm1", "2*q^3*E(q)*E(q^71)", "form(3,1,6) - form(4,3,5)",
            "pentagonal product as a form difference"),
        rec("tkmm2", "2*q*E(q)*E(q^71)*U(1,71)^2",
            "form(3,1,6) - form(4,3,5) - form(2,1,9) + form(1,1,18)",
            "squared U value as a four-form combination"),
        rec("tkmm3", "2*q^2*E(q)*E(q^71)*U(1,71)",
            "form(2,1,9) - form(3,1,6)",
            "linear U value as a form difference"),
        rec("tkmm4",
            "2*q*U(1,71;q^2)*kappa(-q^2)*kappa(-q^142)",
            "(kappa(q)*kappa(q^71) - kappa(-q)*kappa(-q^71) - 2*q^3)"
            "*kappa(-q^2)*kappa(-q^142) - 2*q^9",
            "kappa-form evaluation of U(1,71;q^2) (cross-multiplied)"),
        rec("tkmm5",
            "(form(3,1,6) - form(4,3,5) - form(2,1,9) + form(1,1,18))"
            "*(form(3,1,6) - form(4,3,5))",
            "(form(2,1,9) - form(3,1,6))^2",
            "quadratic relation among the discriminant -71 forms"),
        rec("hecke_316", "T5(form(3,1,6))", "form(4,3,5) + form(2,1,9)",
            "class-basis decomposition of T5 on (3,1,6)"),
        rec("hecke_435", "T5(form(4,3,5))", "form(3,1,6) + form(1,1,18)",
            "class-basis decomposition of T5 on (4,3,5)"),
        rec("tkmm6a", "R(0,1,0,1,1,71,3,5,16)",
            "2*q^2*f(-q,-q^4)*f(-q^142,-q^213)"
            " - 2*q^16*f(-q^2,-q^3)*f(-q^71,-q^284)",
            "double sum as a two-term theta combination"),
        rec("tkmm6b", "R(0,1,0,1,1,71,3,5,16)", "2*q^2*E(q)*E(q^71)*U(1,71)",
            "double sum as a linear U value"),
        rec("oiu_a", "R(0,1,0,1,1,71,3,5,16)", "R(1,0,1,0,1,71,3,16,5)",
            "symmetry transformation for the -71 double sum"),
        rec("oiu_b", "R(1,0,1,0,1,71,3,16,5)",
            "2*q^2*psi(q^16)*phi(q^568)"
            " - 2*q^3*f(q^3,q^13)*f(q^497,q^639)"
            " + 2*q^9*f(q^6,q^10)*f(q^426,q^710)"
            " - 2*q^20*f(q^7,q^9)*f(q^355,q^781)"
            " + 2*q^36*psi(q^4)*psi(q^284)"
            " - 2*q^57*f(q,q^15)*f(q^213,q^923)"
            " + 2*q^81*f(q^2,q^14)*f(q^142,q^994)"
            " - 2*q^109*f(q^5,q^11)*f(q^71,q^1065)"
            " + 2*q^142*phi(q^8)*psi(q^1136)",
            "expanded double sum for discriminant -71"),
        rec("atk5a", "form(2,1,9)", "R(0,0,0,0,1,71,1,4,18)",
            "(2,1,9) as a lattice double sum"),
        rec("atk5b", "form(2,1,9)",
            "phi(q^2)*phi(q^142) + 2*q^9*psi(q)*psi(q^71)"
            " + 4*q^36*psi(q^4)*psi(q^284)",
            "theta expansion of (2,1,9)"),
        rec("atk7a", "form(3,1,6)", "R(0,0,0,0,1,71,1,12,6)",
            "(3,1,6) as a lattice double sum"),
        rec("atk7b", "R(0,0,0,0,1,71,1,12,6)", "R(0,0,0,0,1,71,-5,16,6)",
            "parameter change inside the (3,1,6) double sum"),
        rec("atk7c", "form(3,1,6)",
            "phi(q^8)*phi(q^568)"
            " + 2*q^3*f(q^3,q^13)*f(q^497,q^639)"
            " + 2*q^10*f(q^2,q^14)*f(q^426,q^710)"
            " + 2*q^20*f(q^7,q^9)*f(q^355,q^781)"
            " + 2*q^36*psi(q^4)*psi(q^284)"
            " + 2*q^57*f(q,q^15)*f(q^213,q^923)"
            " + 2*q^80*f(q^6,q^10)*f(q^142,q^994)"
            " + 2*q^109*f(q^5,q^11)*f(q^71,q^1065)"
            " + 4*q^144*psi(q^16)*psi(q^1136)",
            "theta expansion of (3,1,6)"),
        rec("a435a", "form(4,3,5)", "R(0,0,0,0,1,71,3,8,10)",
            "(4,3,5) as a lattice double sum"),
        rec("a435b", "form(4,3,5)",
            "phi(q^4)*phi(q^284) + 2*q^5*f(q,q^7)*f(q^213,q^355)"
            " + 2*q^18*psi(q^2)*psi(q^142)"
            " + 2*q^40*f(q^3,q^5)*f(q^71,q^497)"
            " + 4*q^72*psi(q^8)*psi(q^568)",
            "theta expansion of (4,3,5)"),
        rec("dfe8", "2*form(4,3,5;q^2)",
            "phi(q^2)*phi(q^142) + phi(-q^2)*phi(-q^142)"
            " + 4*q^36*psi(q^4)*psi(q^284)"
            " + 2*q^9*psi(q)*psi(q^71) - 2*q^9*psi(-q)*psi(-q^71)",
            "even part of (4,3,5) after the base change q^2"),
        rec("njf", "form(2,1,9;q^2) - form(4,3,5;q^2)",
            "q^3*E(-q)*E(-q^71) - q^3*E(q)*E(q^71)"
            " - 2*q^12*E(q^4)*E(q^284)",
            "rescaled form difference in pentagonal products"),
        rec("tkmm4pre", "2*q^4*E(q^2)*E(q^142)*U(1,71;q^2)",
            "q^3*E(-q)*E(-q^71) - q^3*E(q)*E(q^71)"
            " - 2*q^12*E(q^4)*E(q^284) - 2*q^6*E(q^2)*E(q^142)",
            "pentagonal-product form of U(1,71;q^2)"),
        // --- discriminants -56 and -224 ---
        rec("rmc1",
            "(form(1,0,14) - form(3,2,5))*E(q^14)^2*E(q^4)^2",
            "q*E(q^28)^2*E(q^2)^2*(form(2,0,7) + form(3,2,5))",
            "form quotient for discriminant -56 (cross-multiplied)"),
        rec("rmc2", "4*q*E(q^2)*E(q^28)*U(1,56)*U(4,14)",
            "2*form(1,0,14) - 2*form(3,2,5)",
            "bilinear U decomposition for (1,0,14)"),
        rec("rmc3", "4*E(q^4)*E(q^14)*U(2,28)*U(7,8)",
            "2*form(2,0,7) + 2*form(3,2,5)",
            "bilinear U decomposition for (2,0,7)"),
        rec("hecke_1014", "T5(form(1,0,14))", "2*form(3,2,5)",
            "class-basis decomposition of T5 on (1,0,14)"),
        rec("hecke_207", "T5(form(2,0,7))", "2*form(3,2,5)",
            "class-basis decomposition of T5 on (2,0,7)"),
        rec("rmc4", "U(1,14)*E(q)^2*E(q^14)^2", "U(2,7)*E(q^2)^2*E(q^7)^2",
            "classical U quotient at level 14 (cross-multiplied)", 200,
            "quoted"),
        rec("rmc5", "U(1,56)*E(q^2)*E(q^28)", "U(7,8)*E(q^4)*E(q^14)",
            "classical U quotient at level 56 (cross-multiplied)", 200,
            "quoted"),
        rec("rcmm1",
            "(form(1,0,56) - form(5,4,12))*E(q^8)*E(q^28)",
            "q*E(q^4)*E(q^56)*(form(7,0,8) + form(3,2,19))",
            "form quotient for discriminant -224 (cross-multiplied)"),
        // --- quoted U quotients and their form consequences ---
        rec("vc1a", "U(1,54)*E(q^54)*E(q^9)*E(q^6)*E(q)",
            "U(2,27)*E(q^27)*E(q^18)*E(q^3)*E(q^2)",
            "classical U quotient at level 54", 200, "quoted"),
        rec("vc1b", "U(1,34)*kappa(-q)", "U(2,17)*kappa(-q^17)",
            "classical U quotient at level 34", 200, "quoted"),
        rec("vc1c", "U(2,13)", "U(1,26)",
            "classical U coincidence at level 26", 200, "quoted"),
        rec("vc2a", "U(1,66)*E(q^22)*E(q^3)", "U(2,33)*E(q^11)*E(q^6)",
            "classical U quotient at level 66", 200, "quoted"),
        rec("vc2b", "U(3,22)*E(q)*E(q^66)", "U(6,11)*E(q^2)*E(q^33)",
            "classical U quotient at level 33", 200, "quoted"),
        rec("dm216",
            "(form(2,0,27) - form(7,6,9))*E(q^3)*E(q^72)"
            "*psi(-q^2)*psi(-q^27)",
            "q^2*psi(-q)*psi(-q^6)*psi(-q^9)*psi(-q^54)"
            "*(form(1,0,54) + form(5,2,11))",
            "form quotient for discriminant -216 (cross-multiplied)"),
        rec("dm136",
            "(form(2,0,17) - form(5,2,7))*phi(-q^68)*psi(q)",
            "q^2*phi(-q^4)*psi(q^17)*(form(1,0,34) + form(5,2,7))",
            "form quotient for discriminant -136 (cross-multiplied)"),
        rec("dm104",
            "(form(1,0,26) - form(5,4,6))*E(q^4)*E(q^26)",
            "q*E(q^2)*E(q^52)*(form(2,0,13) + form(3,2,9))",
            "form quotient for discriminant -104 (cross-multiplied)"),
        rec("dm264a",
            "(form(6,0,11) - form(7,4,10))*E(q^6)*E(q^8)*E(q^33)*E(q^44)",
            "q^6*E(q^12)*E(q^22)*psi(-q)*psi(-q^66)"
            "*(form(3,0,22) + form(5,4,14))",
            "first form quotient for discriminant -264 (cross-multiplied)"),
        rec("dm264b",
            "(form(1,0,66) - form(5,4,14))"
            "*E(q^88)*E(q^66)*E(q^22)*E(q^12)*E(q^4)*E(q^3)",
            "q*E(q^132)*E(q^44)*E(q^24)*E(q^11)*E(q^6)*E(q^2)"
            "*(form(2,0,33) + form(7,4,10))",
            "second form quotient for discriminant -264 (cross-multiplied)"),
        // --- discriminant -1664 ---
        rec("gzi1", "2*q^3*E(q^16)*E(q^104)*U(2,13;q^8)",
            "form(3,2,139) - form(12,4,35)",
            "rescaled U value as a form difference"),
        rec("gzi2", "2*q^7*E(q^8)*E(q^208)*U(1,26;q^8)",
            "form(7,4,60) - form(15,4,28)",
            "companion rescaled U value as a form difference"),
        rec("gz1", "2*q^9*E(q^8)*E(q^208)", "form(9,8,48) - form(17,6,25)",
            "pentagonal product as a -1664 form difference"),
        rec("gz2", "2*q^5*E(q^16)*E(q^104)", "form(5,4,84) - form(20,4,21)",
            "second pentagonal product as a form difference"),
        rec("gz3", "2*q^5*E(q^8)*E(q^208)*U(1,26;q^8)^2",
            "form(5,4,84) + form(21,10,21) - form(13,0,32) - form(20,4,21)",
            "squared U value as a four-form combination"),
        rec("gz3b",
            "form(5,4,84) + form(21,10,21) - form(13,0,32) - form(20,4,21)",
            "2*q^5*E(q^16)*E(q^104) - 2*q^13*psi(q^104)*phi(-q^8)",
            "reduced theta form of the gz3 combination"),
        rec("gz4", "2*q*E(q^16)*E(q^104)*U(2,13;q^8)^2",
            "form(1,0,416) + form(17,6,25) - form(4,4,105) - form(9,8,48)",
            "companion squared U value as a four-form combination"),
        rec("gz4b",
            "form(1,0,416) + form(17,6,25) - form(4,4,105) - form(9,8,48)",
            "2*q*psi(q^8)*phi(-q^104) - 2*q^9*E(q^8)*E(q^208)",
            "reduced theta form of the gz4 combination"),
        rec("gz5", "(form(5,4,84) + form(21,10,21) - form(13,0,32)"
            " - form(20,4,21))*E(q^16)*E(q^104)",
            "q^4*E(q^8)*E(q^208)*(form(1,0,416) + form(17,6,25)"
            " - form(4,4,105) - form(9,8,48))",
            "ratio of the squared-U combinations (cross-multiplied)"),
        rec("gz5b",
            "(form(9,8,48) - form(17,6,25))*E(q^16)*E(q^104)",
            "q^4*E(q^8)*E(q^208)*(form(5,4,84) - form(20,4,21))",
            "ratio of the plain differences (cross-multiplied)"),
        rec("gz5c",
            "(form(7,4,60) - form(15,4,28))*E(q^16)*E(q^104)",
            "q^4*E(q^8)*E(q^208)*(form(3,2,139) - form(12,4,35))",
            "ratio of the rescaled U differences (cross-multiplied)"),
        rec("gz_4105a", "form(4,4,105)", "R(0,0,0,0,2,832,2,4,210)",
            "(4,4,105) as a lattice double sum"),
        rec("gz_4105b", "form(4,4,105)", "R(0,0,0,0,4,416,1,2,210)",
            "(4,4,105) after a parameter change"),
        rec("gz_4105c", "form(4,4,105)",
            "phi(q^4)*phi(q^416) + 4*q^105*psi(q^8)*psi(q^832)",
            "theta expansion of (4,4,105)"),
        rec("gz_1041", "form(1,0,416) - form(4,4,105)",
            "2*q*psi(q^8)*phi(-q^104)",
            "telescoped form difference for discriminant -1664"),
        rec("u126_sq", "U(1,26)^2*kappa(-q)*kappa(-q^13)",
            "kappa(-q^13)^2 - q*kappa(-q)^2",
            "squared U(1,26) in kappa form (cross-multiplied)", 200, "quoted"),
        // --- discriminant -84 ---
        rec("nd1", "(form(1,0,21) - form(5,4,5))*E(q^6)*E(q^14)",
            "q*E(q^2)*E(q^42)*(form(3,0,7) + form(2,2,11))",
            "form quotient for discriminant -84 (cross-multiplied)"),
        rec("nd2",
            "(form(3,0,7) - form(2,2,11))*E(q^2)*E(q^42)"
            "*psi(-q^3)^2*psi(-q^7)^2",
            "-q^2*E(q^6)*E(q^14)*psi(-q)^2*psi(-q^21)^2"
            "*(form(1,0,21) + form(5,4,5))",
            "second form quotient for discriminant -84 (cross-multiplied)"),
        rec("nd3a", "U(7,12)*psi(-q^3)*psi(-q^7)",
            "U(4,21)*psi(-q)*psi(-q^21)",
            "classical U quotient at level 84, first pair", 200, "quoted"),
        rec("nd3b", "U(3,28)*psi(-q^3)*psi(-q^7)",
            "U(1,84)*psi(-q)*psi(-q^21)",
            "classical U quotient at level 84, second pair", 200, "quoted"),
        rec("nd4", "4*E(q^6)*E(q^14)*U(3,7)*U(3,7;q^4)",
            "2*form(3,0,7) + 2*form(2,2,11)",
            "bilinear U decomposition for (3,0,7)"),
        rec("nd5a", "4*q^3*E(q^6)*E(q^14)*U(12,7)*U(3,28)",
            "-4*q^2*E(q^6)*E(q^14)*U(7,12)*U(3,28)",
            "Laurent-branch sign flip between U(12,7) and U(7,12)"),
        rec("nd5b", "-4*q^2*E(q^6)*E(q^14)*U(7,12)*U(3,28)",
            "2*form(3,0,7) - 2*form(2,2,11)",
            "complementary decomposition for (3,0,7)"),
        rec("nd6", "4*q*E(q^2)*E(q^42)*U(1,21)*U(1,21;q^4)",
            "2*form(1,0,21) - 2*form(5,4,5)",
            "bilinear U decomposition for (1,0,21)"),
        rec("nd7", "4*E(q^2)*E(q^42)*U(4,21)*U(1,84)",
            "2*form(1,0,21) + 2*form(5,4,5)",
            "complementary decomposition for (1,0,21)"),
        rec("hecke_307", "T5(form(3,0,7))", "2*form(2,2,11)",
            "class-basis decomposition of T5 on (3,0,7)"),
        rec("hecke_1021", "T5(form(1,0,21))", "2*form(5,4,5)",
            "class-basis decomposition of T5 on (1,0,21)"),
        rec("u37", "U(3,7)", "U(1,21)",
            "classical U coincidence at level 21", 200, "quoted"),
        // --- discriminant -76 ---
        rec("abt1",
            "4*U(1,19;q)*U(1,19;q^4)*kappa(-q^2)^2*kappa(-q^38)^2",
            "(3*kappa(q)^2*kappa(q^19)^2 + kappa(-q)^2*kappa(-q^19)^2)"
            "*kappa(-q^2)^2*kappa(-q^38)^2 + 4*q^5",
            "kappa-form bilinear U relation (cross-multiplied)"),
        rec("abt2",
            "4*q*U(1,19)*U(1,19;-q)*kappa(-q^2)^2*kappa(-q^38)^2",
            "(kappa(q)^2*kappa(q^19)^2 - kappa(-q)^2*kappa(-q^19)^2)"
            "*kappa(-q^2)^2*kappa(-q^38)^2 + 12*q^5",
            "signed kappa-form bilinear U relation (cross-multiplied)"),
        rec("abt3", "4*E(q^2)*E(q^38)*U(1,19)*U(1,19;q^4)",
            "2*form(1,0,19) + 2*form(4,2,5)",
            "bilinear U decomposition for (1,0,19)"),
        rec("abt4", "4*q*E(q^2)*E(q^38)*U(4,19)*U(1,76)",
            "2*form(1,0,19) - 2*form(4,2,5)",
            "complementary decomposition for (1,0,19)"),
        rec("hecke_1019", "T5(form(1,0,19))", "2*form(4,2,5)",
            "class-basis decomposition of T5 on (1,0,19)"),
        rec("abt5", "U(4,19)*U(1,76)", "U(1,19;q^2)",
            "classical bilinear U collapse at level 76", 200, "quoted"),
        rec("abt5a", "4*q*U(1,19;q^2)*E(q^2)*E(q^38)",
            "phi(q)*phi(q^19) - phi(-q)*phi(-q^19)"
            " - 4*q^5*psi(q^2)*psi(q^38)",
            "theta-form evaluation of U(1,19;q^2)", 200, "quoted"),
        rec("abt6", "4*q*U(1,19;q^2)*kappa(-q^2)^2*kappa(-q^38)^2",
            "(kappa(q)^2*kappa(q^19)^2 - kappa(-q)^2*kappa(-q^19)^2)"
            "*kappa(-q^2)^2*kappa(-q^38)^2 - 4*q^5",
            "kappa-form evaluation of U(1,19;q^2)", 200, "quoted"),
        rec("abt8", "2*form(4,2,5)",
            "phi(q)*phi(q^19) + phi(-q)*phi(-q^19)"
            " + 4*q^5*psi(q^2)*psi(q^38)",
            "even-part evaluation of (4,2,5)"),
        // --- conjectural ---
        rec("cnj1", "(form(4,1,7) - form(5,3,6))*E(q^3)*E(q^37)",
            "q^3*E(q)*E(q^111)*(form(1,1,28) - form(4,1,7))",
            "form quotient for discriminant -111 (cross-multiplied)", 200,
            "conjectured"),
        rec("cnj1b", "(form(3,3,10) - form(4,1,7))*E(q^3)*E(q^37)",
            "q^3*E(q)*E(q^111)*(form(2,1,14) + form(4,1,7))",
            "second form quotient for discriminant -111 (cross-multiplied)",
            200, "conjectured"),
        rec("cnj2", "(form(4,3,8) - form(6,5,6))*E(q^7)*E(q^17)",
            "q^4*E(q)*E(q^119)*(form(1,1,30) + form(5,1,6))",
            "form quotient for discriminant -119 (cross-multiplied)", 200,
            "conjectured"),
        rec("cnj3",
            "(form(4,3,8) - form(2,1,15))*(form(3,1,10) - form(5,1,6))",
            "(form(1,1,30) + form(5,1,6))*(form(6,5,6) - form(5,1,6))",
            "product relation among the discriminant -119 forms", 200,
            "conjectured"),
        rec("cnj4", "(form(1,0,20) - form(3,2,7))*E(q^10)*E(q^8)",
            "q*E(q^40)*E(q^2)*(form(3,2,7) + form(4,0,5))",
            "form quotient for discriminant -80 (cross-multiplied)", 200,
            "conjectured"),
    };
    return records;
}

}  // namespace qrr
