#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qrr/registry.hpp"

namespace {

int exit_code_for(const std::vector<qrr::VerificationReport>& reports) {
    int code = 0;
    for (const auto& r : reports) {
        if (r.status == "error") return 2;
        if (r.status == "fail") code = 1;
    }
    return code;
}

void print_text_report(const qrr::VerificationReport& r) {
    std::cout << r.name << ": " << r.status << " (order "
              << qrr::to_string(r.order) << ", " << r.millis << " ms)";
    if (r.first_mismatch)
        std::cout << " first mismatch at q^"
                  << qrr::to_string(r.first_mismatch->exponent) << ": lhs "
                  << qrr::to_string(r.first_mismatch->lhs) << ", rhs "
                  << qrr::to_string(r.first_mismatch->rhs);
    if (!r.message.empty()) std::cout << " [" << r.message << "]";
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series identity verifier"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "list the identity catalogue");

    auto* verify_cmd =
        app.add_subcommand("verify", "verify catalogued identities");
    std::vector<std::string> names;
    bool all = false, json_out = false, text_out = false;
    std::string order_arg, file_path;
    unsigned jobs = 1;
    verify_cmd->add_option("--identity", names, "identity name (repeatable)");
    verify_cmd->add_flag("--all", all, "verify the whole catalogue");
    verify_cmd->add_option("--order", order_arg, "comparison order");
    verify_cmd->add_flag("--json", json_out, "JSON report");
    verify_cmd->add_flag("--text", text_out, "plain-text report (default)");
    verify_cmd->add_option("--jobs", jobs, "worker threads");
    verify_cmd->add_option("--file", file_path,
                           "verify identities from a file instead");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    std::string expr_text, eval_order = "50";
    bool eval_json = false;
    eval_cmd->add_option("expr", expr_text, "expression")->required();
    eval_cmd->add_option("--order", eval_order, "truncation order");
    eval_cmd->add_flag("--json", eval_json, "JSON output");

    auto* forms_cmd =
        app.add_subcommand("forms", "enumerate reduced quadratic forms");
    long long disc = 0;
    bool primitive_only = false, representatives = false;
    forms_cmd->add_option("--disc", disc, "negative discriminant")->required();
    forms_cmd->add_flag("--primitive-only", primitive_only,
                        "skip imprimitive forms");
    forms_cmd->add_flag("--representatives", representatives,
                        "one form per mirror pair (b >= 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*list_cmd) {
            for (const auto& r : qrr::registry_list())
                std::cout << r.name << "\t" << r.status_tag << "\t"
                          << r.description << "\n";
            return 0;
        }

        if (*verify_cmd) {
            std::optional<qrr::Rat> order;
            if (!order_arg.empty()) order = qrr::parse_rat(order_arg);

            std::vector<qrr::IdentityRecord> records;
            if (!file_path.empty()) {
                std::ifstream in(file_path);
                if (!in) {
                    std::cerr << "cannot open " << file_path << "\n";
                    return 2;
                }
                records = qrr::load_identity_file(in);
            } else if (all || names.empty()) {
                records = qrr::registry_list();
            } else {
                for (const auto& n : names) {
                    const qrr::IdentityRecord* rec = qrr::find_record(n);
                    if (!rec) {
                        std::cerr << "unknown identity: " << n << "\n";
                        return 2;
                    }
                    records.push_back(*rec);
                }
            }

            auto reports = qrr::verify_records(records, order, jobs);
            if (json_out) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : reports) arr.push_back(qrr::report_to_json(r));
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& r : reports) print_text_report(r);
            }
            return exit_code_for(reports);
        }

        if (*eval_cmd) {
            qrr::Rat order = qrr::parse_rat(eval_order);
            qrr::ExprPtr e = qrr::parse(expr_text);
            qrr::Series s = qrr::evaluate(e, order);
            if (eval_json) {
                nlohmann::json j;
                j["expr"] = qrr::print(e);
                j["order"] = qrr::to_string(s.prec());
                nlohmann::json terms = nlohmann::json::array();
                for (const auto& [exp, coeff] : s.terms())
                    terms.push_back({{"exponent", qrr::to_string(exp)},
                                     {"coefficient", qrr::to_string(coeff)}});
                j["terms"] = terms;
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& [exp, coeff] : s.terms())
                    std::cout << qrr::to_string(exp) << "\t"
                              << qrr::to_string(coeff) << "\n";
            }
            return 0;
        }

        if (*forms_cmd) {
            auto forms = representatives
                             ? qrr::form_representatives(disc)
                             : qrr::reduced_forms(disc);
            for (const auto& rf : forms) {
                if (primitive_only && !rf.primitive) continue;
                std::cout << "(" << rf.form.a << "," << rf.form.b << ","
                          << rf.form.c << ")\t"
                          << (rf.primitive ? "primitive" : "imprimitive")
                          << "\n";
            }
            return 0;
        }
    } catch (const qrr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
