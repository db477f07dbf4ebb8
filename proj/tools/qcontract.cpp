#include "qc/contract.hpp"
#include "qc/parser.hpp"
#include "qc/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

constexpr const char* kVersion = "1.0.0";

struct Common {
    qc::SuiteOptions opt;
    std::string json_path;
    bool no_time = false;
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--deg", c.opt.deg, "degree bound")->check(CLI::NonNegativeNumber);
    app->add_option("--order", c.opt.order, "series order in t");
    app->add_option("--variant", c.opt.variant, "catalog reading")->check(CLI::IsMember({"adopted", "literal"}));
    app->add_option("--jobs", c.opt.jobs, "worker threads (1 = serial)")->check(CLI::NonNegativeNumber);
    app->add_option("--json", c.json_path, "write the JSON report to this path ('-' for stdout)");
    app->add_flag("--no-time", c.no_time, "report wall_time_ms as 0");
}

std::string status(const qc::CheckResult& c) { return c.skipped ? "skipped" : c.ok() ? "pass" : "fail"; }

std::string witness(const qc::CheckResult& c) {
    if (c.ok()) return "";
    std::string w = c.witness;
    for (auto& d : c.details) w += " | " + d;
    return w;
}

int report(const std::string& suite, const std::vector<qc::CheckResult>& checks, const Common& c, long ms) {
    int failed = 0;
    for (auto& r : checks) {
        failed += !r.ok() && !r.skipped;
        std::cout << (r.skipped ? "SKIP" : r.ok() ? "PASS" : "FAIL") << "  " << r.id;
        if (!r.location.empty()) std::cout << "  " << r.location;
        std::cout << "  (" << r.checked << " checked";
        if (r.failed) std::cout << ", " << r.failed << " failed";
        std::cout << ")\n";
        if (!r.ok()) std::cout << "      " << r.witness << "\n";
        if (!r.ok())
            for (auto& d : r.details) std::cout << "      " << d << "\n";
    }
    std::cout << suite << ": " << checks.size() - failed << "/" << checks.size() << " checks pass\n";
    if (!c.json_path.empty()) {
        nlohmann::ordered_json j;
        j["tool_version"] = kVersion;
        j["suite"] = suite;
        j["checks"] = nlohmann::ordered_json::array();
        for (auto& r : checks) {
            nlohmann::ordered_json e;
            e["id"] = r.id;
            e["paper_location"] = r.location;
            e["status"] = status(r);
            e["witness"] = witness(r);
            e["degree_bound"] = r.degree;
            j["checks"].push_back(e);
        }
        j["wall_time_ms"] = c.no_time ? 0 : ms;
        if (c.json_path == "-") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::ofstream f(c.json_path);
            if (!f) throw std::runtime_error("cannot write " + c.json_path);
            f << j.dump(2) << "\n";
        }
    }
    return failed ? 1 : 0;
}

long since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification of the kappa-contraction of SU_mu(2) and its differential calculi"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Common check_opts;
    std::string suite;
    auto* check = app.add_subcommand("check", "run a named check suite");
    std::string suites = "all";
    for (auto& s : qc::suite_names()) suites += ", " + s;
    check->add_option("suite", suite, "one of: " + suites)->required();
    check->add_option("--algebra", check_opts.opt.algebra, "restrict the hopf suite to one algebra");
    check->add_option("--calc", check_opts.opt.calc, "restrict calculus and brackets to one calculus");
    add_common(check, check_opts);

    std::string nf_algebra = "etilde", nf_expr;
    auto* nf = app.add_subcommand("nf", "print the normal form of an expression");
    nf->add_option("--algebra", nf_algebra, "catalog algebra");
    nf->add_option("expr", nf_expr, "expression")->required();

    Common contract_opts;
    auto* contract = app.add_subcommand("contract", "run the contraction: limit relations, ideals, form expansion");
    add_common(contract, contract_opts);
    contract->add_option("--report", contract_opts.json_path, "alias of --json");

    std::string expand_expr;
    int expand_order = 1;
    auto* expand = app.add_subcommand("expand", "t-expansion of an SU_mu(2) expression in the E~ letters");
    expand->add_option("expr", expand_expr, "expression over sigma sigmas rho rhos and mu")->required();
    expand->add_option("--order", expand_order, "highest power of t")->check(CLI::Range(0, 2));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        const qc::Catalog& cat = qc::Catalog::builtin();
        if (*check) {
            if (!qc::is_suite(suite)) {
                std::cerr << "unknown suite '" << suite << "'; expected one of: " << suites << "\n";
                return 2;
            }
            auto t0 = std::chrono::steady_clock::now();
            std::vector<qc::CheckResult> res;
            try {
                res = qc::run_suite(suite, check_opts.opt, cat);
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << "\n";
                return 2;
            }
            return report(suite, res, check_opts, since(t0));
        }
        if (*nf) {
            if (!cat.has("algebra." + nf_algebra)) {
                std::cerr << "unknown algebra '" << nf_algebra << "'\n";
                return 2;
            }
            qc::HopfStructure h = qc::load_algebra(cat, nf_algebra);
            try {
                std::cout << h.nf(qc::parse(nf_expr, h.alphabet())).str(h.alphabet()) << "\n";
            } catch (const qc::ParseError& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return 2;
            }
            return 0;
        }
        if (*contract) {
            if (contract_opts.opt.order < 1) {
                std::cerr << "--order must be at least 1 (the t^1 residues need it)\n";
                return 2;
            }
            auto t0 = std::chrono::steady_clock::now();
            auto res = qc::run_contract(contract_opts.opt, cat);
            return report("contract", res, contract_opts, since(t0));
        }
        if (*expand) {
            qc::ContractionMap cm(cat);
            qc::NCPoly p;
            try {
                p = qc::parse(expand_expr, cm.source().alphabet());
            } catch (const qc::ParseError& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return 2;
            }
            auto c = cm.substitute_and_expand(p, expand_order);
            for (int k = 0; k <= expand_order; ++k)
                std::cout << "t^" << k << ": " << cm.target().nf(c[k]).str(cm.target().alphabet()) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
