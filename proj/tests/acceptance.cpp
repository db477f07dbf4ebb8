// Runs the twelve acceptance criteria and prints one status line for each.
// Failure details go to stderr.
#include "qc/suites.hpp"

#include <iostream>
#include <map>
#include <sstream>

using namespace qc;

namespace {

std::map<std::string, CheckResult> index(const std::vector<CheckResult>& v) {
    std::map<std::string, CheckResult> m;
    for (auto& c : v) m[c.id] = c;
    return m;
}

struct Criterion {
    int n;
    std::string title;
    std::vector<std::string> ids;        // must pass
    std::vector<std::string> must_fail;  // regression fixtures, must fail
};

}  // namespace

int main() {
    SuiteOptions opt;
    opt.deg = 4;
    std::map<std::string, CheckResult> adopted;
    for (auto& s : suite_names())
        for (auto& [k, v] : index(run_suite(s, opt))) adopted[k] = v;
    std::map<std::string, CheckResult> literal;
    SuiteOptions lit = opt;
    lit.variant = "literal";
    for (auto calc : {"threeD", "fourDminus"}) {
        lit.calc = calc;
        for (auto& [k, v] : index(run_suite("calculus", lit))) literal[k] = v;
    }

    const std::vector<Criterion> criteria{
        {1, "Hopf axioms on normal words of degree <= 4",
         {"hopf.su_mu2", "hopf.etilde", "hopf.ekappa", "hopf.ekappa_dual"}, {}},
        {2, "confluence up to degree 6", {"confluence.etilde", "confluence.ekappa", "confluence.ekappa_dual"}, {}},
        {3, "t^0 and t^1 limit residues", {"limit-relations", "deformation"}, {}},
        {4, "3D ideal contraction and quotients of dimension 3",
         {"ideal-contraction.r_3d_sumu", "quotient.r0_tilde", "quotient.r0_ekappa"}, {}},
        {5, "4D ideal contractions and quotients of dimension 4",
         {"ideal-contraction.rplus", "ideal-contraction.rminus", "quotient.r0plus_tilde", "quotient.r0minus_tilde"}, {}},
        {6, "commutation tables", {"comm.threeD", "comm.fourDplus", "comm.fourDminus"}, {}},
        {7, "form expansion and leading wedge relations", {"expansion.forms", "expansion.wedge"}, {}},
        {8, "d^2 = 0 and Leibniz, literal exterior relations fail",
         {"d-squared.threeD", "leibniz.threeD", "d-squared.fourDplus", "leibniz.fourDplus", "d-squared.fourDminus",
          "leibniz.fourDminus"},
         {"d-squared.threeD", "d-squared.fourDminus"}},
        {9, "bracket tables and functional star",
         {"brackets.threeD", "brackets.fourDplus", "brackets.fourDminus", "functional-star.threeD"}, {}},
        {10, "dual side in the enveloping algebra",
         {"dual.relation", "dual.brackets", "dual.f-coproduct", "dual.chi-coproduct"}, {}},
        {11, "projections through the covering map",
         {"covering.ekappa_etilde", "proj.3d", "proj.4dplus", "proj.4dplus.functionals", "proj.4dminus",
          "proj.4dminus.functionals"},
         {}},
        {12, "truncated intersections at degrees 2, 3, 4",
         {"intersection.deg2", "intersection.deg3", "intersection.deg4"}, {}},
    };

    int failed = 0;
    for (auto& c : criteria) {
        std::vector<std::string> bad;
        int checked = 0;
        for (auto& id : c.ids) {
            auto it = adopted.find(id);
            if (it == adopted.end()) {
                bad.push_back(id + ": missing");
                continue;
            }
            checked += it->second.checked;
            if (it->second.ok()) continue;
            bad.push_back(id + ": " + it->second.witness);
            for (auto& d : it->second.details)
                if (d.find("derived") != std::string::npos) bad.push_back(id + ": " + d);
        }
        for (auto& id : c.must_fail) {
            auto it = literal.find(id);
            if (it == literal.end() || it->second.ok()) bad.push_back("literal " + id + " does not fail");
        }
        std::ostringstream line;
        line << (bad.empty() ? "PASS" : "FAIL") << "  criterion " << c.n << ": " << c.title << " (" << checked
             << " checked";
        if (!bad.empty()) line << ", failing";
        line << ")";
        std::cout << line.str() << std::endl;
        for (auto& b : bad) std::cerr << "    criterion " << c.n << ": " << b << "\n";
        failed += !bad.empty();
    }
    return failed ? 1 : 0;
}
