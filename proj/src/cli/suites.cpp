#include "qc/suites.hpp"
#include "qc/calculus.hpp"
#include "qc/contract.hpp"
#include "qc/covering.hpp"
#include "qc/dual.hpp"
#include "qc/expand.hpp"
#include "qc/verify_calculus.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qc {

namespace {

using Checks = std::vector<CheckResult>;

// a thrown error becomes a failing check so that one bad entry does not hide
// the rest of the suite
void guarded(Checks& out, const std::string& id, const std::function<void(Checks&)>& f) {
    try {
        f(out);
    } catch (const std::exception& e) {
        CheckResult r{id};
        r.fail(std::string("error: ") + e.what());
        out.push_back(r);
    }
}

Exec exec_of(const SuiteOptions& o) { return o.jobs == 1 ? Exec::serial : Exec::parallel; }

std::vector<std::string> pick(const std::vector<std::string>& all, const std::string& one, const char* what) {
    if (one.empty()) return all;
    if (std::find(all.begin(), all.end(), one) == all.end())
        throw std::invalid_argument(std::string("unknown ") + what + " '" + one + "'");
    return {one};
}

const CatalogEntry* table_of(const Catalog& cat, const std::string& type, const std::string& calc,
                             const std::string& variant) {
    for (auto& n : cat.list("table")) {
        const CatalogEntry& t = cat.get("table." + n, variant);
        if (t.value("type") == type && t.value("calculus") == calc) return &t;
    }
    return nullptr;
}

Checks hopf(const Catalog& cat, const SuiteOptions& o) {
    Checks out;
    for (auto& name : pick(cat.list("algebra"), o.algebra, "algebra")) {
        guarded(out, "hopf." + name, [&](Checks& v) {
            const CatalogEntry& e = cat.get("algebra." + name, o.variant);
            HopfStructure h = load_algebra(e);
            CheckResult r{"hopf." + name, e.location(), o.deg};
            AxiomReport wd = check_well_defined(h);
            AxiomReport ax = check_hopf_axioms(h, o.deg, exec_of(o));
            for (auto* rep : {&wd, &ax})
                for (auto& a : rep->axioms) {
                    r.checked += a.checked;
                    if (a.failed && !r.failed) r.witness = a.name + ": " + a.witness;
                    r.failed += a.failed;
                }
            v.push_back(r);
        });
        guarded(out, "confluence." + name, [&](Checks& v) {
            const CatalogEntry& e = cat.get("algebra." + name, o.variant);
            Alphabet al = alphabet_of(e);
            std::vector<NCPoly> rels;
            for (auto& l : e.section("relations")) rels.push_back(parse_equation(l, al));
            Presentation p = Presentation::from_relations(al, rels);
            OverlapReport done = p.complete(std::stoi(e.value("complete_degree", "8")));
            OverlapReport rep = p.check_confluence(6);
            CheckResult r{"confluence." + name, e.location(), 6};
            for (auto& ov : rep.overlaps)
                r.record(ov.resolved, "overlap " + al.word_str(ov.word) + " leaves " + ov.diff.str(al));
            if (rep.overlaps.empty()) r.pass();
            r.details = done.completion_log;
            v.push_back(r);
        });
    }
    return out;
}

Checks contraction(const Catalog& cat, const SuiteOptions& o) {
    if (o.order < 1) throw std::invalid_argument("order must be at least 1");
    Checks out;
    guarded(out, "limit-relations", [&](Checks& v) {
        ContractionMap cm(cat);
        for (auto& c : verify_limit_algebra(cm, 1).checks()) v.push_back(c);
    });
    guarded(out, "expansion.forms", [&](Checks& v) {
        ContractionMap cm(cat);
        CalculusCache cc(cat, o.variant);
        for (auto& c : expand_forms(cat, cm, cc).checks()) v.push_back(c);
    });
    return out;
}

CheckResult quotient_check(const Catalog& cat, const std::string& name, const std::string& variant, int deg) {
    IdealData id = load_ideal(cat, name, variant);
    HopfStructure h = load_algebra(cat, id.algebra);
    QuotientReport q = quotient_report(h.pres(), id.gens, h.counit_values(), deg, id.reps);
    CheckResult r{"quotient." + name, id.location, deg};
    const int want = static_cast<int>(id.reps.size());
    r.record(q.dimension == want, "dimension " + std::to_string(q.dimension) + ", expected " + std::to_string(want));
    r.record(q.reps_ok && q.reps_independent, q.witness.empty() ? "representatives are not a basis" : q.witness);
    return r;
}

Checks ideals(const Catalog& cat, const SuiteOptions& o) {
    Checks out;
    guarded(out, "ideal-contraction", [&](Checks& v) {
        ContractionMap cm(cat);
        for (auto& [src, claimed] : cm.ideal_pairs()) {
            guarded(v, "ideal-contraction." + src, [&](Checks& w) {
                auto rep = contract_ideal(cm, cat, src, claimed, o.deg, o.variant);
                CheckResult r{"ideal-contraction." + src, cat.get("ideal." + claimed, o.variant).location(), o.deg};
                r.record(rep.ok(), rep.witness.empty() ? "limit and claimed ideal differ" : rep.witness);
                r.details.push_back("source rank " + std::to_string(rep.source_rank) + ", limit " +
                                    std::to_string(rep.limit_dim) + ", claimed " + std::to_string(rep.claimed_dim) +
                                    ", series order " + std::to_string(rep.order));
                for (auto& s : rep.scaled)
                    r.details.push_back(s.generator + " -> R^" + std::to_string(s.scale) + ": " +
                                        s.value.str(cm.target().alphabet()) +
                                        (s.in_claimed ? "" : "  (outside the claimed ideal)"));
                w.push_back(r);
            });
        }
    });
    for (auto name : {"r0_tilde", "r0_ekappa", "r0plus_tilde", "r0minus_tilde"})
        guarded(out, std::string("quotient.") + name,
                [&](Checks& v) { v.push_back(quotient_check(cat, name, o.variant, o.deg)); });
    return out;
}

const std::vector<std::string>& main_calculi() {
    static const std::vector<std::string> v{"threeD", "fourDplus", "fourDminus"};
    return v;
}

Checks calculus(const Catalog& cat, const SuiteOptions& o) {
    Checks out;
    for (auto& name : pick(main_calculi(), o.calc, "calculus")) {
        guarded(out, "calculus." + name, [&](Checks& v) {
            Calculus c = load_calculus(cat, name, o.variant);
            if (auto* t = table_of(cat, "comm", name, o.variant)) v.push_back(check_comm_table(c, *t));
            if (auto* t = table_of(cat, "form_star", name, o.variant)) v.push_back(check_form_star_table(c, *t));
            for (auto& f : cat.list("forms")) {
                const CatalogEntry& e = cat.get("forms." + f, o.variant);
                if (e.value("calculus") == name) v.push_back(check_named_forms(c, e));
            }
            v.push_back(check_invariant_forms(c));
            v.push_back(check_d_squared(c, o.deg, exec_of(o)));
            v.push_back(check_leibniz(c, o.deg, exec_of(o)));
            if (c.has_exterior()) v.push_back(check_right_stability(c));
            if (c.has_cartan()) v.push_back(check_cartan_maurer(c));
            v.push_back(check_star_differential(c, std::min(o.deg, 3)));
        });
    }
    return out;
}

Checks brackets(const Catalog& cat, const SuiteOptions& o) {
    Checks out;
    for (auto& name : pick(main_calculi(), o.calc, "calculus")) {
        guarded(out, "brackets." + name, [&](Checks& v) {
            Calculus c = load_calculus(cat, name, o.variant);
            const CatalogEntry& e = cat.get("calculus." + name, o.variant);
            FunctionalAlgebra fa = FunctionalAlgebra::of(c, e.list("functionals"));
            if (auto* t = table_of(cat, "bracket", name, o.variant)) v.push_back(check_bracket_table(fa, *t, o.deg, exec_of(o)));
            if (auto* t = table_of(cat, "functional_star", name, o.variant))
                v.push_back(check_functional_star(fa, *t, o.deg));
            v.push_back(check_f_multiplicative(c, std::min(o.deg, 3)));
            v.push_back(check_chi_coproduct(c, std::min(o.deg, 3)));
        });
    }
    return out;
}

Checks dual(const Catalog& cat, const SuiteOptions& o) {
    Checks out;
    guarded(out, "dual", [&](Checks& v) {
        for (auto& c : verify_dual_side(cat, "ekappa_dual", o.variant)) v.push_back(c);
    });
    return out;
}

Checks projections(const Catalog& cat, const SuiteOptions& o) {
    Checks out;
    guarded(out, "covering.ekappa_etilde", [&](Checks& v) {
        CoveringMap m(cat, "ekappa_etilde", o.variant);
        v.push_back(check_covering(m, std::min(o.deg, 3)));
    });
    guarded(out, "proj", [&](Checks& v) {
        CalculusCache cc(cat, o.variant);
        for (auto& c : verify_projections(cat, cc, o.deg)) v.push_back(c);
    });
    return out;
}

Checks intersections(const Catalog& cat, const SuiteOptions& o) {
    Checks out;
    CoveringMap m(cat);
    for (int d = std::min(2, o.deg); d <= o.deg; ++d)
        guarded(out, "intersection.deg" + std::to_string(d),
                [&](Checks& v) { v.push_back(verify_intersections(cat, m, d, o.variant).check()); });
    return out;
}

using Runner = Checks (*)(const Catalog&, const SuiteOptions&);
const std::vector<std::pair<std::string, Runner>>& runners() {
    static const std::vector<std::pair<std::string, Runner>> r{
        {"hopf", hopf},         {"contraction", contraction}, {"ideals", ideals},
        {"calculus", calculus}, {"brackets", brackets},       {"dual", dual},
        {"projections", projections}, {"intersections", intersections}};
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> v = [] {
        std::vector<std::string> n;
        for (auto& [k, f] : runners()) n.push_back(k);
        return n;
    }();
    return v;
}

bool is_suite(const std::string& name) {
    if (name == "all") return true;
    auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opt, const Catalog& cat) {
    if (opt.deg < 0) throw std::invalid_argument("degree must be non-negative");
    if (opt.variant != "adopted" && opt.variant != "literal")
        throw std::invalid_argument("variant must be literal or adopted");
    if (opt.jobs > 0) omp_set_num_threads(opt.jobs);
    Checks out;
    for (auto& [name, f] : runners()) {
        if (suite != "all" && suite != name) continue;
        Checks c = f(cat, opt);
        out.insert(out.end(), c.begin(), c.end());
        if (suite != "all") return out;
    }
    if (suite != "all") throw std::invalid_argument("unknown suite '" + suite + "'");
    return out;
}

std::vector<CheckResult> run_contract(const SuiteOptions& opt, const Catalog& cat) {
    if (opt.order < 1) throw std::invalid_argument("order must be at least 1");
    Checks out = contraction(cat, opt);
    Checks id = ideals(cat, opt);
    for (auto& c : id)
        if (c.id.rfind("ideal-contraction", 0) == 0) out.push_back(c);
    return out;
}

}  // namespace qc
