#include "qc/covering.hpp"
#include "qc/parser.hpp"
#include "qc/verify_calculus.hpp"

#include <algorithm>

namespace qc {

CoveringMap::CoveringMap(const Catalog& cat, const std::string& n, const std::string& v) {
    const CatalogEntry& e = cat.get("covering." + n, v);
    name = e.name;
    location = e.location();
    variant = e.variant;
    source_ = std::make_shared<HopfStructure>(load_algebra(cat, e.value("source")));
    target_ = std::make_shared<HopfStructure>(load_algebra(cat, e.value("target")));
    const Alphabet& sa = source_->alphabet();
    images_.resize(sa.size());
    std::vector<bool> seen(sa.size());
    for (auto& l : e.section("map")) {
        auto [g, x] = split_definition(l);
        Gen id = sa.id(g);
        images_[id] = parse(x, target_->alphabet());
        seen[id] = true;
    }
    for (int g = 0; g < sa.size(); ++g)
        if (!seen[g]) throw std::runtime_error(e.key() + ": no image for " + sa.name(static_cast<Gen>(g)));
}

NCPoly CoveringMap::operator()(const NCPoly& p) const {
    NCPoly r;
    for (auto& [w, c] : p.terms()) {
        NCPoly t(c);
        for (Gen g : w) t = target_->nf(t * images_[g]);
        r += t;
    }
    return r;
}

TensorPoly CoveringMap::operator()(const TensorPoly& t) const {
    TensorPoly r;
    for (auto& [k, c] : t.terms()) r += TensorPoly::of((*this)(NCPoly::word(k.first)), (*this)(NCPoly::word(k.second))) * c;
    return target_->reduce(r);
}

CheckResult check_covering(const CoveringMap& m, int deg) {
    CheckResult r{"covering." + m.name, m.location, deg};
    const HopfStructure& s = m.source();
    const HopfStructure& t = m.target();
    const Alphabet& sa = s.alphabet();
    for (auto& rule : s.pres().rules()) {
        NCPoly rel = NCPoly::word(rule.lhs) - rule.rhs;
        NCPoly x = m(rel);
        r.record(x.is_zero(), "relation " + rel.str(sa) + " = 0 maps to " + x.str(t.alphabet()));
    }
    for (auto& w : s.pres().basis_words(deg)) {
        NCPoly x = NCPoly::word(w);
        NCPoly img = m(x);
        std::string ws = sa.word_str(w);
        r.record(t.reduce(t.coproduct(img)) == m(s.coproduct(x)), "coproduct on " + ws);
        r.record(t.counit(img) == s.counit(x), "counit on " + ws);
        r.record(t.antipode(img) == m(s.antipode(x)), "antipode on " + ws);
        r.record(t.star(img) == m(s.star(x)), "star on " + ws);
    }
    return r;
}

Form covering_form(const CoveringMap& m, const Calculus& target, const std::string& text) {
    Form f = target.zero();
    for (auto& part : split(text, '|')) {
        size_t semi = part.find(';');
        if (semi == std::string::npos) throw std::invalid_argument("source form part without a differential: " + part);
        NCPoly x = parse(trim(part.substr(0, semi)), m.source().alphabet());
        NCPoly y = parse(trim(part.substr(semi + 1)), m.source().alphabet());
        f += target.left(m(x), target.d(m(y)));
    }
    return f;
}

ProjectedForms project_forms(const CoveringMap& m, const Calculus& target, const CatalogEntry& forms) {
    ProjectedForms p;
    p.alternatives = CheckResult{"alternatives." + forms.name, forms.location()};
    for (auto& line : forms.body) {
        auto [lhs, rhs] = split_definition(line);
        Form f = covering_form(m, target, rhs);
        auto it = std::find(p.names.begin(), p.names.end(), lhs);
        if (it == p.names.end()) {
            p.names.push_back(lhs);
            p.images.push_back(f);
            continue;
        }
        const Form& first = p.images[it - p.names.begin()];
        p.alternatives.record(first == f, line + " gives " + target.str(f) + ", first reading " + target.str(first));
    }
    for (auto& f : p.images) {
        std::vector<Scalar> row;
        for (auto& c : f.c) {
            if (!c.is_scalar()) p.scalar = false;
            row.push_back(c.scalar_part());
        }
        p.matrix.push_back(row);
    }
    if (!p.scalar) p.matrix.clear();
    return p;
}

namespace {

CheckResult form_projection(const Calculus& tc, const ProjectedForms& pf, const CatalogEntry& table) {
    CheckResult r{table.name, table.location()};
    for (auto& line : table.body) {
        auto [lhs, rhs] = split_definition(line);
        auto it = std::find(pf.names.begin(), pf.names.end(), lhs);
        if (it == pf.names.end()) throw std::runtime_error(table.key() + ": unknown form " + lhs);
        const Form& got = pf.images[it - pf.names.begin()];
        Form want = tc.parse_form(rhs);
        bool ok = got == want;
        r.record(ok, line);
        if (!ok) r.details.push_back(lhs + " maps to " + tc.str(got));
    }
    if (!pf.alternatives.ok()) r.fail(pf.alternatives.witness);
    return r;
}

// values chi_i(x) of the source functionals induced by the target calculus:
// xi_j(cov x) = sum_i chi_i(x) M_ij
std::vector<Scalar> induced_chi(const CoveringMap& m, const Calculus& tc, const ProjectedForms& pf, const NCPoly& x,
                                bool* ok) {
    NCPoly y = m(x);
    std::vector<Scalar> xi;
    for (int j = 0; j < tc.dim(); ++j) xi.push_back(tc.chi(j, y));
    return solve_combination(pf.matrix, xi, ok);
}

CheckResult functional_projection(const CoveringMap& m, const Calculus& tc, const ProjectedForms& pf,
                                  const std::vector<std::string>& chi_names, const std::vector<std::string>& xi_names,
                                  const CatalogEntry& table, int deg) {
    CheckResult r{table.name, table.location(), deg};
    if (!pf.scalar || static_cast<int>(pf.matrix.size()) != tc.dim()) {
        r.fail("the projected forms are not a constant change of basis");
        return r;
    }
    FunctionalAlgebra fa = FunctionalAlgebra::of(tc, xi_names);
    std::vector<std::pair<int, NCPoly>> lines;
    for (auto& line : table.body) {
        auto [lhs, rhs] = split_definition(line);
        auto it = std::find(chi_names.begin(), chi_names.end(), lhs);
        if (it == chi_names.end()) throw std::runtime_error(table.key() + ": unknown functional " + lhs);
        lines.emplace_back(static_cast<int>(it - chi_names.begin()), fa.parse(rhs));
    }
    std::vector<int> bad(lines.size(), 0);
    std::vector<std::string> first(lines.size());
    for (auto& w : m.source().pres().basis_words(deg)) {
        NCPoly x = NCPoly::word(w);
        bool solvable = true;
        auto chi = induced_chi(m, tc, pf, x, &solvable);
        if (!solvable) {
            r.fail("no source functional values on " + m.source().alphabet().word_str(w));
            continue;
        }
        NCPoly y = m(x);
        for (size_t k = 0; k < lines.size(); ++k) {
            Scalar want = fa.eval(lines[k].second, y);
            Scalar got = chi[lines[k].first];
            if (got == want) continue;
            if (bad[k]++ == 0)
                first[k] = table.body[k] + " on " + m.source().alphabet().word_str(w) + ": induced " +
                           got.str(tc.algebra().alphabet().param()) + ", printed side " +
                           want.str(tc.algebra().alphabet().param());
        }
    }
    // chi_i = sum_j N_ji xi_j with N = M^-1
    const int n = tc.dim();
    std::vector<NCPoly> derived(n);
    for (int j = 0; j < n; ++j) {
        std::vector<Scalar> e(n);
        e[j] = Scalar(1);
        bool ok = true;
        auto y = solve_combination(pf.matrix, e, &ok);
        for (int i = 0; i < n && ok; ++i) derived[i] += NCPoly::gen(static_cast<Gen>(j)) * y[i];
    }
    for (size_t k = 0; k < lines.size(); ++k) {
        if (bad[k] == 0) {
            r.pass();
            continue;
        }
        r.fail(first[k]);
        r.details.push_back(first[k] + " (" + std::to_string(bad[k]) + " words); derived " +
                            chi_names[lines[k].first] + " = " + derived[lines[k].first].str(fa.alphabet()));
    }
    return r;
}

}  // namespace

std::vector<CheckResult> verify_projections(const Catalog& cat, const CalculusCache& calculi, int deg) {
    const std::string& variant = calculi.variant();
    CoveringMap m(cat, "ekappa_etilde", variant);
    std::vector<CheckResult> out;
    std::map<std::string, ProjectedForms> projected;
    auto project = [&](const CatalogEntry& table) -> const ProjectedForms& {
        const std::string key = table.value("forms") + "/" + table.value("calculus");
        auto it = projected.find(key);
        if (it == projected.end())
            it = projected.emplace(key, project_forms(m, calculi.get(table.value("calculus")),
                                                      cat.get("forms." + table.value("forms"), variant)))
                     .first;
        return it->second;
    };
    std::vector<std::pair<const Calculus*, const ProjectedForms*>> induced;
    std::string agree_loc;
    std::vector<std::string> chi_names;
    for (auto& name : cat.list("table")) {
        const CatalogEntry& table = cat.get("table." + name, variant);
        std::string type = table.value("type");
        if (type != "form_projection" && type != "functional_projection") continue;
        const Calculus& tc = calculi.get(table.value("calculus"));
        const ProjectedForms& pf = project(table);
        if (type == "form_projection") {
            out.push_back(form_projection(tc, pf, table));
            continue;
        }
        chi_names = cat.get("forms." + table.value("forms"), variant).list("functionals");
        agree_loc += (agree_loc.empty() ? "" : ", ") + table.location();
        out.push_back(functional_projection(m, tc, pf, chi_names, cat.get("calculus." + tc.name).list("functionals"), table,
                                            deg));
        induced.emplace_back(&tc, &pf);
    }
    if (induced.size() >= 2) {
        CheckResult r{"proj.functionals.agree", agree_loc, deg};
        for (auto& w : m.source().pres().basis_words(deg)) {
            NCPoly x = NCPoly::word(w);
            bool ok0 = true, ok1 = true;
            auto a = induced_chi(m, *induced[0].first, *induced[0].second, x, &ok0);
            auto b = induced_chi(m, *induced[1].first, *induced[1].second, x, &ok1);
            r.record(ok0 && ok1 && a == b, "source functionals differ on " + m.source().alphabet().word_str(w));
        }
        out.push_back(r);
    }
    return out;
}

CheckResult IntersectionReport::check() const {
    CheckResult r{"intersection.deg" + std::to_string(degree), location, degree};
    r.record(equal, witness.empty() ? "S+ != S-" : witness);
    r.record(element_in_both, "(A - 1)(A* - 1) is not in both intersections");
    r.record(generated, "emitted generators do not span the intersection");
    for (auto& g : generator_text) r.details.push_back(g);
    return r;
}

namespace {

// basis of span(ideal) within degree 2 deg intersected with cov(words), over the source
std::vector<NCPoly> intersect(const CoveringMap& m, const std::vector<Word>& words, const Subspace& ideal) {
    Subspace rem(ideal.degree_bound(), true);
    std::vector<NCPoly> out;
    for (size_t i = 0; i < words.size(); ++i) {
        NCPoly r = ideal.reduce(m(NCPoly::word(words[i])));
        Combo c;
        if (!rem.reduce(r, &c).is_zero()) {
            rem.insert(r, static_cast<int>(i));
            continue;
        }
        NCPoly e = NCPoly::word(words[i]);
        for (auto& [k, x] : c) e -= NCPoly::word(words[k]) * x;
        out.push_back(e);
    }
    return out;
}

}  // namespace

IntersectionReport verify_intersections(const Catalog& cat, const CoveringMap& m, int deg, const std::string& variant) {
    IntersectionReport rep;
    rep.degree = deg;
    rep.location = cat.get("covering." + m.name, variant).value("intersections");
    const Presentation& sp = m.source().pres();
    const Presentation& tp = m.target().pres();
    std::vector<Word> words = sp.basis_words(deg);
    rep.source_words = static_cast<int>(words.size());
    Subspace plus = right_ideal_span(load_ideal(cat, "r0plus_tilde", variant).gens, tp, 2 * deg);
    Subspace minus = right_ideal_span(load_ideal(cat, "r0minus_tilde", variant).gens, tp, 2 * deg);
    auto sp_plus = intersect(m, words, plus);
    auto sp_minus = intersect(m, words, minus);
    Subspace a(deg), b(deg);
    for (auto& v : sp_plus) a.insert(v);
    for (auto& v : sp_minus) b.insert(v);
    rep.dim_plus = a.dim();
    rep.dim_minus = b.dim();
    rep.equal = a.equals(b);
    const Alphabet& sa = m.source().alphabet();
    if (!rep.equal) {
        for (auto& v : a.basis())
            if (!b.member(v)) {
                rep.witness = "in S+ only: " + v.str(sa);
                break;
            }
        if (rep.witness.empty())
            for (auto& v : b.basis())
                if (!a.member(v)) {
                    rep.witness = "in S- only: " + v.str(sa);
                    break;
                }
    }
    NCPoly e = parse("(A - 1) (As - 1)", sa);
    if (deg >= 2) {
        NCPoly img = m(e);
        rep.element_in_both = plus.member(img) && minus.member(img) && a.member(sp.nf(e)) && b.member(sp.nf(e));
    } else {
        rep.element_in_both = true;
    }
    rep.basis = a.basis();
    std::vector<NCPoly> cand = rep.basis;
    std::sort(cand.begin(), cand.end(), [](const NCPoly& x, const NCPoly& y) { return x.lead_word() < y.lead_word(); });
    Subspace span(deg);
    for (auto& v : cand) {
        if (span.member(v)) continue;
        rep.generators.push_back(v);
        rep.generator_text.push_back(v.str(sa));
        span = right_ideal_span(rep.generators, sp, deg);
    }
    rep.generated = span.equals(a);
    return rep;
}

}  // namespace qc
