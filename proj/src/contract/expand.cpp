#include "qc/expand.hpp"
#include "qc/covering.hpp"
#include "qc/parser.hpp"
#include "qc/verify_calculus.hpp"

namespace qc {

namespace {

const CatalogEntry& find_table(const Catalog& cat, const std::string& type, const std::string& variant) {
    for (auto& n : cat.list("table")) {
        const CatalogEntry& t = cat.get("table." + n, variant);
        if (t.value("type") == type) return t;
    }
    throw std::runtime_error("no table of type " + type);
}

// the form-projection table whose source forms live on `calculus`
const CatalogEntry& projection_into(const Catalog& cat, const std::string& calculus, const std::string& variant) {
    for (auto& n : cat.list("table")) {
        const CatalogEntry& t = cat.get("table." + n, variant);
        if (t.value("type") != "form_projection") continue;
        if (cat.get("forms." + t.value("forms"), variant).value("calculus") == calculus) return t;
    }
    throw std::runtime_error("no form projection for calculus " + calculus);
}

Alphabet labels_of(const std::vector<std::string>& names) { return Alphabet(names, {}, "k"); }

std::vector<Scalar> linear_row(const NCPoly& p, int n, std::string* bad) {
    std::vector<Scalar> row(n);
    for (auto& [w, c] : p.terms()) {
        if (w.size() != 1) {
            *bad = "not linear in the forms";
            continue;
        }
        row[w[0]] = c;
    }
    return row;
}

std::string row_str(const std::vector<Scalar>& row, const std::vector<std::string>& labels) {
    NCPoly p;
    for (size_t i = 0; i < row.size(); ++i) p.add_term(Word::of(static_cast<Gen>(i)), row[i]);
    return p.str(labels_of(labels));
}

}  // namespace

FormExpansionReport expand_forms(const Catalog& cat, const ContractionMap& cm, const CalculusCache& calculi) {
    const std::string& variant = calculi.variant();
    FormExpansionReport rep;
    const CatalogEntry& table = find_table(cat, "expansion", variant);
    const CatalogEntry& forms = cat.get("forms." + table.value("forms"), variant);
    const CatalogEntry& wedge = find_table(cat, "wedge_source", variant);
    rep.forms_location = table.location();
    const Calculus& target = calculi.get(table.value("calculus"));
    // only the exterior relations take the requested reading; the change of
    // basis always uses the adopted covering data
    const CatalogEntry& proj = projection_into(cat, target.name, "adopted");
    CalculusCache adopted(cat);
    const Calculus& tilde = (variant == "adopted" ? calculi : adopted).get(proj.value("calculus"));
    CoveringMap m(cat, "ekappa_etilde");
    ProjectedForms pf = project_forms(m, tilde, cat.get("forms." + proj.value("forms")));
    const int n = target.dim();
    const Alphabet labels = labels_of(target.labels());
    const Alphabet& sa = cm.source().alphabet();
    const int order = 3;

    std::map<std::string, TPoly> printed;
    for (auto& line : table.body) {
        auto [lhs, rhs] = split_definition(line);
        printed[lhs] = parse_series(rhs, labels, 1);
    }

    // the source forms in the source calculus; left invariance makes the
    // coefficients constants
    const Calculus& su = adopted.get(forms.value("calculus"));
    const Presentation& tp = cm.target().pres();
    // image of source representative j = sum_k T[j][k] (target representative k)
    Subspace reps(2, true);
    for (size_t k = 0; k < tilde.reps().size(); ++k) reps.insert(tilde.reps()[k], static_cast<int>(k));
    std::vector<std::vector<SeriesScalar>> T;
    for (auto& r : su.reps()) {
        TPoly im = cm.image(r, order);
        std::vector<std::vector<Scalar>> c(tilde.dim(), std::vector<Scalar>(order + 1));
        for (int p = 0; p <= order; ++p) {
            Combo combo;
            NCPoly x = tp.nf(im.coeff(p));
            if (!reps.reduce(x, &combo).is_zero())
                throw std::runtime_error(su.name + ": representative " + r.str(sa) + " does not map into the target representatives");
            for (auto& [k, v] : combo) c[k][p] = v;
        }
        std::vector<SeriesScalar> row;
        for (auto& ck : c) row.push_back(SeriesScalar::from_coeffs(0, ck, order));
        T.push_back(row);
    }

    std::vector<std::string> names;
    for (auto& line : forms.body) {
        auto [name, text] = split_definition(line);
        names.push_back(name);
        FormExpansion fx;
        fx.name = name;
        Form f = su.parse_form(text);
        std::vector<SeriesScalar> tcoef(tilde.dim(), SeriesScalar().truncate(order));
        for (int j = 0; j < su.dim(); ++j) {
            if (!f.c[j].is_scalar() && fx.invariant) {
                fx.invariant = false;
                fx.witness = name + " is not left invariant: coefficient " + f.c[j].str(sa);
            }
            SeriesScalar d = substitute_mu(f.c[j].scalar_part(), order);
            for (int k = 0; k < tilde.dim(); ++k) tcoef[k] += d * T[j][k];
        }
        for (int p = 0; p <= 1; ++p) {
            std::vector<Scalar> c;
            for (auto& x : tcoef) c.push_back(x.coeff(p));
            bool ok = pf.scalar;
            std::vector<Scalar> y = ok ? solve_combination(pf.matrix, c, &ok) : std::vector<Scalar>(n);
            if (!ok && fx.witness.empty()) fx.witness = name + " at t^" + std::to_string(p) + " is outside the projected forms";
            fx.computed.push_back(y);
            auto it = printed.find(name);
            std::string bad;
            fx.printed.push_back(it == printed.end() ? std::vector<Scalar>(n) : linear_row(it->second.coeff(p), n, &bad));
            if (!bad.empty()) throw std::runtime_error(table.key() + ": " + name + " " + bad);
            fx.computed_text.push_back(row_str(fx.computed.back(), target.labels()));
            fx.printed_text.push_back(row_str(fx.printed.back(), target.labels()));
        }
        rep.forms.push_back(std::move(fx));
    }

    // leading order of each wedge relation with the printed expansions; the
    // unknown t^2 tails are kept as letters so that a leading coefficient
    // counts only when no tail reaches its order
    const int nf = static_cast<int>(names.size());
    std::vector<TPoly> expansion;
    for (int i = 0; i < nf; ++i)
        expansion.push_back(printed.at(names[i]) +
                            TPoly::word(Word::of(static_cast<Gen>(n + i))) * SeriesScalar::t_power(2, kExact));
    const Alphabet oms = labels_of(names);
    Subspace lead(2), ext(2);
    for (auto& line : wedge.body) {
        auto [lhs, rhs] = split_definition(line);
        TPoly rel = parse_series(lhs, oms, 8) - parse_series(rhs, oms, 8);
        TPoly sub = TPoly().truncate(rel.order());
        for (auto& [w, c] : rel.terms()) {
            TPoly t = TPoly::constant(c);
            for (Gen g : w) t = t * expansion[g];
            sub += t;
        }
        LeadingRelation lr;
        lr.source = line;
        lr.determined = false;
        lr.power = sub.valuation();
        for (; lr.power <= sub.order(); ++lr.power) {
            NCPoly c = sub.coeff(lr.power);
            if (c.is_zero()) continue;
            bool tail = false;
            for (auto& [w, x] : c.terms())
                for (Gen g : w) tail = tail || g >= n;
            if (tail) break;
            lr.determined = true;
            lr.relation = c;
            break;
        }
        if (lr.determined) {
            lr.text = lr.relation.str(labels) + " = 0";
            lead.insert(lr.relation);
        } else {
            lr.text = "leading coefficient depends on the unknown t^2 terms";
        }
        rep.leading.push_back(lr);
    }
    std::vector<NCPoly> ext_rels;
    for (auto& l : target.exterior_lines()) {
        ext_rels.push_back(parse_equation(l, labels));
        ext.insert(ext_rels.back());
    }
    rep.wedge_location = wedge.location();
    if (target.has_exterior()) rep.wedge_location += ", " + cat.get("exterior." + target.name, variant).location();
    rep.leading_rank = lead.dim();
    rep.exterior_rank = ext.dim();
    rep.leading_in_exterior = ext.contains(lead);
    rep.exterior_in_leading = lead.contains(ext);
    const auto& lines = target.exterior_lines();
    for (size_t k = 0; k < ext_rels.size(); ++k)
        if (!lead.member(ext_rels[k])) rep.missing.push_back(lines[k]);
    return rep;
}

std::vector<CheckResult> FormExpansionReport::checks() const {
    std::vector<CheckResult> out;
    CheckResult ex{"expansion.forms", forms_location, 1};
    for (auto& f : forms) {
        if (!f.invariant || !f.witness.empty()) {
            ex.fail(f.witness);
            continue;
        }
        for (size_t j = 0; j < f.computed.size(); ++j) {
            bool ok = f.computed[j] == f.printed[j];
            ex.record(ok, f.name + " at t^" + std::to_string(j) + ": computed " + f.computed_text[j] + ", printed " + f.printed_text[j]);
            ex.details.push_back(f.name + " at t^" + std::to_string(j) + ": " + f.computed_text[j] +
                                 (ok ? "" : "  (printed " + f.printed_text[j] + ")"));
        }
    }
    out.push_back(ex);
    CheckResult w{"expansion.wedge", wedge_location, 1};
    for (auto& l : leading) {
        w.record(l.determined, l.source + ": " + l.text);
        w.details.push_back(l.source + "  ->  t^" + std::to_string(l.power) + ": " + l.text);
    }
    w.record(leading_in_exterior, "a leading relation is not among the exterior relations");
    w.record(exterior_in_leading, "leading relations span " + std::to_string(leading_rank) + " of " +
                                      std::to_string(exterior_rank) + " exterior relations; not reached: " +
                                      (missing.empty() ? std::string("-") : missing.front()));
    out.push_back(w);
    return out;
}

}  // namespace qc
