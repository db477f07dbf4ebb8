#include "qc/contract.hpp"
#include "qc/parser.hpp"

#include <algorithm>

namespace qc {

ContractionMap::ContractionMap(const Catalog& cat, const std::string& name) {
    const CatalogEntry& e = cat.get("contraction." + name);
    name_ = e.name;
    location_ = e.location();
    source_ = std::make_shared<HopfStructure>(load_algebra(cat, e.value("source")));
    target_ = std::make_shared<HopfStructure>(load_algebra(cat, e.value("target")));
    order_ = std::stoi(e.value("order", "2"));
    const Alphabet& sa = source_->alphabet();
    const Alphabet& ta = target_->alphabet();
    forward_.resize(sa.size());
    inverse_.resize(ta.size());
    for (auto& l : e.section("forward")) {
        auto [g, v] = split_definition(l);
        forward_[sa.id(g)] = v;
    }
    for (auto& l : e.section("inverse")) {
        auto [g, v] = split_definition(l);
        inverse_[ta.id(g)] = v;
    }
    for (int g = 0; g < sa.size(); ++g)
        if (forward_[g].empty()) throw std::runtime_error(e.key() + ": no image for " + sa.name(static_cast<Gen>(g)));
    for (int g = 0; g < ta.size(); ++g)
        if (inverse_[g].empty()) throw std::runtime_error(e.key() + ": no preimage for " + ta.name(static_cast<Gen>(g)));
    const CatalogEntry& src = cat.get("algebra." + e.value("source"));
    for (auto& l : src.section("relations")) relations_.push_back(parse_equation(l, sa));
    printed_ = std::stoi(src.value("printed_relations", std::to_string(relations_.size())));
    for (auto& p : e.list("ideals")) {
        auto parts = split(p, '>');
        if (parts.size() != 2) throw std::runtime_error(e.key() + ": bad ideal pair '" + p + "'");
        ideals_.emplace_back(parts[0], parts[1]);
    }
}

const std::vector<TPoly>& ContractionMap::forward_images(int order) const {
    std::lock_guard lock(cache_->mu);
    auto& v = cache_->forward[order];
    if (v.empty())
        for (auto& s : forward_) v.push_back(parse_series(s, target_->alphabet(), order));
    return v;
}

const std::vector<TPoly>& ContractionMap::inverse_images(int order) const {
    std::lock_guard lock(cache_->mu);
    auto& v = cache_->inverse[order];
    if (v.empty())
        for (auto& s : inverse_) v.push_back(parse_series(s, source_->alphabet(), order));
    return v;
}

const SeriesRewriter& ContractionMap::source_series(int order) const {
    std::lock_guard lock(cache_->mu);
    auto& p = cache_->source[order];
    if (!p) p = std::make_unique<SeriesRewriter>(series_rules_mu(source_->pres(), order));
    return *p;
}

TPoly ContractionMap::image(const NCPoly& p, int order) const {
    const auto& img = forward_images(order);
    TPoly r;
    for (auto& [w, c] : p.terms()) {
        TPoly t = TPoly::constant(substitute_mu(c, order));
        for (Gen g : w) t = t * img[g];
        r += t;
    }
    return r.truncate(order);
}

TPoly ContractionMap::preimage(const NCPoly& q, int order) const {
    const auto& img = inverse_images(order);
    const SeriesRewriter& rw = source_series(order);
    TPoly r;
    for (auto& [w, c] : q.terms()) {
        TPoly t = TPoly::constant(SeriesScalar(c, kExact));
        for (Gen g : w) t = rw.nf(t * img[g]);
        r += t;
    }
    return r;
}

std::vector<NCPoly> ContractionMap::substitute_and_expand(const NCPoly& p, int upto) const {
    if (upto > order_)
        throw std::out_of_range("coefficient of t^" + std::to_string(upto) + " needs truncation order " +
                                std::to_string(upto) + " (map order is " + std::to_string(order_) + ")");
    TPoly x = image(p, order_);
    std::vector<NCPoly> out;
    for (int k = 0; k <= upto; ++k) out.push_back(x.coeff(k));
    return out;
}

std::vector<NCPoly> ContractionMap::substitute_and_expand(const NCPoly& p) const {
    return substitute_and_expand(p, order_);
}

namespace {

// x with A x = b for square A over series, pivoting on the lowest valuation
std::vector<std::vector<SeriesScalar>> solve_series(std::vector<std::vector<SeriesScalar>> a,
                                                   std::vector<std::vector<SeriesScalar>> rhs) {
    int n = static_cast<int>(a.size()), m = static_cast<int>(rhs.size());
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < m; ++j) a[r].push_back(rhs[j][r]);
    for (int c = 0; c < n; ++c) {
        int best = -1;
        for (int r = c; r < n; ++r)
            if (!a[r][c].is_zero() && (best < 0 || a[r][c].val() < a[best][c].val())) best = r;
        if (best < 0) throw DomainError("singular change of basis (to known precision)");
        std::swap(a[c], a[best]);
        SeriesScalar inv = a[c][c].inv();
        for (auto& x : a[c]) x = x * inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            SeriesScalar f = a[r][c];
            for (int k = c; k < n + m; ++k)
                if (!a[c][k].is_zero()) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<std::vector<SeriesScalar>> x(m, std::vector<SeriesScalar>(n));
    for (int j = 0; j < m; ++j)
        for (int r = 0; r < n; ++r) x[j][r] = a[r][n + j];
    return x;
}

}  // namespace

Deformation::Deformation(const ContractionMap& cm, int order) : cm_(&cm), order_(order) {
    const Presentation& tp = cm.target().pres();
    const Presentation& sp = cm.source().pres();
    std::vector<Word> eb = tp.basis_words(2), sb = sp.basis_words(2);
    if (eb.size() != sb.size())
        throw std::runtime_error("contraction: degree-2 bases differ in size (" + std::to_string(eb.size()) + " vs " +
                                 std::to_string(sb.size()) + ")");
    for (auto& r : tp.rules())
        if (r.lhs.size() > 2) throw std::runtime_error("contraction: target rules of degree > 2 are not supported");
    // the preimages of degree-2 words carry t^-2
    int work = order + 4;
    auto coords = [&](const NCPoly& q) {
        TPoly p = cm.preimage(q, work);
        std::vector<SeriesScalar> v(sb.size(), SeriesScalar().truncate(p.order()));
        for (auto& [w, c] : p.terms()) {
            auto it = std::lower_bound(sb.begin(), sb.end(), w);
            if (it == sb.end() || *it != w) throw std::logic_error("preimage leaves the degree-2 source basis");
            v[it - sb.begin()] = c;
        }
        return v;
    };
    std::vector<std::vector<SeriesScalar>> a(sb.size(), std::vector<SeriesScalar>(eb.size()));
    for (size_t j = 0; j < eb.size(); ++j) {
        auto col = coords(NCPoly::word(eb[j]));
        for (size_t r = 0; r < sb.size(); ++r) a[r][j] = col[r];
    }
    std::vector<std::vector<SeriesScalar>> rhs;
    for (auto& r : tp.rules()) rhs.push_back(coords(NCPoly::word(r.lhs)));
    auto x = solve_series(a, rhs);
    std::vector<std::pair<Word, TPoly>> rules;
    const Alphabet& al = tp.alphabet();
    for (size_t k = 0; k < tp.rules().size(); ++k) {
        const Rule& r = tp.rules()[k];
        TPoly p;
        for (size_t j = 0; j < eb.size(); ++j) p.add_term(eb[j], x[k][j]);
        p.cap(order);
        if (p.order() < order)
            defects_.push_back("rule " + al.word_str(r.lhs) + " known only to t^" + std::to_string(p.order()));
        if (p.valuation() < 0) {
            defects_.push_back("rule " + al.word_str(r.lhs) + " has a pole of order " + std::to_string(-p.valuation()) +
                               " in t");
            continue;
        }
        NCPoly d = p.coeff(0) - r.rhs;
        if (!d.is_zero()) defects_.push_back("rule " + al.word_str(r.lhs) + " at t^0 differs by " + d.str(al));
        rules.emplace_back(r.lhs, p);
    }
    rw_ = SeriesRewriter(al, std::move(rules));
}

TPoly Deformation::from_source(const NCPoly& p) const { return rw_.nf(cm_->image(p, order_)); }

int ContractionReport::failed() const {
    int n = static_cast<int>(deformation_defects.size());
    for (auto& r : residues) n += !r.residue.is_zero();
    return n;
}

ContractionReport verify_limit_algebra(const ContractionMap& cm, int upto) {
    ContractionReport rep;
    rep.location = cm.location();
    const Presentation& tp = cm.target().pres();
    const Alphabet& sa = cm.source().alphabet();
    const auto& rels = cm.source_relations();
    for (int k = 0; k < cm.printed_relations(); ++k) {
        auto coeffs = cm.substitute_and_expand(rels[k], upto);
        for (int j = 0; j <= upto; ++j) {
            NCPoly r = tp.nf(coeffs[j]);
            rep.residues.push_back({rels[k].str(sa) + " = 0", j, r, r.str(tp.alphabet())});
        }
    }
    rep.deformation_defects = Deformation(cm, std::max(upto, 1)).defects();
    return rep;
}

std::vector<CheckResult> ContractionReport::checks() const {
    CheckResult c{"limit-relations", location};
    for (auto& r : residues) {
        c.degree = std::max(c.degree, r.power);
        c.record(r.residue.is_zero(), "t^" + std::to_string(r.power) + " residue of " + r.relation + ": " + r.text);
    }
    CheckResult d{"deformation", location};
    for (auto& x : deformation_defects) d.fail(x);
    if (deformation_defects.empty()) d.pass();
    return {c, d};
}

}  // namespace qc
