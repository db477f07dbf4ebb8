#include "qc/calculus.hpp"

#include "qc/parser.hpp"

namespace qc {

bool Form::is_zero() const {
    for (auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

Form& Form::operator+=(const Form& o) {
    if (c.size() < o.c.size()) c.resize(o.c.size());
    for (size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
    return *this;
}

Form& Form::operator-=(const Form& o) {
    if (c.size() < o.c.size()) c.resize(o.c.size());
    for (size_t k = 0; k < o.c.size(); ++k) c[k] -= o.c[k];
    return *this;
}

void TwoForm::add(int i, int j, const NCPoly& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = c.try_emplace({i, j}, p);
    if (fresh) return;
    it->second += p;
    if (it->second.is_zero()) c.erase(it);
}

TwoForm& TwoForm::operator+=(const TwoForm& o) {
    for (auto& [k, p] : o.c) add(k.first, k.second, p);
    return *this;
}

TwoForm& TwoForm::operator-=(const TwoForm& o) {
    for (auto& [k, p] : o.c) add(k.first, k.second, -p);
    return *this;
}

namespace {

Alphabet extend(const Alphabet& al, const std::vector<std::string>& extra) {
    std::vector<std::string> names = al.names();
    std::vector<std::pair<std::string, std::string>> star;
    for (int g = 0; g < al.size(); ++g)
        if (al.star(static_cast<Gen>(g)) > g) star.push_back({al.name(static_cast<Gen>(g)), al.name(al.star(static_cast<Gen>(g)))});
    names.insert(names.end(), extra.begin(), extra.end());
    return Alphabet(names, star, al.param());
}

}  // namespace

Calculus::Calculus(HopfStructure h, std::vector<NCPoly> ideal, std::vector<NCPoly> reps,
                   std::vector<std::string> labels, int span_degree, int validate_degree)
    : h_(std::make_shared<const HopfStructure>(std::move(h))),
      ideal_(std::move(ideal)),
      reps_(std::move(reps)),
      labels_(std::move(labels)),
      initial_degree_(span_degree) {
    if (reps_.size() != labels_.size()) throw std::invalid_argument("one representative per form label is required");
    form_al_ = extend(h_->alphabet(), labels_);
    label_al_ = Alphabet(labels_, {}, h_->alphabet().param());
    for (auto& r : reps_) r = h_->nf(r);
    for (auto& g : ideal_) g = h_->nf(g);
    QuotientReport q = quotient_report(h_->pres(), ideal_, h_->counit_values(), validate_degree, reps_);
    if (q.dimension != dim() || !q.reps_ok || !q.reps_independent)
        throw std::invalid_argument("calculus dimension mismatch at degree " + std::to_string(validate_degree) +
                                    ": quotient has dimension " + std::to_string(q.dimension) + " for " +
                                    std::to_string(dim()) + " forms" + (q.witness.empty() ? "" : "; " + q.witness));
}

int Calculus::span_degree() const {
    std::lock_guard lock(st_->mu);
    return st_->degree;
}

void Calculus::ensure_degree(int deg) const {
    // caller holds st_->mu
    deg = std::max(deg, initial_degree_);
    if (deg <= st_->degree) return;
    Subspace span(deg, true);
    for (auto& v : right_ideal_span(ideal_, h_->pres(), deg).basis()) span.insert(v);
    for (size_t k = 0; k < reps_.size(); ++k) span.insert(reps_[k], static_cast<int>(k));
    st_->span = std::move(span);
    st_->degree = deg;
}

std::vector<Scalar> Calculus::pi_word(const Word& w) const {
    std::lock_guard lock(st_->mu);
    auto it = st_->pi.find(w);
    if (it != st_->pi.end()) return it->second;
    NCPoly x = NCPoly::word(w) - NCPoly(h_->counit(NCPoly::word(w)));
    ensure_degree(w.size() + 2);
    for (int extra = 0;; extra += 2) {
        Combo combo;
        NCPoly rem = st_->span.reduce(x, &combo);
        if (rem.is_zero()) {
            std::vector<Scalar> v(dim());
            for (auto& [k, c] : combo) v[k] = c;
            st_->pi.emplace(w, v);
            return v;
        }
        if (extra >= 4)
            throw std::runtime_error(name + ": " + h_->alphabet().word_str(w) +
                                     " - eps is not spanned by the representatives modulo the ideal");
        ensure_degree(st_->degree + 2);
    }
}

std::vector<Scalar> Calculus::pi(const NCPoly& x) const {
    std::vector<Scalar> v(dim());
    const auto poly = h_->nf(x);
    for (auto& [w, c] : poly.terms()) {
        if (w.empty()) continue;
        auto p = pi_word(w);
        for (int k = 0; k < dim(); ++k) v[k] += c * p[k];
    }
    return v;
}

Scalar Calculus::chi(int i, const NCPoly& x) const { return pi(x).at(i); }

Scalar Calculus::f(int i, int j, const NCPoly& x) const { return pi(h_->nf(reps_.at(i) * x)).at(j); }

Form Calculus::basis(int i) const {
    Form w = zero();
    w.c.at(i) = NCPoly(1);
    return w;
}

Form Calculus::d_word(const Word& w) const {
    {
        std::lock_guard lock(st_->mu);
        auto it = st_->d.find(w);
        if (it != st_->d.end()) return it->second;
    }
    Form r = zero();
    for (auto& [k, c] : h_->coproduct_word(w).terms()) {
        if (k.second.empty()) continue;
        auto p = pi_word(k.second);
        for (int j = 0; j < dim(); ++j)
            if (!p[j].is_zero()) r.c[j] += NCPoly::word(k.first) * (c * p[j]);
    }
    for (auto& x : r.c) x = h_->nf(x);
    std::lock_guard lock(st_->mu);
    st_->d.emplace(w, r);
    return r;
}

Form Calculus::d(const NCPoly& x) const {
    Form r = zero();
    const auto poly = h_->nf(x);
    for (auto& [w, c] : poly.terms())
        if (!w.empty()) r += d_word(w) * c;
    return r;
}

Form Calculus::left(const NCPoly& a, const Form& w) const {
    Form r = zero();
    for (int i = 0; i < dim(); ++i)
        if (!w.c[i].is_zero()) r.c[i] = h_->nf(a * w.c[i]);
    return r;
}

Form Calculus::right(const Form& w, const NCPoly& x) const {
    Form r = zero();
    TensorPoly dx = h_->coproduct(h_->nf(x));
    for (int i = 0; i < dim(); ++i) {
        if (w.c[i].is_zero()) continue;
        // phi_i x = sum x(1) f_ij(x(2)) phi_j
        for (auto& [k, c] : dx.terms()) {
            auto p = pi(h_->nf(reps_[i] * NCPoly::word(k.second)));
            for (int j = 0; j < dim(); ++j)
                if (!p[j].is_zero()) r.c[j] += w.c[i] * NCPoly::word(k.first) * (c * p[j]);
        }
    }
    for (auto& x : r.c) x = h_->nf(x);
    return r;
}

Form Calculus::invariant_form(const NCPoly& r) const {
    Form w = zero();
    const auto cop = h_->coproduct(h_->nf(r));
    for (auto& [k, c] : cop.terms())
        w += left(h_->antipode(NCPoly::word(k.first)), d(NCPoly::word(k.second))) * c;
    return w;
}

Form Calculus::to_form(const NCPoly& linear) const {
    const int n = h_->alphabet().size();
    Form r = zero();
    for (auto& [w, c] : linear.terms()) {
        int pos = -1;
        for (int k = 0; k < w.size(); ++k)
            if (w[k] >= n) {
                if (pos >= 0) throw std::invalid_argument("form expression term with two forms");
                pos = k;
            }
        if (pos < 0) throw std::invalid_argument("form expression term without a form: " + form_al_.word_str(w));
        r += left(NCPoly::word(w.slice(0, pos)), right(basis(w[pos] - n), NCPoly::word(w.slice(pos + 1, w.size())))) * c;
    }
    return r;
}

Form Calculus::parse_form(const std::string& text) const {
    Form r = zero();
    for (auto& part : split(text, '|')) {
        size_t semi = part.find(';');
        if (semi == std::string::npos) {
            r += to_form(qc::parse(part, form_al_));
            continue;
        }
        NCPoly x = qc::parse(trim(part.substr(0, semi)), h_->alphabet());
        NCPoly y = qc::parse(trim(part.substr(semi + 1)), h_->alphabet());
        r += left(x, d(y));
    }
    return r;
}

std::string Calculus::str(const Form& w) const {
    std::string s;
    for (int i = 0; i < dim(); ++i) {
        if (w.c[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + w.c[i].str(h_->alphabet()) + ") " + labels_[i];
    }
    return s.empty() ? "0" : s;
}

TwoForm Calculus::scalar_two_form(const std::string& text) const {
    NCPoly p = qc::parse(text, label_al_);
    TwoForm r;
    for (auto& [w, c] : p.terms()) {
        if (w.size() != 2) throw std::invalid_argument("exterior relation term is not a product of two forms: " + text);
        r.add(w[0], w[1], NCPoly(c));
    }
    return r;
}

void Calculus::set_exterior(const std::vector<std::string>& lines) {
    ext_lines_ = lines;
    ext_rows_.clear();
    const int n = dim();
    for (auto& l : lines) {
        auto [lhs, rhs] = split_definition(l);
        TwoForm t = scalar_two_form(lhs);
        if (!rhs.empty() && rhs != "0") t -= scalar_two_form(rhs);
        std::map<int, Scalar> row;
        for (auto& [k, p] : t.c) row[k.first * n + k.second] = p.scalar_part();
        // echelon insertion keyed by the largest pair index
        while (!row.empty()) {
            auto top = std::prev(row.end());
            auto hit = ext_rows_.find(top->first);
            if (hit == ext_rows_.end()) break;
            Scalar c = top->second;
            for (auto& [q, x] : hit->second) {
                row[q] -= c * x;
                if (row[q].is_zero()) row.erase(q);
            }
        }
        if (row.empty()) continue;
        Scalar inv = row.rbegin()->second.inv();
        for (auto& [q, x] : row) x *= inv;
        ext_rows_[row.rbegin()->first] = row;
    }
}

TwoForm Calculus::exterior_relation(int k) const {
    auto [lhs, rhs] = split_definition(ext_lines_.at(k));
    TwoForm t = scalar_two_form(lhs);
    if (!rhs.empty() && rhs != "0") t -= scalar_two_form(rhs);
    return t;
}

TwoForm Calculus::reduce(const TwoForm& w) const {
    const int n = dim();
    std::map<int, NCPoly> v;
    for (auto& [k, p] : w.c) v[k.first * n + k.second] = p;
    for (auto it = ext_rows_.rbegin(); it != ext_rows_.rend(); ++it) {
        auto hit = v.find(it->first);
        if (hit == v.end()) continue;
        NCPoly c = hit->second;
        for (auto& [q, x] : it->second) {
            v[q] -= c * x;
            if (v[q].is_zero()) v.erase(q);
        }
    }
    TwoForm r;
    for (auto& [q, p] : v) r.add(q / n, q % n, h_->nf(p));
    return r;
}

TwoForm Calculus::wedge_raw(const Form& a, const Form& b) const {
    TwoForm r;
    for (int j = 0; j < dim(); ++j) {
        if (b.c[j].is_zero()) continue;
        for (int i = 0; i < dim(); ++i) {
            if (a.c[i].is_zero()) continue;
            Form moved = right(basis(i), b.c[j]);
            for (int l = 0; l < dim(); ++l)
                if (!moved.c[l].is_zero()) r.add(l, j, h_->nf(a.c[i] * moved.c[l]));
        }
    }
    return r;
}

TwoForm Calculus::right_raw(const TwoForm& w, const NCPoly& x) const {
    TwoForm r;
    for (auto& [k, c] : w.c) {
        Form a = zero();
        a.c[k.first] = c;
        r += wedge_raw(a, right(basis(k.second), x));
    }
    return r;
}

TwoForm Calculus::parse_two_form(const std::string& text) const {
    const int n = h_->alphabet().size();
    NCPoly p = qc::parse(text, form_al_);
    TwoForm r;
    for (auto& [w, c] : p.terms()) {
        std::vector<int> at;
        for (int k = 0; k < w.size(); ++k)
            if (w[k] >= n) at.push_back(k);
        if (at.size() != 2) throw std::invalid_argument("two-form term needs exactly two forms: " + text);
        Form a = right(basis(w[at[0]] - n), NCPoly::word(w.slice(at[0] + 1, at[1])));
        a = left(NCPoly::word(w.slice(0, at[0])) * NCPoly(c), a);
        Form b = right(basis(w[at[1]] - n), NCPoly::word(w.slice(at[1] + 1, w.size())));
        r += wedge_raw(a, b);
    }
    return reduce(r);
}

std::string Calculus::str(const TwoForm& w) const {
    std::string s;
    for (auto& [k, p] : w.c) {
        if (!s.empty()) s += " + ";
        s += "(" + p.str(h_->alphabet()) + ") " + labels_[k.first] + "^" + labels_[k.second];
    }
    return s.empty() ? "0" : s;
}

void Calculus::set_cartan(const std::vector<std::string>& lines) {
    cartan_.assign(dim(), TwoForm());
    std::vector<bool> seen(dim());
    for (auto& l : lines) {
        auto [lhs, rhs] = split_definition(l);
        int i = label_al_.find(lhs);
        if (i < 0) throw std::invalid_argument("Cartan-Maurer line for unknown form " + lhs);
        cartan_[i] = rhs == "0" ? TwoForm() : parse_two_form(rhs);
        seen[i] = true;
    }
    for (int i = 0; i < dim(); ++i)
        if (!seen[i]) throw std::invalid_argument("no Cartan-Maurer value for " + labels_[i]);
}

TwoForm Calculus::d(const Form& w) const {
    if (!has_cartan()) throw std::logic_error(name + ": no Cartan-Maurer values");
    TwoForm r;
    for (int i = 0; i < dim(); ++i) {
        if (w.c[i].is_zero()) continue;
        r += wedge_raw(d(w.c[i]), basis(i));
        for (auto& [k, p] : cartan_[i].c) r.add(k.first, k.second, h_->nf(w.c[i] * p));
    }
    return reduce(r);
}

TwoForm Calculus::derived_cartan(int i) const {
    TwoForm r;
    const auto cop = h_->coproduct(reps_.at(i));
    for (auto& [k, c] : cop.terms()) {
        Form a = d(h_->antipode(NCPoly::word(k.first)));
        r += wedge_raw(a * c, d(NCPoly::word(k.second)));
    }
    return reduce(r);
}

Form Calculus::star(const Form& w) const {
    Form r = zero();
    for (int i = 0; i < dim(); ++i) {
        if (w.c[i].is_zero()) continue;
        // phi_i* = sum d(r2*) S(r1)*
        Form s = zero();
        const auto cop = h_->coproduct(reps_[i]);
        for (auto& [k, c] : cop.terms())
            s += right(d(h_->star(NCPoly::word(k.second))), h_->star(h_->antipode(NCPoly::word(k.first)))) * c.conj();
        r += right(s, h_->star(w.c[i]));
    }
    return r;
}

Calculus load_calculus(const Catalog& cat, const std::string& name, const std::string& variant) {
    const CatalogEntry& e = cat.get("calculus." + name, variant);
    IdealData ideal = load_ideal(cat, e.value("ideal"), variant);
    if (ideal.reps.empty()) throw std::runtime_error("ideal " + ideal.name + " has no representatives");
    Calculus c(load_algebra(cat, e.value("algebra")), ideal.gens, ideal.reps, e.list("labels"),
               std::stoi(e.value("span_degree", "6")), std::stoi(e.value("validate_degree", "4")));
    c.name = e.name;
    c.location = e.location();
    c.variant = variant;
    if (!e.value("exterior").empty()) c.set_exterior(cat.get("exterior." + e.value("exterior"), variant).body);
    if (!e.section("cartan").empty()) c.set_cartan(e.section("cartan"));
    return c;
}

const Calculus& CalculusCache::get(const std::string& name) const {
    {
        std::lock_guard lock(slots_->mu);
        auto it = slots_->map.find(name);
        if (it != slots_->map.end()) return *it->second;
    }
    auto c = std::make_shared<const Calculus>(load_calculus(*cat_, name, variant_));
    std::lock_guard lock(slots_->mu);
    return *slots_->map.try_emplace(name, c).first->second;
}

FunctionalAlgebra::FunctionalAlgebra(std::shared_ptr<const HopfStructure> h, std::vector<std::string> names,
                                     std::vector<Base> base)
    : h_(std::move(h)), al_(std::move(names), {}, h_->alphabet().param()), base_(std::move(base)) {
    if (static_cast<int>(base_.size()) != al_.size()) throw std::invalid_argument("one definition per functional");
}

FunctionalAlgebra FunctionalAlgebra::of(const Calculus& c, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != c.dim()) throw std::invalid_argument("one functional name per form");
    auto cp = std::make_shared<Calculus>(c);
    std::vector<std::string> all = names;
    std::vector<Base> base;
    for (int i = 0; i < c.dim(); ++i) base.push_back([cp, i](const Word& w) { return cp->chi(i, NCPoly::word(w)); });
    for (int i = 0; i < c.dim(); ++i)
        for (int j = 0; j < c.dim(); ++j) {
            all.push_back("f" + std::to_string(i) + std::to_string(j));
            base.push_back([cp, i, j](const Word& w) { return cp->f(i, j, NCPoly::word(w)); });
        }
    return FunctionalAlgebra(c.algebra_ptr(), all, base);
}

NCPoly FunctionalAlgebra::parse(const std::string& expr) const { return qc::parse(expr, al_); }

Scalar FunctionalAlgebra::eval_word(const Word& fw, const Word& x) const {
    if (fw.empty()) return h_->counit(NCPoly::word(x));
    if (fw.size() == 1) return base_[fw[0]](x);
    auto key = std::make_pair(fw, x);
    {
        std::lock_guard lock(memo_->mu);
        auto it = memo_->map.find(key);
        if (it != memo_->map.end()) return it->second;
    }
    Word rest = fw.slice(1, fw.size());
    Scalar s;
    for (auto& [k, c] : h_->coproduct_word(x).terms()) {
        Scalar a = base_[fw[0]](k.first);
        if (a.is_zero()) continue;
        s += c * a * eval_word(rest, k.second);
    }
    std::lock_guard lock(memo_->mu);
    memo_->map.emplace(key, s);
    return s;
}

Scalar FunctionalAlgebra::eval(const NCPoly& f, const NCPoly& x) const {
    Scalar s;
    const auto poly = h_->nf(x);
    for (auto& [w, c] : poly.terms())
        for (auto& [fw, fc] : f.terms()) s += c * fc * eval_word(fw, w);
    return s;
}

Scalar FunctionalAlgebra::eval_star(const NCPoly& f, const NCPoly& x) const {
    return eval(f, h_->star(h_->antipode(x))).conj();
}

}  // namespace qc
