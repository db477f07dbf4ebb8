// Free *-algebra layer: alphabets, noncommutative polynomials, tensor squares.
#pragma once

#include "qc/scalar.hpp"
#include "qc/word.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qc {

class Alphabet {
public:
    Alphabet() = default;
    // names in precedence order; star pairs by name (self-pairing allowed)
    Alphabet(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& star,
             std::string param = "k");

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(Gen g) const { return names_.at(g); }
    const std::vector<std::string>& names() const { return names_; }
    Gen star(Gen g) const { return star_.at(g); }
    // -1 if unknown
    int find(const std::string& name) const;
    Gen id(const std::string& name) const;
    // name of the scalar variable used when parsing/printing ("k" or "mu")
    const std::string& param() const { return param_; }

    std::string word_str(const Word& w) const;

private:
    std::vector<std::string> names_;
    std::vector<Gen> star_;
    std::string param_ = "k";
};

class NCPoly {
public:
    using Map = std::map<Word, Scalar>;

    NCPoly() = default;
    NCPoly(const Scalar& c) {
        if (!c.is_zero()) t_.emplace(Word(), c);
    }
    NCPoly(long c) : NCPoly(Scalar(c)) {}
    static NCPoly word(const Word& w, const Scalar& c = Scalar(1)) {
        NCPoly p;
        if (!c.is_zero()) p.t_.emplace(w, c);
        return p;
    }
    static NCPoly gen(Gen g) { return word(Word::of(g)); }

    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int size() const { return static_cast<int>(t_.size()); }
    int degree() const { return t_.empty() ? -1 : t_.rbegin()->first.size(); }
    Scalar coeff(const Word& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? Scalar() : it->second;
    }
    // largest word in deglex order
    const Word& lead_word() const { return t_.rbegin()->first; }
    const Scalar& lead_coeff() const { return t_.rbegin()->second; }
    bool is_scalar() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
    Scalar scalar_part() const { return coeff(Word()); }

    void add_term(const Word& w, const Scalar& c);
    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Scalar& c);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
    friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
    // free (unreduced) product
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    NCPoly conj_coeffs() const;
    // antilinear anti-homomorphism determined by the alphabet's star pairing
    NCPoly star(const Alphabet& al) const;

    std::string str(const Alphabet& al) const;

private:
    Map t_;
};

NCPoly pow(const NCPoly& p, int n);

// unique algebra homomorphism extending gen -> images[gen], free algebra
NCPoly substitute(const NCPoly& p, const std::vector<NCPoly>& images);

class TensorPoly {
public:
    using Key = std::pair<Word, Word>;
    using Map = std::map<Key, Scalar>;

    TensorPoly() = default;
    static TensorPoly of(const NCPoly& a, const NCPoly& b);
    static TensorPoly unit() { return of(NCPoly(1), NCPoly(1)); }

    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(const Word& a, const Word& b, const Scalar& c);

    TensorPoly operator-() const;
    TensorPoly& operator+=(const TensorPoly& o);
    TensorPoly& operator-=(const TensorPoly& o);
    TensorPoly& operator*=(const Scalar& c);
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend TensorPoly operator*(TensorPoly a, const Scalar& c) { return a *= c; }
    // componentwise (free) product (x (x) y)(x' (x) y') = xx' (x) yy'
    friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);
    friend bool operator==(const TensorPoly& a, const TensorPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const TensorPoly& a, const TensorPoly& b) { return !(a == b); }

    std::string str(const Alphabet& al) const;

private:
    Map t_;
};

// coefficient text for a term: "", "-", "2 ", "(i/k) " ...
std::string coeff_prefix(const Scalar& c, const std::string& var, bool first, bool bare);

}  // namespace qc
