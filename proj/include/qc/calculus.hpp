// First-order differential calculi defined by a right ideal of ker eps,
// their left-invariant forms, bimodule structure, two-forms and the
// functionals chi_i, f_ij.
#pragma once

#include "qc/catalog.hpp"

#include <functional>
#include <mutex>
#include <optional>

namespace qc {

// left-module element sum_i c[i] phi_i, coefficients in normal form
struct Form {
    std::vector<NCPoly> c;
    bool is_zero() const;
    friend bool operator==(const Form&, const Form&) = default;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(Form a, const Scalar& s) {
        for (auto& x : a.c) x *= s;
        return a;
    }
};

// sum c[(i,j)] phi_i ^ phi_j with left coefficients
struct TwoForm {
    std::map<std::pair<int, int>, NCPoly> c;
    bool is_zero() const { return c.empty(); }
    friend bool operator==(const TwoForm&, const TwoForm&) = default;
    void add(int i, int j, const NCPoly& p);
    TwoForm& operator+=(const TwoForm& o);
    TwoForm& operator-=(const TwoForm& o);
    friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
    friend TwoForm operator-(TwoForm a, const TwoForm& b) { return a -= b; }
};

class Calculus {
public:
    // span_degree bounds the elements pi() can reduce; it grows on demand.
    // Throws unless the representatives are a basis of ker eps / R at validate_degree.
    Calculus(HopfStructure h, std::vector<NCPoly> ideal, std::vector<NCPoly> reps, std::vector<std::string> labels,
             int span_degree = 6, int validate_degree = 4);

    const HopfStructure& algebra() const { return *h_; }
    const std::shared_ptr<const HopfStructure>& algebra_ptr() const { return h_; }
    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<NCPoly>& reps() const { return reps_; }
    const std::vector<NCPoly>& ideal() const { return ideal_; }
    // generators followed by form labels
    const Alphabet& form_alphabet() const { return form_al_; }

    std::string name, location, variant = "adopted";

    // coordinates of the class of x - eps(x) in ker eps / R
    std::vector<Scalar> pi(const NCPoly& x) const;
    Scalar chi(int i, const NCPoly& x) const;
    Scalar f(int i, int j, const NCPoly& x) const;

    Form zero() const { return Form{std::vector<NCPoly>(dim())}; }
    Form basis(int i) const;
    Form d(const NCPoly& x) const;
    Form left(const NCPoly& a, const Form& w) const;
    Form right(const Form& w, const NCPoly& x) const;
    // left-invariant form of a ker eps element: sum S(r1) d r2
    Form invariant_form(const NCPoly& r) const;
    // words u phi_i v in the form alphabet, read as u (phi_i v); parts
    // "x ; y" separated by '|' are x dy
    Form parse_form(const std::string& text) const;
    Form to_form(const NCPoly& linear) const;
    std::string str(const Form& w) const;

    // exterior relations; rank deficiency is reported through exterior_rank()
    void set_exterior(const std::vector<std::string>& lines);
    bool has_exterior() const { return !ext_lines_.empty(); }
    int exterior_rank() const { return static_cast<int>(ext_rows_.size()); }
    const std::vector<std::string>& exterior_lines() const { return ext_lines_; }
    TwoForm parse_two_form(const std::string& text) const;
    TwoForm exterior_relation(int k) const;
    // unreduced products
    TwoForm wedge_raw(const Form& a, const Form& b) const;
    TwoForm right_raw(const TwoForm& w, const NCPoly& x) const;
    TwoForm reduce(const TwoForm& w) const;
    TwoForm wedge(const Form& a, const Form& b) const { return reduce(wedge_raw(a, b)); }
    std::string str(const TwoForm& w) const;

    void set_cartan(const std::vector<std::string>& lines);
    bool has_cartan() const { return !cartan_.empty(); }
    const TwoForm& cartan(int i) const { return cartan_.at(i); }
    // d(sum c_i phi_i) = sum dc_i ^ phi_i + c_i dphi_i
    TwoForm d(const Form& w) const;
    // d phi_i from d^2 = 0 applied to sum S(r1) d r2
    TwoForm derived_cartan(int i) const;

    // star on forms from (dx)* = d(x*)
    Form star(const Form& w) const;

    int span_degree() const;

private:
    void ensure_degree(int deg) const;
    TwoForm scalar_two_form(const std::string& text) const;
    std::shared_ptr<const HopfStructure> h_;
    std::vector<NCPoly> ideal_, reps_;
    std::vector<std::string> labels_;
    Alphabet form_al_, label_al_;
    std::vector<std::string> ext_lines_;
    // echelon rows over pair indices i*n+j, monic at the largest index
    std::map<int, std::map<int, Scalar>> ext_rows_;
    std::vector<TwoForm> cartan_;
    struct State {
        std::mutex mu;
        int degree = 0;
        Subspace span;
        std::unordered_map<Word, std::vector<Scalar>, WordHash> pi;
        std::unordered_map<Word, Form, WordHash> d;
    };
    std::shared_ptr<State> st_ = std::make_shared<State>();
    std::vector<Scalar> pi_word(const Word& w) const;
    Form d_word(const Word& w) const;
    int initial_degree_;
};

Calculus load_calculus(const Catalog& c, const std::string& name, const std::string& variant = "adopted");

// loads each calculus once; safe to share between threads
class CalculusCache {
public:
    explicit CalculusCache(const Catalog& c, std::string variant = "adopted") : cat_(&c), variant_(std::move(variant)) {}
    const Calculus& get(const std::string& name) const;
    const std::string& variant() const { return variant_; }

private:
    const Catalog* cat_;
    std::string variant_;
    struct Slots {
        std::mutex mu;
        std::map<std::string, std::shared_ptr<const Calculus>> map;
    };
    std::shared_ptr<Slots> slots_ = std::make_shared<Slots>();
};

// Functionals on an algebra; products of names are convolutions, the empty
// word is the counit
class FunctionalAlgebra {
public:
    using Base = std::function<Scalar(const Word&)>;
    FunctionalAlgebra(std::shared_ptr<const HopfStructure> h, std::vector<std::string> names, std::vector<Base> base);
    // chi_i and f_ij of a calculus, named by `names` and f<i><j>
    static FunctionalAlgebra of(const Calculus& c, const std::vector<std::string>& names);

    const Alphabet& alphabet() const { return al_; }
    const HopfStructure& algebra() const { return *h_; }
    NCPoly parse(const std::string& expr) const;
    Scalar eval(const NCPoly& functional, const NCPoly& x) const;
    Scalar eval_word(const Word& fw, const Word& x) const;
    // f*(x) = conj(f(S(x)*))
    Scalar eval_star(const NCPoly& functional, const NCPoly& x) const;

private:
    std::shared_ptr<const HopfStructure> h_;
    Alphabet al_;
    std::vector<Base> base_;
    struct Memo {
        std::mutex mu;
        std::map<std::pair<Word, Word>, Scalar> map;
    };
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

}  // namespace qc
