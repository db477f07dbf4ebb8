#include "doctest.h"
#include "qc/parser.hpp"

#include <random>

using namespace qc;

namespace {

Alphabet etilde() { return Alphabet({"a0", "a0s", "w0", "w0s"}, {{"a0", "a0s"}, {"w0", "w0s"}}); }
Alphabet ekappa() { return Alphabet({"A", "As", "v+", "v-"}, {{"A", "As"}, {"v+", "v-"}}); }

NCPoly random_poly(std::mt19937& rng, int ngen, int maxdeg) {
    std::uniform_int_distribution<int> g(0, ngen - 1), len(0, maxdeg), c(-2, 2), nterms(1, 3);
    NCPoly p;
    for (int n = nterms(rng); n-- > 0;) {
        Word w;
        for (int l = len(rng); l-- > 0;) w.push(static_cast<Gen>(g(rng)));
        p.add_term(w, Scalar(GaussRat(c(rng), c(rng))) / Scalar::var(c(rng) > 0 ? 1 : 0));
    }
    return p;
}

}  // namespace

TEST_CASE("parse relation text") {
    Alphabet al = etilde();
    NCPoly p = parse("a0 w0 - w0 a0 - (1/(2*k))*(a0^2 - 1)", al);
    Gen a = al.id("a0"), w = al.id("w0");
    NCPoly q = NCPoly::word({a, w}) - NCPoly::word({w, a}) - (Scalar(1) / (Scalar(2) * Scalar::var())) * (NCPoly::word({a, a}) - NCPoly(1));
    CHECK(p == q);
    CHECK(parse("1", al) == NCPoly(1));
    CHECK(parse("a0*w0", al) == parse("a0 w0", al));
}

TEST_CASE("parse tensor text") {
    Alphabet al = etilde();
    TensorPoly t = parse_tensor("w0 @ a0s + a0 @ w0", al);
    TensorPoly u = TensorPoly::of(NCPoly::gen(al.id("w0")), NCPoly::gen(al.id("a0s"))) +
                   TensorPoly::of(NCPoly::gen(al.id("a0")), NCPoly::gen(al.id("w0")));
    CHECK(t == u);
    CHECK(parse_tensor("-(1/k) v+ @ 1", ekappa()) ==
          TensorPoly::of(NCPoly::gen(2), NCPoly(1)) * (-Scalar(1) / Scalar::var()));
}

TEST_CASE("parse errors carry positions") {
    Alphabet al = etilde();
    try {
        parse("a0 + q7", al);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.pos == 5);
    }
    CHECK_THROWS_AS(parse("(a0", al), ParseError);
    CHECK_THROWS_AS(parse("a0 / w0", al), ParseError);
    CHECK_THROWS_AS(parse("a0 @ w0", al), ParseError);
}

TEST_CASE("longest match for generator names") {
    Alphabet al = ekappa();
    NCPoly p = parse("v- v+", al);
    CHECK(p == NCPoly::word({3, 2}));
    CHECK(parse("As A", al) == NCPoly::word({1, 0}));
}

TEST_CASE("print parse round trip") {
    std::mt19937 rng(3);
    for (Alphabet al : {etilde(), ekappa()})
        for (int n = 0; n < 40; ++n) {
            NCPoly p = random_poly(rng, al.size(), 3);
            CHECK(parse(p.str(al), al) == p);
        }
}

TEST_CASE("star") {
    Alphabet al = etilde();
    CHECK(parse("a0 w0", al).star(al) == parse("w0s a0s", al));
    // v+ = -i a0 w0 in the covering algebra: star is conj(-i) (a0 w0)* = i w0s a0s
    CHECK(parse("-i a0 w0", al).star(al) == parse("i w0s a0s", al));
    NCPoly p = parse("a0 w0 + i w0s", al);
    CHECK(p.star(al).star(al) == p);

    std::mt19937 rng(5);
    for (int n = 0; n < 40; ++n) {
        NCPoly a = random_poly(rng, 4, 3), b = random_poly(rng, 4, 3);
        CHECK((a * b).star(al) == b.star(al) * a.star(al));
    }
}

TEST_CASE("substitute") {
    Alphabet e = ekappa(), t = etilde();
    std::vector<NCPoly> img = {parse("a0^2", t), parse("a0s^2", t), parse("-i a0 w0", t), parse("i w0s a0", t)};
    CHECK(substitute(parse("A v+", e), img) == parse("-i a0^3 w0", t));

    NCPoly p = parse("A v+ - 3 v- As + (i/k)", e);
    std::vector<NCPoly> id = {NCPoly::gen(0), NCPoly::gen(1), NCPoly::gen(2), NCPoly::gen(3)};
    CHECK(substitute(p, id) == p);
    std::vector<NCPoly> ones(4, NCPoly(1));
    CHECK(substitute(p, ones) == NCPoly(Scalar(-2) + Scalar::i() / Scalar::var()));

    std::mt19937 rng(9);
    for (int n = 0; n < 30; ++n) {
        NCPoly a = random_poly(rng, 4, 2), b = random_poly(rng, 4, 2);
        CHECK(substitute(a * b, img) == substitute(a, img) * substitute(b, img));
        CHECK(substitute(a + b, img) == substitute(a, img) + substitute(b, img));
        if (a.size() == 1 && b.size() == 1) CHECK((a * b).degree() == a.degree() + b.degree());
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() <= a.degree() + b.degree());
    }
}

TEST_CASE("tensor arithmetic") {
    Alphabet al = etilde();
    TensorPoly x = parse_tensor("a0 @ a0", al), y = parse_tensor("a0s @ a0s", al);
    CHECK(x * y == parse_tensor("a0 a0s @ a0 a0s", al));
    TensorPoly d = parse_tensor("w0 @ a0s + a0 @ w0", al);
    CHECK(TensorPoly::unit() * d == d);
    CHECK(d * TensorPoly::unit() == d);
    CHECK((d + x) - x == d);
}
