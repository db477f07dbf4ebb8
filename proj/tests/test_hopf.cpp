#include "qc/catalog.hpp"
#include "qc/parser.hpp"

#include <doctest.h>

using namespace qc;

namespace {

const HopfStructure& algebra(const std::string& name) {
    static std::map<std::string, HopfStructure> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, load_algebra(Catalog::builtin(), name)).first;
    return it->second;
}

NCPoly P(const HopfStructure& h, const std::string& s) { return h.nf(parse(s, h.alphabet())); }
TensorPoly T(const HopfStructure& h, const std::string& s) { return h.reduce(parse_tensor(s, h.alphabet())); }

}  // namespace

TEST_CASE("generator data of the contracted group") {
    const auto& h = algebra("etilde");
    CHECK(h.coproduct(P(h, "w0")) == T(h, "w0 @ a0s + a0 @ w0"));
    CHECK(h.coproduct(NCPoly(1)) == TensorPoly::unit());
    CHECK(h.counit(P(h, "w0")).is_zero());
    CHECK(h.counit(NCPoly(1)) == Scalar(1));
    CHECK(h.counit(P(h, "a0 w0 + 3")) == Scalar(3));
    CHECK(h.antipode(P(h, "w0")) == P(h, "-a0s w0 a0"));
    CHECK(h.antipode(P(h, "a0 w0")) == P(h, "-a0s w0"));
    CHECK(h.antipode(NCPoly(1)) == NCPoly(1));
    // S(w0*) = -a0 w0* a0*
    CHECK(h.antipode(P(h, "w0s")) == P(h, "-a0 w0s a0s"));
}

TEST_CASE("coproduct of a product is the product of coproducts") {
    const auto& h = algebra("ekappa");
    TensorPoly expect = h.reduce(parse_tensor("A @ v+ + v+ @ 1", h.alphabet()) *
                                 parse_tensor("As @ v- + v- @ 1", h.alphabet()));
    CHECK(h.coproduct(P(h, "v+ v-")) == expect);
    // by hand: A As @ v+ v- + A v- @ v+ + v+ As @ v- + v+ v- @ 1
    CHECK(expect == T(h, "1 @ v+ v- + A v- @ v+ + v+ As @ v- + v+ v- @ 1"));
}

TEST_CASE("antipode law on w0 by hand") {
    const auto& h = algebra("etilde");
    // S(w0) a0* + S(a0) w0 = -a0* w0 a0 a0* + a0* w0
    NCPoly lhs = h.nf(h.antipode(P(h, "w0")) * P(h, "a0s") + h.antipode(P(h, "a0")) * P(h, "w0"));
    CHECK(lhs.is_zero());
    auto rep = check_hopf_axioms(h, 1);
    CHECK(rep.get("antipode/left").ok());
    // group-like: both bracketings give a0 @ a0 @ a0
    CHECK(h.coproduct(P(h, "a0")) == T(h, "a0 @ a0"));
}

TEST_CASE("su_mu2 coproduct is the matrix coproduct") {
    const auto& h = algebra("su_mu2");
    // rows of the fundamental matrix ((sigma, -mu rhos), (rho, sigmas))
    const char* u[2][2] = {{"sigma", "-mu rhos"}, {"rho", "sigmas"}};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            TensorPoly sum;
            for (int c = 0; c < 2; ++c)
                sum += TensorPoly::of(parse(u[a][c], h.alphabet()), parse(u[c][b], h.alphabet()));
            CHECK(h.coproduct(parse(u[a][b], h.alphabet())) == h.reduce(sum));
        }
}

TEST_CASE("e_kappa(2) antipode is forced by the antipode law") {
    const auto& h = algebra("ekappa_dual");
    CHECK(h.antipode(P(h, "J")) == P(h, "-E J Ei"));
    auto rep = check_hopf_axioms(h, 2);
    CHECK(rep.get("antipode/left").ok());
    CHECK(rep.get("antipode/right").ok());
}

TEST_CASE("every catalog algebra is a Hopf *-algebra to degree 4") {
    for (auto& name : Catalog::builtin().list("algebra")) {
        CAPTURE(name);
        const auto& h = algebra(name);
        CHECK(h.pres().check_confluence(8).unresolved() == 0);
        CHECK(check_well_defined(h).ok());
        auto rep = check_hopf_axioms(h, 4);
        for (auto& a : rep.axioms) {
            CAPTURE(a.name);
            CHECK(a.checked > 0);
            CHECK(a.ok());
        }
    }
}

TEST_CASE("serial and parallel battery agree") {
    const auto& h = algebra("etilde");
    auto a = check_hopf_axioms(h, 3, Exec::serial), b = check_hopf_axioms(h, 3, Exec::parallel);
    REQUIRE(a.axioms.size() == b.axioms.size());
    for (size_t k = 0; k < a.axioms.size(); ++k) {
        CHECK(a.axioms[k].checked == b.axioms[k].checked);
        CHECK(a.axioms[k].failed == b.axioms[k].failed);
    }
}

TEST_CASE("a wrong antipode is caught with the smallest witness") {
    auto e = Catalog::builtin().get("algebra.ekappa");
    for (auto& l : e.sections["antipode"])
        if (l.rfind("v+", 0) == 0) l = "v+ = -v+";
    HopfStructure h = load_algebra(e);
    auto rep = check_hopf_axioms(h, 2, Exec::serial);
    CHECK_FALSE(rep.get("antipode/left").ok());
    CHECK(rep.get("antipode/left").witness == "v+");
    CHECK(rep.get("coassociativity").ok());
    CHECK_FALSE(check_well_defined(h).ok());
}

TEST_CASE("a coproduct that breaks a relation is not well defined") {
    auto e = Catalog::builtin().get("algebra.etilde");
    for (auto& l : e.sections["coproduct"])
        if (l.rfind("w0 ", 0) == 0) l = "w0 = w0 @ 1 + 1 @ w0";
    HopfStructure h = load_algebra(e);
    auto wd = check_well_defined(h);
    CHECK_FALSE(wd.get("relations/coproduct").ok());
    CHECK(wd.get("relations/counit").ok());
}
