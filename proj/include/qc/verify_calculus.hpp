// Verification batteries for a calculus and its functionals.
#pragma once

#include "qc/calculus.hpp"
#include "qc/report.hpp"

namespace qc {

// printed bimodule identities, one per line
CheckResult check_comm_table(const Calculus& c, const CatalogEntry& table);
// printed star of the basis forms against (dx)* = d(x*)
CheckResult check_form_star_table(const Calculus& c, const CatalogEntry& table);
// named forms "label = expr | expr" equal their label (or the listed
// alternatives agree when the label is not a form of c)
CheckResult check_named_forms(const Calculus& c, const CatalogEntry& forms);
// left-invariant form of each representative is its basis form
CheckResult check_invariant_forms(const Calculus& c);

CheckResult check_d_squared(const Calculus& c, int deg, Exec exec = Exec::parallel);
CheckResult check_leibniz(const Calculus& c, int deg, Exec exec = Exec::parallel);
CheckResult check_right_stability(const Calculus& c);
CheckResult check_cartan_maurer(const Calculus& c);
CheckResult check_star_differential(const Calculus& c, int deg);

// each "lhs = rhs" line vanishes on all normal words of degree <= deg;
// a failing line gets the exactly solved coefficients over the same monomials
CheckResult check_bracket_table(const FunctionalAlgebra& fa, const CatalogEntry& table, int deg,
                                Exec exec = Exec::parallel);
// lines "f = g" mean f* = g with f*(x) = conj(f(S(x)*))
CheckResult check_functional_star(const FunctionalAlgebra& fa, const CatalogEntry& table, int deg);
// f_ij(xy) = sum_k f_ik(x) f_kj(y) and f_ij(1) = delta_ij
CheckResult check_f_multiplicative(const Calculus& c, int deg);
// chi_i(xy) = sum_j chi_j(x) f_ji(y) + eps(x) chi_i(y); with printed_order the
// matrix index order is swapped to f_ij
CheckResult check_chi_coproduct(const Calculus& c, int deg, bool printed_order = false);

// exact solution of sum_m x_m columns[m] = target (free unknowns set to 0)
std::vector<Scalar> solve_combination(const std::vector<std::vector<Scalar>>& columns, const std::vector<Scalar>& target,
                                      bool* solvable);

}  // namespace qc
