#pragma once

#include "koszul/ideal.hpp"
#include "koszul/matroid.hpp"

#include <vector>

namespace koszul {

enum class BoundaryRoute { p1, pn1, p2_bonds, pn2_cycles, top, brute };

struct BoundaryIdealResult {
  MonomialIdeal ideal;
  std::vector<Circuit> circuits_used;
  BoundaryRoute route;
};

// x_{sigma' \ sigma} * [I : x_{sigma \ sigma'}]; equals I when sigma' = sigma.
MonomialIdeal sector_ideal(const MonomialIdeal& I, VarSet sigma, VarSet sigma_prime);

// The ideal of monomials u for which u e_sigma is a Koszul boundary:
// the intersection over circuits through sigma of the sums of sector ideals.
// sigma = [n] short-circuits to I; |sigma| = 1 and n-1 use the closed-form
// sums instead of assembling the (single-family) intersections.
BoundaryIdealResult boundary_ideal(const MonomialIdeal& I, VarSet sigma, FieldSpec field);

// The intersection assembled directly from a circuit family; the cross-check
// target for the closed forms.
MonomialIdeal boundary_ideal_from_circuits(const MonomialIdeal& I, VarSet sigma,
                                           const std::vector<Circuit>& circuits);

// The displayed four-variable closed forms for |sigma| in {1, 2, 3}; n = 4.
MonomialIdeal boundary_ideal_four_var_formula(const MonomialIdeal& I, VarSet sigma);

// Membership of u in the boundary ideal; u e_sigma must be a cycle, i.e.
// u in I : (x_i : i in sigma) (throws std::invalid_argument otherwise).
bool is_boundary_monomial_cycle(const MonomialIdeal& I, const Monomial& u, VarSet sigma,
                                FieldSpec field);

}  // namespace koszul
