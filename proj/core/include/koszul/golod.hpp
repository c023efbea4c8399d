#pragma once

#include "koszul/boundary.hpp"
#include "koszul/homology.hpp"

#include <vector>

namespace koszul {

struct InclusionFailure {
  int p;            // homological degree A u B maps into
  VarSet A, B;      // the disjoint index sets of the failing colon pair
  Monomial witness; // u*v outside the boundary ideal of A u B
};

struct InclusionReport {
  bool holds = true;
  std::vector<InclusionFailure> failures;
};

// Whether all products of monomial cycles vanish in Koszul homology: checks
// [I:A][I:B] inside B^{n, A u B} for every unordered pair of disjoint
// nonempty variable sets (colon ideals only see the underlying sets, so this
// exhausts all permutations of the indices).  Generators must have degree
// >= 2.  For symmetric ideals in n >= 6 variables the checks collapse, via
// the S_n action, to prefix pairs against the reduced right-hand side
// I + (x_{p+1},...,x_n)[I:(x_1..x_p)]; the full-circuit route at that size is
// far beyond desk scale.
InclusionReport monomial_products_vanish(const MonomialIdeal& I, FieldSpec field,
                                         unsigned jobs = 1);

// The four-variable Golod classification: the four displayed inclusion
// families under all permutations of the indices.  holds <=> I is Golod.
InclusionReport golod4(const MonomialIdeal& I, FieldSpec field);

// Triviality of H_1 x H_3 -> H_4 for n = 4: [I:x_i][I:(rest)] inside I for
// every i.
bool h1h3_product_trivial(const MonomialIdeal& I, FieldSpec field);

struct PairingCell {
  Multidegree left, right;
  int rank;  // span the products from this strand pair add over the boundaries
};

struct PairingReport {
  int p = 0, q = 0;
  int total_rank = 0;
  std::vector<PairingCell> cells;
};

// Rank data of the multiplication H_q x H_{p-q} -> H_p computed from strand
// homology bases; exhibits nonvanishing products beyond monomial cycles.
PairingReport homology_product_pairing(const MonomialIdeal& I, int p, int q, FieldSpec field);

}  // namespace koszul
