#pragma once

#include "koszul/chain.hpp"
#include "koszul/matrix.hpp"

#include <vector>

namespace koszul {

// The multidegree-a strand of the Koszul complex of S/I in homological degree
// p: the sigma with a - eps_sigma >= 0 and x^(a - eps_sigma) not in I, in
// lexicographic order.
std::vector<VarSet> strand_basis(const MonomialIdeal& I, int p, const Multidegree& a);

// Matrix of the differential K_p -> K_{p-1} restricted to the strand at a;
// rows indexed by strand_basis(p-1, a), columns by strand_basis(p, a).
ExactMatrix strand_differential(const MonomialIdeal& I, int p, const Multidegree& a,
                                FieldSpec field);

// Image of a reduced chain under the Koszul differential, reduced mod I.
// Throws if the input is not in reduced form.
Chain differential(const MonomialIdeal& I, const Chain& c, FieldSpec field);

// dim H_p(K^{S/I})_a = nullity of the strand differential out of degree p
// minus the rank of the one coming in.
int strand_homology_dim(const MonomialIdeal& I, int p, const Multidegree& a, FieldSpec field);

// All lcms of nonempty generator subsets, deduplicated and lex-sorted: the
// candidate multidegrees of nonzero Koszul homology.  Caps at 20 generators.
std::vector<Multidegree> lcm_lattice(const MonomialIdeal& I);

// (beta_1, ..., beta_n): total Betti numbers via strand homology summed over
// the lcm lattice.
std::vector<int> total_betti(const MonomialIdeal& I, FieldSpec field);

struct BoundaryCheck {
  bool is_boundary = false;
  Chain witness;  // preimage under the differential when is_boundary
};

// Whether a multihomogeneous cycle is a boundary, by solving the strand
// linear system; the deterministic solution is returned as a witness.
// Throws std::invalid_argument on non-cycles or inhomogeneous input.
BoundaryCheck boundary_check(const MonomialIdeal& I, const Chain& z, FieldSpec field);

struct StrandDeficit {
  Multidegree degree;
  int deficit;
};

// Multidegrees where dim H_p exceeds the span of classes of monomial cycles,
// with the (positive) gap.
std::vector<StrandDeficit> monomial_span_deficit(const MonomialIdeal& I, int p,
                                                 FieldSpec field);

// Cycle representatives of a basis of H_p(K^{S/I})_a, deterministic.
std::vector<Chain> strand_homology_basis(const MonomialIdeal& I, int p, const Multidegree& a,
                                         FieldSpec field);

}  // namespace koszul
