#pragma once

#include "koszul/matrix.hpp"
#include "koszul/monomial.hpp"

#include <vector>

namespace koszul {

// The matrix M(n,p): rows indexed by size-p subsets of [n], columns by
// size-(p+1) subsets, both in lexicographic order; entry sgn(tau, tau\sigma)
// when sigma is contained in tau, else 0.  Its minimal dependent row sets over
// the field are the circuits that govern boundary ideals.
struct SignMatrixSpec {
  int n;
  int p;
  FieldSpec field;
};

// A circuit: a set of size-p subsets, kept sorted.
using Circuit = std::vector<VarSet>;

enum class CircuitRoute { p1, pn1, p2_bonds, pn2_cycles, brute };

// The enumeration route the dispatcher picks for (n, p).
CircuitRoute circuit_route(int n, int p);

ExactMatrix build_sign_matrix(const SignMatrixSpec& spec);

// All circuits containing the row sigma (|sigma| = p), in canonical order:
// by size, then lexicographic member list.  Closed forms cover p in
// {1, 2, n-2, n-1}; otherwise a field-generic search over independent row
// sets runs, capped at binom(n,p) <= 22 ground elements (SizeCapError above).
// Results are cached per (n, p, characteristic, sigma).
std::vector<Circuit> circuits_through(const SignMatrixSpec& spec, VarSet sigma);

// The search path without closed-form dispatch, for cross-validation.
std::vector<Circuit> circuits_through_brute(const SignMatrixSpec& spec, VarSet sigma);

// Canonical ordering used for emitted circuit families.
bool circuit_less(const Circuit& a, const Circuit& b);

}  // namespace koszul
