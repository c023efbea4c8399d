#pragma once

#include "koszul/chain.hpp"
#include "koszul/ideal.hpp"

#include <map>
#include <optional>
#include <vector>

namespace koszul {

// An order u_1..u_m of the minimal generators with each prefix colon
// (u_1..u_{j-1}) : u_j generated by variables; sets[j] records their indices.
struct LinearQuotientOrder {
  int n = 0;
  std::vector<Monomial> order;
  std::vector<VarSet> sets;

  bool degree_nondecreasing() const;
};

// Validates a candidate order (a permutation of the minimal generators) and
// computes the sets; nullopt when some prefix colon is not variable-generated.
std::optional<LinearQuotientOrder> check_linear_quotients(const MonomialIdeal& I,
                                                          const std::vector<Monomial>& order);

// Backtracking search for a degree-nondecreasing linear-quotient order.
// Restricting to such orders loses nothing, and caps make the factorial worst
// case irrelevant at desk scale (<= 16 generators, SizeCapError above).
std::optional<LinearQuotientOrder> find_linear_quotients_order(const MonomialIdeal& I);

// g(u): the earliest generator in the order dividing u; u must lie in I.
const Monomial& decomposition(const LinearQuotientOrder& lq, const Monomial& u);

// set(g(x_s u)) inside set(u) for every generator u and s in set(u).
bool is_regular(const LinearQuotientOrder& lq);

// Per-generator smallest l in supp(u) with x_l dividing x_t u / g(x_t u) for
// all t in set(u); nullopt when some generator has no valid index.
std::optional<std::vector<int>> nice_lift_indices(const LinearQuotientOrder& lq);

// beta_i = #{(u, sigma) : sigma subset of set(u), |sigma| = i-1}; the ranks of
// the iterated mapping-cone resolution.  Needs a degree-nondecreasing order.
std::vector<int> mapping_cone_betti(const LinearQuotientOrder& lq);

// Entries of resolution maps: signed monomials, as sparse integer polynomials.
using SparsePoly = std::map<Monomial, long long>;

struct ResolutionMaps {
  // basis[i-1]: the symbols of F_i as (generator index, sigma subset of its set)
  std::vector<std::vector<std::pair<std::size_t, VarSet>>> basis;
  // maps[i-1]: the matrix of delta_i : F_i -> F_{i-1}; delta_1 has one row (F_0 = S)
  std::vector<std::vector<std::vector<SparsePoly>>> maps;
};

// The minimal free resolution maps for a regular decomposition function:
// delta(g^u_sigma) = -sum sgn(sigma,t) x_t g^u_{sigma\t}
//                    +sum sgn(sigma,t) (x_t u / g(x_t u)) g^{g(x_t u)}_{sigma\t}.
ResolutionMaps resolution_differential(const LinearQuotientOrder& lq);

struct BasisCycle {
  Monomial u;   // generator
  int lift;     // the index l with the cycle (u/x_l) e_l ^ e_sigma
  VarSet sigma; // subset of set(u)
};

struct MonomialBasisResult {
  enum class Status { ok, no_linear_quotients, not_regular, no_nice_lifts };
  Status status = Status::ok;
  LinearQuotientOrder order;  // populated when linear quotients were found
  std::vector<BasisCycle> cycles;
};

// The monomial Koszul-homology basis for ideals with linear quotients, a
// regular decomposition function, and nice Koszul lifts.  Recognized classes
// (stable, squarefree stable, matroidal, symmetric shifted) use their known
// good generator orders before falling back to the search.  On success every
// cycle is verified to be a cycle, the per-degree counts are verified against
// the mapping-cone ranks, and the classes are verified independent in each
// strand.
MonomialBasisResult monomial_basis(const MonomialIdeal& I, FieldSpec field = {});

Chain cycle_chain(const BasisCycle& c, int n, FieldSpec field);

struct ClassFlags {
  bool stable = false;
  bool squarefree_stable = false;
  bool matroidal = false;
  bool symmetric_shifted = false;
};

ClassFlags recognize(const MonomialIdeal& I);

// Graded orders on monomials, x1 > x2 > ... > xn.
bool graded_lex_less(const Monomial& a, const Monomial& b);
bool grevlex_less(const Monomial& a, const Monomial& b);

// Generators by ascending degree, grevlex-descending within a degree: the
// order under which stable, squarefree stable, and matroidal ideals have
// linear quotients.
std::vector<Monomial> revlex_generator_order(const MonomialIdeal& I);

// Generators graded by exponent partition (ascending graded lex), then
// graded-lex descending within an orbit: the symmetric-shifted order.
std::vector<Monomial> shifted_generator_order(const MonomialIdeal& I);

}  // namespace koszul
