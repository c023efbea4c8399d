#pragma once

#include "koszul/monomial.hpp"

#include <span>
#include <vector>

namespace koszul {

// A monomial ideal held by its minimal generating set, lex-sorted.  The zero
// ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  MonomialIdeal(int n, std::vector<Monomial> generators);
  static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(int n) { return MonomialIdeal(n, {Monomial::identity(n)}); }

  int vars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return !gens_.empty() && gens_.front().is_identity(); }

  bool contains(const Monomial& u) const;

  bool operator==(const MonomialIdeal&) const = default;

  std::string str() const;  // "(x1*x3, x2*x3)"

 private:
  int n_;
  std::vector<Monomial> gens_;
};

// Minimal generators of {u : u*m in I} = minimalize{ g / gcd(g, m) }.
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m);

// I : (x_i : i in A), the intersection of the variable colons.  A nonempty.
MonomialIdeal colon(const MonomialIdeal& I, VarSet A);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(std::span<const MonomialIdeal> parts);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(std::span<const MonomialIdeal> parts);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(std::span<const MonomialIdeal> parts);

// m * I
MonomialIdeal scale(const Monomial& m, const MonomialIdeal& I);
// (x_a : a in A) * I; empty A gives the zero ideal
MonomialIdeal scale(VarSet A, const MonomialIdeal& I);

// I a subideal of J, i.e. every generator of I lies in J.
bool contained_in(const MonomialIdeal& I, const MonomialIdeal& J);

// Image under the variable permutation pi (1-based bijection of [n]).
MonomialIdeal permute(const MonomialIdeal& I, const std::vector<int>& pi);

}  // namespace koszul
