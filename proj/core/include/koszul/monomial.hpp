#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace koszul {

// A monomial in n variables as its exponent vector.  Multidegrees share the
// representation: both are points of Z_{>=0}^n with componentwise arithmetic.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);
  static Monomial identity(int n);
  static Monomial variable(int n, int i);  // x_i, 1-based

  int vars() const { return static_cast<int>(e_.size()); }
  int exponent(int i) const { return e_[i - 1]; }  // 1-based
  const std::vector<int>& exponents() const { return e_; }
  int degree() const;
  bool is_identity() const;

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  // this / m, requires m | this
  Monomial operator/(const Monomial& m) const;

  // Variable i becomes variable pi[i-1] (pi a 1-based bijection of [n]).
  Monomial permuted(const std::vector<int>& pi) const;

  // Lexicographic on exponent vectors; the canonical generator order.
  auto operator<=>(const Monomial& m) const = default;

  std::string str() const;  // "x1^2*x2", identity prints "1"

 private:
  std::vector<int> e_;
};

using Multidegree = Monomial;

Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

// a / gcd(a, b): the generator image under the colon by b.
Monomial colon_quotient(const Monomial& a, const Monomial& b);

// A subset of the variable indices {1..n}, n <= 31, as a bitset.  Doubles as
// the row/column labels of the sign matrices (size-p subsets of [n]).
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::uint32_t bits) : bits_(bits) {}
  static VarSet of(std::initializer_list<int> members);
  static VarSet of(const std::vector<int>& members);
  static VarSet single(int i);
  static VarSet full(int n);  // {1..n}

  std::uint32_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const;
  bool contains(int i) const { return bits_ & (1u << (i - 1)); }
  int min() const;  // smallest member, set must be nonempty
  int max() const;
  std::vector<int> members() const;  // ascending

  VarSet with(int i) const { return VarSet(bits_ | (1u << (i - 1))); }
  VarSet without(int i) const { return VarSet(bits_ & ~(1u << (i - 1))); }
  VarSet operator|(VarSet o) const { return VarSet(bits_ | o.bits_); }
  VarSet operator&(VarSet o) const { return VarSet(bits_ & o.bits_); }
  VarSet minus(VarSet o) const { return VarSet(bits_ & ~o.bits_); }
  bool subset_of(VarSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(VarSet o) const { return bits_ & o.bits_; }

  VarSet permuted(const std::vector<int>& pi) const;

  Monomial monomial(int n) const;       // x_A = prod of members
  Multidegree multidegree(int n) const { return monomial(n); }

  bool operator==(const VarSet&) const = default;
  // Orders by member list, lexicographically: {1,4} before {2,3}.
  bool operator<(VarSet o) const;

  std::string str() const;  // "{1,2}"

 private:
  std::uint32_t bits_ = 0;
};

// All size-p subsets of [n] in lexicographic member order.
std::vector<VarSet> subsets_of_size(int n, int p);

// (-1)^#{s in sigma : s < j}, for j in sigma.  Throws otherwise.
int sgn(VarSet sigma, int j);

// Sign of e_sigma ^ e_tau for disjoint sigma, tau: parity of inversions.
int shuffle_sign(VarSet sigma, VarSet tau);

}  // namespace koszul
