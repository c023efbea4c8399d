#pragma once

#include "koszul/field.hpp"
#include "koszul/ideal.hpp"

#include <optional>
#include <vector>

namespace koszul {

// A partition: weakly decreasing nonnegative parts, stored without trailing
// zeros.  part(i) reads as zero beyond the length, so a partition embeds in
// any ambient variable count >= length().
class Partition {
 public:
  explicit Partition(std::vector<int> parts);
  static Partition of_monomial(const Monomial& m);  // exponents sorted descending

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }  // # nonzero parts
  int part(int i) const { return i <= length() ? parts_[i - 1] : 0; }  // 1-based
  int weight() const;
  bool is_zero() const { return parts_.empty(); }

  Monomial monomial(int n) const;  // x^lambda; needs length() <= n

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
  std::string str(int n = 0) const;  // "(2,1,0,0)" padded to n when given

 private:
  std::vector<int> parts_;
};

struct SymmetricIdealSpec {
  int n;
  std::vector<Partition> lambdas;
};

// The distinct monomials in the S_n-orbit of x^lambda.
std::vector<Monomial> orbit(const Partition& lambda, int n);

// Union of the orbits of the x^lambda, minimalized.
MonomialIdeal ideal_from_partitions(const SymmetricIdealSpec& spec);

// Lambda(I) when I is S_n-stable; nullopt otherwise.
std::optional<SymmetricIdealSpec> partitions_from_ideal(const MonomialIdeal& I);

// min{lambda_1 : lambda in Lambda, l(lambda) <= p-q} - 1: the only exponent a
// nonvanishing product f = x_1^c..x_q^c, g = x_{q+1}^c..x_p^c can carry.
// Needs 1 <= q <= floor(p/2); nullopt when no partition is short enough.
std::optional<int> critical_exponent(const std::vector<Partition>& lambdas, int p, int q);

enum class VpVia { v1, v2, none };

struct VpResult {
  bool holds;
  VpVia via;
};

// The V_p condition on generating partitions, 2 <= p <= n.
VpResult vp_check(const std::vector<Partition>& lambdas, int n, int p);

// Vanishing of all products of monomial cycles for a symmetric ideal, decided
// twice: by the n-2 reduced ideal inclusions and by the V_p conditions.  The
// two paths must agree; disagreement throws std::logic_error.
bool symmetric_monprod_vanish(const SymmetricIdealSpec& spec, FieldSpec field);

// Golodness of the principal symmetric ideal I_lambda:
// l(lambda) > floor(n/2), or l(lambda) <= floor(n/2) and lambda_1 = lambda_2.
bool principal_golod(const Partition& lambda, int n);

// Closure under the exchanges x^lambda -> x^lambda * x_k / x_1.
bool is_symmetric_shifted(const SymmetricIdealSpec& spec);

}  // namespace koszul
