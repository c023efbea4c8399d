#pragma once

#include "koszul/field.hpp"
#include "koszul/ideal.hpp"
#include "koszul/monomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace koszul {

// A finite formal sum of terms c * m e_sigma with |sigma| equal to the
// homological degree.  In reduced form every stored monomial avoids I.
class Chain {
 public:
  using Key = std::pair<VarSet, Monomial>;

  Chain() = default;
  explicit Chain(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  bool empty() const { return terms_.empty(); }
  const std::map<Key, Scalar>& terms() const { return terms_; }

  // Accumulates; zero coefficients vanish.  |sigma| must match the degree.
  void add(VarSet sigma, const Monomial& m, const Scalar& c);

  bool operator==(const Chain&) const = default;
  std::string str() const;

 private:
  int degree_ = 0;
  std::map<Key, Scalar> terms_;
};

// Convenience for single-term chains c * m e_sigma.
Chain chain_term(VarSet sigma, const Monomial& m, const Scalar& c);

// Drop the terms whose monomial lies in I.
Chain reduce(const MonomialIdeal& I, const Chain& c);

// Exterior product: bilinear, e_sigma ^ e_tau = 0 on overlap, otherwise the
// shuffle sign times e_{sigma u tau}.  The result may need reduction mod I.
Chain wedge(const Chain& a, const Chain& b);

// The common multidegree (monomial degree plus the sigma indicator) when the
// chain is multihomogeneous; nullopt otherwise or when empty.
std::optional<Multidegree> homogeneous_multidegree(const Chain& c);

}  // namespace koszul
