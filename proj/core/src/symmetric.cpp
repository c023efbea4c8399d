#include "koszul/symmetric.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace koszul {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be >= 0");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::of_monomial(const Monomial& m) {
  std::vector<int> e = m.exponents();
  std::sort(e.begin(), e.end(), std::greater<int>());
  return Partition(std::move(e));
}

int Partition::weight() const {
  int w = 0;
  for (int v : parts_) w += v;
  return w;
}

Monomial Partition::monomial(int n) const {
  if (length() > n) throw std::invalid_argument("partition longer than variable count");
  std::vector<int> e(n, 0);
  std::copy(parts_.begin(), parts_.end(), e.begin());
  return Monomial(std::move(e));
}

std::string Partition::str(int n) const {
  const int len = std::max(n, length());
  std::string s = "(";
  for (int i = 1; i <= len; ++i) {
    if (i > 1) s += ",";
    s += std::to_string(part(i));
  }
  return s + ")";
}

std::vector<Monomial> orbit(const Partition& lambda, int n) {
  std::vector<int> e = lambda.monomial(n).exponents();
  std::sort(e.begin(), e.end());
  std::vector<Monomial> out;
  do {
    out.push_back(Monomial(e));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

MonomialIdeal ideal_from_partitions(const SymmetricIdealSpec& spec) {
  std::vector<Monomial> gens;
  for (const Partition& lambda : spec.lambdas) {
    auto o = orbit(lambda, spec.n);
    gens.insert(gens.end(), o.begin(), o.end());
  }
  return MonomialIdeal(spec.n, std::move(gens));
}

std::optional<SymmetricIdealSpec> partitions_from_ideal(const MonomialIdeal& I) {
  std::set<Partition> seen;
  for (const Monomial& g : I.generators()) seen.insert(Partition::of_monomial(g));
  SymmetricIdealSpec spec{I.vars(), {seen.begin(), seen.end()}};
  if (ideal_from_partitions(spec) != I) return std::nullopt;
  return spec;
}

std::optional<int> critical_exponent(const std::vector<Partition>& lambdas, int p, int q) {
  if (q < 1 || q > p / 2) throw std::invalid_argument("need 1 <= q <= floor(p/2)");
  std::optional<int> min_first;
  for (const Partition& lambda : lambdas)
    if (lambda.length() <= p - q && (!min_first || lambda.part(1) < *min_first))
      min_first = lambda.part(1);
  if (!min_first) return std::nullopt;
  return *min_first - 1;
}

VpResult vp_check(const std::vector<Partition>& lambdas, int n, int p) {
  if (p < 2 || p > n) throw std::invalid_argument("need 2 <= p <= n");
  const int half_down = p / 2;
  const int half_up = (p + 1) / 2;

  std::optional<int> min_first;  // minimal first term among l(lambda) <= ceil(p/2)
  for (const Partition& lambda : lambdas)
    if (lambda.length() <= half_up && (!min_first || lambda.part(1) < *min_first))
      min_first = lambda.part(1);

  bool v1 = true;
  for (const Partition& lambda : lambdas)
    if (lambda.length() <= half_down && min_first && lambda.part(1) == *min_first &&
        lambda.part(1) != lambda.part(2)) {
      v1 = false;
      break;
    }
  if (v1) return {true, VpVia::v1};

  const int bound = min_first ? *min_first : std::numeric_limits<int>::max();
  for (const Partition& mu : lambdas)
    if (half_up < mu.length() && mu.length() <= p && mu.part(1) < bound)
      return {true, VpVia::v2};
  return {false, VpVia::none};
}

bool symmetric_monprod_vanish(const SymmetricIdealSpec& spec, FieldSpec field) {
  validate(field);
  const int n = spec.n;
  const MonomialIdeal I = ideal_from_partitions(spec);

  bool all_hold = true;
  for (int p = 2; p <= n; ++p) {
    const int q = p / 2;
    const VarSet A = VarSet::full(q);
    const VarSet B = VarSet::full(p).minus(A);
    const VarSet tail = VarSet::full(n).minus(VarSet::full(p));
    const MonomialIdeal rhs =
        tail.empty() ? I : sum(I, scale(tail, colon(I, VarSet::full(p))));
    const MonomialIdeal left = colon(I, A);
    const MonomialIdeal right = colon(I, B);
    bool inclusion_holds = true;
    for (const Monomial& u : left.generators()) {
      for (const Monomial& v : right.generators())
        if (!rhs.contains(u * v)) {
          inclusion_holds = false;
          break;
        }
      if (!inclusion_holds) break;
    }
    if (inclusion_holds != vp_check(spec.lambdas, n, p).holds)
      throw std::logic_error("symmetric vanishing paths disagree at p = " +
                             std::to_string(p) + " for " + I.str());
    all_hold = all_hold && inclusion_holds;
  }
  return all_hold;
}

bool principal_golod(const Partition& lambda, int n) {
  if (lambda.is_zero()) throw std::invalid_argument("zero partition");
  if (lambda.length() > n) throw std::invalid_argument("partition longer than variable count");
  if (lambda.length() > n / 2) return true;
  return lambda.part(1) == lambda.part(2);
}

bool is_symmetric_shifted(const SymmetricIdealSpec& spec) {
  const MonomialIdeal I = ideal_from_partitions(spec);
  for (const Partition& lambda : spec.lambdas) {
    const Monomial m = lambda.monomial(spec.n);
    for (int k = 2; k <= spec.n; ++k) {
      if (lambda.part(k) >= lambda.part(1)) continue;
      const Monomial moved =
          m * Monomial::variable(spec.n, k) / Monomial::variable(spec.n, 1);
      if (!I.contains(moved)) return false;
    }
  }
  return true;
}

}  // namespace koszul
