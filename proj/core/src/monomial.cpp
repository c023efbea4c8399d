#include "koszul/monomial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace koszul {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  for (int v : e_)
    if (v < 0) throw std::invalid_argument("monomial exponents must be >= 0");
}

Monomial Monomial::identity(int n) { return Monomial(std::vector<int>(n, 0)); }

Monomial Monomial::variable(int n, int i) {
  std::vector<int> e(n, 0);
  e.at(i - 1) = 1;
  return Monomial(std::move(e));
}

int Monomial::degree() const {
  int d = 0;
  for (int v : e_) d += v;
  return d;
}

bool Monomial::is_identity() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

bool Monomial::divides(const Monomial& m) const {
  if (vars() != m.vars()) throw std::invalid_argument("variable count mismatch");
  for (int i = 0; i < vars(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  if (vars() != m.vars()) throw std::invalid_argument("variable count mismatch");
  std::vector<int> e(e_);
  for (int i = 0; i < vars(); ++i) e[i] += m.e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& m) const {
  if (!m.divides(*this)) throw std::invalid_argument("inexact monomial division");
  std::vector<int> e(e_);
  for (int i = 0; i < vars(); ++i) e[i] -= m.e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::permuted(const std::vector<int>& pi) const {
  if (static_cast<int>(pi.size()) != vars())
    throw std::invalid_argument("permutation length mismatch");
  std::vector<int> e(vars(), 0);
  for (int i = 0; i < vars(); ++i) e[pi[i] - 1] = e_[i];
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  std::string s;
  for (int i = 1; i <= vars(); ++i) {
    const int v = exponent(i);
    if (v == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i);
    if (v > 1) s += "^" + std::to_string(v);
  }
  return s.empty() ? "1" : s;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("variable count mismatch");
  std::vector<int> e(a.vars());
  for (int i = 0; i < a.vars(); ++i) e[i] = std::min(a.exponents()[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("variable count mismatch");
  std::vector<int> e(a.vars());
  for (int i = 0; i < a.vars(); ++i) e[i] = std::max(a.exponents()[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

Monomial colon_quotient(const Monomial& a, const Monomial& b) { return a / gcd(a, b); }

VarSet VarSet::of(std::initializer_list<int> members) {
  VarSet s;
  for (int i : members) s = s.with(i);
  return s;
}

VarSet VarSet::of(const std::vector<int>& members) {
  VarSet s;
  for (int i : members) s = s.with(i);
  return s;
}

VarSet VarSet::single(int i) { return VarSet().with(i); }

VarSet VarSet::full(int n) { return VarSet((n == 32 ? 0u : (1u << n)) - 1u); }

int VarSet::size() const { return std::popcount(bits_); }

int VarSet::min() const {
  if (empty()) throw std::logic_error("min of empty set");
  return std::countr_zero(bits_) + 1;
}

int VarSet::max() const {
  if (empty()) throw std::logic_error("max of empty set");
  return 32 - std::countl_zero(bits_);
}

std::vector<int> VarSet::members() const {
  std::vector<int> m;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) m.push_back(std::countr_zero(b) + 1);
  return m;
}

VarSet VarSet::permuted(const std::vector<int>& pi) const {
  VarSet s;
  for (int i : members()) s = s.with(pi.at(i - 1));
  return s;
}

Monomial VarSet::monomial(int n) const {
  std::vector<int> e(n, 0);
  for (int i : members()) e.at(i - 1) = 1;
  return Monomial(std::move(e));
}

bool VarSet::operator<(VarSet o) const {
  // Compare member lists lexicographically.  Equivalent bit trick: the sets
  // differ first at the lowest differing bit; the one holding it is smaller
  // unless it has run out of members entirely.
  if (bits_ == o.bits_) return false;
  std::uint32_t a = bits_, b = o.bits_;
  while (a && b) {
    const int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0;  // the exhausted list is a proper prefix, hence smaller
}

std::string VarSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

std::vector<VarSet> subsets_of_size(int n, int p) {
  std::vector<VarSet> out;
  if (p < 0 || p > n) return out;
  std::vector<int> idx(p);
  for (int i = 0; i < p; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(VarSet::of(idx));
    int i = p - 1;
    while (i >= 0 && idx[i] == n - (p - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (p == 0) out = {VarSet()};
  return out;
}

int sgn(VarSet sigma, int j) {
  if (!sigma.contains(j)) throw std::invalid_argument("sgn: index not in set");
  const std::uint32_t below = sigma.bits() & ((1u << (j - 1)) - 1u);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

int shuffle_sign(VarSet sigma, VarSet tau) {
  if (sigma.intersects(tau)) throw std::invalid_argument("shuffle_sign: sets must be disjoint");
  int inversions = 0;
  for (int s : sigma.members())
    inversions += VarSet(tau.bits() & ((1u << (s - 1)) - 1u)).size();
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace koszul
