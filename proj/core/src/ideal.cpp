#include "koszul/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace koszul {

namespace {

// Minimal elements under divisibility, lex-sorted.  Sorting by degree first
// lets each candidate be tested against already-kept (smaller) monomials only.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool dominated = false;
    for (const Monomial& k : kept)
      if (k.divides(g)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("variable count mismatch");
}

}  // namespace

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> generators) : n_(n) {
  for (const Monomial& g : generators)
    if (g.vars() != n) throw std::invalid_argument("generator has wrong variable count");
  gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const Monomial& u) const {
  if (u.vars() != n_) throw std::invalid_argument("variable count mismatch");
  for (const Monomial& g : gens_)
    if (g.divides(u)) return true;
  return false;
}

std::string MonomialIdeal::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].str();
  }
  return s + ")";
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
  if (m.vars() != I.vars()) throw std::invalid_argument("variable count mismatch");
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) gens.push_back(colon_quotient(g, m));
  return MonomialIdeal(I.vars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, VarSet A) {
  if (A.empty()) throw std::invalid_argument("colon by an empty variable set");
  bool first = true;
  MonomialIdeal out = MonomialIdeal::zero(I.vars());
  for (int i : A.members()) {
    MonomialIdeal part = colon(I, Monomial::variable(I.vars(), i));
    out = first ? part : intersect(out, part);
    first = false;
  }
  return out;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal sum(std::span<const MonomialIdeal> parts) {
  if (parts.empty()) throw std::invalid_argument("sum of no ideals");
  MonomialIdeal out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = sum(out, parts[i]);
  return out;
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) gens.push_back(g * h);
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal product(std::span<const MonomialIdeal> parts) {
  if (parts.empty()) throw std::invalid_argument("product of no ideals");
  MonomialIdeal out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = product(out, parts[i]);
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal intersect(std::span<const MonomialIdeal> parts) {
  if (parts.empty()) throw std::invalid_argument("intersection of no ideals");
  MonomialIdeal out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = intersect(out, parts[i]);
  return out;
}

MonomialIdeal scale(const Monomial& m, const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) gens.push_back(m * g);
  return MonomialIdeal(I.vars(), std::move(gens));
}

MonomialIdeal scale(VarSet A, const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  for (int i : A.members())
    for (const Monomial& g : I.generators()) gens.push_back(Monomial::variable(I.vars(), i) * g);
  return MonomialIdeal(I.vars(), std::move(gens));
}

bool contained_in(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  for (const Monomial& g : I.generators())
    if (!J.contains(g)) return false;
  return true;
}

MonomialIdeal permute(const MonomialIdeal& I, const std::vector<int>& pi) {
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) gens.push_back(g.permuted(pi));
  return MonomialIdeal(I.vars(), std::move(gens));
}

}  // namespace koszul
