#include "koszul/homology.hpp"

#include "koszul/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace koszul {

namespace {

bool feasible(const Multidegree& a, VarSet sigma) {
  for (int i : sigma.members())
    if (a.exponent(i) < 1) return false;
  return true;
}

Monomial strand_monomial(const Multidegree& a, VarSet sigma) {
  return a / sigma.monomial(a.vars());
}

}  // namespace

std::vector<VarSet> strand_basis(const MonomialIdeal& I, int p, const Multidegree& a) {
  std::vector<VarSet> basis;
  if (p < 0 || p > I.vars()) return basis;
  for (VarSet sigma : subsets_of_size(I.vars(), p))
    if (feasible(a, sigma) && !I.contains(strand_monomial(a, sigma))) basis.push_back(sigma);
  return basis;
}

ExactMatrix strand_differential(const MonomialIdeal& I, int p, const Multidegree& a,
                                FieldSpec field) {
  const auto sources = strand_basis(I, p, a);
  const auto targets = strand_basis(I, p - 1, a);
  ExactMatrix m(field, targets.size(), sources.size());
  for (std::size_t c = 0; c < sources.size(); ++c) {
    const VarSet sigma = sources[c];
    for (int j : sigma.members()) {
      const VarSet tau = sigma.without(j);
      const auto it = std::lower_bound(targets.begin(), targets.end(), tau);
      if (it == targets.end() || *it != tau) continue;  // the image monomial fell into I
      m.set(it - targets.begin(), c, sgn(sigma, j));
    }
  }
  return m;
}

Chain differential(const MonomialIdeal& I, const Chain& c, FieldSpec field) {
  validate(field);
  Chain out(c.degree() > 0 ? c.degree() - 1 : 0);
  for (const auto& [key, coeff] : c.terms()) {
    const auto& [sigma, m] = key;
    if (I.contains(m)) throw std::invalid_argument("differential needs a reduced chain");
    if (coeff.field() != field) throw std::invalid_argument("chain scalar field mismatch");
    for (int j : sigma.members()) {
      const Monomial image = m * Monomial::variable(m.vars(), j);
      if (I.contains(image)) continue;
      Scalar v = coeff;
      if (sgn(sigma, j) < 0) v = -v;
      out.add(sigma.without(j), image, v);
    }
  }
  return out;
}

int strand_homology_dim(const MonomialIdeal& I, int p, const Multidegree& a, FieldSpec field) {
  if (p < 1 || p > I.vars()) throw std::invalid_argument("need 1 <= p <= n");
  const ExactMatrix out = strand_differential(I, p, a, field);
  const ExactMatrix in = strand_differential(I, p + 1, a, field);
  return static_cast<int>(nullity(out)) - static_cast<int>(rank(in));
}

std::vector<Multidegree> lcm_lattice(const MonomialIdeal& I) {
  if (I.generators().size() > 20)
    throw SizeCapError("lcm lattice capped at 20 generators, ideal has " +
                       std::to_string(I.generators().size()));
  std::set<Monomial> seen;
  for (const Monomial& g : I.generators()) {
    std::set<Monomial> next(seen);
    next.insert(g);
    for (const Monomial& m : seen) next.insert(lcm(m, g));
    seen = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> total_betti(const MonomialIdeal& I, FieldSpec field) {
  const auto lattice = lcm_lattice(I);
  std::vector<int> betti(I.vars(), 0);
  for (int p = 1; p <= I.vars(); ++p)
    for (const Multidegree& a : lattice) betti[p - 1] += strand_homology_dim(I, p, a, field);
  return betti;
}

BoundaryCheck boundary_check(const MonomialIdeal& I, const Chain& z, FieldSpec field) {
  validate(field);
  const Chain zr = reduce(I, z);
  const int p = z.degree();
  if (zr.empty()) return {true, Chain(p + 1)};
  const auto a = homogeneous_multidegree(zr);
  if (!a) throw std::invalid_argument("boundary_check needs a multihomogeneous cycle");
  if (!differential(I, zr, field).empty())
    throw std::invalid_argument("boundary_check input is not a cycle");

  const auto rows = strand_basis(I, p, *a);
  const auto cols = strand_basis(I, p + 1, *a);
  const ExactMatrix m = strand_differential(I, p + 1, *a, field);
  std::vector<Scalar> b(rows.size(), Scalar::zero(field));
  for (const auto& [key, coeff] : zr.terms()) {
    const auto it = std::lower_bound(rows.begin(), rows.end(), key.first);
    b[it - rows.begin()] = coeff;
  }
  const auto x = solve(m, b);
  if (!x) return {false, Chain(p + 1)};
  Chain witness(p + 1);
  for (std::size_t c = 0; c < cols.size(); ++c)
    witness.add(cols[c], strand_monomial(*a, cols[c]), (*x)[c]);
  return {true, std::move(witness)};
}

std::vector<StrandDeficit> monomial_span_deficit(const MonomialIdeal& I, int p,
                                                 FieldSpec field) {
  std::vector<StrandDeficit> out;
  for (const Multidegree& a : lcm_lattice(I)) {
    const int h = strand_homology_dim(I, p, a, field);
    if (h <= 0) continue;
    const auto basis = strand_basis(I, p, a);
    const ExactMatrix d_out = strand_differential(I, p, a, field);
    const ExactMatrix d_in = strand_differential(I, p + 1, a, field);
    std::vector<std::size_t> monomial_cycles;
    for (std::size_t c = 0; c < basis.size(); ++c) {
      bool zero_column = true;
      for (std::size_t r = 0; r < d_out.rows() && zero_column; ++r)
        zero_column = d_out.at(r, c).is_zero();
      if (zero_column) monomial_cycles.push_back(c);
    }
    // span of the classes = rank([boundaries | cycles]) - rank(boundaries)
    ExactMatrix combined(field, basis.size(), d_in.cols() + monomial_cycles.size());
    for (std::size_t r = 0; r < d_in.rows(); ++r)
      for (std::size_t c = 0; c < d_in.cols(); ++c) combined.set(r, c, d_in.at(r, c));
    for (std::size_t k = 0; k < monomial_cycles.size(); ++k)
      combined.set(monomial_cycles[k], d_in.cols() + k, 1);
    const int span = static_cast<int>(rank(combined)) - static_cast<int>(rank(d_in));
    if (h - span > 0) out.push_back({a, h - span});
  }
  return out;
}

std::vector<Chain> strand_homology_basis(const MonomialIdeal& I, int p, const Multidegree& a,
                                         FieldSpec field) {
  const auto basis = strand_basis(I, p, a);
  const ExactMatrix d_out = strand_differential(I, p, a, field);
  const ExactMatrix d_in = strand_differential(I, p + 1, a, field);
  const auto kernel = nullspace(d_out);

  // Greedily keep kernel vectors that grow the span beyond the boundaries.
  std::vector<std::vector<Scalar>> picked;
  auto current_rank = [&]() {
    ExactMatrix m(field, basis.size(), d_in.cols() + picked.size());
    for (std::size_t r = 0; r < d_in.rows(); ++r)
      for (std::size_t c = 0; c < d_in.cols(); ++c) m.set(r, c, d_in.at(r, c));
    for (std::size_t k = 0; k < picked.size(); ++k)
      for (std::size_t r = 0; r < basis.size(); ++r)
        m.set(r, d_in.cols() + k, picked[k][r]);
    return rank(m);
  };
  std::size_t base_rank = current_rank();
  std::vector<Chain> reps;
  for (const auto& k : kernel) {
    picked.push_back(k);
    const std::size_t r = current_rank();
    if (r > base_rank) {
      base_rank = r;
      Chain rep(p);
      for (std::size_t i = 0; i < basis.size(); ++i)
        rep.add(basis[i], strand_monomial(a, basis[i]), k[i]);
      reps.push_back(std::move(rep));
    } else {
      picked.pop_back();
    }
  }
  return reps;
}

}  // namespace koszul
