#include "koszul/linquot.hpp"

#include "koszul/errors.hpp"
#include "koszul/homology.hpp"
#include "koszul/symmetric.hpp"

#include <algorithm>
#include <stdexcept>

namespace koszul {

namespace {

// Minimal generators of (u_1..u_k) : v as colon quotients; nullopt unless all
// of degree one.
std::optional<VarSet> variable_colon(const std::vector<Monomial>& prefix, std::size_t k,
                                     const Monomial& v) {
  std::vector<Monomial> quotients;
  quotients.reserve(k);
  for (std::size_t i = 0; i < k; ++i) quotients.push_back(colon_quotient(prefix[i], v));
  // keep only the divisibility-minimal quotients (first copy of duplicates)
  VarSet set;
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < quotients.size() && minimal; ++j) {
      if (j == i) continue;
      if (quotients[j] == quotients[i]) {
        if (j < i) minimal = false;
      } else if (quotients[j].divides(quotients[i])) {
        minimal = false;
      }
    }
    if (!minimal) continue;
    if (quotients[i].degree() != 1) return std::nullopt;
    for (int idx = 1; idx <= quotients[i].vars(); ++idx)
      if (quotients[i].exponent(idx) == 1) set = set.with(idx);
  }
  return set;
}

}  // namespace

bool LinearQuotientOrder::degree_nondecreasing() const {
  for (std::size_t i = 1; i < order.size(); ++i)
    if (order[i].degree() < order[i - 1].degree()) return false;
  return true;
}

std::optional<LinearQuotientOrder> check_linear_quotients(const MonomialIdeal& I,
                                                          const std::vector<Monomial>& order) {
  std::vector<Monomial> sorted_order(order);
  std::sort(sorted_order.begin(), sorted_order.end());
  if (sorted_order != I.generators())
    throw std::invalid_argument("order is not a permutation of the minimal generators");
  LinearQuotientOrder lq{I.vars(), order, {}};
  lq.sets.reserve(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (j == 0) {
      lq.sets.push_back(VarSet());
      continue;
    }
    const auto set = variable_colon(order, j, order[j]);
    if (!set) return std::nullopt;
    lq.sets.push_back(*set);
  }
  return lq;
}

std::optional<LinearQuotientOrder> find_linear_quotients_order(const MonomialIdeal& I) {
  const auto& gens = I.generators();
  if (gens.size() > 16)
    throw SizeCapError("linear-quotient order search capped at 16 generators");
  if (gens.empty()) return LinearQuotientOrder{I.vars(), {}, {}};

  std::vector<Monomial> chosen;
  std::vector<VarSet> sets;
  std::vector<bool> used(gens.size(), false);
  chosen.reserve(gens.size());

  auto dfs = [&](auto&& self) -> bool {
    if (chosen.size() == gens.size()) return true;
    // A degree-nondecreasing order must take a remaining generator of minimal
    // degree next.
    int min_degree = -1;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (!used[i] && (min_degree < 0 || gens[i].degree() < min_degree))
        min_degree = gens[i].degree();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (used[i] || gens[i].degree() != min_degree) continue;
      std::optional<VarSet> set =
          chosen.empty() ? std::optional<VarSet>(VarSet())
                         : variable_colon(chosen, chosen.size(), gens[i]);
      if (!set) continue;
      used[i] = true;
      chosen.push_back(gens[i]);
      sets.push_back(*set);
      if (self(self)) return true;
      used[i] = false;
      chosen.pop_back();
      sets.pop_back();
    }
    return false;
  };
  if (!dfs(dfs)) return std::nullopt;
  return LinearQuotientOrder{I.vars(), std::move(chosen), std::move(sets)};
}

const Monomial& decomposition(const LinearQuotientOrder& lq, const Monomial& u) {
  for (const Monomial& g : lq.order)
    if (g.divides(u)) return g;
  throw std::invalid_argument("decomposition of a monomial outside the ideal: " + u.str());
}

namespace {

VarSet set_of(const LinearQuotientOrder& lq, const Monomial& g) {
  for (std::size_t i = 0; i < lq.order.size(); ++i)
    if (lq.order[i] == g) return lq.sets[i];
  throw std::invalid_argument("not a generator: " + g.str());
}

}  // namespace

bool is_regular(const LinearQuotientOrder& lq) {
  for (std::size_t j = 0; j < lq.order.size(); ++j) {
    const Monomial& u = lq.order[j];
    for (int s : lq.sets[j].members()) {
      const Monomial& g = decomposition(lq, Monomial::variable(lq.n, s) * u);
      if (!set_of(lq, g).subset_of(lq.sets[j])) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> nice_lift_indices(const LinearQuotientOrder& lq) {
  std::vector<int> lifts;
  lifts.reserve(lq.order.size());
  for (std::size_t j = 0; j < lq.order.size(); ++j) {
    const Monomial& u = lq.order[j];
    int found = 0;
    for (int l = 1; l <= lq.n && !found; ++l) {
      if (u.exponent(l) == 0) continue;
      bool valid = true;
      for (int t : lq.sets[j].members()) {
        const Monomial xt_u = Monomial::variable(lq.n, t) * u;
        const Monomial quotient = xt_u / decomposition(lq, xt_u);
        if (quotient.exponent(l) == 0) {
          valid = false;
          break;
        }
      }
      if (valid) found = l;
    }
    if (!found) return std::nullopt;
    lifts.push_back(found);
  }
  return lifts;
}

std::vector<int> mapping_cone_betti(const LinearQuotientOrder& lq) {
  if (!lq.degree_nondecreasing())
    throw std::invalid_argument("mapping-cone ranks need a degree-nondecreasing order");
  int width = 0;
  for (const VarSet& s : lq.sets) width = std::max(width, s.size());
  std::vector<int> betti(width + 1, 0);
  for (const VarSet& s : lq.sets) {
    // binomials C(|s|, i-1)
    long long c = 1;
    for (int i = 0; i <= s.size(); ++i) {
      betti[i] += static_cast<int>(c);
      c = c * (s.size() - i) / (i + 1);
    }
  }
  return betti;
}

ResolutionMaps resolution_differential(const LinearQuotientOrder& lq) {
  if (!lq.degree_nondecreasing())
    throw std::invalid_argument("resolution maps need a degree-nondecreasing order");
  if (!is_regular(lq))
    throw std::invalid_argument("resolution maps need a regular decomposition function");

  ResolutionMaps out;
  int width = 0;
  for (const VarSet& s : lq.sets) width = std::max(width, s.size());
  for (int i = 1; i <= width + 1; ++i) {
    std::vector<std::pair<std::size_t, VarSet>> layer;
    for (std::size_t j = 0; j < lq.order.size(); ++j)
      for (VarSet sigma : subsets_of_size(lq.n, i - 1))
        if (sigma.subset_of(lq.sets[j])) layer.push_back({j, sigma});
    out.basis.push_back(std::move(layer));
  }

  auto locate = [&](std::size_t level, std::size_t j, VarSet sigma) {
    const auto& layer = out.basis[level];
    const auto it = std::find(layer.begin(), layer.end(), std::make_pair(j, sigma));
    return static_cast<std::size_t>(it - layer.begin());
  };
  auto index_of = [&](const Monomial& g) {
    return static_cast<std::size_t>(
        std::find(lq.order.begin(), lq.order.end(), g) - lq.order.begin());
  };

  for (std::size_t level = 0; level < out.basis.size(); ++level) {
    const std::size_t rows = level == 0 ? 1 : out.basis[level - 1].size();
    std::vector<std::vector<SparsePoly>> m(rows, std::vector<SparsePoly>(out.basis[level].size()));
    for (std::size_t c = 0; c < out.basis[level].size(); ++c) {
      const auto [j, sigma] = out.basis[level][c];
      const Monomial& u = lq.order[j];
      if (level == 0) {
        m[0][c][u] += 1;
        continue;
      }
      for (int t : sigma.members()) {
        const int sign = sgn(sigma, t);
        const VarSet tau = sigma.without(t);
        m[locate(level - 1, j, tau)][c][Monomial::variable(lq.n, t)] -= sign;
        const Monomial xt_u = Monomial::variable(lq.n, t) * u;
        const Monomial& g = decomposition(lq, xt_u);
        m[locate(level - 1, index_of(g), tau)][c][xt_u / g] += sign;
      }
      for (auto& row : m) {  // drop cancelled entries
        auto& cell = row[c];
        for (auto it = cell.begin(); it != cell.end();)
          it = it->second == 0 ? cell.erase(it) : std::next(it);
      }
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

Chain cycle_chain(const BasisCycle& c, int n, FieldSpec field) {
  const Monomial m = c.u / Monomial::variable(n, c.lift);
  Scalar coeff = Scalar::one(field);
  if (shuffle_sign(VarSet::single(c.lift), c.sigma) < 0) coeff = -coeff;
  return chain_term(c.sigma.with(c.lift), m, coeff);
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i < a.vars(); ++i) {
    const int d = a.exponents()[i] - b.exponents()[i];
    if (d != 0) return d < 0;
  }
  return false;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.vars() - 1; i >= 0; --i) {
    const int d = a.exponents()[i] - b.exponents()[i];
    if (d != 0) return d > 0;
  }
  return false;
}

std::vector<Monomial> revlex_generator_order(const MonomialIdeal& I) {
  std::vector<Monomial> order = I.generators();
  std::sort(order.begin(), order.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return grevlex_less(b, a);
  });
  return order;
}

std::vector<Monomial> shifted_generator_order(const MonomialIdeal& I) {
  std::vector<Monomial> order = I.generators();
  const int n = I.vars();
  std::sort(order.begin(), order.end(), [n](const Monomial& a, const Monomial& b) {
    const Monomial pa = Partition::of_monomial(a).monomial(n);
    const Monomial pb = Partition::of_monomial(b).monomial(n);
    if (pa != pb) return graded_lex_less(pa, pb);
    return graded_lex_less(b, a);
  });
  return order;
}

ClassFlags recognize(const MonomialIdeal& I) {
  ClassFlags flags;
  const auto& gens = I.generators();
  if (gens.empty() || I.is_unit()) return flags;
  const int n = I.vars();

  auto max_index = [n](const Monomial& u) {
    int top = 0;
    for (int i = 1; i <= n; ++i)
      if (u.exponent(i) > 0) top = i;
    return top;
  };

  flags.stable = true;
  for (const Monomial& u : gens) {
    const int m = max_index(u);
    for (int i = 1; i <= m && flags.stable; ++i)
      if (!I.contains(u * Monomial::variable(n, i) / Monomial::variable(n, m)))
        flags.stable = false;
    if (!flags.stable) break;
  }

  const bool squarefree = std::all_of(gens.begin(), gens.end(), [&](const Monomial& u) {
    return std::all_of(u.exponents().begin(), u.exponents().end(),
                       [](int e) { return e <= 1; });
  });

  if (squarefree) {
    flags.squarefree_stable = true;
    for (const Monomial& u : gens) {
      const int m = max_index(u);
      for (int i = 1; i < m && flags.squarefree_stable; ++i)
        if (u.exponent(i) == 0 &&
            !I.contains(u * Monomial::variable(n, i) / Monomial::variable(n, m)))
          flags.squarefree_stable = false;
      if (!flags.squarefree_stable) break;
    }

    const bool one_degree = std::all_of(gens.begin(), gens.end(), [&](const Monomial& u) {
      return u.degree() == gens.front().degree();
    });
    if (one_degree) {
      // basis exchange on the supports
      std::vector<VarSet> bases;
      for (const Monomial& u : gens) {
        VarSet s;
        for (int i = 1; i <= n; ++i)
          if (u.exponent(i) > 0) s = s.with(i);
        bases.push_back(s);
      }
      flags.matroidal = true;
      for (const VarSet& b1 : bases)
        for (const VarSet& b2 : bases) {
          for (int x : b1.minus(b2).members()) {
            bool exchanged = false;
            for (int y : b2.minus(b1).members())
              if (std::find(bases.begin(), bases.end(), b1.without(x).with(y)) != bases.end()) {
                exchanged = true;
                break;
              }
            if (!exchanged) flags.matroidal = false;
          }
          if (!flags.matroidal) break;
        }
    }
  }

  if (const auto spec = partitions_from_ideal(I))
    flags.symmetric_shifted = is_symmetric_shifted(*spec);
  return flags;
}

MonomialBasisResult monomial_basis(const MonomialIdeal& I, FieldSpec field) {
  validate(field);
  MonomialBasisResult result;

  // Recognized classes come with orders known to satisfy all three
  // hypotheses; try those before the generic search.
  std::optional<LinearQuotientOrder> lq;
  const ClassFlags flags = recognize(I);
  if (flags.stable || flags.squarefree_stable || flags.matroidal)
    lq = check_linear_quotients(I, revlex_generator_order(I));
  if (!lq && flags.symmetric_shifted)
    lq = check_linear_quotients(I, shifted_generator_order(I));
  if (!lq) lq = find_linear_quotients_order(I);
  if (!lq) {
    result.status = MonomialBasisResult::Status::no_linear_quotients;
    return result;
  }
  result.order = *lq;
  if (!is_regular(*lq)) {
    result.status = MonomialBasisResult::Status::not_regular;
    return result;
  }
  const auto lifts = nice_lift_indices(*lq);
  if (!lifts) {
    result.status = MonomialBasisResult::Status::no_nice_lifts;
    return result;
  }

  for (std::size_t j = 0; j < lq->order.size(); ++j)
    for (int size = 0; size <= lq->sets[j].size(); ++size)
      for (VarSet sigma : subsets_of_size(lq->n, size))
        if (sigma.subset_of(lq->sets[j]))
          result.cycles.push_back({lq->order[j], (*lifts)[j], sigma});

  // Verification panel: counts, cycle property, strand independence.
  const std::vector<int> betti = mapping_cone_betti(*lq);
  std::vector<int> counts(betti.size(), 0);
  for (const BasisCycle& c : result.cycles) counts[c.sigma.size()] += 1;
  if (counts != betti) throw std::logic_error("monomial basis count mismatch");

  std::map<std::pair<int, Monomial>, std::vector<Chain>> strands;
  for (const BasisCycle& c : result.cycles) {
    const Chain z = cycle_chain(c, lq->n, field);
    if (!differential(I, z, field).empty())
      throw std::logic_error("emitted element is not a cycle");
    const auto a = homogeneous_multidegree(z);
    strands[{c.sigma.size() + 1, *a}].push_back(z);
  }
  for (const auto& [key, chains] : strands) {
    const auto& [p, a] = key;
    const auto basis = strand_basis(I, p, a);
    const ExactMatrix boundaries = strand_differential(I, p + 1, a, field);
    ExactMatrix m(field, basis.size(), boundaries.cols() + chains.size());
    for (std::size_t r = 0; r < boundaries.rows(); ++r)
      for (std::size_t c = 0; c < boundaries.cols(); ++c) m.set(r, c, boundaries.at(r, c));
    for (std::size_t k = 0; k < chains.size(); ++k)
      for (const auto& [term, coeff] : chains[k].terms()) {
        const auto it = std::lower_bound(basis.begin(), basis.end(), term.first);
        m.set(it - basis.begin(), boundaries.cols() + k, coeff);
      }
    if (rank(m) != rank(boundaries) + chains.size())
      throw std::logic_error("emitted classes are dependent in a strand");
  }
  return result;
}

}  // namespace koszul
