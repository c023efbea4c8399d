#include "koszul/golod.hpp"

#include "koszul/parallel.hpp"
#include "koszul/symmetric.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace koszul {

namespace {

void require_degree_two(const MonomialIdeal& I) {
  for (const Monomial& g : I.generators())
    if (g.degree() < 2)
      throw std::invalid_argument("Golod criteria need generators of degree >= 2, found " +
                                  g.str());
}

// First product of colon generators, in lex pair order, escaping rhs.
std::optional<Monomial> first_escaping_product(const MonomialIdeal& left,
                                               const MonomialIdeal& right,
                                               const MonomialIdeal& rhs) {
  for (const Monomial& u : left.generators())
    for (const Monomial& v : right.generators())
      if (!rhs.contains(u * v)) return u * v;
  return std::nullopt;
}

struct PairCheck {
  VarSet A, B;
};

std::vector<PairCheck> disjoint_pairs(int n, int p, int q) {
  // Unordered {A, B}: for q < p-q every (A, B) pair once; for q = p-q keep A < B.
  std::vector<PairCheck> out;
  for (VarSet A : subsets_of_size(n, q))
    for (VarSet B : subsets_of_size(n, p - q)) {
      if (A.intersects(B)) continue;
      if (q == p - q && !(A < B)) continue;
      out.push_back({A, B});
    }
  return out;
}

InclusionReport symmetric_reduced_sweep(const MonomialIdeal& I) {
  const int n = I.vars();
  InclusionReport report;
  for (int p = 2; p <= n; ++p) {
    const VarSet prefix = VarSet::full(p);
    const MonomialIdeal rhs =
        p == n ? I
               : sum(I, scale(VarSet::full(n).minus(prefix), colon(I, prefix)));
    for (int q = 1; q <= p / 2; ++q) {
      const VarSet A = VarSet::full(q);
      const VarSet B = prefix.minus(A);
      const auto witness = first_escaping_product(colon(I, A), colon(I, B), rhs);
      if (witness) report.failures.push_back({p, A, B, *witness});
    }
  }
  report.holds = report.failures.empty();
  return report;
}

}  // namespace

InclusionReport monomial_products_vanish(const MonomialIdeal& I, FieldSpec field,
                                         unsigned jobs) {
  validate(field);
  require_degree_two(I);
  const int n = I.vars();

  if (n >= 6)
    if (partitions_from_ideal(I)) return symmetric_reduced_sweep(I);

  struct Task {
    int p;
    PairCheck pair;
  };
  std::vector<Task> tasks;
  for (int p = 2; p <= n; ++p)
    for (int q = 1; q <= p / 2; ++q)
      for (const PairCheck& pc : disjoint_pairs(n, p, q)) tasks.push_back({p, pc});

  std::vector<std::optional<InclusionFailure>> slots(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t k) {
    const auto& [p, pair] = tasks[k];
    const MonomialIdeal rhs = boundary_ideal(I, pair.A | pair.B, field).ideal;
    const auto witness = first_escaping_product(colon(I, pair.A), colon(I, pair.B), rhs);
    if (witness) slots[k] = InclusionFailure{p, pair.A, pair.B, *witness};
  });

  InclusionReport report;
  for (const auto& slot : slots)
    if (slot) report.failures.push_back(*slot);
  report.holds = report.failures.empty();
  return report;
}

InclusionReport golod4(const MonomialIdeal& I, FieldSpec field) {
  validate(field);
  if (I.vars() != 4) throw std::invalid_argument("golod4 needs a four-variable ideal");
  require_degree_two(I);
  InclusionReport report;
  auto check = [&](int p, VarSet A, VarSet B, const MonomialIdeal& rhs) {
    const auto witness = first_escaping_product(colon(I, A), colon(I, B), rhs);
    if (witness) report.failures.push_back({p, A, B, *witness});
  };
  for (int p = 2; p <= 4; ++p)
    for (int q = 1; q <= p / 2; ++q)
      for (const PairCheck& pc : disjoint_pairs(4, p, q)) {
        const VarSet sigma = pc.A | pc.B;
        const MonomialIdeal rhs =
            p == 4 ? I : boundary_ideal_four_var_formula(I, sigma);
        check(p, pc.A, pc.B, rhs);
      }
  report.holds = report.failures.empty();
  return report;
}

bool h1h3_product_trivial(const MonomialIdeal& I, FieldSpec field) {
  validate(field);
  if (I.vars() != 4) throw std::invalid_argument("h1h3 check needs a four-variable ideal");
  for (int i = 1; i <= 4; ++i) {
    const VarSet rest = VarSet::full(4).without(i);
    const MonomialIdeal prod =
        product(colon(I, Monomial::variable(4, i)), colon(I, rest));
    if (!contained_in(prod, I)) return false;
  }
  return true;
}

PairingReport homology_product_pairing(const MonomialIdeal& I, int p, int q, FieldSpec field) {
  validate(field);
  if (p < 2 || p > I.vars() || q < 1 || q >= p)
    throw std::invalid_argument("pairing needs 2 <= p <= n and 1 <= q < p");
  const auto lattice = lcm_lattice(I);

  std::vector<std::pair<Multidegree, std::vector<Chain>>> left, right;
  for (const Multidegree& a : lattice) {
    auto basis = strand_homology_basis(I, q, a, field);
    if (!basis.empty()) left.push_back({a, std::move(basis)});
  }
  for (const Multidegree& b : lattice) {
    auto basis = strand_homology_basis(I, p - q, b, field);
    if (!basis.empty()) right.push_back({b, std::move(basis)});
  }

  // Group product chains by target multidegree; rank over the boundaries.
  struct TargetData {
    std::vector<VarSet> basis;
    ExactMatrix boundaries;
    std::size_t base_rank;
    std::vector<std::vector<Scalar>> products;
  };
  std::map<Monomial, TargetData> targets;
  auto target_of = [&](const Multidegree& c) -> TargetData& {
    auto it = targets.find(c);
    if (it == targets.end()) {
      ExactMatrix b = strand_differential(I, p + 1, c, field);
      const std::size_t r = rank(b);
      it = targets.emplace(c, TargetData{strand_basis(I, p, c), std::move(b), r, {}}).first;
    }
    return it->second;
  };

  auto span_over_boundaries = [&](TargetData& t,
                                  const std::vector<std::vector<Scalar>>& vecs) {
    ExactMatrix m(field, t.basis.size(), t.boundaries.cols() + vecs.size());
    for (std::size_t r = 0; r < t.boundaries.rows(); ++r)
      for (std::size_t c = 0; c < t.boundaries.cols(); ++c)
        m.set(r, c, t.boundaries.at(r, c));
    for (std::size_t k = 0; k < vecs.size(); ++k)
      for (std::size_t r = 0; r < t.basis.size(); ++r)
        m.set(r, t.boundaries.cols() + k, vecs[k][r]);
    return static_cast<int>(rank(m)) - static_cast<int>(t.base_rank);
  };

  PairingReport report;
  report.p = p;
  report.q = q;
  for (const auto& [a, abasis] : left)
    for (const auto& [b, bbasis] : right) {
      const Multidegree c = a * b;
      TargetData& t = target_of(c);
      std::vector<std::vector<Scalar>> vecs;
      for (const Chain& za : abasis)
        for (const Chain& zb : bbasis) {
          const Chain prod = reduce(I, wedge(za, zb));
          std::vector<Scalar> v(t.basis.size(), Scalar::zero(field));
          bool in_strand = true;
          for (const auto& [key, coeff] : prod.terms()) {
            const auto it = std::lower_bound(t.basis.begin(), t.basis.end(), key.first);
            if (it == t.basis.end() || *it != key.first) {
              in_strand = false;
              break;
            }
            v[it - t.basis.begin()] = coeff;
          }
          if (in_strand && !prod.empty()) vecs.push_back(std::move(v));
        }
      if (vecs.empty()) continue;
      const int cell_rank = span_over_boundaries(t, vecs);
      if (cell_rank > 0) report.cells.push_back({a, b, cell_rank});
      for (auto& v : vecs) t.products.push_back(std::move(v));
    }
  for (auto& [c, t] : targets) {
    (void)c;
    if (!t.products.empty()) report.total_rank += span_over_boundaries(t, t.products);
  }
  return report;
}

}  // namespace koszul
