#include "koszul/matroid.hpp"

#include "koszul/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace koszul {

namespace {

void require_valid(const SignMatrixSpec& spec, VarSet sigma) {
  validate(spec.field);
  if (spec.p < 1 || spec.p >= spec.n) throw std::invalid_argument("need 1 <= p < n");
  if (sigma.size() != spec.p) throw std::invalid_argument("|sigma| must equal p");
  if (!sigma.subset_of(VarSet::full(spec.n)))
    throw std::invalid_argument("sigma not a subset of [n]");
}

Circuit sorted(Circuit c) {
  std::sort(c.begin(), c.end());
  return c;
}

std::vector<Circuit> canonical(std::vector<Circuit> cs) {
  for (Circuit& c : cs) std::sort(c.begin(), c.end());
  std::sort(cs.begin(), cs.end(), circuit_less);
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return cs;
}

// --- closed forms ---------------------------------------------------------

std::vector<Circuit> circuits_p1(int n) {
  Circuit all;
  for (int i = 1; i <= n; ++i) all.push_back(VarSet::single(i));
  return {all};
}

std::vector<Circuit> circuits_pn1(int n, VarSet sigma) {
  std::vector<Circuit> out;
  for (VarSet other : subsets_of_size(n, n - 1))
    if (other != sigma) out.push_back(sorted({sigma, other}));
  return canonical(std::move(out));
}

// Bonds E(A,B) of the complete graph with sigma = {a,b} straddling the parts.
std::vector<Circuit> circuits_bonds(int n, VarSet sigma) {
  const int a = sigma.min();
  const int b = sigma.max();
  std::vector<int> rest;
  for (int i = 1; i <= n; ++i)
    if (i != a && i != b) rest.push_back(i);
  std::vector<Circuit> out;
  const std::uint32_t count = 1u << rest.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    VarSet A = VarSet::single(a), B = VarSet::single(b);
    for (std::size_t i = 0; i < rest.size(); ++i)
      (mask & (1u << i)) ? A = A.with(rest[i]) : B = B.with(rest[i]);
    Circuit c;
    for (int x : A.members())
      for (int y : B.members()) c.push_back(VarSet::of({x, y}));
    out.push_back(sorted(std::move(c)));
  }
  return canonical(std::move(out));
}

// Complements of graph cycles of K_n through the edge [n] \ sigma.
std::vector<Circuit> circuits_cycle_complements(int n, VarSet sigma) {
  const VarSet edge = VarSet::full(n).minus(sigma);
  const int u = edge.min(), v = edge.max();
  std::vector<int> others;
  for (int i = 1; i <= n; ++i)
    if (i != u && i != v) others.push_back(i);

  std::vector<Circuit> out;
  std::vector<int> path;
  std::vector<bool> used(others.size(), false);
  // Each cycle through {u,v} is the edge plus a path u -> w1 -> ... -> wk -> v,
  // and the intermediate sequence read from the u side is unique to the cycle.
  auto emit = [&]() {
    Circuit c;
    auto complement_edge = [&](int x, int y) {
      return VarSet::full(n).minus(VarSet::of({x, y}));
    };
    c.push_back(complement_edge(u, v));
    c.push_back(complement_edge(u, path.front()));
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      c.push_back(complement_edge(path[i], path[i + 1]));
    c.push_back(complement_edge(path.back(), v));
    out.push_back(sorted(std::move(c)));
  };
  auto extend = [&](auto&& self) -> void {
    if (!path.empty()) emit();
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      path.push_back(others[i]);
      self(self);
      path.pop_back();
      used[i] = false;
    }
  };
  extend(extend);
  return canonical(std::move(out));
}

// --- generic search -------------------------------------------------------

// Search rows are int64: over a prime field they are residues; over the
// integers the echelon is maintained fraction-free (Bareiss), so every entry
// is a minor of the 0/±1 sign matrix and Hadamard keeps it far below 2^63.
using Row = std::vector<std::int64_t>;

std::size_t leading_index(const Row& row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return j;
  return row.size();
}

struct BruteSearch {
  const std::uint32_t mod;                // 0 = rationals via integer rows
  const std::vector<VarSet>& labels;      // ground rows, excluding sigma
  const std::vector<Row>& rows;           // matching labels
  const ExactMatrix& matrix;              // full M(n,p) over the field
  const std::vector<VarSet>& all_rows;    // row labels of matrix
  VarSet sigma;
  Row target;  // row of sigma
  std::vector<Circuit> found;

  // One fraction-free (or mod-p) elimination step against echelon row e,
  // dividing by the previous pivot value.
  void eliminate(Row& row, const Row& e, std::size_t lead, std::int64_t divisor) const {
    const std::int64_t a = e[lead], b = row[lead];
    if (mod) {
      if (b == 0) return;
      for (std::size_t j = 0; j < row.size(); ++j) {
        const __int128 v = static_cast<__int128>(a) * row[j] -
                           static_cast<__int128>(b) * e[j];
        row[j] = static_cast<std::int64_t>(((v % mod) + mod) % mod);
      }
      return;
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      const __int128 v = static_cast<__int128>(a) * row[j] -
                         static_cast<__int128>(b) * e[j];
      if (v % divisor != 0) throw std::logic_error("fraction-free elimination drift");
      row[j] = static_cast<std::int64_t>(v / divisor);
    }
  }

  // Reduce a row through the whole echelon, Bareiss divisor chain included.
  void reduce_through(Row& row, const std::vector<Row>& echelon,
                      const std::vector<std::size_t>& leads) const {
    std::int64_t divisor = 1;
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      eliminate(row, echelon[i], leads[i], divisor);
      divisor = echelon[i][leads[i]];
    }
  }

  // echelon: forward-eliminated rows of the chosen set.  chosen holds ground
  // indices; reduced_target is the sigma row pushed through the echelon.
  void dfs(std::size_t start, std::vector<Row>& echelon, std::vector<std::size_t>& leads,
           std::vector<std::size_t>& chosen, const Row& reduced_target) {
    for (std::size_t i = start; i < labels.size(); ++i) {
      Row red = rows[i];
      reduce_through(red, echelon, leads);
      const std::size_t lead = leading_index(red);
      if (lead == red.size()) continue;  // dependent on chosen: skip element

      Row t = reduced_target;
      eliminate(t, red, lead, echelon.empty() ? 1 : echelon.back()[leads.back()]);

      chosen.push_back(i);
      if (leading_index(t) == t.size()) {
        // sigma is in the span: the unique representation decides; no proper
        // extension can have full support, so the subtree is pruned either way.
        if (full_support(chosen)) {
          Circuit c;
          c.push_back(sigma);
          for (std::size_t k : chosen) c.push_back(labels[k]);
          found.push_back(sorted(std::move(c)));
        }
      } else {
        echelon.push_back(std::move(red));
        leads.push_back(lead);
        dfs(i + 1, echelon, leads, chosen, t);
        echelon.pop_back();
        leads.pop_back();
      }
      chosen.pop_back();
    }
  }

  bool full_support(const std::vector<std::size_t>& chosen) const {
    // Solve sum c_k * row(chosen_k) = row(sigma) over the field; the chosen
    // rows are independent so the solution is unique.
    const std::size_t width = matrix.cols();
    ExactMatrix system(matrix.field(), width, chosen.size());
    std::size_t sigma_row = std::find(all_rows.begin(), all_rows.end(), sigma) - all_rows.begin();
    std::vector<Scalar> rhs;
    rhs.reserve(width);
    for (std::size_t c = 0; c < width; ++c) rhs.push_back(matrix.at(sigma_row, c));
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      std::size_t r = std::find(all_rows.begin(), all_rows.end(), labels[chosen[k]]) -
                      all_rows.begin();
      for (std::size_t c = 0; c < width; ++c) system.set(c, k, matrix.at(r, c));
    }
    auto coeffs = solve(system, rhs);
    if (!coeffs) return false;
    for (const Scalar& c : *coeffs)
      if (c.is_zero()) return false;
    return true;
  }
};

}  // namespace

CircuitRoute circuit_route(int n, int p) {
  if (p == 1) return CircuitRoute::p1;
  if (p == n - 1) return CircuitRoute::pn1;
  if (p == 2) return CircuitRoute::p2_bonds;
  if (p == n - 2) return CircuitRoute::pn2_cycles;
  return CircuitRoute::brute;
}

ExactMatrix build_sign_matrix(const SignMatrixSpec& spec) {
  if (spec.p < 1 || spec.p >= spec.n) throw std::invalid_argument("need 1 <= p < n");
  validate(spec.field);
  const auto rows = subsets_of_size(spec.n, spec.p);
  const auto cols = subsets_of_size(spec.n, spec.p + 1);
  ExactMatrix m(spec.field, rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (rows[r].subset_of(cols[c]))
        m.set(r, c, sgn(cols[c], cols[c].minus(rows[r]).min()));
  return m;
}

bool circuit_less(const Circuit& a, const Circuit& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Circuit> circuits_through_brute(const SignMatrixSpec& spec, VarSet sigma) {
  require_valid(spec, sigma);
  const auto all_rows = subsets_of_size(spec.n, spec.p);
  if (all_rows.size() > 22)
    throw SizeCapError("circuit search too large: binom(n,p) = " +
                       std::to_string(all_rows.size()) + " > 22");
  const ExactMatrix m = build_sign_matrix(spec);

  std::vector<VarSet> labels;
  std::vector<Row> rows;
  Row target;
  for (std::size_t r = 0; r < all_rows.size(); ++r) {
    Row row;
    row.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(
          static_cast<std::int64_t>(boost::multiprecision::numerator(m.at(r, c).value())));
    if (all_rows[r] == sigma) {
      target = std::move(row);
    } else {
      labels.push_back(all_rows[r]);
      rows.push_back(std::move(row));
    }
  }

  BruteSearch search{spec.field.characteristic, labels,          rows, m,
                     all_rows,                  sigma,           std::move(target), {}};
  std::vector<Row> echelon;
  std::vector<std::size_t> leads, chosen;
  search.dfs(0, echelon, leads, chosen, search.target);
  return canonical(std::move(search.found));
}

namespace {

using CacheKey = std::tuple<int, int, std::uint32_t, std::uint32_t>;
std::map<CacheKey, std::vector<Circuit>> g_cache;
std::shared_mutex g_cache_mutex;

}  // namespace

std::vector<Circuit> circuits_through(const SignMatrixSpec& spec, VarSet sigma) {
  require_valid(spec, sigma);
  const CacheKey key{spec.n, spec.p, spec.field.characteristic, sigma.bits()};
  {
    std::shared_lock lock(g_cache_mutex);
    if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
  }
  std::vector<Circuit> result;
  switch (circuit_route(spec.n, spec.p)) {
    case CircuitRoute::p1:
      result = circuits_p1(spec.n);
      break;
    case CircuitRoute::pn1:
      result = circuits_pn1(spec.n, sigma);
      break;
    case CircuitRoute::p2_bonds:
      result = circuits_bonds(spec.n, sigma);
      break;
    case CircuitRoute::pn2_cycles:
      result = circuits_cycle_complements(spec.n, sigma);
      break;
    case CircuitRoute::brute:
      result = circuits_through_brute(spec, sigma);
      break;
  }
  std::unique_lock lock(g_cache_mutex);
  g_cache.emplace(key, result);
  return result;
}

}  // namespace koszul
