#pragma once

#include <koszul/boundary.hpp>
#include <koszul/chain.hpp>
#include <koszul/errors.hpp>
#include <koszul/golod.hpp>
#include <koszul/homology.hpp>
#include <koszul/ideal.hpp>
#include <koszul/ideal_io.hpp>
#include <koszul/linquot.hpp>
#include <koszul/matroid.hpp>
#include <koszul/symmetric.hpp>

#include <random>
#include <vector>

namespace testutil {

using namespace koszul;

inline const FieldSpec QQ{0};
inline const FieldSpec GF2{2};
inline const FieldSpec GF3{3};

inline Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

inline MonomialIdeal make_ideal(int n, std::vector<std::vector<int>> exps) {
  std::vector<Monomial> gens;
  for (auto& e : exps) gens.push_back(Monomial(std::move(e)));
  return MonomialIdeal(n, std::move(gens));
}

// J = (x1x3, x1x4, x2x3, x2x4), the recurring example.
inline MonomialIdeal fixture_J() {
  return make_ideal(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
}

// (x1x3, x2x3) in three variables.
inline MonomialIdeal fixture_I3() { return make_ideal(3, {{1, 0, 1}, {0, 1, 1}}); }

// Stanley-Reisner ideal of the 6-vertex triangulation of the projective
// plane: minimal non-faces 123,124,135,146,156,236,245,256,345,346.
inline MonomialIdeal fixture_rp2() {
  auto tri = [](int a, int b, int c) {
    std::vector<int> e(6, 0);
    e[a - 1] = e[b - 1] = e[c - 1] = 1;
    return Monomial(std::move(e));
  };
  return MonomialIdeal(6, {tri(1, 2, 3), tri(1, 2, 4), tri(1, 3, 5), tri(1, 4, 6), tri(1, 5, 6),
                           tri(2, 3, 6), tri(2, 4, 5), tri(2, 5, 6), tri(3, 4, 5), tri(3, 4, 6)});
}

// (x1x3, x1x4, x2x3, x2x4, x5^2) in five variables.
inline MonomialIdeal fixture_five() {
  return make_ideal(5, {{1, 0, 1, 0, 0}, {1, 0, 0, 1, 0}, {0, 1, 1, 0, 0}, {0, 1, 0, 1, 0},
                        {0, 0, 0, 0, 2}});
}

// The 16-generator orbit ideal of {(3,0,0,0), (2,1,0,0)}.
inline MonomialIdeal fixture_sixteen() {
  return ideal_from_partitions({4, {Partition({3}), Partition({2, 1})}});
}

inline MonomialIdeal random_ideal(std::mt19937& rng, int n, int max_exp, int max_gens,
                                  int min_degree = 1) {
  std::uniform_int_distribution<int> gen_count(1, max_gens);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::vector<Monomial> gens;
  const int target = gen_count(rng);
  while (static_cast<int>(gens.size()) < target) {
    std::vector<int> e(n);
    int deg = 0;
    for (int i = 0; i < n; ++i) deg += (e[i] = exp(rng));
    if (deg < min_degree) continue;
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(n, std::move(gens));
}

// Random reduced chain with small scalars; may be empty.
inline Chain random_chain(std::mt19937& rng, const MonomialIdeal& I, int p, FieldSpec field,
                          int max_exp = 2, int terms = 3) {
  const auto sigmas = subsets_of_size(I.vars(), p);
  std::uniform_int_distribution<std::size_t> pick(0, sigmas.size() - 1);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Chain c(p);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(I.vars());
    for (int i = 0; i < I.vars(); ++i) e[i] = exp(rng);
    Monomial m(std::move(e));
    if (I.contains(m)) continue;
    c.add(sigmas[pick(rng)], m, Scalar::of(field, coeff(rng)));
  }
  return c;
}

inline std::vector<int> identity_perm(int n) {
  std::vector<int> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = i + 1;
  return pi;
}

}  // namespace testutil
