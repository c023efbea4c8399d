#include <doctest.h>

#include "helpers.hpp"

using namespace koszul;
using namespace testutil;

TEST_CASE("sector ideals") {
  const MonomialIdeal I3 = fixture_I3();
  CHECK(sector_ideal(I3, VarSet::of({1, 2}), VarSet::of({1, 2})) == I3);
  // x3 [I : x1] = x3 (x3) = (x3^2)
  CHECK(sector_ideal(I3, VarSet::of({1, 2}), VarSet::of({2, 3})) ==
        make_ideal(3, {{0, 0, 2}}));

  // J with sigma' disjoint from sigma: x3x4 [J : x1x2] = x3x4 (x3,x4)
  const MonomialIdeal J = fixture_J();
  CHECK(sector_ideal(J, VarSet::of({1, 2}), VarSet::of({3, 4})) ==
        make_ideal(4, {{0, 0, 2, 1}, {0, 0, 1, 2}}));

  CHECK_THROWS_AS(sector_ideal(J, VarSet::of({1, 2}), VarSet::of({3})),
                  std::invalid_argument);
}

TEST_CASE("boundary ideal closed forms and the paper values") {
  const MonomialIdeal I3 = fixture_I3();
  const auto b12 = boundary_ideal(I3, VarSet::of({1, 2}), QQ);
  CHECK(b12.ideal == make_ideal(3, {{1, 0, 1}, {0, 1, 1}, {0, 0, 2}}));
  CHECK(b12.route == BoundaryRoute::pn1);

  const MonomialIdeal J = fixture_J();
  const auto bJ = boundary_ideal(J, VarSet::of({1, 2}), QQ);
  // J + (x3,x4)^2
  const MonomialIdeal vars34 = make_ideal(4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(bJ.ideal == sum(J, product(vars34, vars34)));
  CHECK(bJ.route == BoundaryRoute::p2_bonds);
  CHECK(bJ.circuits_used.size() == 4);

  // sigma = [n] short-circuits to I
  const auto top = boundary_ideal(J, VarSet::full(4), QQ);
  CHECK(top.ideal == J);
  CHECK(top.route == BoundaryRoute::top);

  // |sigma| = 1
  const auto b1 = boundary_ideal(J, VarSet::of({1}), QQ);
  CHECK(b1.ideal == sum(J, scale(VarSet::of({2, 3, 4}), colon(J, mono({1, 0, 0, 0})))));
  CHECK(b1.route == BoundaryRoute::p1);
  CHECK(b1.ideal == make_ideal(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1},
                                   {0, 0, 2, 0}, {0, 0, 1, 1}, {0, 0, 0, 2}}));

  // n = 4, |sigma| = 3 is the displayed I + x4[I : (x1,x2,x3)]
  const auto b123 = boundary_ideal(J, VarSet::of({1, 2, 3}), QQ);
  CHECK(b123.ideal == sum(J, scale(mono({0, 0, 0, 1}), colon(J, VarSet::of({1, 2, 3})))));

  CHECK_THROWS_AS(boundary_ideal(J, VarSet(), QQ), std::invalid_argument);
}

TEST_CASE("closed forms match the generic circuit assembly") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 3 + trial % 3;
    const MonomialIdeal I = random_ideal(rng, n, 2, 4);
    for (int p = 1; p < n; ++p) {
      const auto sigmas = subsets_of_size(n, p);
      const VarSet sigma = sigmas[trial % sigmas.size()];
      const auto dispatched = boundary_ideal(I, sigma, QQ);
      const auto brute = circuits_through_brute({n, p, QQ}, sigma);
      CHECK(dispatched.ideal == boundary_ideal_from_circuits(I, sigma, brute));
    }
  }
}

TEST_CASE("four-variable formulas agree with the circuit route") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 25; ++trial) {
    const MonomialIdeal I = random_ideal(rng, 4, 2, 5);
    for (const VarSet sigma :
         {VarSet::of({1}), VarSet::of({1, 2}), VarSet::of({2, 4}), VarSet::of({1, 2, 3})}) {
      CHECK(boundary_ideal_four_var_formula(I, sigma) == boundary_ideal(I, sigma, QQ).ideal);
    }
  }
}

TEST_CASE("monomial-boundary ideals sit inside every boundary ideal") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 2;
    const MonomialIdeal I = random_ideal(rng, n, 2, 4);
    for (int p = 1; p < n; ++p) {
      const auto sigmas = subsets_of_size(n, p);
      const VarSet sigma = sigmas[(trial * 3) % sigmas.size()];
      const MonomialIdeal lower =
          sum(I, scale(VarSet::full(n).minus(sigma), colon(I, sigma)));
      CHECK(contained_in(lower, boundary_ideal(I, sigma, QQ).ideal));
    }
  }
}

TEST_CASE("boundary ideals are permutation equivariant") {
  std::mt19937 rng(24);
  const std::vector<int> pi{2, 4, 1, 3};
  for (int trial = 0; trial < 15; ++trial) {
    const MonomialIdeal I = random_ideal(rng, 4, 2, 4);
    for (int p = 1; p <= 3; ++p) {
      const auto sigmas = subsets_of_size(4, p);
      const VarSet sigma = sigmas[trial % sigmas.size()];
      CHECK(boundary_ideal(permute(I, pi), sigma.permuted(pi), QQ).ideal ==
            permute(boundary_ideal(I, sigma, QQ).ideal, pi));
    }
  }
}

TEST_CASE("membership test for monomial cycles") {
  const MonomialIdeal I3 = fixture_I3();
  CHECK_FALSE(is_boundary_monomial_cycle(I3, mono({0, 0, 1}), VarSet::of({1, 2}), QQ));
  CHECK(is_boundary_monomial_cycle(I3, mono({0, 0, 2}), VarSet::of({1, 2}), QQ));
  // x1 e12 is not even a cycle
  CHECK_THROWS_AS(is_boundary_monomial_cycle(I3, mono({1, 0, 0}), VarSet::of({1, 2}), QQ),
                  std::invalid_argument);
}

TEST_CASE("projective-plane cycle is a boundary only away from characteristic 2") {
  const MonomialIdeal rp2 = fixture_rp2();
  const Monomial x456 = mono({0, 0, 0, 1, 1, 1});
  const VarSet sigma = VarSet::of({1, 2, 3});
  CHECK_FALSE(is_boundary_monomial_cycle(rp2, x456, sigma, GF2));
  CHECK(is_boundary_monomial_cycle(rp2, x456, sigma, QQ));
}

TEST_CASE("membership verdicts match the strand oracle") {
  // the small, always-on slice of the oracle equivalence; the acceptance
  // suite runs the full sweep
  std::mt19937 rng(25);
  for (int trial = 0; trial < 10; ++trial) {
    const MonomialIdeal I = random_ideal(rng, 3, 2, 4);
    for (const FieldSpec f : {QQ, GF2}) {
      for (int p = 1; p <= 3; ++p)
        for (VarSet sigma : subsets_of_size(3, p)) {
          const MonomialIdeal cycles = colon(I, sigma);
          for (const Monomial& g : cycles.generators())
            for (int extra = 0; extra <= 3; ++extra) {
              const Monomial u = extra == 0 ? g : g * Monomial::variable(3, extra);
              if (I.contains(u) || u.degree() > 6) continue;
              const bool by_ideal = is_boundary_monomial_cycle(I, u, sigma, f);
              const bool by_oracle =
                  boundary_check(I, chain_term(sigma, u, Scalar::one(f)), f).is_boundary;
              CHECK(by_ideal == by_oracle);
            }
        }
    }
  }
}
