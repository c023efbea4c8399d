#include <doctest.h>

#include "helpers.hpp"

#include <koszul/matrix.hpp>

using namespace koszul;
using namespace testutil;

namespace {

ExactMatrix identity(FieldSpec f, std::size_t n) {
  ExactMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ExactMatrix random_matrix(std::mt19937& rng, FieldSpec f, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-2, 2);
  ExactMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, entry(rng));
  return m;
}

// Independent row-reduction oracle over the rationals with machine-int
// fractions; fine for the tiny matrices it is pointed at.
std::size_t oracle_rank(std::vector<std::vector<std::pair<long long, long long>>> rows) {
  auto norm = [](std::pair<long long, long long>& f) {
    if (f.first == 0) f.second = 1;
    if (f.second < 0) {
      f.first = -f.first;
      f.second = -f.second;
    }
  };
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].first == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].first == 0) continue;
      // row_r -= (row_r[c]/row_rank[c]) * row_rank
      const auto [an, ad] = rows[r][c];
      const auto [bn, bd] = rows[rank][c];
      for (std::size_t j = 0; j < cols; ++j) {
        auto [xn, xd] = rows[r][j];
        auto [yn, yd] = rows[rank][j];
        // x - (a/b) * y with a = an/ad, b = bn/bd
        const long long num = xn * ad * bn * yd - an * bd * yn * xd;
        const long long den = xd * ad * bn * yd;
        rows[r][j] = {num, den};
        norm(rows[r][j]);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("rank basics") {
  CHECK(rank(ExactMatrix(QQ, 0, 0)) == 0);
  CHECK(rank(identity(QQ, 3)) == 3);

  // the one-column matrix M(4,3) has rank 1
  const ExactMatrix m43 = build_sign_matrix({4, 3, QQ});
  CHECK(m43.rows() == 4);
  CHECK(m43.cols() == 1);
  CHECK(rank(m43) == 1);
}

TEST_CASE("solve basics") {
  const FieldSpec f = QQ;
  std::vector<Scalar> b{Scalar::of(f, 2), Scalar::of(f, -5), Scalar::of(f, 7)};
  auto x = solve(identity(f, 3), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  ExactMatrix zero(f, 2, 3);
  std::vector<Scalar> nonzero{Scalar::of(f, 1), Scalar::of(f, 0)};
  CHECK_FALSE(solve(zero, nonzero).has_value());

  std::vector<Scalar> short_b{Scalar::of(f, 1)};
  CHECK_THROWS_AS((void)solve(zero, short_b), std::invalid_argument);
}

TEST_CASE("no preimage for x3 e12 over (x1x3, x2x3)") {
  // the strand system of the boundary-test proof at multidegree (1,1,1)
  const MonomialIdeal I = fixture_I3();
  const ExactMatrix m = strand_differential(I, 3, mono({1, 1, 1}), QQ);
  REQUIRE(m.rows() == 3);  // strand basis {12},{13},{23}
  REQUIRE(m.cols() == 1);
  std::vector<Scalar> b{Scalar::one(QQ), Scalar::zero(QQ), Scalar::zero(QQ)};
  CHECK_FALSE(solve(m, b).has_value());
}

TEST_CASE("nullity basics") {
  CHECK(nullity(identity(QQ, 3)) == 0);

  ExactMatrix rel(GF2, 1, 2);
  rel.set(0, 0, 1);
  rel.set(0, 1, 1);
  CHECK(nullity(rel) == 1);
}

TEST_CASE("nullity of a Koszul strand matrix matches an independent row reduction") {
  const MonomialIdeal J = fixture_J();
  const ExactMatrix d2 = strand_differential(J, 2, mono({1, 1, 1, 0}), QQ);
  std::vector<std::vector<std::pair<long long, long long>>> rows(
      d2.rows(), std::vector<std::pair<long long, long long>>(d2.cols(), {0, 1}));
  for (std::size_t r = 0; r < d2.rows(); ++r)
    for (std::size_t c = 0; c < d2.cols(); ++c) {
      const auto& v = d2.at(r, c).value();
      rows[r][c] = {static_cast<long long>(boost::multiprecision::numerator(v)),
                    static_cast<long long>(boost::multiprecision::denominator(v))};
    }
  CHECK(nullity(d2) == d2.cols() - oracle_rank(rows));
  CHECK(nullity(d2) == 2);
}

TEST_CASE("elimination invariants over several fields") {
  std::mt19937 rng(20240917);
  for (const FieldSpec f : {QQ, GF2, GF3}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + trial % 5, cols = 1 + (trial * 7) % 6;
      const ExactMatrix m = random_matrix(rng, f, rows, cols);
      CHECK(rank(m) == rank(transpose(m)));
      CHECK(nullity(m) + rank(m) == cols);

      std::vector<Scalar> b;
      for (std::size_t r = 0; r < rows; ++r)
        b.push_back(Scalar::of(f, static_cast<int>((trial + r) % 5) - 2));
      if (auto x = solve(m, b)) {
        const auto mx = multiply(m, *x);
        CHECK(mx == b);
      }
      for (const auto& v : nullspace(m)) {
        const auto mv = multiply(m, v);
        for (const auto& entry : mv) CHECK(entry.is_zero());
      }
    }
  }
}

TEST_CASE("field validation") {
  CHECK_THROWS_AS(ExactMatrix(FieldSpec{4}, 1, 1), std::invalid_argument);
  CHECK_NOTHROW(ExactMatrix(FieldSpec{13}, 1, 1));
  CHECK(Scalar::of(GF3, 5) == Scalar::of(GF3, -1));
  CHECK(Scalar::of(GF3, 2).inverse() == Scalar::of(GF3, 2));
  CHECK(Scalar::of(QQ, 3) / Scalar::of(QQ, 2) == Scalar::of(QQ, BigRational(3, 2)));
}
