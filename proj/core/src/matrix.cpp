#include "koszul/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace koszul {

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(field)) {
  validate(field);
}

ExactMatrix transpose(const ExactMatrix& m) {
  ExactMatrix t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t.set(c, r, m.at(r, c));
  return t;
}

namespace {

struct Rref {
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan with first-nonzero pivoting; deterministic by construction.
Rref reduce(const ExactMatrix& m) {
  Rref out;
  out.rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Scalar> row;
    row.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    out.rows.push_back(std::move(row));
  }
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && out.rows[pivot][c].is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(out.rows[lead], out.rows[pivot]);
    const Scalar inv = out.rows[lead][c].inverse();
    for (std::size_t j = c; j < m.cols(); ++j) out.rows[lead][j] *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || out.rows[r][c].is_zero()) continue;
      const Scalar factor = out.rows[r][c];
      for (std::size_t j = c; j < m.cols(); ++j)
        out.rows[r][j] -= factor * out.rows[lead][j];
    }
    out.pivot_cols.push_back(c);
    ++lead;
  }
  return out;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) { return reduce(m).pivot_cols.size(); }

std::size_t nullity(const ExactMatrix& m) { return m.cols() - rank(m); }

std::optional<std::vector<Scalar>> solve(const ExactMatrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  ExactMatrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m.at(r, c));
    aug.set(r, m.cols(), b[r]);
  }
  const Rref rref = reduce(aug);
  for (std::size_t c : rref.pivot_cols)
    if (c == m.cols()) return std::nullopt;  // pivot in the augmented column: inconsistent
  std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
  for (std::size_t i = 0; i < rref.pivot_cols.size(); ++i)
    x[rref.pivot_cols[i]] = rref.rows[i][m.cols()];
  return x;
}

std::vector<std::vector<Scalar>> nullspace(const ExactMatrix& m) {
  const Rref rref = reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rref.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
    v[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < rref.pivot_cols.size(); ++i)
      v[rref.pivot_cols[i]] = -rref.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Scalar> multiply(const ExactMatrix& m, std::span<const Scalar> x) {
  if (x.size() != m.cols()) throw std::invalid_argument("multiply: vector length mismatch");
  std::vector<Scalar> y(m.rows(), Scalar::zero(m.field()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero() && !x[c].is_zero()) y[r] += m.at(r, c) * x[c];
  return y;
}

}  // namespace koszul
