#pragma once

#include "koszul/field.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace koszul {

// Dense matrix over an exact field.  Every matrix built by this project has
// entries in {-1, 0, 1}; elimination keeps coefficient growth trivial.
class ExactMatrix {
 public:
  ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v) { a_[r * cols_ + c] = std::move(v); }
  void set(std::size_t r, std::size_t c, long long v) { set(r, c, Scalar::of(field_, v)); }

  bool operator==(const ExactMatrix&) const = default;

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

ExactMatrix transpose(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

// cols - rank
std::size_t nullity(const ExactMatrix& m);

// Some x with m*x = b when the system is consistent (free variables pinned to
// zero, pivots chosen first-nonzero-row: the witness is deterministic).
// Throws std::invalid_argument on a length mismatch.
std::optional<std::vector<Scalar>> solve(const ExactMatrix& m, std::span<const Scalar> b);

// Canonical kernel basis from the reduced row echelon form, one vector per
// free column, in column order.
std::vector<std::vector<Scalar>> nullspace(const ExactMatrix& m);

// m * x
std::vector<Scalar> multiply(const ExactMatrix& m, std::span<const Scalar> x);

}  // namespace koszul
