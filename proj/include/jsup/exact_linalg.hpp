#pragma once

// Dense exact linear algebra over the rationals. Integer matrices are reduced
// with fraction-free (Bareiss) Gauss-Jordan elimination; anything else goes
// through rational Gauss-Jordan. Pivots are taken as the first nonzero entry
// in column order, so echelon forms and nullspace bases are canonical.

#include <cstddef>
#include <span>
#include <vector>

#include "jsup/numeric.hpp"

namespace jsup {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const BigRational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<BigRational> column(std::size_t c) const;

  bool is_integral() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRational> data_;
};

struct EchelonForm {
  ExactMatrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivot_columns; // one per nonzero row, ascending
  std::size_t rank() const { return pivot_columns.size(); }
};

enum class EliminationRoute { automatic, fraction_free, rational };

/// `fraction_free` requires an integer matrix.
EchelonForm reduced_echelon(const ExactMatrix& m, EliminationRoute route = EliminationRoute::automatic);

std::size_t rank(const ExactMatrix& m);

/// Columns form the canonical basis of {v : m v = 0}: one column per free
/// variable, equal to 1 on that variable and 0 on the other free variables.
ExactMatrix nullspace(const ExactMatrix& m, EliminationRoute route = EliminationRoute::automatic);

/// Throws parameter_mismatch when v.size() != m.cols().
std::vector<BigRational> mat_vec(const ExactMatrix& m, std::span<const BigRational> v);

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix transpose(const ExactMatrix& m);

}  // namespace jsup
