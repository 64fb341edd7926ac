#include "jsup/exact_linalg.hpp"

#include <string>
#include <utility>

#include "jsup/error.hpp"

namespace jsup {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<BigRational> ExactMatrix::column(std::size_t c) const {
  std::vector<BigRational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool ExactMatrix::is_integral() const {
  for (const auto& q : data_) {
    if (q.get_den() != 1) return false;
  }
  return true;
}

namespace {

// Gauss-Jordan over Z without fractions. Rows with denominators are first
// scaled by their lcm, which leaves the row space unchanged. After the k-th pivot every entry is
// a k x k minor of the input, so each update divides exactly by the previous
// pivot; on exit every pivot row holds d * (its RREF row) for a common d.
EchelonForm fraction_free_echelon(const ExactMatrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  std::vector<BigInteger> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    BigInteger den = 1;
    for (std::size_t c = 0; c < cols; ++c) den = lcm(den, BigInteger(input(r, c).get_den()));
    for (std::size_t c = 0; c < cols; ++c) {
      a[r * cols + c] = input(r, c).get_num() * (den / input(r, c).get_den());
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> BigInteger& { return a[r * cols + c]; };

  std::vector<std::size_t> pivots;
  BigInteger previous = 1;
  BigInteger tmp;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    std::size_t p = prow;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != prow) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(prow, j));
    }
    const BigInteger pivot = at(prow, c);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == prow) continue;
      const BigInteger factor = at(r, c);
      // Rows below the pivot are zero left of c; rows above still carry
      // entries in skipped columns that must be rescaled.
      for (std::size_t j = (r < prow ? 0 : c + 1); j < cols; ++j) {
        if (j == c || (at(r, j) == 0 && (factor == 0 || at(prow, j) == 0))) continue;
        // at(r,j) = (pivot * at(r,j) - factor * at(prow,j)) / previous
        mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), at(r, j).get_mpz_t());
        if (factor != 0) mpz_submul(tmp.get_mpz_t(), factor.get_mpz_t(), at(prow, j).get_mpz_t());
        mpz_divexact(at(r, j).get_mpz_t(), tmp.get_mpz_t(), previous.get_mpz_t());
      }
      at(r, c) = 0;
    }
    // Earlier pivot entries scale from previous to pivot.
    for (std::size_t k = 0; k < pivots.size(); ++k) at(k, pivots[k]) = pivot;
    pivots.push_back(c);
    previous = pivot;
    ++prow;
  }

  EchelonForm out{ExactMatrix(rows, cols), pivots};
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (at(r, c) == 0) continue;
      BigRational q(at(r, c), previous);
      q.canonicalize();
      out.reduced(r, c) = q;
    }
  }
  return out;
}

EchelonForm rational_echelon(const ExactMatrix& input) {
  ExactMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  BigRational tmp;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    std::size_t p = prow;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != prow) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(prow, j));
    }
    const BigRational inv = 1 / m(prow, c);
    for (std::size_t j = c; j < cols; ++j) m(prow, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == prow || m(r, c) == 0) continue;
      const BigRational factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (m(prow, j) == 0) continue;
        tmp = factor * m(prow, j);
        m(r, j) -= tmp;
      }
    }
    pivots.push_back(c);
    ++prow;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

EchelonForm reduced_echelon(const ExactMatrix& m, EliminationRoute route) {
  switch (route) {
    case EliminationRoute::rational:
      return rational_echelon(m);
    case EliminationRoute::fraction_free:
      return fraction_free_echelon(m);
    case EliminationRoute::automatic:
      break;
  }
  return m.is_integral() ? fraction_free_echelon(m) : rational_echelon(m);
}

std::size_t rank(const ExactMatrix& m) { return reduced_echelon(m).rank(); }

ExactMatrix nullspace(const ExactMatrix& m, EliminationRoute route) {
  const EchelonForm ef = reduced_echelon(m, route);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : ef.pivot_columns) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  ExactMatrix basis(cols, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    basis(fc, k) = 1;
    for (std::size_t r = 0; r < ef.pivot_columns.size(); ++r) {
      const BigRational& e = ef.reduced(r, fc);
      if (e != 0) basis(ef.pivot_columns[r], k) = -e;
    }
  }
  return basis;
}

std::vector<BigRational> mat_vec(const ExactMatrix& m, std::span<const BigRational> v) {
  if (v.size() != m.cols()) {
    throw Error(ErrorCode::parameter_mismatch, "mat_vec: matrix has " + std::to_string(m.cols()) +
                                                   " columns but vector has " + std::to_string(v.size()) + " entries");
  }
  std::vector<BigRational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigRational s = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0 && v[c] != 0) s += m(r, c) * v[c];
    }
    out[r] = s;
  }
  return out;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::parameter_mismatch, "multiply: inner dimensions differ");
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b(k, c) != 0) out(r, c) += a(r, k) * b(k, c);
      }
    }
  }
  return out;
}

ExactMatrix transpose(const ExactMatrix& m) {
  ExactMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  }
  return out;
}

}  // namespace jsup
