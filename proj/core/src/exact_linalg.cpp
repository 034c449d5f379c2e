#include "pompeiu/exact_linalg.hpp"

#include <cmath>
#include <utility>

namespace pompeiu {

std::size_t exact_rank(IntegerMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  Integer prev_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(pivot, c), m(rank, c));
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        // Exact division: Sylvester's identity guarantees divisibility.
        m(r, c) = (m(rank, col) * m(r, c) - m(r, col) * m(rank, c)) / prev_pivot;
      }
      m(r, col) = 0;
    }
    prev_pivot = m(rank, col);
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> exact_nullspace(RationalMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < cols; ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c) m(r, c) -= factor * m(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      v[pivot_cols[r]] = -m(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool rationalize(double x, long long max_denominator, double tolerance,
                 Rational& out) {
  if (!std::isfinite(x)) return false;
  // Continued-fraction convergents p_k / q_k.
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rem = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_real = std::floor(rem);
    if (std::fabs(a_real) > 1e15) break;
    const auto a = static_cast<long long>(a_real);
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    if (q2 > max_denominator) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    if (std::fabs(x - static_cast<double>(p1) / static_cast<double>(q1)) <=
        tolerance) {
      out = Rational(Integer(p1), Integer(q1));
      return true;
    }
    const double frac = rem - a_real;
    if (frac == 0.0) break;
    rem = 1.0 / frac;
  }
  return false;
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace pompeiu
