#pragma once

// Dense exact linear algebra for the small matrices that show up in the
// finite decision procedures (at most a few dozen rows).

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pompeiu {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = DenseMatrix<Integer>;
using RationalMatrix = DenseMatrix<Rational>;

/// Rank by fraction-free (Bareiss) elimination; every intermediate entry is a
/// minor of the input, so no rational arithmetic is needed.
std::size_t exact_rank(IntegerMatrix m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column of the
/// reduced row echelon form. Empty result means the kernel is trivial.
std::vector<std::vector<Rational>> exact_nullspace(RationalMatrix m);

/// Best rational approximation with denominator <= max_denominator, accepted
/// only when it reproduces `x` to within `tolerance`.
bool rationalize(double x, long long max_denominator, double tolerance,
                 Rational& out);

std::string to_string(const Rational& q);

}  // namespace pompeiu
