#pragma once

// L(chi_E)(z) = int_E exp(-i z . x) dx for complex z.

#include <span>

#include "pompeiu/euclidean_set.hpp"
#include "pompeiu/quadrature.hpp"

namespace pompeiu {

inline constexpr double kDefaultImagCap = 50.0;

/// Closed form: radial shapes through the bilinear square of z, polytopes
/// through the simplex formula, unions by summation. Throws ImaginaryPartCap
/// when some |Im z_k| exceeds `imag_cap`.
Complex fourier_laplace(const EuclideanSet& set, const ComplexVector& z, double imag_cap = kDefaultImagCap);

/// Same integral by adaptive quadrature; the independent cross-check.
Complex fourier_laplace_quadrature(const EuclideanSet& set, const ComplexVector& z, const QuadratureOptions& options = {});

/// Transform of a radial set re-centred at the origin, written as a function
/// of s = z . z. Throws NonRadial.
Complex radial_transform(const EuclideanSet& set, Complex s);

/// Divided difference exp[t_0, ..., t_m] (m <= 3 in practice). Clustered nodes
/// use the confluent Taylor expansion about their mean.
Complex exp_divided_difference(std::span<const Complex> t);

/// int over the simplex conv(v_0..v_n) of exp(-i z . x) dx.
Complex simplex_transform(const Simplex& simplex, const ComplexVector& z);

}  // namespace pompeiu
