#pragma once

#include <functional>

#include "baxter/check.hpp"

namespace baxter {

/// R-matrix source evaluated lazily at spectral points, so the property
/// checkers run uniformly over engine-built and closed-form matrices.
using RMatrixFn = std::function<Matrix(const Scalar& x, const Scalar& y)>;

/// (1 - yS)(1 - xS)^-1 on the two-site space.
Matrix baxterise_sigma(const LocalOperator& S, const Scalar& x, const Scalar& y);

/// (1 - xT)(1 - yT)^-1; note the flip of the spectral parameters
/// relative to the sigma side.
Matrix baxterise_tau(const LocalOperator& T, const Scalar& x, const Scalar& y);

/// 1 - x(S12 + S23) + x^2 S23 S12 on the three-site space. Also checks
/// that the factored form (1 - xS23)(1 - xS12) agrees entrywise.
Matrix a_operator(const LocalOperator& S, const Scalar& x);

/// R12(x,y) R23(x,z) R12(y,z) = R23(y,z) R12(x,z) R23(x,y) on m^3.
CheckReport check_braided_ybe(const RMatrixFn& R, std::size_t m, const Scalar& x, const Scalar& y,
                              const Scalar& z);

/// R(x,y) R(y,x) = 1.
CheckReport check_unitarity(const RMatrixFn& R, const Scalar& x, const Scalar& y);

/// R(x,x) = 1.
CheckReport check_regularity(const RMatrixFn& R, const Scalar& x);

/// Embedded copies at sites 1 and 3 of a 4-site chain commute.
CheckReport check_locality(const RMatrixFn& R, std::size_t m, const Scalar& x, const Scalar& y,
                           const Scalar& z, const Scalar& w);

/// 1 + (z2 - z1)/(z1 - 1) g on the two-site space. Requires z1 != 1.
Matrix hecke_rmatrix(const LocalOperator& g, const Scalar& z1, const Scalar& z2);

/// R(x,z) = (1 - zS)(1 - xS)^-1 (1 - xT)(1 - zT)^-1, the product
/// construction for the TASEP pair.
Matrix product_rmatrix(const LocalOperator& S, const LocalOperator& T, const Scalar& x,
                       const Scalar& z);

}  // namespace baxter
