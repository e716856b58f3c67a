#pragma once

#include "baxter/check.hpp"
#include "baxter/relations.hpp"

namespace baxter {

/// A periodic chain built from one two-site generator and one
/// inhomogeneity parameter z.
struct ChainSpec {
  LocalOperator S;
  std::size_t n = 2;
  Scalar z;
};

/// R(x,y) = Rcheck(x,y) P on the two-site space.
LocalOperator unbraided_R(const LocalOperator& S, const Scalar& x, const Scalar& y);

/// t(x|z) = tr_0 R_01(x,z) ... R_0n(x,z), auxiliary space first.
/// Rejects m^(n+1) > 1024.
Matrix transfer_matrix(const ChainSpec& spec, const Scalar& x);

/// h = S(1 - zS)^-1 = mobius(S, (0, 1, -z)).
LocalOperator hamiltonian_density(const LocalOperator& S, const Scalar& z);

/// H = sum_{j=1}^{n-1} h_{j,j+1} + h_{n,1}, periodic boundary; the wrap
/// term acts with h's first slot on site n and second slot on site 1.
Matrix hamiltonian(const ChainSpec& spec);

/// Exact d/dx t(x|z) at x = z, times t(z|z)^-1.
Matrix transfer_derivative(const ChainSpec& spec);

enum class HTransformKind { conjugate, transpose, flip, mobius_map };

/// The integrability-preserving moves on a Hamiltonian density.
LocalOperator integrable_transform(const LocalOperator& h, HTransformKind kind,
                                   const Matrix* Q = nullptr, const MobiusParams* p = nullptr);

}  // namespace baxter
