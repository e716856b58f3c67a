#pragma once

#include <vector>

#include "baxter/check.hpp"

namespace baxter {

/// Parameters of the map S -> (alpha + beta S)(1 + gamma S)^-1.
struct MobiusParams {
  Scalar alpha;
  Scalar beta;
  Scalar gamma;

  /// Composition q after p, via the product of 2x2 parameter matrices
  /// [[beta, alpha], [gamma, 1]].
  MobiusParams compose(const MobiusParams& inner) const;
};

/// [S23 S12, S12 + S23] = 0 on the three-site space.
CheckReport check_S_relation(const LocalOperator& S);

/// [T12 T23, T12 + T23] = 0 on the three-site space.
CheckReport check_T_relation(const LocalOperator& T);

enum class ChainConvention { sigma, tau };

/// Full generator relations on an n-site chain: the cubic relation for
/// each adjacent pair (in the given convention) and commutation at
/// distance > 1. ops has n-1 entries, each of dim m^n.
CheckReport check_chain_relations(const std::vector<Matrix>& ops, std::size_t n, std::size_t m,
                                  ChainConvention conv = ChainConvention::sigma);

/// Applies the Mobius map to a representation. Throws singular_error if
/// 1 + gamma S is not invertible.
LocalOperator mobius(const LocalOperator& S, const MobiusParams& p);

/// g^2 = g + xi on the local space, and the braid relation
/// g12 g23 g12 = g23 g12 g23 on the three-site space.
CheckReport check_hecke(const LocalOperator& g, const Scalar& xi);

}  // namespace baxter
