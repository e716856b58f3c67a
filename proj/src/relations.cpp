#include "baxter/relations.hpp"

namespace baxter {

MobiusParams MobiusParams::compose(const MobiusParams& inner) const {
  // [[b1, a1], [g1, 1]] * [[b2, a2], [g2, 1]], then renormalize the
  // bottom-right entry to 1.
  const Scalar b = beta * inner.beta + alpha * inner.gamma;
  const Scalar a = beta * inner.alpha + alpha;
  const Scalar g = gamma * inner.beta + inner.gamma;
  const Scalar d = gamma * inner.alpha + Scalar(1);
  return {a / d, b / d, g / d};
}

CheckReport check_S_relation(const LocalOperator& S) {
  const Matrix id = Matrix::identity(S.m);
  const Matrix s12 = kron(S.mat, id);
  const Matrix s23 = kron(id, S.mat);
  return CheckReport::of_zero(commutator(s23 * s12, s12 + s23), "[S23 S12, S12+S23]");
}

CheckReport check_T_relation(const LocalOperator& T) {
  const Matrix id = Matrix::identity(T.m);
  const Matrix t12 = kron(T.mat, id);
  const Matrix t23 = kron(id, T.mat);
  return CheckReport::of_zero(commutator(t12 * t23, t12 + t23), "[T12 T23, T12+T23]");
}

CheckReport check_chain_relations(const std::vector<Matrix>& ops, std::size_t n, std::size_t m,
                                  ChainConvention conv) {
  if (ops.size() + 1 != n) throw dimension_error("chain relations: need n-1 generators");
  std::size_t dim = 1;
  for (std::size_t k = 0; k < n; ++k) dim *= m;
  for (const auto& g : ops)
    if (g.dim() != dim) throw dimension_error("chain relations: generator dim != m^n");

  for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
    const Matrix& a = ops[i];
    const Matrix& b = ops[i + 1];
    const Matrix prod = conv == ChainConvention::sigma ? b * a : a * b;
    auto rep = CheckReport::of_zero(commutator(prod, a + b),
                                    "cubic relation at i=" + std::to_string(i + 1));
    if (!rep.passed) return rep;
  }
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 2; j < ops.size(); ++j) {
      auto rep = CheckReport::of_zero(commutator(ops[i], ops[j]),
                                      "distance commutation [s" + std::to_string(i + 1) + ", s" +
                                          std::to_string(j + 1) + "]");
      if (!rep.passed) return rep;
    }
  return CheckReport::pass();
}

LocalOperator mobius(const LocalOperator& S, const MobiusParams& p) {
  const Matrix id = Matrix::identity(S.mat.dim());
  const Matrix resolvent = id + p.gamma * S.mat;
  return {S.m, (p.alpha * id + p.beta * S.mat) * mat_inverse(resolvent)};
}

CheckReport check_hecke(const LocalOperator& g, const Scalar& xi) {
  const Matrix local = g.mat * g.mat - g.mat - xi * Matrix::identity(g.mat.dim());
  auto rep = CheckReport::of_zero(local, "g^2 - g - xi");
  if (!rep.passed) return rep;
  const Matrix id = Matrix::identity(g.m);
  const Matrix g12 = kron(g.mat, id);
  const Matrix g23 = kron(id, g.mat);
  return CheckReport::of_equal(g12 * g23 * g12, g23 * g12 * g23, "braid relation");
}

}  // namespace baxter
