#include "baxter/baxterise.hpp"

#include "baxter/catalog.hpp"

namespace baxter {

Matrix baxterise_sigma(const LocalOperator& S, const Scalar& x, const Scalar& y) {
  const Matrix id = Matrix::identity(S.mat.dim());
  return (id - y * S.mat) * mat_inverse(id - x * S.mat);
}

Matrix baxterise_tau(const LocalOperator& T, const Scalar& x, const Scalar& y) {
  const Matrix id = Matrix::identity(T.mat.dim());
  return (id - x * T.mat) * mat_inverse(id - y * T.mat);
}

Matrix a_operator(const LocalOperator& S, const Scalar& x) {
  const Matrix id2 = Matrix::identity(S.m);
  const Matrix s12 = kron(S.mat, id2);
  const Matrix s23 = kron(id2, S.mat);
  const Matrix id = Matrix::identity(s12.dim());
  const Matrix poly = id - x * (s12 + s23) + (x * x) * (s23 * s12);
  const Matrix factored = (id - x * s23) * (id - x * s12);
  if (poly != factored) throw std::logic_error("a_operator: expanded and factored forms differ");
  return poly;
}

CheckReport check_braided_ybe(const RMatrixFn& R, std::size_t m, const Scalar& x, const Scalar& y,
                              const Scalar& z) {
  const Matrix id = Matrix::identity(m);
  auto lift12 = [&](const Matrix& r) { return kron(r, id); };
  auto lift23 = [&](const Matrix& r) { return kron(id, r); };
  const Matrix lhs = lift12(R(x, y)) * lift23(R(x, z)) * lift12(R(y, z));
  const Matrix rhs = lift23(R(y, z)) * lift12(R(x, z)) * lift23(R(x, y));
  return CheckReport::of_equal(lhs, rhs, "braided YBE");
}

CheckReport check_unitarity(const RMatrixFn& R, const Scalar& x, const Scalar& y) {
  const Matrix p = R(x, y) * R(y, x);
  return CheckReport::of_equal(p, Matrix::identity(p.dim()), "unitarity R(x,y)R(y,x)=1");
}

CheckReport check_regularity(const RMatrixFn& R, const Scalar& x) {
  const Matrix r = R(x, x);
  return CheckReport::of_equal(r, Matrix::identity(r.dim()), "regularity R(x,x)=1");
}

CheckReport check_locality(const RMatrixFn& R, std::size_t m, const Scalar& x, const Scalar& y,
                           const Scalar& z, const Scalar& w) {
  const LocalOperator r1{m, R(x, y)};
  const LocalOperator r3{m, R(z, w)};
  const Matrix e1 = embed(r1, 1, 4);
  const Matrix e3 = embed(r3, 3, 4);
  return CheckReport::of_zero(commutator(e1, e3), "locality [R1(x,y), R3(z,w)]");
}

Matrix hecke_rmatrix(const LocalOperator& g, const Scalar& z1, const Scalar& z2) {
  if (z1 == Scalar(1)) throw pole_error("z1-1", "Hecke R-matrix pole at z1 = 1");
  const Scalar coeff = (z2 - z1) / (z1 - Scalar(1));
  return Matrix::identity(g.mat.dim()) + coeff * g.mat;
}

Matrix product_rmatrix(const LocalOperator& S, const LocalOperator& T, const Scalar& x,
                       const Scalar& z) {
  return baxterise_sigma(S, x, z) * baxterise_tau(T, x, z);
}

}  // namespace baxter
