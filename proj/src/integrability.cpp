#include "baxter/integrability.hpp"

#include "baxter/baxterise.hpp"

namespace baxter {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

void guard_dims(std::size_t m, std::size_t n) {
  if (ipow(m, n + 1) > 1024)
    throw dimension_error("transfer matrix: m^(n+1) exceeds the 1024 guard");
}

}  // namespace

LocalOperator unbraided_R(const LocalOperator& S, const Scalar& x, const Scalar& y) {
  return {S.m, baxterise_sigma(S, x, y) * permutation_op(S.m).mat};
}

Matrix transfer_matrix(const ChainSpec& spec, const Scalar& x) {
  const std::size_t m = spec.S.m, n = spec.n;
  guard_dims(m, n);
  const LocalOperator r = unbraided_R(spec.S, x, spec.z);
  Matrix prod = Matrix::identity(ipow(m, n + 1));
  for (std::size_t k = 1; k <= n; ++k) prod = prod * embed_pair(r, 0, k, n + 1);
  return partial_trace_first(prod, m, n);
}

LocalOperator hamiltonian_density(const LocalOperator& S, const Scalar& z) {
  return mobius(S, MobiusParams{Scalar(0), Scalar(1), -z});
}

Matrix hamiltonian(const ChainSpec& spec) {
  const LocalOperator h = hamiltonian_density(spec.S, spec.z);
  const std::size_t n = spec.n;
  Matrix H = embed_pair(h, n - 1, 0, n);  // wrap term: slots on sites (n, 1)
  for (std::size_t j = 1; j + 1 <= n; ++j) H = H + embed(h, j, n);
  return H;
}

Matrix transfer_derivative(const ChainSpec& spec) {
  const std::size_t m = spec.S.m, n = spec.n;
  guard_dims(m, n);
  const LocalOperator p = permutation_op(m);
  // d/dx R(x,z)|_{x=z} = h P, since dRcheck/dx at the regular point is h.
  const LocalOperator hp{m, hamiltonian_density(spec.S, spec.z).mat * p.mat};

  const std::size_t aux_dim = ipow(m, n + 1);
  Matrix dt(ipow(m, n));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix prod = Matrix::identity(aux_dim);
    for (std::size_t l = 1; l <= n; ++l)
      prod = prod * embed_pair(l == k ? hp : p, 0, l, n + 1);
    dt = dt + partial_trace_first(prod, m, n);
  }
  Matrix t_reg = transfer_matrix(spec, spec.z);
  return dt * mat_inverse(t_reg);
}

LocalOperator integrable_transform(const LocalOperator& h, HTransformKind kind, const Matrix* Q,
                                   const MobiusParams* p) {
  switch (kind) {
    case HTransformKind::conjugate:
      return sym_transform(h, SymKind::conjugate, Q);
    case HTransformKind::transpose:
      return st_map(h, StKind::transpose);
    case HTransformKind::flip:
      return st_map(h, StKind::flip);
    case HTransformKind::mobius_map:
      if (!p) throw std::invalid_argument("mobius transform needs parameters");
      return mobius(h, *p);
  }
  throw std::logic_error("unreachable");
}

}  // namespace baxter
