#include <doctest.h>

#include "baxter/matrix.hpp"
#include "baxter/sampling.hpp"
#include "helpers.hpp"

using namespace baxter;

namespace {

Matrix random_matrix(std::size_t dim, RationalSampler& rng) {
  Matrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = rng.small_rational();
  return m;
}

Matrix unit(std::size_t dim, std::size_t r, std::size_t c) {
  Matrix m(dim);
  m.at(r, c) = Scalar(1);
  return m;
}

}  // namespace

TEST_CASE("mat_inverse") {
  CHECK(mat_inverse(Matrix::identity(4)) == Matrix::identity(4));
  const Matrix d = Matrix::diagonal({Scalar(2), Scalar(3), Scalar(5), Scalar(7)});
  CHECK(mat_inverse(d) ==
        Matrix::diagonal({Scalar(1, 2), Scalar(1, 3), Scalar(1, 5), Scalar(1, 7)}));

  Matrix ones(4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) ones.at(r, c) = Scalar(1);
  CHECK_THROWS_AS(mat_inverse(ones), singular_error);

  RationalSampler rng(11);
  for (int t = 0; t < 10; ++t) {
    const Matrix a = random_matrix(5, rng);
    if (a.determinant().is_zero()) continue;
    const Matrix inv = mat_inverse(a);
    CHECK(a * inv == Matrix::identity(5));
    CHECK(inv * a == Matrix::identity(5));
  }
}

TEST_CASE("kron placement and associativity") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(4));
  // E11 (x) E22 -> single 1 at row 2, col 2 (1-based)
  CHECK(kron(unit(2, 0, 0), unit(2, 1, 1)) == unit(4, 1, 1));
  // E21 (x) E12 -> single 1 at row 3, col 2
  CHECK(kron(unit(2, 1, 0), unit(2, 0, 1)) == unit(4, 2, 1));

  RationalSampler rng(3);
  const Matrix a = random_matrix(2, rng), b = random_matrix(2, rng), c = random_matrix(2, rng);
  CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  // mixed-product rule
  const Matrix a2 = random_matrix(2, rng), b2 = random_matrix(2, rng);
  CHECK(kron(a * a2, b * b2) == kron(a, b) * kron(a2, b2));
}

TEST_CASE("permutation operator") {
  const Matrix p = permutation_op(2).mat;
  Matrix expect(4);
  expect.at(0, 0) = expect.at(1, 2) = expect.at(2, 1) = expect.at(3, 3) = Scalar(1);
  CHECK(p == expect);
  CHECK(p * p == Matrix::identity(4));

  RationalSampler rng(5);
  const Matrix a = random_matrix(2, rng), b = random_matrix(2, rng);
  CHECK(p * kron(a, b) * p == kron(b, a));

  const Matrix p3 = permutation_op(3).mat;
  CHECK(p3 * p3 == Matrix::identity(9));
}

TEST_CASE("embed") {
  RationalSampler rng(9);
  const LocalOperator s{2, random_matrix(4, rng)};
  CHECK(embed(s, 1, 2) == s.mat);
  CHECK(embed(s, 1, 3) == kron(s.mat, Matrix::identity(2)));
  CHECK(embed(s, 2, 3) == kron(Matrix::identity(2), s.mat));
  CHECK(commutator(embed(s, 1, 4), embed(s, 3, 4)).is_zero());
  CHECK_THROWS_AS(embed(s, 4, 4), dimension_error);
  CHECK_THROWS_AS(embed(s, 0, 4), dimension_error);
}

TEST_CASE("partial_trace_first") {
  RationalSampler rng(13);
  const Matrix a = random_matrix(2, rng);
  const Matrix b = random_matrix(4, rng);
  CHECK(partial_trace_first(kron(a, b), 2, 2) == a.trace() * b);
  CHECK(partial_trace_first(Matrix::identity(8), 2, 2) == Scalar(2) * Matrix::identity(4));
  CHECK_THROWS_AS(partial_trace_first(Matrix::identity(6), 2, 2), dimension_error);

  // tr_0 P01 P02 on three qubits reduces to the two-site permutation
  const LocalOperator p = permutation_op(2);
  const Matrix prod = embed_pair(p, 0, 1, 3) * embed_pair(p, 0, 2, 3);
  CHECK(partial_trace_first(prod, 2, 2) == p.mat);
}

TEST_CASE("sym_transform") {
  RationalSampler rng(17);
  const LocalOperator s{2, random_matrix(4, rng)};

  const Matrix q = Matrix::identity(2);
  CHECK(sym_transform(s, SymKind::conjugate, &q).mat == s.mat);
  CHECK(sym_transform(sym_transform(s, SymKind::transpose_flip), SymKind::transpose_flip).mat ==
        s.mat);

  const LocalOperator d{2, Matrix::diagonal({Scalar(2), Scalar(3), Scalar(5), Scalar(7)})};
  CHECK(sym_transform(d, SymKind::inverse).mat ==
        Matrix::diagonal({Scalar(1, 2), Scalar(1, 3), Scalar(1, 5), Scalar(1, 7)}));
}

TEST_CASE("st_map") {
  using baxter::testing::make_inst;
  const LocalOperator tasep = build_tasep_S(
      2, {{"rho1", Scalar(1)}, {"mu12", Scalar(1)}});
  const Matrix flipped = st_map(tasep, StKind::flip).mat;
  Matrix expect(4);
  expect.at(2, 2) = expect.at(1, 2) = Scalar(1);
  CHECK(flipped == expect);

  RationalSampler rng(19);
  const LocalOperator s{2, random_matrix(4, rng)};
  CHECK(st_map(st_map(s, StKind::flip), StKind::flip).mat == s.mat);

  Matrix sym(4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = r; c < 4; ++c) sym.at(r, c) = sym.at(c, r) = rng.small_rational();
  CHECK(st_map(LocalOperator{2, sym}, StKind::transpose).mat == sym);
}
