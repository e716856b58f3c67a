#pragma once

#include <cstddef>
#include <vector>

#include "baxter/scalar.hpp"

namespace baxter {

struct singular_error : std::runtime_error {
  singular_error(std::size_t row, const std::string& what)
      : std::runtime_error(what), pivot_row(row) {}
  std::size_t pivot_row;
};

struct dimension_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense square matrix over exact rationals, row-major, immutable in
/// spirit: operations return new values.
class Matrix {
 public:
  Matrix() : dim_(0) {}
  explicit Matrix(std::size_t dim) : dim_(dim), e_(dim * dim) {}

  static Matrix identity(std::size_t dim);
  static Matrix zero(std::size_t dim) { return Matrix(dim); }
  static Matrix diagonal(const std::vector<Scalar>& d);

  std::size_t dim() const { return dim_; }
  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Scalar trace() const;
  Scalar determinant() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.dim_ == b.dim_ && a.e_ == b.e_; }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t dim_;
  std::vector<Scalar> e_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Exact inverse by Gauss-Jordan elimination, first nonzero pivot.
/// Throws singular_error carrying the row where elimination failed.
Matrix mat_inverse(const Matrix& a);

/// Kronecker product; basis ordering lexicographic, first factor slowest.
Matrix kron(const Matrix& a, const Matrix& b);

/// Operator on the two-site space C^m (x) C^m.
struct LocalOperator {
  std::size_t m = 0;
  Matrix mat;

  LocalOperator() = default;
  LocalOperator(std::size_t local_dim, Matrix matrix);
};

/// Permutation operator P(u (x) v) = v (x) u on C^m (x) C^m.
LocalOperator permutation_op(std::size_t m);

/// Embeds op's two tensor slots at sites (a, b) of an n-site chain,
/// 0-based, a != b; identity on every other site.
Matrix embed_pair(const LocalOperator& op, std::size_t a, std::size_t b, std::size_t n);

/// Embeds op at adjacent sites (i, i+1), 1-based, 1 <= i <= n-1.
Matrix embed(const LocalOperator& op, std::size_t i, std::size_t n);

/// Trace over the first (auxiliary) factor: M on m^(n+1) -> result on m^n.
Matrix partial_trace_first(const Matrix& M, std::size_t m, std::size_t n);

enum class SymKind { inverse, transpose_flip, conjugate };

/// The closure transforms of the two-site relation: S^-1, the full
/// transpose of PSP, or (Q (x) Q) S (Q (x) Q)^-1.
LocalOperator sym_transform(const LocalOperator& S, SymKind kind, const Matrix* Q = nullptr);

enum class StKind { transpose, flip };

/// Maps an S-side generator image to a T-side one: full transpose, or PSP.
LocalOperator st_map(const LocalOperator& S, StKind kind);

}  // namespace baxter
