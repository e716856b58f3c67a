#include "baxter/matrix.hpp"

#include <string>

namespace baxter {

Matrix Matrix::identity(std::size_t dim) {
  Matrix I(dim);
  for (std::size_t i = 0; i < dim; ++i) I.at(i, i) = Scalar(1);
  return I;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Scalar Matrix::trace() const {
  Scalar s;
  for (std::size_t i = 0; i < dim_; ++i) s += at(i, i);
  return s;
}

Scalar Matrix::determinant() const {
  Matrix w(*this);
  const std::size_t n = dim_;
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && w.at(piv, col).is_zero()) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(w.at(piv, c), w.at(col, c));
      det = -det;
    }
    det *= w.at(col, col);
    const Scalar inv = w.at(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (w.at(r, col).is_zero()) continue;
      const Scalar f = w.at(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) w.at(r, c) -= f * w.at(col, c);
    }
  }
  return det;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.dim_ != b.dim_) throw dimension_error("matrix sum: dimension mismatch");
  Matrix r(a.dim_);
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.dim_ != b.dim_) throw dimension_error("matrix difference: dimension mismatch");
  Matrix r(a.dim_);
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim_ != b.dim_) throw dimension_error("matrix product: dimension mismatch");
  const std::size_t n = a.dim_;
  Matrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * b.at(k, j);
      }
    }
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix r(a.dim_);
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = s * a.e_[i];
  return r;
}

Matrix mat_inverse(const Matrix& a) {
  const std::size_t n = a.dim();
  Matrix w(a);
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && w.at(piv, col).is_zero()) ++piv;
    if (piv == n)
      throw singular_error(col, "singular matrix: no pivot in column " + std::to_string(col));
    if (piv != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(w.at(piv, c), w.at(col, c));
        std::swap(inv.at(piv, c), inv.at(col, c));
      }
    const Scalar pinv = w.at(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      w.at(col, c) *= pinv;
      inv.at(col, c) *= pinv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || w.at(r, col).is_zero()) continue;
      const Scalar f = w.at(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        w.at(r, c) -= f * w.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  Matrix r(na * nb);
  for (std::size_t ra = 0; ra < na; ++ra)
    for (std::size_t ca = 0; ca < na; ++ca) {
      if (a.at(ra, ca).is_zero()) continue;
      for (std::size_t rb = 0; rb < nb; ++rb)
        for (std::size_t cb = 0; cb < nb; ++cb) {
          if (b.at(rb, cb).is_zero()) continue;
          r.at(ra * nb + rb, ca * nb + cb) = a.at(ra, ca) * b.at(rb, cb);
        }
    }
  return r;
}

LocalOperator::LocalOperator(std::size_t local_dim, Matrix matrix)
    : m(local_dim), mat(std::move(matrix)) {
  if (mat.dim() != m * m)
    throw dimension_error("local operator: matrix dim " + std::to_string(mat.dim()) +
                          " != m^2 with m = " + std::to_string(m));
}

LocalOperator permutation_op(std::size_t m) {
  Matrix p(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) p.at(i * m + j, j * m + i) = Scalar(1);
  return {m, std::move(p)};
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Matrix embed_pair(const LocalOperator& op, std::size_t a, std::size_t b, std::size_t n) {
  if (a >= n || b >= n || a == b) throw dimension_error("embed_pair: bad site pair");
  const std::size_t m = op.m;
  const std::size_t dim = ipow(m, n);
  // Stride of site k in the lexicographic index (site 0 slowest).
  auto stride = [&](std::size_t k) { return ipow(m, n - 1 - k); };
  const std::size_t sa = stride(a), sb = stride(b);
  Matrix r(dim);
  for (std::size_t row = 0; row < dim; ++row) {
    const std::size_t ia = (row / sa) % m;
    const std::size_t ib = (row / sb) % m;
    const std::size_t base = row - ia * sa - ib * sb;
    for (std::size_t ja = 0; ja < m; ++ja)
      for (std::size_t jb = 0; jb < m; ++jb) {
        const Scalar& v = op.mat.at(ia * m + ib, ja * m + jb);
        if (v.is_zero()) continue;
        r.at(row, base + ja * sa + jb * sb) = v;
      }
  }
  return r;
}

Matrix embed(const LocalOperator& op, std::size_t i, std::size_t n) {
  if (i < 1 || i + 1 > n) throw dimension_error("embed: site out of range");
  return embed_pair(op, i - 1, i, n);
}

Matrix partial_trace_first(const Matrix& M, std::size_t m, std::size_t n) {
  const std::size_t inner = ipow(m, n);
  if (M.dim() != m * inner)
    throw dimension_error("partial_trace_first: expected dim m^(n+1)");
  Matrix r(inner);
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t i = 0; i < inner; ++i)
      for (std::size_t j = 0; j < inner; ++j)
        r.at(i, j) += M.at(t * inner + i, t * inner + j);
  return r;
}

LocalOperator sym_transform(const LocalOperator& S, SymKind kind, const Matrix* Q) {
  switch (kind) {
    case SymKind::inverse:
      return {S.m, mat_inverse(S.mat)};
    case SymKind::transpose_flip: {
      const Matrix p = permutation_op(S.m).mat;
      return {S.m, (p * S.mat * p).transpose()};
    }
    case SymKind::conjugate: {
      if (!Q || Q->dim() != S.m) throw dimension_error("conjugate: Q must be m x m");
      const Matrix qq = kron(*Q, *Q);
      return {S.m, qq * S.mat * mat_inverse(qq)};
    }
  }
  throw std::logic_error("unreachable");
}

LocalOperator st_map(const LocalOperator& S, StKind kind) {
  if (kind == StKind::transpose) return {S.m, S.mat.transpose()};
  const Matrix p = permutation_op(S.m).mat;
  return {S.m, p * S.mat * p};
}

}  // namespace baxter
