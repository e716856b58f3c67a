#pragma once

#include <optional>
#include <string>

#include "baxter/matrix.hpp"

namespace baxter {

/// Outcome of an exact identity check. On failure, witness holds the
/// first nonzero residual entry in row-major order (0-based indices).
struct CheckReport {
  struct Witness {
    std::size_t row = 0;
    std::size_t col = 0;
    Scalar residual;
    std::string desc;
  };

  bool passed = true;
  std::optional<Witness> witness;

  static CheckReport pass() { return {}; }
  static CheckReport fail(std::size_t row, std::size_t col, Scalar residual, std::string desc) {
    CheckReport r;
    r.passed = false;
    r.witness = Witness{row, col, std::move(residual), std::move(desc)};
    return r;
  }

  /// Pass iff M is exactly zero; otherwise the first nonzero entry.
  static CheckReport of_zero(const Matrix& M, const std::string& desc);
  /// Pass iff A == B exactly; witness is the first differing entry of A - B.
  static CheckReport of_equal(const Matrix& A, const Matrix& B, const std::string& desc);
};

inline CheckReport CheckReport::of_zero(const Matrix& M, const std::string& desc) {
  for (std::size_t r = 0; r < M.dim(); ++r)
    for (std::size_t c = 0; c < M.dim(); ++c)
      if (!M.at(r, c).is_zero()) return fail(r, c, M.at(r, c), desc);
  return pass();
}

inline CheckReport CheckReport::of_equal(const Matrix& A, const Matrix& B, const std::string& desc) {
  return of_zero(A - B, desc);
}

}  // namespace baxter
