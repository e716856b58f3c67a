#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace baxter {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct division_by_zero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational number. Always kept in canonical form: positive
/// denominator, gcd(|num|, den) = 1, so operator== is value equality
/// and str() is a canonical key.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) {}
  Scalar(long num, long den);
  explicit Scalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "p" or "p/q" with optional leading '-'.
  static Scalar parse(std::string_view text);

  std::string str() const;

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar inverse() const;

  const mpq_class& raw() const { return v_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.v_ + b.v_)); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.v_ - b.v_)); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.v_ * b.v_)); }
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const { return Scalar(mpq_class(-v_)); }

  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  mpq_class v_;
};

}  // namespace baxter
