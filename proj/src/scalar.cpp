#include "baxter/scalar.hpp"

#include <cctype>
#include <ostream>

namespace baxter {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw division_by_zero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool valid_int(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw parse_error("malformed rational: '" + std::string(text) + "'");
  mpz_class q{std::string(den)};
  if (q == 0) throw division_by_zero("zero denominator in '" + std::string(text) + "'");
  mpq_class v(mpz_class{std::string(num)}, q);
  v.canonicalize();
  return Scalar(v);
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw division_by_zero("inverse of zero");
  return Scalar(mpq_class(1 / v_));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw division_by_zero("division by zero");
  return Scalar(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.v_; }

}  // namespace baxter
