#include "baxter/catalog.hpp"

#include <array>

namespace baxter {

namespace {

constexpr std::array<const char*, 9> kNames = {"S1", "S2", "S3", "S4",     "S5",
                                               "S6", "S7", "TASEP_S", "TASEP_T"};

std::string rate_key(const char* stem, std::size_t i) { return stem + std::to_string(i); }
std::string rate_key(const char* stem, std::size_t i, std::size_t j) {
  return stem + std::to_string(i) + std::to_string(j);
}

const Scalar& rate(const std::map<std::string, Scalar>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw invalid_instance("missing rate '" + key + "'");
  return it->second;
}

}  // namespace

const char* family_name(Family f) { return kNames[static_cast<std::size_t>(f)]; }

Family family_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (name == kNames[i]) return static_cast<Family>(i);
  throw invalid_instance("unknown family '" + name + "'");
}

const Scalar& FamilyInstance::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end())
    throw invalid_instance(std::string(family_name(family)) + ": missing parameter '" + key + "'");
  return it->second;
}

void FamilyInstance::validate() const {
  switch (family) {
    case Family::S1:
    case Family::S2:
      for (const char* k : {"a", "b", "c", "d", "e"}) param(k);
      break;
    case Family::S3:
      for (const char* k : {"a", "b", "c", "d"}) param(k);
      if (param("c").is_zero()) throw invalid_instance("S3 requires c != 0");
      break;
    case Family::S4:
    case Family::S5:
    case Family::S6:
      for (const char* k : {"a", "b", "c", "d"}) param(k);
      break;
    case Family::S7:
      for (const char* k : {"a", "b", "c"}) param(k);
      break;
    case Family::TASEP_S:
      for (std::size_t i = 1; i < m; ++i) rate(params, rate_key("rho", i));
      for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j) rate(params, rate_key("mu", i, j));
      break;
    case Family::TASEP_T:
      for (std::size_t j = 2; j <= m; ++j) rate(params, rate_key("zeta", j));
      for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j) rate(params, rate_key("nu", i, j));
      break;
  }
  const bool tasep = family == Family::TASEP_S || family == Family::TASEP_T;
  if (!tasep && m != 2) throw invalid_instance("S1..S7 require m = 2");
  if (tasep && (m < 2 || m > 9)) throw invalid_instance("TASEP families support 2 <= m <= 9");
}

LocalOperator build_family(const FamilyInstance& spec) {
  spec.validate();
  if (spec.family == Family::TASEP_S) return build_tasep_S(spec.m, spec.params);
  if (spec.family == Family::TASEP_T) return build_tasep_T(spec.m, spec.params);

  const Scalar a = spec.param("a");
  const Scalar b = spec.params.count("b") ? spec.param("b") : Scalar(0);
  const Scalar c = spec.params.count("c") ? spec.param("c") : Scalar(0);
  Scalar d, e;
  if (spec.family != Family::S7) d = spec.param("d");
  if (spec.family == Family::S1 || spec.family == Family::S2) e = spec.param("e");

  Matrix s(4);
  switch (spec.family) {
    case Family::S1:
      s.at(0, 0) = a; s.at(1, 0) = b; s.at(1, 1) = c;
      s.at(2, 0) = d; s.at(2, 2) = a; s.at(3, 1) = e; s.at(3, 3) = a;
      break;
    case Family::S2:
      s.at(0, 0) = a; s.at(0, 1) = b; s.at(0, 2) = c; s.at(0, 3) = d;
      s.at(1, 1) = a; s.at(1, 3) = e;
      s.at(2, 2) = a; s.at(2, 3) = b + c - e;
      s.at(3, 3) = a;
      break;
    case Family::S3:
      s.at(0, 0) = a; s.at(1, 0) = b; s.at(1, 1) = a + b * (d - a) / c;
      s.at(2, 0) = c; s.at(2, 2) = d; s.at(3, 3) = a;
      break;
    case Family::S4:
      s.at(0, 0) = a; s.at(1, 1) = b; s.at(2, 1) = c; s.at(2, 2) = a; s.at(3, 3) = d;
      break;
    case Family::S5:
      s = Matrix::diagonal({a, b, c, d});
      break;
    case Family::S6:
      s.at(0, 0) = a; s.at(1, 0) = b; s.at(1, 1) = c; s.at(1, 3) = d;
      s.at(2, 2) = a; s.at(3, 1) = -b; s.at(3, 2) = b; s.at(3, 3) = a;
      break;
    case Family::S7:
      s.at(0, 0) = a; s.at(1, 0) = b; s.at(1, 1) = c; s.at(1, 2) = c - a;
      s.at(2, 2) = a; s.at(3, 3) = c;
      break;
    default:
      throw std::logic_error("unreachable");
  }
  return {2, std::move(s)};
}

LocalOperator build_tasep_S(std::size_t m, const std::map<std::string, Scalar>& params) {
  if (m < 2) throw invalid_instance("TASEP_S requires m >= 2");
  Matrix s(m * m);
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j) {
      // E_ii (x) E_jj and E_ji (x) E_ij, 1-based canonical units.
      s.at((i - 1) * m + (j - 1), (i - 1) * m + (j - 1)) = rate(params, rate_key("rho", i));
      s.at((j - 1) * m + (i - 1), (i - 1) * m + (j - 1)) = rate(params, rate_key("mu", i, j));
    }
  return {m, std::move(s)};
}

LocalOperator build_tasep_T(std::size_t m, const std::map<std::string, Scalar>& params) {
  if (m < 2) throw invalid_instance("TASEP_T requires m >= 2");
  Matrix t(m * m);
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j) {
      t.at((i - 1) * m + (j - 1), (i - 1) * m + (j - 1)) = rate(params, rate_key("zeta", j));
      t.at((j - 1) * m + (i - 1), (i - 1) * m + (j - 1)) = rate(params, rate_key("nu", i, j));
    }
  return {m, std::move(t)};
}

namespace {

Scalar checked_den(const Scalar& v, const std::string& factor) {
  if (v.is_zero())
    throw pole_error(factor, "closed-form denominator '" + factor + "' vanishes");
  return v;
}

}  // namespace

Matrix closed_form_R(const FamilyInstance& spec, const Scalar& x, const Scalar& y) {
  spec.validate();
  const Scalar one(1);
  const Scalar a = spec.param("a");
  const Scalar b = spec.params.count("b") ? spec.param("b") : Scalar(0);
  const Scalar c = spec.params.count("c") ? spec.param("c") : Scalar(0);
  const Scalar d = spec.params.count("d") ? spec.param("d") : Scalar(0);
  const Scalar e = spec.params.count("e") ? spec.param("e") : Scalar(0);
  const Scalar xmy = x - y;

  auto xa1 = [&] { return checked_den(x * a - one, "xa-1"); };
  auto xb1 = [&] { return checked_den(x * b - one, "xb-1"); };
  auto xc1 = [&] { return checked_den(x * c - one, "xc-1"); };
  auto xd1 = [&] { return checked_den(x * d - one, "xd-1"); };

  Matrix r(4);
  switch (spec.family) {
    case Family::S1: {
      const Scalar da = xa1(), dc = xc1();
      const Scalar ra = (y * a - one) / da;
      r.at(0, 0) = ra;
      r.at(1, 0) = b * xmy / (dc * da);
      r.at(1, 1) = (y * c - one) / dc;
      r.at(2, 0) = d * xmy / (da * da);
      r.at(2, 2) = ra;
      r.at(3, 0) = -(e * x * b * xmy) / (dc * da * da);
      r.at(3, 1) = e * xmy / (dc * da);
      r.at(3, 3) = ra;
      break;
    }
    case Family::S2: {
      const Scalar da = xa1();
      const Scalar ra = (y * a - one) / da;
      r.at(0, 0) = r.at(1, 1) = r.at(2, 2) = r.at(3, 3) = ra;
      r.at(0, 1) = b * xmy / (da * da);
      r.at(0, 2) = c * xmy / (da * da);
      r.at(0, 3) = xmy * (a * d * x - x * c * b - e * x * b - x * c * c + x * c * e - d) / (da * da * da);
      r.at(1, 3) = e * xmy / (da * da);
      r.at(2, 3) = (b + c - e) * xmy / (da * da);
      break;
    }
    case Family::S3: {
      const Scalar da = xa1(), dd = xd1();
      const Scalar q = checked_den(a * b * x - a * c * x - b * d * x + c, "abx-acx-bdx+c");
      r.at(0, 0) = (y * a - one) / da;
      r.at(1, 0) = -(b * c * xmy) / (da * q);
      r.at(1, 1) = (a * b * y - a * c * y - b * d * y + c) / q;
      r.at(2, 0) = c * xmy / (da * dd);
      r.at(2, 2) = (y * d - one) / dd;
      r.at(3, 3) = (y * a - one) / da;
      break;
    }
    case Family::S4: {
      const Scalar da = xa1(), db = xb1(), dd = xd1();
      r.at(0, 0) = r.at(2, 2) = (y * a - one) / da;
      r.at(1, 1) = (y * b - one) / db;
      r.at(2, 1) = c * xmy / (db * da);
      r.at(3, 3) = (y * d - one) / dd;
      break;
    }
    case Family::S5: {
      r.at(0, 0) = (y * a - one) / xa1();
      r.at(1, 1) = (y * b - one) / xb1();
      r.at(2, 2) = (y * c - one) / xc1();
      r.at(3, 3) = (y * d - one) / xd1();
      break;
    }
    case Family::S6: {
      auto norm = [&](const Scalar& u, const Scalar& v) {
        return (a * c + b * d) * u * v - a * u - c * v + one;
      };
      const Scalar da = xa1();
      const Scalar nxx = checked_den(norm(x, x), "n(x,x)");
      r.at(0, 0) = r.at(2, 2) = (y * a - one) / da;
      r.at(1, 0) = b * xmy / nxx;
      r.at(1, 1) = norm(x, y) / nxx;
      r.at(1, 2) = -(b * d * x * xmy) / (da * nxx);
      r.at(1, 3) = d * xmy / nxx;
      r.at(3, 0) = b * b * x * xmy / (da * nxx);
      r.at(3, 1) = -(b * xmy) / nxx;
      r.at(3, 2) = b * xmy * (x * c - one) / (da * nxx);
      // n is not symmetric; the lower-right diagonal entry carries the
      // arguments in the reversed order.
      r.at(3, 3) = norm(y, x) / nxx;
      break;
    }
    case Family::S7: {
      const Scalar da = xa1(), dc = xc1();
      r.at(0, 0) = r.at(2, 2) = (y * a - one) / da;
      r.at(1, 0) = b * xmy / (dc * da);
      r.at(1, 1) = (y * c - one) / dc;
      r.at(1, 2) = (c - a) * xmy / (dc * da);
      r.at(3, 3) = (y * c - one) / dc;
      break;
    }
    default:
      throw invalid_instance("closed_form_R is defined for families S1..S7 only");
  }
  return r;
}

}  // namespace baxter
