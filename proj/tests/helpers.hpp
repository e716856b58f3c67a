#pragma once

#include "baxter/baxterise.hpp"
#include "baxter/catalog.hpp"
#include "baxter/relations.hpp"
#include "baxter/sampling.hpp"

namespace baxter::testing {

inline const std::vector<Family> kSevenFamilies = {Family::S1, Family::S2, Family::S3, Family::S4,
                                                   Family::S5, Family::S6, Family::S7};

inline FamilyInstance random_instance(Family fam, std::size_t m, RationalSampler& rng) {
  FamilyInstance inst;
  inst.family = fam;
  inst.m = m;
  switch (fam) {
    case Family::S1:
    case Family::S2:
      for (const char* k : {"a", "b", "c", "d", "e"}) inst.params.emplace(k, rng.small_rational());
      break;
    case Family::S7:
      for (const char* k : {"a", "b", "c"}) inst.params.emplace(k, rng.small_rational());
      break;
    case Family::TASEP_S:
      for (std::size_t i = 1; i < m; ++i)
        inst.params.emplace("rho" + std::to_string(i), rng.small_rational());
      for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j)
          inst.params.emplace("mu" + std::to_string(i) + std::to_string(j), rng.small_rational());
      break;
    case Family::TASEP_T:
      for (std::size_t j = 2; j <= m; ++j)
        inst.params.emplace("zeta" + std::to_string(j), rng.small_rational());
      for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j)
          inst.params.emplace("nu" + std::to_string(i) + std::to_string(j), rng.small_rational());
      break;
    default:
      for (const char* k : {"a", "b", "c", "d"}) inst.params.emplace(k, rng.small_rational());
  }
  return inst;
}

/// Spectral point with 1 - sS invertible.
inline Scalar admissible_point(RationalSampler& rng, const LocalOperator& op) {
  return rng.small_rational_where([&](const Scalar& s) {
    const Matrix id = Matrix::identity(op.mat.dim());
    return !(id - s * op.mat).determinant().is_zero();
  });
}

inline FamilyInstance make_inst(Family fam, std::initializer_list<std::pair<const char*, Scalar>> ps,
                                std::size_t m = 2) {
  FamilyInstance inst;
  inst.family = fam;
  inst.m = m;
  for (const auto& [k, v] : ps) inst.params.emplace(k, v);
  return inst;
}

/// The 4x4 matrix with entries 1..16 row-major; a generic non-solution.
inline LocalOperator generic_nonsolution() {
  Matrix m(4);
  long v = 1;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = Scalar(v++);
  return {2, std::move(m)};
}

/// The idempotent Hecke generator: S4 with (a,b,c,d) = (0,1,3,0).
inline LocalOperator idempotent_g() {
  return build_family(make_inst(Family::S4, {{"a", Scalar(0)}, {"b", Scalar(1)}, {"c", Scalar(3)}, {"d", Scalar(0)}}));
}

}  // namespace baxter::testing
