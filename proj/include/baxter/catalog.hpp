#pragma once

#include <map>
#include <string>

#include "baxter/matrix.hpp"

namespace baxter {

enum class Family { S1, S2, S3, S4, S5, S6, S7, TASEP_S, TASEP_T };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

struct invalid_instance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Division by a vanishing closed-form denominator; names the factor.
struct pole_error : std::runtime_error {
  pole_error(std::string f, const std::string& what) : std::runtime_error(what), factor(std::move(f)) {}
  std::string factor;
};

/// A named representation family with a concrete rational parameter
/// assignment. Parameter keys: "a".."e" for S1..S7; "rho<i>", "mu<i><j>"
/// for TASEP_S; "zeta<j>", "nu<i><j>" for TASEP_T.
struct FamilyInstance {
  Family family = Family::S1;
  std::size_t m = 2;
  std::map<std::string, Scalar> params;

  const Scalar& param(const std::string& key) const;
  void validate() const;
};

/// The catalog matrix of the instance: one of the seven 4x4 families,
/// or a TASEP-type m x m (x) m x m generator.
LocalOperator build_family(const FamilyInstance& spec);

/// sum over 1 <= i < j <= m of rho_i E_ii (x) E_jj + mu_ij E_ji (x) E_ij.
LocalOperator build_tasep_S(std::size_t m, const std::map<std::string, Scalar>& params);

/// sum over 1 <= i < j <= m of zeta_j E_ii (x) E_jj + nu_ij E_ji (x) E_ij.
LocalOperator build_tasep_T(std::size_t m, const std::map<std::string, Scalar>& params);

/// The closed-form braided R-matrix of family spec at (x, y). Throws
/// pole_error when one of the denominators vanishes.
Matrix closed_form_R(const FamilyInstance& spec, const Scalar& x, const Scalar& y);

}  // namespace baxter
