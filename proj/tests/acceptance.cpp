// Acceptance suite: every identity is checked exactly over the
// rationals; one pass/fail line per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>

#include "baxter/integrability.hpp"
#include "helpers.hpp"

using namespace baxter;
using namespace baxter::testing;

namespace {

int g_failures = 0;

void report(int idx, const char* label, bool ok, double seconds) {
  std::printf("%s criterion %2d: %-55s (%.2fs)\n", ok ? "PASS" : "FAIL", idx, label, seconds);
  if (!ok) ++g_failures;
}

template <typename Fn>
void criterion(int idx, const char* label, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "criterion %d threw: %s\n", idx, e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(idx, label, ok, secs);
}

// 1. Each catalog family passes the cubic relation on 20 seeded draws.
bool classification_membership() {
  RationalSampler rng(1001);
  for (Family fam : kSevenFamilies)
    for (int t = 0; t < 20; ++t)
      if (!check_S_relation(build_family(random_instance(fam, 2, rng))).passed) return false;
  return true;
}

// 2. YBE, unitarity, regularity, locality at 10 random points per
//    family, plus the converse control on a generic non-solution.
bool baxterisation_suite() {
  RationalSampler rng(1002);
  for (Family fam : kSevenFamilies)
    for (int t = 0; t < 10; ++t) {
      const LocalOperator s = build_family(random_instance(fam, 2, rng));
      RMatrixFn R = [&](const Scalar& u, const Scalar& v) { return baxterise_sigma(s, u, v); };
      const Scalar x = admissible_point(rng, s), y = admissible_point(rng, s),
                   z = admissible_point(rng, s), w = admissible_point(rng, s);
      if (!check_braided_ybe(R, 2, x, y, z).passed) return false;
      if (!check_unitarity(R, x, y).passed) return false;
      if (!check_regularity(R, x).passed) return false;
      if (!check_locality(R, 2, x, y, z, w).passed) return false;
    }
  const LocalOperator g = generic_nonsolution();
  RMatrixFn R = [&](const Scalar& u, const Scalar& v) { return baxterise_sigma(g, u, v); };
  for (int t = 0; t < 10; ++t) {
    const Scalar x = admissible_point(rng, g), y = admissible_point(rng, g),
                 z = admissible_point(rng, g);
    if (!check_braided_ybe(R, 2, x, y, z).passed) return true;
  }
  return false;
}

// 3. Appendix closed forms equal the engine at 20 points per family.
bool appendix_cross_validation() {
  RationalSampler rng(1003);
  for (Family fam : kSevenFamilies)
    for (int t = 0; t < 20; ++t) {
      const FamilyInstance inst = random_instance(fam, 2, rng);
      const LocalOperator s = build_family(inst);
      bool compared = false;
      for (int tries = 0; tries < 200 && !compared; ++tries) {
        const Scalar x = admissible_point(rng, s);
        const Scalar y = admissible_point(rng, s);
        try {
          if (closed_form_R(inst, x, y) != baxterise_sigma(s, x, y)) return false;
          compared = true;
        } catch (const pole_error&) {
        }
      }
      if (!compared) return false;
    }
  return true;
}

// 4. [A(x), A(y)] = 0 on catalog families, nonzero on the generic
//    control, agreeing pass/fail with the YBE check at the same points.
bool a_operator_equivalence() {
  RationalSampler rng(1004);
  auto agree = [&](const LocalOperator& s, bool expect_pass) {
    const Scalar x = admissible_point(rng, s), y = admissible_point(rng, s),
                 z = admissible_point(rng, s);
    const bool comm_ok = commutator(a_operator(s, x), a_operator(s, y)).is_zero() &&
                         commutator(a_operator(s, x), a_operator(s, z)).is_zero();
    RMatrixFn R = [&](const Scalar& u, const Scalar& v) { return baxterise_sigma(s, u, v); };
    const bool ybe_ok = check_braided_ybe(R, 2, x, y, z).passed;
    return comm_ok == ybe_ok && ybe_ok == expect_pass;
  };
  for (Family fam : kSevenFamilies)
    for (int t = 0; t < 5; ++t)
      if (!agree(build_family(random_instance(fam, 2, rng)), true)) return false;
  bool generic_failed = false;
  for (int t = 0; t < 10 && !generic_failed; ++t)
    generic_failed = agree(generic_nonsolution(), false);
  return generic_failed;
}

// 5. Mobius and Lemma 2.1 closure; Lemma 2.2 equivalence both ways.
bool closure_suite() {
  RationalSampler rng(1005);
  for (Family fam : kSevenFamilies) {
    LocalOperator s = build_family(random_instance(fam, 2, rng));
    int maps_checked = 0;
    for (int tries = 0; maps_checked < 20 && tries < 500; ++tries) {
      const MobiusParams p{rng.small_rational(), rng.small_rational(), rng.small_rational()};
      try {
        if (!check_S_relation(mobius(s, p)).passed) return false;
        ++maps_checked;
      } catch (const singular_error&) {
      }
    }
    if (maps_checked < 20) return false;

    for (int tries = 0; s.mat.determinant().is_zero() && tries < 100; ++tries)
      s = build_family(random_instance(fam, 2, rng));
    if (s.mat.determinant().is_zero()) return false;
    if (!check_S_relation(sym_transform(s, SymKind::inverse)).passed) return false;
    if (!check_S_relation(sym_transform(s, SymKind::transpose_flip)).passed) return false;
    Matrix q(2);
    q.at(0, 0) = rng.small_rational();
    q.at(0, 1) = rng.small_rational();
    q.at(1, 0) = rng.small_rational();
    q.at(1, 1) = rng.small_rational_where(
        [&](const Scalar& v) { return !(q.at(0, 0) * v - q.at(0, 1) * q.at(1, 0)).is_zero(); });
    if (!check_S_relation(sym_transform(s, SymKind::conjugate, &q)).passed) return false;
  }
  for (const LocalOperator& s :
       {build_family(random_instance(Family::S2, 2, rng)), generic_nonsolution()}) {
    const bool passes = check_S_relation(s).passed;
    if (check_T_relation(st_map(s, StKind::transpose)).passed != passes) return false;
    if (check_T_relation(st_map(s, StKind::flip)).passed != passes) return false;
  }
  return true;
}

// 6. Hecke closed form equals the engine at 20 points; check_hecke passes.
bool hecke_quotient() {
  const LocalOperator g = idempotent_g();
  if (!check_hecke(g, Scalar(0)).passed) return false;
  RationalSampler rng(1006);
  for (int t = 0; t < 20; ++t) {
    const Scalar z1 = rng.small_rational_where([](const Scalar& s) { return s != Scalar(1); });
    const Scalar z2 = rng.small_rational();
    if (hecke_rmatrix(g, z1, z2) != baxterise_sigma(g, z1, z2)) return false;
  }
  return true;
}

// 7. TASEP relation checks for m = 2 and 3; S singular in every draw.
bool tasep_representations() {
  RationalSampler rng(1007);
  for (std::size_t m : {2u, 3u})
    for (int t = 0; t < 10; ++t) {
      const LocalOperator s = build_family(random_instance(Family::TASEP_S, m, rng));
      if (!check_S_relation(s).passed) return false;
      if (!s.mat.determinant().is_zero()) return false;
      const LocalOperator tt = build_family(random_instance(Family::TASEP_T, m, rng));
      if (!check_T_relation(tt).passed) return false;
    }
  return true;
}

// 8. Product R-matrix with and without the rate condition.
bool product_rmatrix_suite() {
  RationalSampler rng(1008);
  for (std::size_t m : {2u, 3u}) {
    FamilyInstance inst = random_instance(Family::TASEP_S, m, rng);
    std::map<std::string, Scalar> trates;
    for (std::size_t j = 2; j <= m; ++j)
      trates.emplace("zeta" + std::to_string(j), rng.small_rational());
    for (std::size_t i = 1; i < m; ++i)
      for (std::size_t j = i + 1; j <= m; ++j) {
        const std::string ij = std::to_string(i) + std::to_string(j);
        trates.emplace("nu" + ij, inst.params.at("mu" + ij) *
                                      trates.at("zeta" + std::to_string(j)) /
                                      inst.params.at("rho" + std::to_string(i)));
      }
    const LocalOperator S = build_family(inst);
    const LocalOperator T = build_tasep_T(m, trates);
    if (!commutator(T.mat, S.mat).is_zero()) return false;
    RMatrixFn R = [&](const Scalar& u, const Scalar& v) { return product_rmatrix(S, T, u, v); };
    auto point = [&] {
      return rng.small_rational_where([&](const Scalar& s) {
        const Matrix id = Matrix::identity(S.mat.dim());
        return !(id - s * S.mat).determinant().is_zero() &&
               !(id - s * T.mat).determinant().is_zero();
      });
    };
    for (int t = 0; t < 10; ++t) {
      const Scalar x = point(), y = point(), z = point();
      if (!check_braided_ybe(R, m, x, y, z).passed) return false;
      if (!check_unitarity(R, x, y).passed) return false;
    }
    // perturb one nu: [T,S] becomes nonzero and YBE breaks somewhere
    auto broken = trates;
    broken.at("nu12") = broken.at("nu12") + Scalar(1);
    const LocalOperator Tb = build_tasep_T(m, broken);
    if (commutator(Tb.mat, S.mat).is_zero()) return false;
    RMatrixFn Rb = [&](const Scalar& u, const Scalar& v) { return product_rmatrix(S, Tb, u, v); };
    bool any_fail = false;
    for (int t = 0; t < 10 && !any_fail; ++t) {
      const Scalar x = point(), y = point(), z = point();
      any_fail = !check_braided_ybe(Rb, m, x, y, z).passed;
    }
    if (!any_fail) return false;
  }
  return true;
}

// 9. Transfer commutativity, H = (dt/dx) t^-1, [H, t] = 0, shift^n = 1.
bool integrability_layer() {
  RationalSampler rng(1009);
  for (Family fam : kSevenFamilies)
    for (std::size_t n : {2u, 3u})
      for (int t = 0; t < 5; ++t) {
        const LocalOperator s = build_family(random_instance(fam, 2, rng));
        const Scalar z = admissible_point(rng, s);
        const ChainSpec spec{s, n, z};
        const Scalar x = admissible_point(rng, s), y = admissible_point(rng, s);
        const Matrix tx = transfer_matrix(spec, x);
        if (!commutator(tx, transfer_matrix(spec, y)).is_zero()) return false;
        const Matrix H = hamiltonian(spec);
        if (transfer_derivative(spec) != H) return false;
        if (!commutator(H, tx).is_zero()) return false;
        const Matrix shift = transfer_matrix(spec, z);
        Matrix power = shift;
        for (std::size_t k = 1; k < n; ++k) power = power * shift;
        if (!power.is_identity()) return false;
      }
  return true;
}

// 10. Byte-identical scan output for a fixed seed; exit-code contract.
bool cli_determinism(const char* cli) {
  auto capture = [&](const std::string& args, int& code) {
    const std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return std::string();
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    code = WEXITSTATUS(pclose(pipe));
    return out;
  };
  int c1 = -1, c2 = -1, c3 = -1, c4 = -1, c5 = -1;
  const std::string s1 = capture("scan --seed 42 --trials 20", c1);
  const std::string s2 = capture("scan --seed 42 --trials 20", c2);
  if (s1.empty() || s1 != s2 || c1 != 0 || c2 != 0) return false;
  capture("verify --family S4 --params a=1,b=2,c=3,d=4 --checks relation", c3);
  capture("verify --family S3 --params a=1,b=2,c=0,d=3", c4);
  capture("scan --max-n 5", c5);
  return c3 == 0 && c4 == 2 && c5 == 2;
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;

  criterion(1, "classification membership (7 families x 20 draws)", classification_membership);
  criterion(2, "Baxterisation property suite + converse control", baxterisation_suite);
  criterion(3, "appendix closed forms vs engine (7 x 20 points)", appendix_cross_validation);
  criterion(4, "A-operator commutativity equivalent to YBE", a_operator_equivalence);
  criterion(5, "Mobius and symmetry closure, both directions", closure_suite);
  criterion(6, "Hecke closed form vs engine (20 points)", hecke_quotient);
  criterion(7, "TASEP representations, m = 2 and 3", tasep_representations);
  criterion(8, "product R-matrix with/without rate condition", product_rmatrix_suite);
  criterion(9, "transfer commutativity and Hamiltonian identity", integrability_layer);
  if (cli) {
    criterion(10, "CLI determinism and exit-code contract", [&] { return cli_determinism(cli); });
  } else {
    report(10, "CLI determinism (no CLI path given)", false, 0.0);
  }

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
