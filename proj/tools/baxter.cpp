#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <tuple>
#include <iostream>
#include <set>
#include <sstream>

#include "baxter/baxterise.hpp"
#include "baxter/catalog.hpp"
#include "baxter/integrability.hpp"
#include "baxter/json_io.hpp"
#include "baxter/relations.hpp"
#include "baxter/sampling.hpp"

using namespace baxter;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::map<std::string, Scalar> parse_params(const std::string& text) {
  std::map<std::string, Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw invalid_instance("bad parameter '" + item + "', want key=value");
    out.emplace(item.substr(0, eq), Scalar::parse(item.substr(eq + 1)));
  }
  return out;
}

FamilyInstance make_instance(const std::string& family, const std::string& params, std::size_t m,
                             const std::string& spec_file) {
  if (!spec_file.empty()) {
    std::ifstream in(spec_file);
    if (!in) throw invalid_instance("cannot open spec file '" + spec_file + "'");
    return instance_from_json(json::parse(in));
  }
  FamilyInstance f;
  f.family = family_from_name(family);
  f.m = (f.family == Family::TASEP_S || f.family == Family::TASEP_T) ? m : 2;
  f.params = parse_params(params);
  f.validate();
  return f;
}

bool is_tau_side(Family f) { return f == Family::TASEP_T; }

RMatrixFn engine_rmatrix(const FamilyInstance& inst, const LocalOperator& op) {
  if (is_tau_side(inst.family))
    return [op](const Scalar& x, const Scalar& y) { return baxterise_tau(op, x, y); };
  return [op](const Scalar& x, const Scalar& y) { return baxterise_sigma(op, x, y); };
}

/// Draws a spectral point, redrawing when a resolvent is singular.
Scalar admissible_point(RationalSampler& rng, const LocalOperator& op) {
  return rng.small_rational_where([&](const Scalar& s) {
    const Matrix id = Matrix::identity(op.mat.dim());
    return !(id - s * op.mat).determinant().is_zero();
  });
}

struct CheckRow {
  std::string family;
  std::uint64_t seed;
  std::string check;
  CheckReport report;
};

json rows_to_json(const std::vector<CheckRow>& rows) {
  json arr = json::array();
  std::size_t failures = 0;
  for (const auto& r : rows) {
    json cell{{"family", r.family}, {"seed", r.seed}, {"check", r.check}};
    json rep = report_to_json(r.report);
    cell["passed"] = rep["passed"];
    cell["witness"] = rep["witness"];
    arr.push_back(std::move(cell));
    if (!r.report.passed) ++failures;
  }
  return json{{"cells", std::move(arr)},
              {"total", rows.size()},
              {"failed", failures}};
}

void print_witnesses(const std::vector<CheckRow>& rows) {
  for (const auto& r : rows)
    if (!r.report.passed && r.report.witness)
      std::cerr << r.family << " " << r.check << ": residual " << r.report.witness->residual
                << " at (" << r.report.witness->row << "," << r.report.witness->col << ") in "
                << r.report.witness->desc << "\n";
}

CheckReport run_check(const FamilyInstance& inst, const LocalOperator& op, const std::string& check,
                      std::uint64_t seed, std::size_t trials) {
  RationalSampler rng(seed);
  const RMatrixFn R = engine_rmatrix(inst, op);
  if (check == "relation")
    return is_tau_side(inst.family) ? check_T_relation(op) : check_S_relation(op);
  if (check == "hecke") return check_hecke(op, Scalar(0));
  for (std::size_t t = 0; t < trials; ++t) {
    const Scalar x = admissible_point(rng, op);
    const Scalar y = admissible_point(rng, op);
    const Scalar z = admissible_point(rng, op);
    const Scalar w = admissible_point(rng, op);
    CheckReport rep;
    if (check == "ybe")
      rep = check_braided_ybe(R, op.m, x, y, z);
    else if (check == "unitarity")
      rep = check_unitarity(R, x, y);
    else if (check == "regularity")
      rep = check_regularity(R, x);
    else if (check == "locality")
      rep = check_locality(R, op.m, x, y, z, w);
    else if (check == "product") {
      if (inst.family != Family::TASEP_S)
        throw invalid_instance("product check needs family TASEP_S with zeta/nu rates included");
      const LocalOperator T = build_tasep_T(inst.m, inst.params);
      RMatrixFn prod = [&](const Scalar& u, const Scalar& v) {
        return product_rmatrix(op, T, u, v);
      };
      rep = check_braided_ybe(prod, op.m, x, y, z);
      if (rep.passed) rep = check_unitarity(prod, x, y);
    } else {
      throw invalid_instance("unknown check '" + check + "'");
    }
    if (!rep.passed) return rep;
  }
  return CheckReport::pass();
}

int cmd_verify(const FamilyInstance& inst, const std::vector<std::string>& checks,
               std::uint64_t seed, std::size_t trials) {
  const LocalOperator op = build_family(inst);
  std::vector<CheckRow> rows;
  for (const auto& check : checks)
    rows.push_back({family_name(inst.family), cell_seed(seed, family_name(inst.family), check, 0),
                    check, run_check(inst, op, check, cell_seed(seed, family_name(inst.family), check, 0),
                                     trials)});
  json out{{"family", family_name(inst.family)}, {"report", rows_to_json(rows)}};
  std::cout << out.dump(2) << "\n";
  print_witnesses(rows);
  for (const auto& r : rows)
    if (!r.report.passed) return kExitFail;
  return kExitPass;
}

int cmd_rmatrix(const FamilyInstance& inst, const Scalar& x, const Scalar& y, bool closed_form) {
  const LocalOperator op = build_family(inst);
  const Matrix engine = engine_rmatrix(inst, op)(x, y);
  Matrix result = engine;
  if (closed_form) {
    result = closed_form_R(inst, x, y);
    auto rep = CheckReport::of_equal(result, engine, "closed form vs Baxterisation engine");
    if (!rep.passed) {
      std::cerr << "closed-form mismatch at (" << rep.witness->row << "," << rep.witness->col
                << "): residual " << rep.witness->residual << "\n";
      return kExitFail;
    }
  }
  std::cout << matrix_to_json(result).dump(2) << "\n";
  return kExitPass;
}

int cmd_hamiltonian(const FamilyInstance& inst, std::size_t n, const Scalar& z) {
  const ChainSpec spec{build_family(inst), n, z};
  json out{{"n", n}, {"m", spec.S.m}, {"z", z.str()}, {"matrix", matrix_to_json(hamiltonian(spec))}};
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

int cmd_transfer(const FamilyInstance& inst, std::size_t n, const Scalar& z, const Scalar& x) {
  const ChainSpec spec{build_family(inst), n, z};
  json out{{"n", n},
           {"m", spec.S.m},
           {"z", z.str()},
           {"x", x.str()},
           {"matrix", matrix_to_json(transfer_matrix(spec, x))}};
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

int cmd_export(const FamilyInstance& inst) {
  const LocalOperator op = build_family(inst);
  json out{{"instance", instance_to_json(inst)}, {"S", matrix_to_json(op.mat)}};
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

FamilyInstance random_instance(Family fam, std::size_t m, RationalSampler& rng) {
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

int cmd_scan(const std::vector<std::string>& families, std::uint64_t seed, std::size_t trials,
             std::size_t max_m, std::size_t max_n) {
  if (max_m > 3 || max_n > 4) {
    std::cerr << "scan: dimension guard requires max-m <= 3 and max-n <= 4\n";
    return kExitUsage;
  }
  std::vector<CheckRow> rows;
  auto run_cell = [&](const std::string& fam_label, const std::string& check, std::uint64_t trial,
                      auto&& body) {
    const std::uint64_t cs = cell_seed(seed, fam_label, check, trial);
    RationalSampler rng(cs);
    rows.push_back({fam_label, cs, check, body(rng)});
  };

  for (const auto& name : families) {
    const Family fam = family_from_name(name);
    const bool tasep = fam == Family::TASEP_S || fam == Family::TASEP_T;
    for (std::size_t t = 0; t < trials; ++t) {
      for (std::size_t m = 2; m <= (tasep ? max_m : 2); ++m) {
        const std::string label = tasep ? name + "/m" + std::to_string(m) : name;

        run_cell(label, "relation", t, [&](RationalSampler& rng) {
          FamilyInstance inst = random_instance(fam, m, rng);
          const LocalOperator op = build_family(inst);
          return fam == Family::TASEP_T ? check_T_relation(op) : check_S_relation(op);
        });

        for (const char* check : {"ybe", "unitarity", "regularity", "locality"})
          run_cell(label, check, t, [&](RationalSampler& rng) {
            FamilyInstance inst = random_instance(fam, m, rng);
            return run_check(inst, build_family(inst), check, rng.raw(), 1);
          });

        if (!tasep) {
          run_cell(label, "closed_form", t, [&](RationalSampler& rng) -> CheckReport {
            FamilyInstance inst = random_instance(fam, m, rng);
            const LocalOperator op = build_family(inst);
            for (int tries = 0; tries < 100; ++tries) {
              const Scalar x = admissible_point(rng, op);
              const Scalar y = admissible_point(rng, op);
              try {
                return CheckReport::of_equal(closed_form_R(inst, x, y), baxterise_sigma(op, x, y),
                                             "closed form vs engine");
              } catch (const pole_error&) {
                continue;  // redraw around appendix denominators
              }
            }
            throw std::runtime_error("scan: could not draw admissible closed-form point");
          });

          run_cell(label, "mobius", t, [&](RationalSampler& rng) -> CheckReport {
            FamilyInstance inst = random_instance(fam, m, rng);
            const LocalOperator op = build_family(inst);
            for (int tries = 0; tries < 100; ++tries) {
              MobiusParams p{rng.small_rational(), rng.small_rational(), rng.small_rational()};
              try {
                return check_S_relation(mobius(op, p));
              } catch (const singular_error&) {
                continue;
              }
            }
            throw std::runtime_error("scan: could not draw admissible Mobius map");
          });

          run_cell(label, "transfer", t, [&](RationalSampler& rng) -> CheckReport {
            FamilyInstance inst = random_instance(fam, m, rng);
            ChainSpec spec{build_family(inst), 2, Scalar(0)};
            for (int tries = 0; tries < 100; ++tries) {
              try {
                spec.z = admissible_point(rng, spec.S);
                const Scalar x = admissible_point(rng, spec.S);
                const Scalar y = admissible_point(rng, spec.S);
                return CheckReport::of_zero(
                    commutator(transfer_matrix(spec, x), transfer_matrix(spec, y)),
                    "[t(x|z), t(y|z)]");
              } catch (const singular_error&) {
                continue;
              }
            }
            throw std::runtime_error("scan: could not draw admissible transfer point");
          });
        }

        if (fam == Family::TASEP_S) {
          run_cell(label, "product", t, [&](RationalSampler& rng) -> CheckReport {
            // Rates constrained by rho_i nu_ij = mu_ij zeta_j.
            FamilyInstance inst = random_instance(fam, m, rng);
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
            RMatrixFn prod = [&](const Scalar& u, const Scalar& v) {
              return product_rmatrix(S, T, u, v);
            };
            auto admissible = [&](RationalSampler& r2) {
              return r2.small_rational_where([&](const Scalar& s) {
                const Matrix id = Matrix::identity(S.mat.dim());
                return !(id - s * S.mat).determinant().is_zero() &&
                       !(id - s * T.mat).determinant().is_zero();
              });
            };
            const Scalar x = admissible(rng), y = admissible(rng), z = admissible(rng);
            auto rep = check_braided_ybe(prod, m, x, y, z);
            if (rep.passed) rep = check_unitarity(prod, x, y);
            return rep;
          });
        }
      }
    }
  }

  std::sort(rows.begin(), rows.end(), [](const CheckRow& a, const CheckRow& b) {
    return std::tie(a.family, a.check, a.seed) < std::tie(b.family, b.check, b.seed);
  });
  json out{{"seed", seed},
           {"trials", trials},
           {"max_m", max_m},
           {"max_n", max_n},
           {"summary", rows_to_json(rows)}};
  std::cout << out.dump(2) << "\n";
  print_witnesses(rows);
  for (const auto& r : rows)
    if (!r.report.passed) return kExitFail;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for two-parameter Baxterised R-matrices"};
  app.require_subcommand(1);

  std::string family = "S4", params, spec_file, checks_csv = "relation", families_csv;
  std::string x_str = "1/5", y_str = "1/7", z_str = "0";
  std::size_t m = 2, n = 2, trials = 10, max_m = 3, max_n = 4;
  std::uint64_t seed = 42;
  bool closed_form = false;

  auto add_instance_flags = [&](CLI::App* sub) {
    sub->add_option("--family", family, "Family name (S1..S7, TASEP_S, TASEP_T)");
    sub->add_option("--params", params, "Comma-separated key=value rational parameters");
    sub->add_option("--m", m, "Local dimension (TASEP families)");
    sub->add_option("--spec", spec_file, "FamilyInstance JSON file");
  };

  auto* verify = app.add_subcommand("verify", "Run exact identity checks on a family instance");
  add_instance_flags(verify);
  verify->add_option("--checks", checks_csv, "Subset of relation,ybe,unitarity,regularity,locality,hecke,product");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--trials", trials, "Random points per check");

  auto* rmatrix = app.add_subcommand("rmatrix", "Emit the braided R-matrix at a spectral point");
  add_instance_flags(rmatrix);
  rmatrix->add_option("--x", x_str, "First spectral parameter");
  rmatrix->add_option("--y", y_str, "Second spectral parameter");
  rmatrix->add_flag("--closed-form", closed_form, "Use the closed-form constructor and cross-check");

  auto* ham = app.add_subcommand("hamiltonian", "Emit the periodic chain Hamiltonian");
  add_instance_flags(ham);
  ham->add_option("--n", n, "Number of sites");
  ham->add_option("--z", z_str, "Inhomogeneity parameter");

  auto* transfer = app.add_subcommand("transfer", "Emit the transfer matrix t(x|z)");
  add_instance_flags(transfer);
  transfer->add_option("--n", n, "Number of sites");
  transfer->add_option("--z", z_str, "Inhomogeneity parameter");
  transfer->add_option("--x", x_str, "Spectral parameter");

  auto* scan = app.add_subcommand("scan", "Batch property sweep over families");
  scan->add_option("--families", families_csv, "Comma-separated family list (default: all)");
  scan->add_option("--seed", seed, "Master seed");
  scan->add_option("--trials", trials, "Trials per cell");
  scan->add_option("--max-m", max_m, "Largest TASEP local dimension (<= 3)");
  scan->add_option("--max-n", max_n, "Largest chain length (<= 4)");

  auto* exp = app.add_subcommand("export", "Emit a family instance and its generator matrix");
  add_instance_flags(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(scan)) {
      std::vector<std::string> fams;
      if (families_csv.empty()) {
        fams = {"S1", "S2", "S3", "S4", "S5", "S6", "S7", "TASEP_S", "TASEP_T"};
      } else {
        std::stringstream ss(families_csv);
        std::string item;
        while (std::getline(ss, item, ',')) fams.push_back(item);
      }
      return cmd_scan(fams, seed, trials, max_m, max_n);
    }

    const FamilyInstance inst = make_instance(family, params, m, spec_file);
    if (app.got_subcommand(verify)) {
      std::vector<std::string> checks;
      std::stringstream ss(checks_csv);
      std::string item;
      while (std::getline(ss, item, ',')) checks.push_back(item);
      return cmd_verify(inst, checks, seed, trials);
    }
    if (app.got_subcommand(rmatrix))
      return cmd_rmatrix(inst, Scalar::parse(x_str), Scalar::parse(y_str), closed_form);
    if (app.got_subcommand(ham)) return cmd_hamiltonian(inst, n, Scalar::parse(z_str));
    if (app.got_subcommand(transfer))
      return cmd_transfer(inst, n, Scalar::parse(z_str), Scalar::parse(x_str));
    if (app.got_subcommand(exp)) return cmd_export(inst);
  } catch (const invalid_instance& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pole_error& e) {
    std::cerr << "error: " << e.what() << " (factor " << e.factor << ")\n";
    return kExitUsage;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const division_by_zero& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dimension_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
