// Acceptance harness: one PASS/FAIL line per numbered criterion, nonzero
// exit status when any of them fails.
//
//   acceptance <path-to-r2sep-cli> <path-to-fixture-dir>
//
// Criteria 1-8 drive the library directly; criterion 9 spawns the CLI on
// golden fixtures and checks exit codes and byte-stable reports.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "core/concurrence.hpp"
#include "core/criterion.hpp"
#include "core/density.hpp"
#include "core/oracle.hpp"
#include "core/pure_state.hpp"
#include "core/shape.hpp"
#include "support/generators.hpp"

namespace fs = std::filesystem;

using rank2sep::Complex;
using rank2sep::Decision;
using rank2sep::DensityMatrix;
using rank2sep::PartyShape;
using rank2sep::PureState;
using rank2sep::RankTwoState;
using rank2sep::SeparabilityVerdict;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> messages;

  void require(bool condition, const std::string& message) {
    if (condition) return;
    ok = false;
    if (messages.size() < 10) messages.push_back(message);
  }
};

std::string fmt(double value) {
  std::ostringstream out;
  out.precision(6);
  out << value;
  return out.str();
}

std::string shape_name(const PartyShape& shape) {
  return std::to_string(shape.num_parties) + " parties of dimension " +
         std::to_string(shape.local_dim);
}

const std::vector<PartyShape>& four_shapes() {
  static const std::vector<PartyShape> shapes = {
      PartyShape(3, 2), PartyShape(3, 3), PartyShape(3, 4), PartyShape(4, 2)};
  return shapes;
}

const std::vector<PartyShape>& mixture_shapes() {
  static const std::vector<PartyShape> shapes = {
      PartyShape(3, 2), PartyShape(3, 3), PartyShape(4, 2)};
  return shapes;
}

struct SeparableRecord {
  DensityMatrix rho;
  RankTwoState mixture;
  SeparabilityVerdict verdict;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

/* ---- criterion 1: concurrence fixed points ------------------------------- */

void criterion1(Check& check) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& shape : four_shapes()) {
    const double c_ghz = rank2sep::concurrence(PureState::ghz(shape));
    check.require(std::abs(c_ghz - 1.0) <= 1e-10,
                  "C(ghz) = " + fmt(c_ghz) + " for " + shape_name(shape));
    testgen::Rng rng(1100 + 10 * shape.num_parties + shape.local_dim);
    for (int i = 0; i < 100; ++i) {
      const double c =
          rank2sep::concurrence(testgen::random_product_state(rng, shape));
      check.require(c <= 1e-10, "C(product) = " + fmt(c) + " for " +
                                    shape_name(shape) + " trial " +
                                    std::to_string(i));
    }
  }
  const double elapsed = seconds_since(start);
  check.require(elapsed < 5.0,
                "fixed-point sweep took " + fmt(elapsed) + " s (budget 5 s)");
}

/* ---- criterion 2: local unitary invariance -------------------------------- */

void criterion2(Check& check) {
  for (const auto& shape : four_shapes()) {
    testgen::Rng rng(2200 + 10 * shape.num_parties + shape.local_dim);
    for (int i = 0; i < 100; ++i) {
      const PureState state = testgen::random_state(rng, shape);
      const auto unitary = testgen::random_local_unitary(rng, shape);
      const PureState mapped = rank2sep::apply_local_unitary(state, unitary);

      const auto before = rank2sep::invariants(state);
      const auto after = rank2sep::invariants(mapped);
      check.require(std::abs(before.i0 - after.i0) <= 1e-9,
                    "i0 moved by " + fmt(std::abs(before.i0 - after.i0)) +
                        " for " + shape_name(shape));
      for (std::size_t k = 0; k < before.biquadratics.size(); ++k) {
        const double drift =
            std::abs(before.biquadratics[k] - after.biquadratics[k]);
        check.require(drift <= 1e-9, "biquadratic " + std::to_string(k) +
                                         " moved by " + fmt(drift) + " for " +
                                         shape_name(shape));
      }
      const double dc = std::abs(rank2sep::concurrence(state) -
                                 rank2sep::concurrence(mapped));
      check.require(dc <= 1e-9, "concurrence moved by " + fmt(dc) + " for " +
                                    shape_name(shape));
    }
  }
}

/* ---- criterion 3: pure separability oracle agreement ----------------------- */

void criterion3(Check& check) {
  for (const auto& shape : four_shapes()) {
    testgen::Rng rng(3300 + 10 * shape.num_parties + shape.local_dim);
    for (int i = 0; i < 500; ++i) {
      const PureState state = testgen::random_state(rng, shape);
      const bool by_concurrence = rank2sep::is_pure_separable(state, 1e-8);
      const bool by_svd = rank2sep::pure_product_oracle(state, 1e-8);
      check.require(by_concurrence == by_svd,
                    "oracle disagreement on random state " +
                        std::to_string(i) + " for " + shape_name(shape));
    }
    for (int i = 0; i < 100; ++i) {
      const PureState state = testgen::random_product_state(rng, shape);
      const bool by_concurrence = rank2sep::is_pure_separable(state, 1e-8);
      const bool by_svd = rank2sep::pure_product_oracle(state, 1e-8);
      check.require(by_concurrence && by_svd,
                    "product state " + std::to_string(i) + " missed for " +
                        shape_name(shape));
    }
  }
}

/* ---- criterion 4: product mixtures certified separable --------------------- */

double component_rebuild_diff(const PureState& component,
                              const rank2sep::ProductFactorization& factors) {
  const PureState rebuilt =
      PureState::product(component.shape(), factors.factors);
  double worst = 0.0;
  for (std::size_t i = 0; i < component.dim(); ++i) {
    worst = std::max(worst,
                     std::abs(rebuilt.amplitude(i) * factors.global_phase -
                              component.amplitude(i)));
  }
  return worst;
}

void criterion4(Check& check, std::vector<SeparableRecord>& records) {
  testgen::Rng rng(4400);
  for (int i = 0; i < 200; ++i) {
    const PartyShape& shape = mixture_shapes()[i % mixture_shapes().size()];
    const double q = rng.uniform(0.15, 0.85);
    const DensityMatrix rho =
        testgen::random_product_mixture(rng, shape, q);
    const RankTwoState mixture = rank2sep::rank_two_extract(rho);
    const SeparabilityVerdict verdict = rank2sep::decide(mixture, 1e-8);

    const std::string tag =
        "mixture " + std::to_string(i) + " (" + shape_name(shape) + ")";
    check.require(verdict.decision == Decision::Separable,
                  tag + " not separable (" + verdict.witness.failed_condition +
                      ")");
    if (verdict.decision != Decision::Separable) continue;
    check.require(verdict.decomposition.has_value(),
                  tag + " lacks a decomposition");
    if (!verdict.decomposition) continue;

    const auto& d = *verdict.decomposition;
    const DensityMatrix rebuilt =
        rank2sep::reconstruct(d.p_prime, d.e1_prime, d.e2_prime);
    const double diff =
        rank2sep::max_abs_diff(rebuilt.matrix(), rho.matrix());
    check.require(diff <= 1e-8,
                  tag + " reconstruction misses by " + fmt(diff));

    check.require(rank2sep::pure_product_oracle(d.e1_prime, 1e-8),
                  tag + " first component is not a product state");
    check.require(rank2sep::pure_product_oracle(d.e2_prime, 1e-8),
                  tag + " second component is not a product state");
    const double f1 = component_rebuild_diff(d.e1_prime, d.factors1);
    const double f2 = component_rebuild_diff(d.e2_prime, d.factors2);
    check.require(f1 <= 1e-8, tag + " first factorization off by " + fmt(f1));
    check.require(f2 <= 1e-8, tag + " second factorization off by " + fmt(f2));

    records.push_back(SeparableRecord{rho, mixture, verdict});
  }
}

/* ---- criterion 5: ghz mixtures below half weight --------------------------- */

void criterion5(Check& check) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<PartyShape> shapes = {PartyShape(3, 2), PartyShape(3, 3)};
  const std::vector<double> weights = {0.05, 0.15, 0.25, 0.35, 0.45};
  for (const auto& shape : shapes) {
    testgen::Rng rng(5500 + shape.local_dim);
    const PureState ghz = PureState::ghz(shape);
    for (int k = 0; k < 50; ++k) {
      const PureState e1 = testgen::random_ghz_orthogonal(rng, shape);
      for (const double p : weights) {
        const RankTwoState mixture = RankTwoState::create(p, e1, ghz);
        const SeparabilityVerdict verdict = rank2sep::decide(mixture, 1e-8);
        check.require(verdict.decision == Decision::Entangled,
                      "ghz mixture p = " + fmt(p) + " draw " +
                          std::to_string(k) + " for " + shape_name(shape) +
                          " not entangled");
        check.require(rank2sep::corollary_bound_check(e1, p),
                      "bound check rejected p = " + fmt(p) + " draw " +
                          std::to_string(k) + " for " + shape_name(shape));
      }
    }
  }
  const double elapsed = seconds_since(start);
  check.require(elapsed < 30.0,
                "ghz sweep took " + fmt(elapsed) + " s (budget 30 s)");
}

/* ---- criterion 6: real branch agreement ------------------------------------ */

void criterion6(Check& check, std::vector<SeparableRecord>& records) {
  const std::vector<PartyShape> shapes = {PartyShape(3, 2), PartyShape(3, 3)};
  testgen::Rng rng(6600);
  for (int i = 0; i < 100; ++i) {
    const PartyShape& shape = shapes[(i / 2) % shapes.size()];
    const bool expect_separable = i % 2 == 0;

    std::optional<DensityMatrix> rho;
    std::optional<RankTwoState> mixture;
    if (expect_separable) {
      rho = testgen::random_product_mixture(rng, shape,
                                            rng.uniform(0.3, 0.7), true);
      mixture = rank2sep::rank_two_extract(*rho);
    } else {
      const PureState e1 = testgen::random_ghz_orthogonal(rng, shape, true);
      mixture = RankTwoState::create(rng.uniform(0.05, 0.45), e1,
                                     PureState::ghz(shape));
      rho = mixture->assemble();
    }

    const SeparabilityVerdict real_verdict =
        rank2sep::decide_real(*mixture, 1e-8);
    const SeparabilityVerdict complex_verdict =
        rank2sep::decide(*mixture, 1e-8);

    const std::string tag = "real instance " + std::to_string(i) + " (" +
                            shape_name(shape) + ")";
    check.require(real_verdict.decision == complex_verdict.decision,
                  tag + " branch disagreement");
    check.require(complex_verdict.decision == (expect_separable
                                                   ? Decision::Separable
                                                   : Decision::Entangled),
                  tag + " unexpected decision");
    if (complex_verdict.decision == Decision::Separable) {
      records.push_back(SeparableRecord{*rho, *mixture, complex_verdict});
    }
  }
}

/* ---- criterion 7: ppt on every separable verdict ---------------------------- */

void criterion7(Check& check, const std::vector<SeparableRecord>& records) {
  check.require(records.size() >= 200,
                "only " + std::to_string(records.size()) +
                    " separable verdicts were recorded");
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto report = rank2sep::ppt_check(records[i].rho, 1e-9);
    check.require(report.passed,
                  "ppt failed on separable record " + std::to_string(i));
    for (const auto& [cut, min_eig] : report.per_bipartition) {
      check.require(min_eig >= -1e-9,
                    "record " + std::to_string(i) + " cut " + cut.label() +
                        " has min eigenvalue " + fmt(min_eig));
    }
  }
}

/* ---- criterion 8: weight identity and concurrence ratio --------------------- */

void criterion8(Check& check, const std::vector<SeparableRecord>& records) {
  check.require(records.size() >= 200,
                "only " + std::to_string(records.size()) +
                    " separable verdicts were recorded");
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    const std::string tag = "record " + std::to_string(i);
    check.require(rec.verdict.roots.has_value(), tag + " carries no roots");
    if (!rec.verdict.roots) continue;

    const Complex mu1 = rec.verdict.roots->mu1;
    const Complex mu2 = rec.verdict.roots->mu2;
    const Complex z = mu2 - mu1;
    const Complex recomputed = 1.0 / (1.0 - mu1 * mu2 * std::conj(z) / z);
    const double p = rec.mixture.p();
    const double p_dev = std::abs(recomputed - Complex{p, 0.0});
    check.require(p_dev <= 1e-8,
                  tag + " weight identity misses by " + fmt(p_dev));

    const double c1 = rank2sep::concurrence(rec.mixture.e1());
    const double c2 = rank2sep::concurrence(rec.mixture.e2());
    check.require(c2 > 1e-12, tag + " has a separable second eigenvector");
    if (c2 <= 1e-12) continue;
    const double ratio_dev = std::abs(c1 / c2 - (1.0 - p) / p);
    check.require(ratio_dev <= 1e-6,
                  tag + " concurrence ratio misses by " + fmt(ratio_dev));
  }
}

/* ---- criterion 9: cli golden fixtures --------------------------------------- */

struct CliRunner {
  std::string cli;
  fs::path fixtures;
  fs::path tmp;

  static std::string quoted(const fs::path& path) {
    return "\"" + path.string() + "\"";
  }

  int run(const std::string& args) const {
    const std::string command =
        quoted(cli) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    if (status == -1) return -1;
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return 128;
  }
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void criterion9(Check& check, const CliRunner& cli) {
  using nlohmann::json;

  // Pure fixtures: unit concurrence for the ghz state, zero for a product
  // state, byte-identical reports on repeated runs.
  const fs::path ghz_fixture = cli.fixtures / "ghz_n2_m3.json";
  const fs::path ghz_report_a = cli.tmp / "ghz_report_a.json";
  const fs::path ghz_report_b = cli.tmp / "ghz_report_b.json";
  int code = cli.run("concurrence " + CliRunner::quoted(ghz_fixture) +
                     " --json-out " + CliRunner::quoted(ghz_report_a));
  check.require(code == 0, "ghz concurrence exited " + std::to_string(code));
  code = cli.run("concurrence " + CliRunner::quoted(ghz_fixture) +
                 " --json-out " + CliRunner::quoted(ghz_report_b));
  check.require(code == 0,
                "ghz concurrence rerun exited " + std::to_string(code));
  const std::string ghz_bytes = slurp(ghz_report_a);
  check.require(!ghz_bytes.empty() && ghz_bytes == slurp(ghz_report_b),
                "ghz report is not byte-stable");
  if (!ghz_bytes.empty()) {
    const json report = json::parse(ghz_bytes);
    check.require(report.at("command") == "concurrence",
                  "ghz report names the wrong command");
    check.require(
        std::abs(report.at("concurrence").get<double>() - 1.0) <= 1e-10,
        "ghz report concurrence " + report.at("concurrence").dump());
    const std::string digest = report.at("input_digest").get<std::string>();
    check.require(digest.rfind("fnv1a64:", 0) == 0,
                  "ghz report digest " + digest);
  }

  const fs::path product_fixture = cli.fixtures / "product_n2_m3.json";
  const fs::path product_report = cli.tmp / "product_report.json";
  code = cli.run("concurrence " + CliRunner::quoted(product_fixture) +
                 " --json-out " + CliRunner::quoted(product_report));
  check.require(code == 0,
                "product concurrence exited " + std::to_string(code));
  const std::string product_bytes = slurp(product_report);
  if (!product_bytes.empty()) {
    const json report = json::parse(product_bytes);
    check.require(report.at("concurrence").get<double>() <= 1e-10,
                  "product report concurrence " +
                      report.at("concurrence").dump());
  }

  // Generated product mixture: deterministic bytes for a fixed seed, a
  // Separable verdict with a confirmed certificate, byte-stable reports.
  const fs::path mix_a = cli.tmp / "mixture_a.json";
  const fs::path mix_b = cli.tmp / "mixture_b.json";
  const std::string gen_args =
      "generate product-mixture --parties 3 --dim 2 --seed 20240817 --p 0.6";
  code = cli.run(gen_args + " --out " + CliRunner::quoted(mix_a));
  check.require(code == 0, "generate mixture exited " + std::to_string(code));
  code = cli.run(gen_args + " --out " + CliRunner::quoted(mix_b));
  check.require(code == 0,
                "generate mixture rerun exited " + std::to_string(code));
  const std::string mix_bytes = slurp(mix_a);
  check.require(!mix_bytes.empty() && mix_bytes == slurp(mix_b),
                "generated mixture is not byte-stable");

  const fs::path decide_a = cli.tmp / "decide_a.json";
  const fs::path decide_b = cli.tmp / "decide_b.json";
  code = cli.run("decide " + CliRunner::quoted(mix_a) + " --verify" +
                 " --json-out " + CliRunner::quoted(decide_a));
  check.require(code == 0, "decide mixture exited " + std::to_string(code));
  code = cli.run("decide " + CliRunner::quoted(mix_a) + " --verify" +
                 " --json-out " + CliRunner::quoted(decide_b));
  check.require(code == 0,
                "decide mixture rerun exited " + std::to_string(code));
  const std::string decide_bytes = slurp(decide_a);
  check.require(!decide_bytes.empty() && decide_bytes == slurp(decide_b),
                "decide report is not byte-stable");
  if (!decide_bytes.empty()) {
    const json report = json::parse(decide_bytes);
    check.require(report.at("decision") == "Separable",
                  "mixture decision " + report.at("decision").dump());
    const json& verify = report.at("verify");
    check.require(verify.at("certificate_ok").get<bool>(),
                  "mixture certificate not confirmed");
    check.require(verify.at("ppt_passed").get<bool>(),
                  "mixture ppt battery failed");
    check.require(
        verify.at("reconstruction_max_abs_diff").get<double>() <= 1e-8,
        "mixture reconstruction diff " +
            verify.at("reconstruction_max_abs_diff").dump());

    // Report round trip: the reported extraction, roots, and weight alone
    // must rebuild the input density matrix and so reproduce the decision.
    const PartyShape shape(3, 2);
    const auto to_state = [&shape](const json& arr) {
      std::vector<Complex> amps;
      for (const auto& pair : arr) {
        amps.push_back(
            Complex{pair.at(0).get<double>(), pair.at(1).get<double>()});
      }
      return PureState::create(shape, std::move(amps));
    };
    const json& extraction = report.at("extraction");
    const PureState e1 = to_state(extraction.at("e1"));
    const PureState e2 = to_state(extraction.at("e2"));
    const json& roots = report.at("roots");
    const Complex mu1{roots.at("mu1").at(0).get<double>(),
                      roots.at("mu1").at(1).get<double>()};
    const Complex mu2{roots.at("mu2").at(0).get<double>(),
                      roots.at("mu2").at(1).get<double>()};
    const auto combine = [&](const Complex& mu) {
      std::vector<Complex> amps(e1.dim());
      const double scale = 1.0 / std::sqrt(1.0 + std::norm(mu));
      for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = (e1.amplitude(i) + mu * e2.amplitude(i)) * scale;
      }
      return PureState::create(shape, std::move(amps));
    };
    const PureState e1p = combine(mu1);
    const PureState e2p = combine(mu2);
    check.require(rank2sep::pure_product_oracle(e1p, 1e-8) &&
                      rank2sep::pure_product_oracle(e2p, 1e-8),
                  "rebuilt components are not product states");
    const DensityMatrix rebuilt = rank2sep::reconstruct(
        report.at("p_prime").get<double>(), e1p, e2p);

    const json statefile = json::parse(mix_bytes);
    const std::size_t total = shape.total_dim();
    Eigen::MatrixXcd rho(total, total);
    const json& data = statefile.at("data");
    for (std::size_t r = 0; r < total; ++r) {
      for (std::size_t c = 0; c < total; ++c) {
        const json& pair = data.at(r * total + c);
        rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            Complex{pair.at(0).get<double>(), pair.at(1).get<double>()};
      }
    }
    const double round_trip = rank2sep::max_abs_diff(rebuilt.matrix(), rho);
    check.require(round_trip <= 1e-8,
                  "report round trip misses the input by " + fmt(round_trip));
  }

  // Generated ghz-orthogonal mixture below half weight: documented
  // entangled exit code and a stable report.
  const fs::path ghz_mix_a = cli.tmp / "ghz_mixture_a.json";
  const fs::path ghz_mix_b = cli.tmp / "ghz_mixture_b.json";
  const std::string ghz_gen_args =
      "generate ghz-orthogonal --parties 3 --dim 2 --seed 7 --p 0.25";
  code = cli.run(ghz_gen_args + " --out " + CliRunner::quoted(ghz_mix_a));
  check.require(code == 0,
                "generate ghz mixture exited " + std::to_string(code));
  code = cli.run(ghz_gen_args + " --out " + CliRunner::quoted(ghz_mix_b));
  check.require(code == 0,
                "generate ghz mixture rerun exited " + std::to_string(code));
  const std::string ghz_mix_bytes = slurp(ghz_mix_a);
  check.require(!ghz_mix_bytes.empty() && ghz_mix_bytes == slurp(ghz_mix_b),
                "generated ghz mixture is not byte-stable");

  const fs::path entangled_a = cli.tmp / "entangled_a.json";
  const fs::path entangled_b = cli.tmp / "entangled_b.json";
  code = cli.run("decide " + CliRunner::quoted(ghz_mix_a) + " --json-out " +
                 CliRunner::quoted(entangled_a));
  check.require(code == 1,
                "entangled decide exited " + std::to_string(code));
  code = cli.run("decide " + CliRunner::quoted(ghz_mix_a) + " --json-out " +
                 CliRunner::quoted(entangled_b));
  check.require(code == 1,
                "entangled decide rerun exited " + std::to_string(code));
  const std::string entangled_bytes = slurp(entangled_a);
  check.require(!entangled_bytes.empty() &&
                    entangled_bytes == slurp(entangled_b),
                "entangled report is not byte-stable");
  if (!entangled_bytes.empty()) {
    const json report = json::parse(entangled_bytes);
    check.require(report.at("decision") == "Entangled",
                  "ghz mixture decision " + report.at("decision").dump());
    check.require(!report.at("failed_condition").get<std::string>().empty(),
                  "entangled report lacks a failed condition");
  }

  // Documented exit codes on the remaining fixture classes.
  const fs::path basis_fixture = cli.fixtures / "basis_mixture_n2_m3.json";
  const fs::path basis_report = cli.tmp / "basis_report.json";
  code = cli.run("decide " + CliRunner::quoted(basis_fixture) +
                 " --json-out " + CliRunner::quoted(basis_report));
  check.require(code == 0, "basis mixture exited " + std::to_string(code));
  const std::string basis_bytes = slurp(basis_report);
  if (!basis_bytes.empty()) {
    const json report = json::parse(basis_bytes);
    check.require(report.at("decision") == "BothEigenvectorsSeparable",
                  "basis mixture decision " + report.at("decision").dump());
    check.require(std::abs(report.at("p_prime").get<double>() - 0.25) <= 1e-12,
                  "basis mixture p' " + report.at("p_prime").dump());
  }

  code = cli.run("concurrence " +
                 CliRunner::quoted(cli.fixtures / "bad_length.json"));
  check.require(code == 2, "malformed input exited " + std::to_string(code));

  code = cli.run("decide " +
                 CliRunner::quoted(cli.fixtures / "maximally_mixed_n2_m2.json"));
  check.require(code == 4, "rank-four input exited " + std::to_string(code));

  // An unnormalized variant of the product fixture trips the state
  // validation exit code.
  json unnormalized = json::parse(slurp(product_fixture));
  unnormalized["data"][0][0] = 0.9;
  const fs::path unnormalized_path = cli.tmp / "unnormalized.json";
  {
    std::ofstream out(unnormalized_path, std::ios::binary);
    out << unnormalized.dump(2) << '\n';
  }
  code = cli.run("concurrence " + CliRunner::quoted(unnormalized_path));
  check.require(code == 3, "unnormalized input exited " + std::to_string(code));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: acceptance <r2sep-cli> <fixture-dir>\n");
    return 2;
  }
  const CliRunner cli{argv[1], fs::path(argv[2]),
                      fs::temp_directory_path() /
                          ("r2sep_acceptance_" +
                           std::to_string(static_cast<long>(::getpid())))};

  std::error_code ec;
  fs::remove_all(cli.tmp, ec);
  fs::create_directories(cli.tmp, ec);
  if (ec) {
    std::fprintf(stderr, "cannot create %s: %s\n", cli.tmp.c_str(),
                 ec.message().c_str());
    return 2;
  }

  std::vector<SeparableRecord> records;

  struct Entry {
    int id;
    const char* summary;
    std::function<void(Check&)> run;
  };
  const std::vector<Entry> entries = {
      {1, "concurrence fixed points on four shapes",
       [](Check& c) { criterion1(c); }},
      {2, "local unitary invariance of invariants and concurrence",
       [](Check& c) { criterion2(c); }},
      {3, "pure separability oracle agreement",
       [](Check& c) { criterion3(c); }},
      {4, "product mixtures certified separable",
       [&records](Check& c) { criterion4(c, records); }},
      {5, "ghz mixtures below half weight all entangled",
       [](Check& c) { criterion5(c); }},
      {6, "real branch agrees with complex branch",
       [&records](Check& c) { criterion6(c, records); }},
      {7, "ppt holds on every separable verdict",
       [&records](Check& c) { criterion7(c, records); }},
      {8, "weight identity and concurrence ratio",
       [&records](Check& c) { criterion8(c, records); }},
      {9, "cli golden fixtures and exit codes",
       [&cli](Check& c) { criterion9(c, cli); }},
  };

  bool all_ok = true;
  for (const auto& entry : entries) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      entry.run(check);
    } catch (const std::exception& err) {
      check.require(false, std::string("unexpected exception: ") + err.what());
    }
    const double elapsed = seconds_since(start);
    std::printf("criterion %d: %-52s %s (%.2f s)\n", entry.id, entry.summary,
                check.ok ? "PASS" : "FAIL", elapsed);
    for (const auto& message : check.messages) {
      std::printf("  - %s\n", message.c_str());
    }
    all_ok = all_ok && check.ok;
  }

  fs::remove_all(cli.tmp, ec);
  return all_ok ? 0 : 1;
}
