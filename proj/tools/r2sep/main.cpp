// r2sep: command-line front end for the rank-two separability library.
//
// Subcommands:
//   concurrence  generalized concurrence and invariants of a pure state
//   decide       separability verdict for a rank-two mixture
//   verify       independent oracle battery (SVD product check, PPT)
//   generate     deterministic fixture emission
//
// Exit codes: 0 separable/success, 1 entangled, 2 parse error,
// 3 state-invariant violation, 4 not rank two, 5 certificate failure.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rank2sep/rank2sep.h"

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kEntangled = 1;
constexpr int kParse = 2;
constexpr int kInvariant = 3;
constexpr int kNotRankTwo = 4;
constexpr int kCertificate = 5;

struct CliError : std::runtime_error {
  int exit_code;
  CliError(int code, const std::string& message)
      : std::runtime_error(message), exit_code(code) {}
};

[[noreturn]] void bail(int code, const std::string& message) {
  throw CliError(code, message);
}

int exit_for(r2s_status status) {
  switch (status) {
    case R2S_OK:
      return kOk;
    case R2S_ERR_NOT_RANK_TWO:
      return kNotRankTwo;
    case R2S_ERR_INTERNAL:
      return kCertificate;
    default:
      return kInvariant;
  }
}

void check(r2s_status status) {
  if (status != R2S_OK) {
    bail(exit_for(status),
         std::string(r2s_status_name(status)) + ": " + r2s_last_error());
  }
}

template <typename T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  ~Handle() { reset(); }
  Handle(Handle&& other) noexcept : ptr_(std::exchange(other.ptr_, nullptr)) {}
  Handle& operator=(Handle&& other) noexcept {
    if (this != &other) {
      reset();
      ptr_ = std::exchange(other.ptr_, nullptr);
    }
    return *this;
  }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;

  T** slot() {
    reset();
    return &ptr_;
  }
  T* get() const { return ptr_; }
  explicit operator bool() const { return ptr_ != nullptr; }

 private:
  void reset() {
    if (ptr_) Free(ptr_);
    ptr_ = nullptr;
  }
  T* ptr_ = nullptr;
};

using PureHandle = Handle<r2s_pure, r2s_pure_free>;
using DensityHandle = Handle<r2s_density, r2s_density_free>;
using Rank2Handle = Handle<r2s_rank2, r2s_rank2_free>;
using VerdictHandle = Handle<r2s_verdict, r2s_verdict_free>;
using PptHandle = Handle<r2s_ppt_report, r2s_ppt_report_free>;

/* ---- tolerances --------------------------------------------------------- */

struct TolProfile {
  double decision;
  double norm;
  double orth;
  double herm;
  double trace;
  double psd;
  double extract;
  double ppt;

  static TolProfile from_base(double base) {
    const double scale = base / 1e-8;
    TolProfile t{};
    t.decision = base;
    t.norm = 1e-9 * scale;
    t.orth = 1e-9 * scale;
    t.herm = 1e-9 * scale;
    t.trace = 1e-9 * scale;
    t.psd = 1e-9 * scale;
    t.extract = 1e-9 * scale;
    t.ppt = 1e-9 * scale;
    return t;
  }
};

void apply_overrides(TolProfile& tol, const std::string& spec) {
  const std::map<std::string, double*> fields{
      {"decision", &tol.decision}, {"norm", &tol.norm},
      {"orth", &tol.orth},         {"herm", &tol.herm},
      {"trace", &tol.trace},       {"psd", &tol.psd},
      {"extract", &tol.extract},   {"ppt", &tol.ppt}};
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      bail(kParse, "--tol-profile: expected name=value, got \"" + item + "\"");
    }
    const std::string name = item.substr(0, eq);
    const auto field = fields.find(name);
    if (field == fields.end()) {
      bail(kParse, "--tol-profile: unknown tolerance \"" + name + "\"");
    }
    double value = 0.0;
    try {
      std::size_t pos = 0;
      value = std::stod(item.substr(eq + 1), &pos);
      if (pos != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      bail(kParse, "--tol-profile: invalid value for \"" + name + "\"");
    }
    if (!(value > 0.0)) {
      bail(kParse, "--tol-profile: tolerance for \"" + name +
                       "\" must be positive");
    }
    *field->second = value;
  }
}

ordered_json tol_json(const TolProfile& t) {
  ordered_json out;
  out["decision"] = t.decision;
  out["norm"] = t.norm;
  out["orth"] = t.orth;
  out["herm"] = t.herm;
  out["trace"] = t.trace;
  out["psd"] = t.psd;
  out["extract"] = t.extract;
  out["ppt"] = t.ppt;
  return out;
}

/* ---- state files --------------------------------------------------------- */

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + hex;
}

std::vector<double> parse_pairs(const nlohmann::json& arr, std::size_t expected,
                                const std::string& field) {
  if (!arr.is_array()) {
    bail(kParse, field + ": expected an array of [re, im] pairs");
  }
  if (arr.size() != expected) {
    bail(kParse, field + ": expected " + std::to_string(expected) +
                     " entries, found " + std::to_string(arr.size()));
  }
  std::vector<double> out;
  out.reserve(2 * expected);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& pair = arr[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
      bail(kParse,
           field + "[" + std::to_string(i) + "]: expected a [re, im] pair");
    }
    out.push_back(pair[0].get<double>());
    out.push_back(pair[1].get<double>());
  }
  return out;
}

struct LoadedState {
  std::string kind;
  std::vector<int> dims;
  int num_parties = 0;
  int local_dim = 0;
  std::size_t total = 0;
  std::string digest;
  PureHandle pure;
  double p = 0.0;
  PureHandle e1;
  PureHandle e2;
  DensityHandle density;
};

LoadedState load_statefile(const std::string& path, const TolProfile& tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bail(kParse, path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string bytes = buffer.str();

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& err) {
    bail(kParse, path + ": " + err.what());
  }
  if (!doc.is_object()) bail(kParse, path + ": top-level value must be an object");

  LoadedState st;
  st.digest = fnv1a64(bytes);

  const auto version = doc.find("format_version");
  if (version == doc.end() || !version->is_string() ||
      version->get<std::string>() != "1") {
    bail(kParse, path + ": format_version must be the string \"1\"");
  }

  const auto kind = doc.find("kind");
  if (kind == doc.end() || !kind->is_string()) {
    bail(kParse, path + ": missing string field \"kind\"");
  }
  st.kind = kind->get<std::string>();
  if (st.kind != "pure" && st.kind != "rank2" && st.kind != "density") {
    bail(kParse, path + ": kind must be one of pure, rank2, density");
  }

  const auto dims = doc.find("dims");
  if (dims == doc.end() || !dims->is_array() || dims->empty()) {
    bail(kParse, path + ": missing non-empty array field \"dims\"");
  }
  for (std::size_t i = 0; i < dims->size(); ++i) {
    const auto& d = (*dims)[i];
    if (!d.is_number_integer()) {
      bail(kParse, "dims[" + std::to_string(i) + "]: expected an integer");
    }
    st.dims.push_back(d.get<int>());
  }
  if (st.dims.size() < 2) bail(kParse, "dims: at least two parties are required");
  if (st.dims[0] < 2) bail(kParse, "dims[0]: local dimension must be at least 2");
  for (std::size_t i = 1; i < st.dims.size(); ++i) {
    if (st.dims[i] != st.dims[0]) {
      bail(kParse,
           "dims[" + std::to_string(i) + "]: local dimensions must all be equal");
    }
  }
  st.num_parties = static_cast<int>(st.dims.size());
  st.local_dim = st.dims[0];
  std::uint64_t total = 1;
  for (int k = 0; k < st.num_parties; ++k) {
    total *= static_cast<std::uint64_t>(st.local_dim);
    if (total > (std::uint64_t{1} << 24)) {
      bail(kParse, "dims: total dimension exceeds the supported range");
    }
  }
  st.total = static_cast<std::size_t>(total);

  const auto data = doc.find("data");
  if (data == doc.end()) bail(kParse, path + ": missing field \"data\"");

  if (st.kind == "pure") {
    const auto amps = parse_pairs(*data, st.total, "data");
    check(r2s_pure_create(st.num_parties, st.local_dim, amps.data(),
                          amps.size(), 0, tol.norm, st.pure.slot()));
  } else if (st.kind == "rank2") {
    if (!data->is_object()) {
      bail(kParse, "data: expected an object with fields p, e1, e2");
    }
    const auto p = data->find("p");
    if (p == data->end() || !p->is_number()) {
      bail(kParse, "data.p: expected a number");
    }
    st.p = p->get<double>();
    const auto e1 = data->find("e1");
    if (e1 == data->end()) bail(kParse, "data.e1: missing amplitude array");
    const auto e2 = data->find("e2");
    if (e2 == data->end()) bail(kParse, "data.e2: missing amplitude array");
    const auto a1 = parse_pairs(*e1, st.total, "data.e1");
    const auto a2 = parse_pairs(*e2, st.total, "data.e2");
    check(r2s_pure_create(st.num_parties, st.local_dim, a1.data(), a1.size(), 0,
                          tol.norm, st.e1.slot()));
    check(r2s_pure_create(st.num_parties, st.local_dim, a2.data(), a2.size(), 0,
                          tol.norm, st.e2.slot()));
  } else {
    const auto entries = parse_pairs(*data, st.total * st.total, "data");
    check(r2s_density_create(st.num_parties, st.local_dim, entries.data(),
                             entries.size(), tol.herm, tol.trace, tol.psd,
                             st.density.slot()));
  }
  return st;
}

/* ---- reports ------------------------------------------------------------ */

ordered_json report_header(const char* command, const LoadedState& st,
                           const TolProfile& tol) {
  ordered_json report;
  report["format_version"] = "1";
  report["command"] = command;
  report["input_digest"] = st.digest;
  report["kind"] = st.kind;
  report["dims"] = st.dims;
  report["tolerance_profile"] = tol_json(tol);
  return report;
}

void write_report(const std::string& path, const ordered_json& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bail(kParse, path + ": cannot write report");
  out << report.dump(2) << '\n';
}

ordered_json amplitude_pairs(const r2s_pure* state) {
  int parties = 0;
  int dim = 0;
  check(r2s_pure_dims(state, &parties, &dim));
  std::size_t total = 1;
  for (int k = 0; k < parties; ++k) total *= static_cast<std::size_t>(dim);
  std::vector<double> raw(2 * total);
  check(r2s_pure_amplitudes(state, raw.data()));
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < total; ++i) {
    arr.push_back(ordered_json::array({raw[2 * i], raw[2 * i + 1]}));
  }
  return arr;
}

const char* decision_name(r2s_decision decision) {
  switch (decision) {
    case R2S_SEPARABLE:
      return "Separable";
    case R2S_ENTANGLED:
      return "Entangled";
    case R2S_BOTH_EIGENVECTORS_SEPARABLE:
      return "BothEigenvectorsSeparable";
  }
  return "Unknown";
}

/* ---- concurrence ---------------------------------------------------------- */

int run_concurrence(const std::string& path, const TolProfile& tol,
                    const std::string& json_out) {
  const LoadedState st = load_statefile(path, tol);
  if (st.kind != "pure") bail(kParse, "concurrence requires a kind=pure input");

  double c = 0.0;
  check(r2s_concurrence(st.pure.get(), &c));

  std::size_t cuts = 0;
  check(r2s_cut_count(st.num_parties, &cuts));
  std::vector<double> biquadratics(cuts);
  double i0 = 0.0;
  std::size_t count = 0;
  check(r2s_invariants(st.pure.get(), &i0, biquadratics.data(),
                       biquadratics.size(), &count));
  std::vector<std::string> labels(cuts);
  for (std::size_t i = 0; i < cuts; ++i) {
    char buf[128];
    check(r2s_cut_label(st.num_parties, i, buf, sizeof buf));
    labels[i] = buf;
  }

  std::printf("C = %.12g\n", c);
  std::printf("I0 = %.12g\n", i0);
  for (std::size_t i = 0; i < cuts; ++i) {
    std::printf("I[%s] = %.12g\n", labels[i].c_str(), biquadratics[i]);
  }

  if (!json_out.empty()) {
    ordered_json report = report_header("concurrence", st, tol);
    report["concurrence"] = c;
    ordered_json invariants;
    invariants["i0"] = i0;
    ordered_json per_cut;
    for (std::size_t i = 0; i < cuts; ++i) per_cut[labels[i]] = biquadratics[i];
    invariants["biquadratics"] = per_cut;
    report["invariants"] = invariants;
    write_report(json_out, report);
  }
  return kOk;
}

/* ---- decide ---------------------------------------------------------------- */

struct DecideOptions {
  std::string path;
  bool real_branch = false;
  bool verify = false;
  std::string json_out;
};

int run_decide(const DecideOptions& opt, const TolProfile& tol) {
  const LoadedState st = load_statefile(opt.path, tol);
  if (st.kind == "pure") {
    bail(kParse, "decide requires a kind=rank2 or kind=density input");
  }

  Rank2Handle mixture;
  if (st.kind == "density") {
    check(r2s_rank2_extract(st.density.get(), tol.extract, mixture.slot()));
  } else {
    check(r2s_rank2_create(st.p, st.e1.get(), st.e2.get(), tol.orth,
                           mixture.slot()));
  }

  double p = 0.0;
  check(r2s_rank2_p(mixture.get(), &p));
  PureHandle e1;
  PureHandle e2;
  check(r2s_rank2_eigenvector(mixture.get(), 1, e1.slot()));
  check(r2s_rank2_eigenvector(mixture.get(), 2, e2.slot()));

  double c1 = 0.0;
  double c2 = 0.0;
  check(r2s_concurrence(e1.get(), &c1));
  check(r2s_concurrence(e2.get(), &c2));

  VerdictHandle verdict;
  check(opt.real_branch
            ? r2s_decide_real(mixture.get(), tol.decision, verdict.slot())
            : r2s_decide(mixture.get(), tol.decision, verdict.slot()));

  r2s_decision decision;
  check(r2s_verdict_decision(verdict.get(), &decision));
  char condition[160] = {0};
  check(r2s_verdict_failed_condition(verdict.get(), condition,
                                     sizeof condition));

  int roots_present = 0;
  double mu1_re = 0.0, mu1_im = 0.0, mu2_re = 0.0, mu2_im = 0.0, theta = 0.0;
  check(r2s_verdict_roots(verdict.get(), &roots_present, &mu1_re, &mu1_im,
                          &mu2_re, &mu2_im, &theta));

  int has_decomposition = 0;
  check(r2s_verdict_has_decomposition(verdict.get(), &has_decomposition));
  double p_prime = 0.0;
  if (has_decomposition) check(r2s_verdict_p_prime(verdict.get(), &p_prime));

  std::size_t residual_count = 0;
  check(r2s_verdict_residual_count(verdict.get(), &residual_count));
  ordered_json residuals;
  std::vector<std::pair<std::string, double>> residual_list;
  for (std::size_t i = 0; i < residual_count; ++i) {
    char name[96];
    double value = 0.0;
    check(r2s_verdict_residual(verdict.get(), i, name, sizeof name, &value));
    residual_list.emplace_back(name, value);
    residuals[name] = value;
  }

  std::printf("decision: %s\n", decision_name(decision));
  if (st.kind == "density") std::printf("extracted p = %.12g\n", p);
  std::printf("C(E1) = %.12g\n", c1);
  std::printf("C(E2) = %.12g\n", c2);
  if (roots_present) {
    std::printf("theta = %.12g\n", theta);
    std::printf("mu1 = %.12g%+.12gi\n", mu1_re, mu1_im);
    std::printf("mu2 = %.12g%+.12gi\n", mu2_re, mu2_im);
  }
  if (has_decomposition) std::printf("p' = %.12g\n", p_prime);
  if (condition[0]) std::printf("failed condition: %s\n", condition);
  for (const auto& [name, value] : residual_list) {
    std::printf("residual %s = %.6e\n", name.c_str(), value);
  }

  int exit_code = decision == R2S_ENTANGLED ? kEntangled : kOk;

  ordered_json verify_block;
  if (opt.verify) {
    DensityHandle assembled;
    const r2s_density* rho = nullptr;
    if (st.kind == "density") {
      rho = st.density.get();
    } else {
      check(r2s_rank2_assemble(mixture.get(), assembled.slot()));
      rho = assembled.get();
    }

    PptHandle ppt;
    check(r2s_ppt_check(rho, tol.ppt, ppt.slot()));
    int ppt_passed = 0;
    check(r2s_ppt_report_passed(ppt.get(), &ppt_passed));
    std::size_t cuts = 0;
    check(r2s_ppt_report_count(ppt.get(), &cuts));
    ordered_json min_eigs;
    for (std::size_t i = 0; i < cuts; ++i) {
      char label[128];
      double min_eig = 0.0;
      check(r2s_ppt_report_entry(ppt.get(), i, label, sizeof label, &min_eig));
      min_eigs[label] = min_eig;
      residuals[std::string("ppt_min_eig:") + label] = min_eig;
    }
    verify_block["ppt_passed"] = ppt_passed != 0;
    verify_block["ppt_min_eigenvalues"] = min_eigs;

    bool certificate_ok = true;
    if (decision != R2S_ENTANGLED) {
      if (!ppt_passed) certificate_ok = false;
      if (has_decomposition) {
        PureHandle f1;
        PureHandle f2;
        check(r2s_verdict_component(verdict.get(), 1, f1.slot()));
        check(r2s_verdict_component(verdict.get(), 2, f2.slot()));
        DensityHandle reconstructed;
        check(r2s_reconstruct(p_prime, f1.get(), f2.get(),
                              reconstructed.slot()));
        double diff = 0.0;
        check(r2s_density_max_abs_diff(reconstructed.get(), rho, &diff));
        residuals["reconstruction_vs_input_max_abs"] = diff;
        verify_block["reconstruction_max_abs_diff"] = diff;
        // The certificate reconstructs the assembled mixture within the
        // decision tolerance and the extraction itself is accurate to the
        // extraction tolerance, so their sum bounds an honest certificate.
        if (!(diff <= tol.decision + tol.extract)) certificate_ok = false;
      } else {
        certificate_ok = false;
      }
    }
    verify_block["certificate_ok"] = certificate_ok;
    std::printf("verify: ppt %s\n", ppt_passed ? "passed" : "FAILED");
    if (decision != R2S_ENTANGLED) {
      std::printf("verify: certificate %s\n",
                  certificate_ok ? "confirmed" : "FAILED");
    }
    if (!certificate_ok) exit_code = kCertificate;
  }

  if (!opt.json_out.empty()) {
    ordered_json report = report_header("decide", st, tol);
    report["branch"] = opt.real_branch ? "real" : "complex";
    if (st.kind == "density") {
      ordered_json extraction;
      extraction["p"] = p;
      extraction["e1"] = amplitude_pairs(e1.get());
      extraction["e2"] = amplitude_pairs(e2.get());
      report["extraction"] = extraction;
    }
    report["decision"] = decision_name(decision);
    if (condition[0]) report["failed_condition"] = condition;
    ordered_json concurrences;
    concurrences["c_e1"] = c1;
    concurrences["c_e2"] = c2;
    report["concurrences"] = concurrences;
    if (roots_present) {
      report["theta"] = theta;
      ordered_json roots;
      roots["mu1"] = ordered_json::array({mu1_re, mu1_im});
      roots["mu2"] = ordered_json::array({mu2_re, mu2_im});
      report["roots"] = roots;
    }
    if (has_decomposition) report["p_prime"] = p_prime;
    report["residuals"] = residuals;
    if (opt.verify) report["verify"] = verify_block;
    write_report(opt.json_out, report);
  }
  return exit_code;
}

/* ---- verify ----------------------------------------------------------------- */

int run_verify(const std::string& path, const TolProfile& tol,
               const std::string& json_out) {
  const LoadedState st = load_statefile(path, tol);
  ordered_json report = report_header("verify", st, tol);
  int exit_code = kOk;

  if (st.kind == "pure") {
    int by_concurrence = 0;
    int by_svd = 0;
    check(r2s_is_pure_separable(st.pure.get(), tol.decision, &by_concurrence));
    check(r2s_pure_product_oracle(st.pure.get(), tol.decision, &by_svd));
    std::printf("concurrence separable: %s\n", by_concurrence ? "yes" : "no");
    std::printf("singular-value oracle: %s\n", by_svd ? "yes" : "no");
    ordered_json pure;
    pure["concurrence_separable"] = by_concurrence != 0;
    pure["svd_product"] = by_svd != 0;
    report["pure"] = pure;
    if (by_concurrence != by_svd) {
      std::printf("oracle disagreement\n");
      exit_code = kCertificate;
    } else {
      exit_code = by_concurrence ? kOk : kEntangled;
    }
  } else {
    DensityHandle assembled;
    Rank2Handle mixture;
    const r2s_density* rho = nullptr;
    if (st.kind == "density") {
      rho = st.density.get();
    } else {
      check(r2s_rank2_create(st.p, st.e1.get(), st.e2.get(), tol.orth,
                             mixture.slot()));
      check(r2s_rank2_assemble(mixture.get(), assembled.slot()));
      rho = assembled.get();
    }
    PptHandle ppt;
    check(r2s_ppt_check(rho, tol.ppt, ppt.slot()));
    int passed = 0;
    check(r2s_ppt_report_passed(ppt.get(), &passed));
    std::size_t cuts = 0;
    check(r2s_ppt_report_count(ppt.get(), &cuts));
    ordered_json min_eigs;
    for (std::size_t i = 0; i < cuts; ++i) {
      char label[128];
      double min_eig = 0.0;
      check(r2s_ppt_report_entry(ppt.get(), i, label, sizeof label, &min_eig));
      std::printf("ppt min eigenvalue %s = %.12g\n", label, min_eig);
      min_eigs[label] = min_eig;
    }
    std::printf("ppt: %s\n", passed ? "passed" : "FAILED");
    ordered_json ppt_block;
    ppt_block["passed"] = passed != 0;
    ppt_block["min_eigenvalues"] = min_eigs;
    report["ppt"] = ppt_block;
    exit_code = passed ? kOk : kEntangled;
  }

  if (!json_out.empty()) write_report(json_out, report);
  return exit_code;
}

/* ---- generate ------------------------------------------------------------ */

// std::normal_distribution is implementation-defined, and generated fixture
// files must be byte-identical across platforms for a fixed seed.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : engine_(seed) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  double uniform() { return (engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

using Cvec = std::vector<std::complex<double>>;

Cvec random_unit_vector(Gaussian& gauss, std::size_t n) {
  Cvec v(n);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& z : v) {
      z = {gauss(), gauss()};
      norm2 += std::norm(z);
    }
  } while (norm2 <= 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : v) z *= inv;
  return v;
}

Cvec random_product_state(Gaussian& gauss, int parties, int dim) {
  Cvec state{1.0};
  for (int k = 0; k < parties; ++k) {
    const Cvec factor = random_unit_vector(gauss, static_cast<std::size_t>(dim));
    Cvec next(state.size() * factor.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
      for (std::size_t j = 0; j < factor.size(); ++j) {
        next[i * factor.size() + j] = state[i] * factor[j];
      }
    }
    state = std::move(next);
  }
  return state;
}

std::complex<double> overlap(const Cvec& a, const Cvec& b) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

ordered_json complex_pairs(const Cvec& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& z : v) {
    arr.push_back(ordered_json::array({z.real(), z.imag()}));
  }
  return arr;
}

struct GenerateOptions {
  std::string kind;
  int parties = 3;
  int dim = 2;
  std::uint64_t seed = 1;
  double p = -1.0;
  std::string out;
};

int run_generate(const GenerateOptions& opt) {
  if (opt.parties < 2 || opt.parties > 10) {
    bail(kParse, "--parties must lie in [2, 10]");
  }
  if (opt.dim < 2 || opt.dim > 8) bail(kParse, "--dim must lie in [2, 8]");
  std::uint64_t total64 = 1;
  for (int k = 0; k < opt.parties; ++k) {
    total64 *= static_cast<std::uint64_t>(opt.dim);
    if (total64 > 4096) bail(kParse, "shape too large to generate");
  }
  const std::size_t total = static_cast<std::size_t>(total64);
  if (opt.p != -1.0 && !(opt.p > 0.0 && opt.p < 1.0)) {
    bail(kParse, "--p must lie in (0, 1)");
  }

  Gaussian gauss(opt.seed);
  ordered_json file;
  file["format_version"] = "1";
  std::vector<int> dims(static_cast<std::size_t>(opt.parties), opt.dim);

  if (opt.kind == "product-mixture") {
    if (total > 256) bail(kParse, "shape too large for a density output");
    const double p = opt.p == -1.0 ? 0.6 : opt.p;
    const Cvec u = random_product_state(gauss, opt.parties, opt.dim);
    Cvec v;
    do {
      v = random_product_state(gauss, opt.parties, opt.dim);
    } while (std::abs(overlap(u, v)) > 0.999);
    Cvec rho(total * total);
    for (std::size_t r = 0; r < total; ++r) {
      for (std::size_t c = 0; c < total; ++c) {
        rho[r * total + c] = p * u[r] * std::conj(u[c]) +
                             (1.0 - p) * v[r] * std::conj(v[c]);
      }
    }
    file["kind"] = "density";
    file["dims"] = dims;
    file["data"] = complex_pairs(rho);
  } else if (opt.kind == "ghz-orthogonal") {
    const double p = opt.p == -1.0 ? 0.3 : opt.p;
    PureHandle ghz;
    check(r2s_pure_ghz(opt.parties, opt.dim, ghz.slot()));
    std::vector<double> raw(2 * total);
    check(r2s_pure_amplitudes(ghz.get(), raw.data()));
    Cvec ghz_vec(total);
    for (std::size_t i = 0; i < total; ++i) {
      ghz_vec[i] = {raw[2 * i], raw[2 * i + 1]};
    }
    Cvec e1;
    double norm2 = 0.0;
    do {
      e1 = random_unit_vector(gauss, total);
      // Two projection passes push the GHZ component down to rounding noise.
      for (int pass = 0; pass < 2; ++pass) {
        const std::complex<double> g = overlap(ghz_vec, e1);
        for (std::size_t i = 0; i < total; ++i) e1[i] -= g * ghz_vec[i];
      }
      norm2 = 0.0;
      for (const auto& z : e1) norm2 += std::norm(z);
    } while (norm2 <= 0.25);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : e1) z *= inv;
    file["kind"] = "rank2";
    file["dims"] = dims;
    ordered_json data;
    data["p"] = p;
    data["e1"] = complex_pairs(e1);
    data["e2"] = complex_pairs(ghz_vec);
    file["data"] = data;
  } else if (opt.kind == "random-pure") {
    const Cvec state = random_unit_vector(gauss, total);
    file["kind"] = "pure";
    file["dims"] = dims;
    file["data"] = complex_pairs(state);
  } else {
    bail(kParse,
         "kind must be one of product-mixture, ghz-orthogonal, random-pure");
  }

  std::ofstream out(opt.out, std::ios::binary);
  if (!out) bail(kParse, opt.out + ": cannot write output file");
  out << file.dump(2) << '\n';
  std::printf("wrote %s (%s, %d parties of dimension %d, seed %llu)\n",
              opt.out.c_str(), opt.kind.c_str(), opt.parties, opt.dim,
              static_cast<unsigned long long>(opt.seed));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separability analysis for rank-two mixtures on multiple parties"};
  app.require_subcommand(1);
  const std::string version = std::string("r2sep ") + r2s_version();
  app.set_version_flag("--version", version);

  double tol_base = 1e-8;
  std::string tol_profile;
  std::string json_out;
  std::string path;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("path", path, "input state file")->required();
    cmd->add_option("--tol", tol_base,
                    "base decision tolerance; structural checks scale with it")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol-profile", tol_profile,
                    "comma-separated name=value tolerance overrides");
    cmd->add_option("--json-out", json_out,
                    "write the machine-readable report to this path");
  };

  CLI::App* concurrence = app.add_subcommand(
      "concurrence", "generalized concurrence of a pure state");
  add_common(concurrence);

  CLI::App* decide =
      app.add_subcommand("decide", "separability of a rank-two mixture");
  add_common(decide);
  bool real_branch = false;
  bool do_verify = false;
  decide->add_flag("--real-branch", real_branch,
                   "use the real-amplitude decision procedure");
  decide->add_flag("--verify", do_verify,
                   "re-check the verdict against the independent oracles");

  CLI::App* verify =
      app.add_subcommand("verify", "independent oracle battery");
  add_common(verify);

  CLI::App* generate =
      app.add_subcommand("generate", "emit a deterministic state file");
  GenerateOptions gen_opt;
  generate->add_option(
      "kind", gen_opt.kind,
      "one of product-mixture, ghz-orthogonal, random-pure")->required();
  generate->add_option("--parties", gen_opt.parties, "number of parties");
  generate->add_option("--dim", gen_opt.dim, "local dimension");
  generate->add_option("--seed", gen_opt.seed, "random seed");
  generate->add_option("--p", gen_opt.p, "mixing weight");
  generate->add_option("--out", gen_opt.out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kParse;
  }

  try {
    TolProfile tol = TolProfile::from_base(tol_base);
    if (!tol_profile.empty()) apply_overrides(tol, tol_profile);
    if (concurrence->parsed()) return run_concurrence(path, tol, json_out);
    if (decide->parsed()) {
      return run_decide({path, real_branch, do_verify, json_out}, tol);
    }
    if (verify->parsed()) return run_verify(path, tol, json_out);
    if (generate->parsed()) return run_generate(gen_opt);
  } catch (const CliError& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return err.exit_code;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "internal error: %s\n", err.what());
    return kCertificate;
  }
  return kParse;
}
