#include "rank2sep/rank2sep.h"

#include <cstring>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "core/concurrence.hpp"
#include "core/criterion.hpp"
#include "core/density.hpp"
#include "core/errors.hpp"
#include "core/oracle.hpp"
#include "core/pure_state.hpp"
#include "core/shape.hpp"

struct r2s_pure {
  rank2sep::PureState state;
};
struct r2s_density {
  rank2sep::DensityMatrix rho;
};
struct r2s_rank2 {
  rank2sep::RankTwoState state;
};
struct r2s_verdict {
  rank2sep::SeparabilityVerdict verdict;
};
struct r2s_factorization {
  rank2sep::ProductFactorization factorization;
};
struct r2s_ppt_report {
  rank2sep::PPTReport report;
};

namespace {

using rank2sep::Complex;
using rank2sep::Error;
using rank2sep::ErrorCode;

thread_local std::string g_last_error;

r2s_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return R2S_ERR_INVALID_ARGUMENT;
    case ErrorCode::ShapeMismatch: return R2S_ERR_SHAPE_MISMATCH;
    case ErrorCode::Unnormalized: return R2S_ERR_UNNORMALIZED;
    case ErrorCode::NotDensityMatrix: return R2S_ERR_NOT_DENSITY_MATRIX;
    case ErrorCode::NotRankTwo: return R2S_ERR_NOT_RANK_TWO;
    case ErrorCode::NotSeparable: return R2S_ERR_NOT_SEPARABLE;
    case ErrorCode::NotOrthogonalToGhz: return R2S_ERR_NOT_ORTHOGONAL_TO_GHZ;
    case ErrorCode::E2Separable: return R2S_ERR_E2_SEPARABLE;
    case ErrorCode::InconsistentRoots: return R2S_ERR_INCONSISTENT_ROOTS;
    case ErrorCode::ComplexInput: return R2S_ERR_COMPLEX_INPUT;
    case ErrorCode::Internal: return R2S_ERR_INTERNAL;
  }
  return R2S_ERR_INTERNAL;
}

template <typename F>
r2s_status guarded(F&& body) {
  try {
    return body();
  } catch (const Error& err) {
    g_last_error = err.what();
    return map_code(err.code());
  } catch (const std::exception& err) {
    g_last_error = err.what();
    return R2S_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return R2S_ERR_INTERNAL;
  }
}

r2s_status arg_error(const char* message) {
  g_last_error = message;
  return R2S_ERR_INVALID_ARGUMENT;
}

std::vector<Complex> from_interleaved(const double* data, std::size_t pairs) {
  std::vector<Complex> out(pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    out[i] = Complex(data[2 * i], data[2 * i + 1]);
  }
  return out;
}

void to_interleaved(const std::vector<Complex>& values, double* out) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[2 * i] = values[i].real();
    out[2 * i + 1] = values[i].imag();
  }
}

void copy_string(const std::string& value, char* buf, std::size_t cap) {
  if (cap == 0) return;
  const std::size_t n = value.size() < cap - 1 ? value.size() : cap - 1;
  std::memcpy(buf, value.data(), n);
  buf[n] = '\0';
}

const rank2sep::Decomposition* decomposition_of(const r2s_verdict* verdict) {
  if (!verdict->verdict.decomposition) return nullptr;
  return &*verdict->verdict.decomposition;
}

}  // namespace

extern "C" {

const char* r2s_version(void) { return "1.0.0"; }

const char* r2s_status_name(r2s_status status) {
  switch (status) {
    case R2S_OK: return "ok";
    case R2S_ERR_INVALID_ARGUMENT: return "invalid argument";
    case R2S_ERR_SHAPE_MISMATCH: return "shape mismatch";
    case R2S_ERR_UNNORMALIZED: return "unnormalized state";
    case R2S_ERR_NOT_DENSITY_MATRIX: return "not a density matrix";
    case R2S_ERR_NOT_RANK_TWO: return "not rank two";
    case R2S_ERR_NOT_SEPARABLE: return "not separable";
    case R2S_ERR_NOT_ORTHOGONAL_TO_GHZ: return "not orthogonal to GHZ";
    case R2S_ERR_E2_SEPARABLE: return "second eigenvector separable";
    case R2S_ERR_INCONSISTENT_ROOTS: return "inconsistent roots";
    case R2S_ERR_COMPLEX_INPUT: return "complex input";
    case R2S_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* r2s_last_error(void) { return g_last_error.c_str(); }

r2s_status r2s_cut_count(int num_parties, size_t* out) {
  if (!out) return arg_error("null pointer argument");
  if (num_parties < 2 || num_parties > 24) {
    return arg_error("num_parties out of range");
  }
  *out = (std::size_t{1} << (num_parties - 1)) - 1;
  return R2S_OK;
}

r2s_status r2s_cut_label(int num_parties, size_t index, char* label,
                         size_t cap) {
  if (!label) return arg_error("null pointer argument");
  return guarded([&] {
    // The label depends only on the party count, so any in-range local
    // dimension works for enumerating the cuts.
    const rank2sep::PartyShape shape(num_parties, 2);
    const auto cuts = rank2sep::canonical_bipartitions(shape);
    if (index >= cuts.size()) {
      rank2sep::fail(ErrorCode::InvalidArgument, "cut index out of range");
    }
    copy_string(cuts[index].label(), label, cap);
    return R2S_OK;
  });
}

/* ---- pure states ------------------------------------------------------ */

r2s_status r2s_pure_create(int num_parties, int local_dim,
                           const double* amplitudes, size_t len, int normalize,
                           double norm_tol, r2s_pure** out) {
  if (!amplitudes || !out) return arg_error("null pointer argument");
  return guarded([&] {
    const rank2sep::PartyShape shape(num_parties, local_dim);
    if (len != 2 * shape.total_dim()) {
      rank2sep::fail(ErrorCode::ShapeMismatch,
                     "amplitude buffer length must be 2 * local_dim^num_parties");
    }
    std::vector<Complex> amps = from_interleaved(amplitudes, shape.total_dim());
    const double tol = norm_tol > 0.0 ? norm_tol : rank2sep::tol::norm;
    auto state = normalize
                     ? rank2sep::PureState::create_normalized(shape, std::move(amps))
                     : rank2sep::PureState::create(shape, std::move(amps), tol);
    *out = new r2s_pure{std::move(state)};
    return R2S_OK;
  });
}

r2s_status r2s_pure_ghz(int num_parties, int local_dim, r2s_pure** out) {
  if (!out) return arg_error("null pointer argument");
  return guarded([&] {
    const rank2sep::PartyShape shape(num_parties, local_dim);
    *out = new r2s_pure{rank2sep::PureState::ghz(shape)};
    return R2S_OK;
  });
}

r2s_status r2s_pure_product(int num_parties, int local_dim,
                            const double* factors, r2s_pure** out) {
  if (!factors || !out) return arg_error("null pointer argument");
  return guarded([&] {
    const rank2sep::PartyShape shape(num_parties, local_dim);
    std::vector<std::vector<Complex>> parts;
    parts.reserve(static_cast<std::size_t>(num_parties));
    for (int k = 0; k < num_parties; ++k) {
      const double* block = factors + 2 * static_cast<std::size_t>(k) *
                                          static_cast<std::size_t>(local_dim);
      parts.push_back(
          from_interleaved(block, static_cast<std::size_t>(local_dim)));
    }
    *out = new r2s_pure{rank2sep::PureState::product(shape, parts)};
    return R2S_OK;
  });
}

void r2s_pure_free(r2s_pure* state) { delete state; }

r2s_status r2s_pure_dims(const r2s_pure* state, int* num_parties,
                         int* local_dim) {
  if (!state || !num_parties || !local_dim) {
    return arg_error("null pointer argument");
  }
  *num_parties = state->state.shape().num_parties;
  *local_dim = state->state.shape().local_dim;
  return R2S_OK;
}

r2s_status r2s_pure_amplitudes(const r2s_pure* state, double* out) {
  if (!state || !out) return arg_error("null pointer argument");
  to_interleaved(state->state.amplitudes(), out);
  return R2S_OK;
}

r2s_status r2s_pure_inner_product(const r2s_pure* a, const r2s_pure* b,
                                  double* re, double* im) {
  if (!a || !b || !re || !im) return arg_error("null pointer argument");
  return guarded([&] {
    const Complex value = rank2sep::inner_product(a->state, b->state);
    *re = value.real();
    *im = value.imag();
    return R2S_OK;
  });
}

r2s_status r2s_pure_apply_local_unitary(const r2s_pure* state,
                                        const double* factors,
                                        r2s_pure** out) {
  if (!state || !factors || !out) return arg_error("null pointer argument");
  return guarded([&] {
    const rank2sep::PartyShape& shape = state->state.shape();
    const int n = shape.local_dim;
    std::vector<Eigen::MatrixXcd> blocks;
    blocks.reserve(static_cast<std::size_t>(shape.num_parties));
    const double* cursor = factors;
    for (int k = 0; k < shape.num_parties; ++k) {
      Eigen::MatrixXcd u(n, n);
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          u(r, c) = Complex(cursor[0], cursor[1]);
          cursor += 2;
        }
      }
      blocks.push_back(std::move(u));
    }
    const auto unitary = rank2sep::LocalUnitary::create(shape, std::move(blocks));
    *out = new r2s_pure{rank2sep::apply_local_unitary(state->state, unitary)};
    return R2S_OK;
  });
}

/* ---- invariants and pure-state separability --------------------------- */

r2s_status r2s_concurrence(const r2s_pure* state, double* out) {
  if (!state || !out) return arg_error("null pointer argument");
  return guarded([&] {
    *out = rank2sep::concurrence(state->state);
    return R2S_OK;
  });
}

r2s_status r2s_invariants(const r2s_pure* state, double* i0,
                          double* biquadratics, size_t cap, size_t* count) {
  if (!state || !i0 || !count || (cap > 0 && !biquadratics)) {
    return arg_error("null pointer argument");
  }
  return guarded([&] {
    const rank2sep::InvariantSet set = rank2sep::invariants(state->state);
    *i0 = set.i0;
    *count = set.biquadratics.size();
    const std::size_t n = set.biquadratics.size() < cap
                              ? set.biquadratics.size()
                              : cap;
    for (std::size_t i = 0; i < n; ++i) biquadratics[i] = set.biquadratics[i];
    return R2S_OK;
  });
}

r2s_status r2s_is_pure_separable(const r2s_pure* state, double tolerance,
                                 int* out) {
  if (!state || !out) return arg_error("null pointer argument");
  const double tol = tolerance > 0.0 ? tolerance : rank2sep::tol::pure_sep;
  return guarded([&] {
    *out = rank2sep::is_pure_separable(state->state, tol) ? 1 : 0;
    return R2S_OK;
  });
}

r2s_status r2s_factorize(const r2s_pure* state, double tolerance,
                         r2s_factorization** out) {
  if (!state || !out) return arg_error("null pointer argument");
  const double tol = tolerance > 0.0 ? tolerance : rank2sep::tol::pure_sep;
  return guarded([&] {
    *out = new r2s_factorization{rank2sep::factorize(state->state, tol)};
    return R2S_OK;
  });
}

void r2s_factorization_free(r2s_factorization* f) { delete f; }

r2s_status r2s_factorization_factor(const r2s_factorization* f, int party,
                                    double* out) {
  if (!f || !out) return arg_error("null pointer argument");
  const auto& factors = f->factorization.factors;
  if (party < 0 || static_cast<std::size_t>(party) >= factors.size()) {
    return arg_error("party index out of range");
  }
  to_interleaved(factors[static_cast<std::size_t>(party)], out);
  return R2S_OK;
}

r2s_status r2s_factorization_global_phase(const r2s_factorization* f,
                                          double* re, double* im) {
  if (!f || !re || !im) return arg_error("null pointer argument");
  *re = f->factorization.global_phase.real();
  *im = f->factorization.global_phase.imag();
  return R2S_OK;
}

/* ---- density matrices -------------------------------------------------- */

r2s_status r2s_density_create(int num_parties, int local_dim,
                              const double* entries, size_t len,
                              double herm_tol, double trace_tol,
                              double psd_tol, r2s_density** out) {
  if (!entries || !out) return arg_error("null pointer argument");
  return guarded([&] {
    const rank2sep::PartyShape shape(num_parties, local_dim);
    const std::size_t dim = shape.total_dim();
    if (len != 2 * dim * dim) {
      rank2sep::fail(ErrorCode::ShapeMismatch,
                     "entry buffer length must be 2 * dim * dim");
    }
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(dim),
                       static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        const std::size_t at = 2 * (r * dim + c);
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            Complex(entries[at], entries[at + 1]);
      }
    }
    *out = new r2s_density{rank2sep::DensityMatrix::create(
        shape, std::move(m), herm_tol > 0.0 ? herm_tol : rank2sep::tol::herm,
        trace_tol > 0.0 ? trace_tol : rank2sep::tol::norm,
        psd_tol > 0.0 ? psd_tol : rank2sep::tol::psd)};
    return R2S_OK;
  });
}

void r2s_density_free(r2s_density* rho) { delete rho; }

r2s_status r2s_density_dims(const r2s_density* rho, int* num_parties,
                            int* local_dim) {
  if (!rho || !num_parties || !local_dim) {
    return arg_error("null pointer argument");
  }
  *num_parties = rho->rho.shape().num_parties;
  *local_dim = rho->rho.shape().local_dim;
  return R2S_OK;
}

r2s_status r2s_density_entries(const r2s_density* rho, double* out) {
  if (!rho || !out) return arg_error("null pointer argument");
  const Eigen::MatrixXcd& m = rho->rho.matrix();
  const auto dim = static_cast<std::size_t>(m.rows());
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const Complex v = m(static_cast<Eigen::Index>(r),
                          static_cast<Eigen::Index>(c));
      const std::size_t at = 2 * (r * dim + c);
      out[at] = v.real();
      out[at + 1] = v.imag();
    }
  }
  return R2S_OK;
}

r2s_status r2s_reconstruct(double p_prime, const r2s_pure* e1p,
                           const r2s_pure* e2p, r2s_density** out) {
  if (!e1p || !e2p || !out) return arg_error("null pointer argument");
  return guarded([&] {
    *out = new r2s_density{rank2sep::reconstruct(p_prime, e1p->state,
                                                 e2p->state)};
    return R2S_OK;
  });
}

r2s_status r2s_density_max_abs_diff(const r2s_density* a,
                                    const r2s_density* b, double* out) {
  if (!a || !b || !out) return arg_error("null pointer argument");
  return guarded([&] {
    *out = rank2sep::max_abs_diff(a->rho.matrix(), b->rho.matrix());
    return R2S_OK;
  });
}

r2s_status r2s_pure_product_oracle(const r2s_pure* state, double tolerance,
                                   int* out) {
  if (!state || !out) return arg_error("null pointer argument");
  const double tol = tolerance > 0.0 ? tolerance : rank2sep::tol::pure_sep;
  return guarded([&] {
    *out = rank2sep::pure_product_oracle(state->state, tol) ? 1 : 0;
    return R2S_OK;
  });
}

r2s_status r2s_ppt_check(const r2s_density* rho, double tolerance,
                         r2s_ppt_report** out) {
  if (!rho || !out) return arg_error("null pointer argument");
  const double tol = tolerance > 0.0 ? tolerance : rank2sep::tol::ppt;
  return guarded([&] {
    *out = new r2s_ppt_report{rank2sep::ppt_check(rho->rho, tol)};
    return R2S_OK;
  });
}

void r2s_ppt_report_free(r2s_ppt_report* report) { delete report; }

r2s_status r2s_ppt_report_passed(const r2s_ppt_report* report, int* out) {
  if (!report || !out) return arg_error("null pointer argument");
  *out = report->report.passed ? 1 : 0;
  return R2S_OK;
}

r2s_status r2s_ppt_report_count(const r2s_ppt_report* report, size_t* out) {
  if (!report || !out) return arg_error("null pointer argument");
  *out = report->report.per_bipartition.size();
  return R2S_OK;
}

r2s_status r2s_ppt_report_entry(const r2s_ppt_report* report, size_t index,
                                char* label, size_t cap,
                                double* min_eigenvalue) {
  if (!report || !label || !min_eigenvalue) {
    return arg_error("null pointer argument");
  }
  if (index >= report->report.per_bipartition.size()) {
    return arg_error("report index out of range");
  }
  const auto& entry = report->report.per_bipartition[index];
  copy_string(entry.first.label(), label, cap);
  *min_eigenvalue = entry.second;
  return R2S_OK;
}

/* ---- rank-two mixtures ------------------------------------------------- */

r2s_status r2s_rank2_create(double p, const r2s_pure* e1, const r2s_pure* e2,
                            double orth_tol, r2s_rank2** out) {
  if (!e1 || !e2 || !out) return arg_error("null pointer argument");
  return guarded([&] {
    *out = new r2s_rank2{rank2sep::RankTwoState::create(
        p, e1->state, e2->state,
        orth_tol > 0.0 ? orth_tol : rank2sep::tol::orth)};
    return R2S_OK;
  });
}

r2s_status r2s_rank2_extract(const r2s_density* rho, double tolerance,
                             r2s_rank2** out) {
  if (!rho || !out) return arg_error("null pointer argument");
  const double tol = tolerance > 0.0 ? tolerance : rank2sep::tol::extract;
  return guarded([&] {
    *out = new r2s_rank2{rank2sep::rank_two_extract(rho->rho, tol)};
    return R2S_OK;
  });
}

void r2s_rank2_free(r2s_rank2* state) { delete state; }

r2s_status r2s_rank2_p(const r2s_rank2* state, double* out) {
  if (!state || !out) return arg_error("null pointer argument");
  *out = state->state.p();
  return R2S_OK;
}

r2s_status r2s_rank2_eigenvector(const r2s_rank2* state, int which,
                                 r2s_pure** out) {
  if (!state || !out) return arg_error("null pointer argument");
  if (which != 1 && which != 2) return arg_error("which must be 1 or 2");
  *out = new r2s_pure{which == 1 ? state->state.e1() : state->state.e2()};
  return R2S_OK;
}

r2s_status r2s_rank2_assemble(const r2s_rank2* state, r2s_density** out) {
  if (!state || !out) return arg_error("null pointer argument");
  return guarded([&] {
    *out = new r2s_density{state->state.assemble()};
    return R2S_OK;
  });
}

r2s_status r2s_concurrence_ratio(const r2s_rank2* state, double tolerance,
                                 double* out) {
  if (!state || !out) return arg_error("null pointer argument");
  const double tol = tolerance > 0.0 ? tolerance : rank2sep::tol::pure_sep;
  return guarded([&] {
    *out = rank2sep::concurrence_ratio(state->state, tol);
    return R2S_OK;
  });
}

r2s_status r2s_corollary_bound_check(const r2s_pure* e1, double p,
                                     double orth_tol, int* out) {
  if (!e1 || !out) return arg_error("null pointer argument");
  const double tol = orth_tol > 0.0 ? orth_tol : rank2sep::tol::orth;
  return guarded([&] {
    *out = rank2sep::corollary_bound_check(e1->state, p, tol) ? 1 : 0;
    return R2S_OK;
  });
}

/* ---- separability decision --------------------------------------------- */

r2s_status r2s_decide(const r2s_rank2* state, double tolerance,
                      r2s_verdict** out) {
  if (!state || !out) return arg_error("null pointer argument");
  const double tol = tolerance > 0.0 ? tolerance : rank2sep::tol::decide;
  return guarded([&] {
    *out = new r2s_verdict{rank2sep::decide(state->state, tol)};
    return R2S_OK;
  });
}

r2s_status r2s_decide_real(const r2s_rank2* state, double tolerance,
                           r2s_verdict** out) {
  if (!state || !out) return arg_error("null pointer argument");
  const double tol = tolerance > 0.0 ? tolerance : rank2sep::tol::decide;
  return guarded([&] {
    *out = new r2s_verdict{rank2sep::decide_real(state->state, tol)};
    return R2S_OK;
  });
}

void r2s_verdict_free(r2s_verdict* verdict) { delete verdict; }

r2s_status r2s_verdict_decision(const r2s_verdict* verdict,
                                r2s_decision* out) {
  if (!verdict || !out) return arg_error("null pointer argument");
  switch (verdict->verdict.decision) {
    case rank2sep::Decision::Separable: *out = R2S_SEPARABLE; break;
    case rank2sep::Decision::Entangled: *out = R2S_ENTANGLED; break;
    case rank2sep::Decision::BothEigenvectorsSeparable:
      *out = R2S_BOTH_EIGENVECTORS_SEPARABLE;
      break;
  }
  return R2S_OK;
}

r2s_status r2s_verdict_failed_condition(const r2s_verdict* verdict, char* buf,
                                        size_t cap) {
  if (!verdict || !buf) return arg_error("null pointer argument");
  copy_string(verdict->verdict.witness.failed_condition, buf, cap);
  return R2S_OK;
}

r2s_status r2s_verdict_residual_count(const r2s_verdict* verdict,
                                      size_t* out) {
  if (!verdict || !out) return arg_error("null pointer argument");
  *out = verdict->verdict.witness.residuals.size();
  return R2S_OK;
}

r2s_status r2s_verdict_residual(const r2s_verdict* verdict, size_t index,
                                char* name, size_t name_cap, double* value) {
  if (!verdict || !name || !value) return arg_error("null pointer argument");
  const auto& residuals = verdict->verdict.witness.residuals;
  if (index >= residuals.size()) return arg_error("residual index out of range");
  auto it = residuals.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(index));
  copy_string(it->first, name, name_cap);
  *value = it->second;
  return R2S_OK;
}

r2s_status r2s_verdict_roots(const r2s_verdict* verdict, int* present,
                             double* mu1_re, double* mu1_im, double* mu2_re,
                             double* mu2_im, double* theta) {
  if (!verdict || !present || !mu1_re || !mu1_im || !mu2_re || !mu2_im ||
      !theta) {
    return arg_error("null pointer argument");
  }
  if (!verdict->verdict.roots) {
    *present = 0;
    *mu1_re = *mu1_im = *mu2_re = *mu2_im = *theta = 0.0;
    return R2S_OK;
  }
  const rank2sep::RootPair& roots = *verdict->verdict.roots;
  *present = 1;
  *mu1_re = roots.mu1.real();
  *mu1_im = roots.mu1.imag();
  *mu2_re = roots.mu2.real();
  *mu2_im = roots.mu2.imag();
  *theta = roots.theta;
  return R2S_OK;
}

r2s_status r2s_verdict_has_decomposition(const r2s_verdict* verdict,
                                         int* out) {
  if (!verdict || !out) return arg_error("null pointer argument");
  *out = verdict->verdict.decomposition ? 1 : 0;
  return R2S_OK;
}

r2s_status r2s_verdict_p_prime(const r2s_verdict* verdict, double* out) {
  if (!verdict || !out) return arg_error("null pointer argument");
  const auto* dec = decomposition_of(verdict);
  if (!dec) return arg_error("verdict carries no decomposition");
  *out = dec->p_prime;
  return R2S_OK;
}

r2s_status r2s_verdict_component(const r2s_verdict* verdict, int which,
                                 r2s_pure** out) {
  if (!verdict || !out) return arg_error("null pointer argument");
  if (which != 1 && which != 2) return arg_error("which must be 1 or 2");
  const auto* dec = decomposition_of(verdict);
  if (!dec) return arg_error("verdict carries no decomposition");
  *out = new r2s_pure{which == 1 ? dec->e1_prime : dec->e2_prime};
  return R2S_OK;
}

r2s_status r2s_verdict_component_factorization(const r2s_verdict* verdict,
                                               int which,
                                               r2s_factorization** out) {
  if (!verdict || !out) return arg_error("null pointer argument");
  if (which != 1 && which != 2) return arg_error("which must be 1 or 2");
  const auto* dec = decomposition_of(verdict);
  if (!dec) return arg_error("verdict carries no decomposition");
  *out = new r2s_factorization{which == 1 ? dec->factors1 : dec->factors2};
  return R2S_OK;
}

}  // extern "C"
