// Copyright 2026 The qeilab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qeilab/qeilab.h"

#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "qeilab/criteria.hpp"
#include "qeilab/error.hpp"
#include "qeilab/isingbound.hpp"
#include "qeilab/kernel.hpp"
#include "qeilab/models.hpp"
#include "qeilab/optimizer.hpp"
#include "qeilab/testfn.hpp"

struct qei_testfn {
  qei::TestFunction value;
};
struct qei_model {
  qei::Model value;
};
struct qei_poly {
  qei::PolynomialP value;
};
struct qei_grid {
  qei::RapidityGrid value;
};
struct qei_kernel {
  qei::KernelMatrix value;
};
struct qei_converged {
  qei::ConvergedBound value;
};

namespace {

thread_local std::string g_error;
thread_local double g_estimate = 0.0;

qei_status fail(qei_status s, const char* what, double estimate = 0.0) {
  g_error = what;
  g_estimate = estimate;
  return s;
}

template <class F>
qei_status guard(F&& f) noexcept {
  try {
    f();
    g_error.clear();
    g_estimate = 0.0;
    return QEI_OK;
  } catch (const qei::Error& e) {
    return fail(static_cast<qei_status>(e.code()), e.what(), e.estimate());
  } catch (const std::bad_alloc&) {
    return fail(QEI_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QEI_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QEI_ERR_INTERNAL, "unknown exception");
  }
}

template <class T>
void require(const T* p, const char* name) {
  if (p == nullptr) throw qei::invalid_argument(std::string(name) + " must not be NULL");
}

void copy_string(const std::string& s, char* buf, size_t cap, size_t* needed) {
  if (needed != nullptr) *needed = s.size() + 1;
  if (buf == nullptr || cap == 0) return;
  const size_t n = std::min(cap - 1, s.size());
  std::memcpy(buf, s.data(), n);
  buf[n] = '\0';
}

qei::Convention convention(qei_convention c) {
  switch (c) {
    case QEI_CONVENTION_PLAIN:
      return qei::Convention::plain;
    case QEI_CONVENTION_NORMALIZED:
      return qei::Convention::normalized;
  }
  throw qei::invalid_argument("unknown convention");
}

qei::GridOptions grid_options(const qei_grid_options& o) {
  qei::GridOptions g;
  switch (o.kind) {
    case QEI_GRID_GAUSS_LEGENDRE:
      g.kind = qei::GridKind::gauss_legendre;
      break;
    case QEI_GRID_COMPOSITE:
      g.kind = qei::GridKind::composite;
      break;
    default:
      throw qei::invalid_argument("unknown grid kind");
  }
  g.core_cutoff = o.core_cutoff;
  g.core_fraction = o.core_fraction;
  return g;
}

qei_asymptote_kind asymptote_kind(qei::Asymptote::Kind k) {
  switch (k) {
    case qei::Asymptote::Kind::finite:
      return QEI_ASYMPTOTE_FINITE;
    case qei::Asymptote::Kind::infinite:
      return QEI_ASYMPTOTE_INFINITE;
    case qei::Asymptote::Kind::inconclusive:
      break;
  }
  return QEI_ASYMPTOTE_INCONCLUSIVE;
}

std::optional<qei::Asymptote> declared(int has, double value) {
  if (!has) return std::nullopt;
  return qei::Asymptote::finite_at(value);
}

void split(std::complex<double> z, double* re, double* im) {
  if (re != nullptr) *re = z.real();
  if (im != nullptr) *im = z.imag();
}

qei::ClassifyOptions classify_options(const qei_classify_options* o) {
  qei::ClassifyOptions out;
  if (o != nullptr) {
    out.theta_max = o->theta_max;
    out.margin = o->margin;
    out.samples = o->samples;
  }
  return out;
}

void fill(const qei::QEIVerdict& v, qei_classification* out) {
  *out = qei_classification{};
  switch (v.verdict) {
    case qei::Verdict::holds:
      out->verdict = QEI_VERDICT_HOLDS;
      break;
    case qei::Verdict::no_go:
      out->verdict = QEI_VERDICT_NOGO;
      break;
    case qei::Verdict::inconclusive:
      out->verdict = QEI_VERDICT_INCONCLUSIVE;
      break;
  }
  out->c = v.c;
  out->divergent = v.divergent;
  out->by_degree = v.by_degree;
  out->theta_max = v.theta_max;
  out->margin = v.margin;
  out->pointwise_sup_ratio = v.pointwise_sup_ratio;
  out->real_part_ratio = v.real_part_ratio;
  out->alpha_admissible = -1;
  copy_string(v.reason, out->reason, sizeof out->reason, nullptr);
}

}  // namespace

extern "C" {

const char* qei_version(void) { return "0.1.0"; }
const char* qei_last_error(void) { return g_error.c_str(); }
double qei_last_error_estimate(void) { return g_estimate; }

const char* qei_status_name(qei_status s) {
  switch (s) {
    case QEI_OK:
      return "ok";
    case QEI_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case QEI_ERR_DOMAIN:
      return "domain";
    case QEI_ERR_NUMERICAL:
      return "numerical";
    case QEI_ERR_IO:
      return "io";
    case QEI_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

// ---- test functions

qei_status qei_testfn_gaussian(double sigma, double center, qei_testfn** out) {
  return guard([&] {
    require(out, "out");
    *out = new qei_testfn{qei::TestFunction::gaussian(sigma, center)};
  });
}

qei_status qei_testfn_bump(double sigma, double center, qei_testfn** out) {
  return guard([&] {
    require(out, "out");
    *out = new qei_testfn{qei::TestFunction::bump(sigma, center)};
  });
}

qei_status qei_testfn_tabulated(const double* samples, size_t count, double t_start,
                                double spacing, qei_testfn** out) {
  return guard([&] {
    require(out, "out");
    if (count > 0) require(samples, "samples");
    std::vector<double> v(samples, samples + count);
    *out = new qei_testfn{qei::TestFunction::tabulated(std::move(v), t_start, spacing)};
  });
}

qei_status qei_testfn_from_csv(const char* path, qei_testfn** out) {
  return guard([&] {
    require(out, "out");
    require(path, "path");
    *out = new qei_testfn{qei::TestFunction::from_csv(path)};
  });
}

qei_status qei_testfn_scaled(const qei_testfn* g, double s, qei_testfn** out) {
  return guard([&] {
    require(g, "g");
    require(out, "out");
    *out = new qei_testfn{g->value.scaled(s)};
  });
}

void qei_testfn_free(qei_testfn* g) { delete g; }

qei_status qei_testfn_eval(const qei_testfn* g, double t, double* value) {
  return guard([&] {
    require(g, "g");
    require(value, "value");
    *value = g->value(t);
  });
}

qei_status qei_testfn_fourier(const qei_testfn* g, double omega, qei_convention c, double* re,
                              double* im, double* error) {
  return guard([&] {
    require(g, "g");
    const auto s = g->value.fourier(omega, convention(c));
    split(s.value, re, im);
    if (error != nullptr) *error = s.error;
  });
}

qei_status qei_testfn_fourier_squared(const qei_testfn* g, double k, qei_convention c, double* re,
                                      double* im, double* error) {
  return guard([&] {
    require(g, "g");
    const auto s = g->value.fourier_squared(k, convention(c));
    split(s.value, re, im);
    if (error != nullptr) *error = s.error;
  });
}

int qei_testfn_compact(const qei_testfn* g) {
  return g != nullptr && g->value.compactly_supported() ? 1 : 0;
}

qei_status qei_testfn_describe(const qei_testfn* g, char* buf, size_t cap, size_t* needed) {
  return guard([&] {
    require(g, "g");
    copy_string(g->value.describe(), buf, cap, needed);
  });
}

// ---- models

qei_status qei_model_create(qei_model_kind kind, double mass, double coupling, const char* name,
                            qei_model** out) {
  return guard([&] {
    require(out, "out");
    std::optional<double> b;
    qei::ModelKind k;
    switch (kind) {
      case QEI_MODEL_FREE:
        k = qei::ModelKind::free;
        break;
      case QEI_MODEL_ISING:
        k = qei::ModelKind::ising;
        break;
      case QEI_MODEL_SINH_GORDON:
        k = qei::ModelKind::sinh_gordon;
        b = coupling;
        break;
      case QEI_MODEL_CUSTOM:
        throw qei::invalid_argument("custom models are created with qei_model_custom");
      default:
        throw qei::invalid_argument("unknown model kind");
    }
    *out = new qei_model{qei::Model::make(k, mass, b, name != nullptr ? name : "")};
  });
}

qei_status qei_model_custom(const char* name, double mass, qei_fmin_callback fmin, void* user,
                            int has_asymptote, double asymptote, qei_model** out) {
  return guard([&] {
    require(out, "out");
    if (fmin == nullptr) throw qei::invalid_argument("fmin callback must not be NULL");
    qei::CustomModelSpec spec;
    spec.fmin_shifted = [fmin, user](double theta) {
      double re = 0.0;
      double im = 0.0;
      if (fmin(theta, &re, &im, user) != 0)
        throw qei::numerical_error("custom F_min callback reported failure", 0.0);
      return std::complex<double>(re, im);
    };
    spec.asymptote = declared(has_asymptote, asymptote);
    *out = new qei_model{qei::Model::custom(name != nullptr ? name : "custom", mass, spec)};
  });
}

qei_status qei_model_from_table_csv(const char* name, double mass, const char* path,
                                    int has_asymptote, double asymptote, qei_model** out) {
  return guard([&] {
    require(out, "out");
    require(path, "path");
    *out = new qei_model{qei::Model::from_table_csv(name != nullptr ? name : "table", mass, path,
                                                    declared(has_asymptote, asymptote))};
  });
}

void qei_model_free(qei_model* m) { delete m; }

qei_model_kind qei_model_get_kind(const qei_model* m) {
  if (m == nullptr) return QEI_MODEL_CUSTOM;
  switch (m->value.kind()) {
    case qei::ModelKind::free:
      return QEI_MODEL_FREE;
    case qei::ModelKind::ising:
      return QEI_MODEL_ISING;
    case qei::ModelKind::sinh_gordon:
      return QEI_MODEL_SINH_GORDON;
    case qei::ModelKind::custom:
      break;
  }
  return QEI_MODEL_CUSTOM;
}

double qei_model_mass(const qei_model* m) { return m != nullptr ? m->value.mass() : 0.0; }

qei_status qei_model_name(const qei_model* m, char* buf, size_t cap, size_t* needed) {
  return guard([&] {
    require(m, "m");
    copy_string(m->value.name(), buf, cap, needed);
  });
}

qei_status qei_model_fmin_shifted(const qei_model* m, double theta, double* re, double* im) {
  return guard([&] {
    require(m, "m");
    split(m->value.fmin_shifted(theta), re, im);
  });
}

qei_status qei_model_s2(const qei_model* m, double theta, double* re, double* im) {
  return guard([&] {
    require(m, "m");
    split(m->value.s2(theta), re, im);
  });
}

qei_status qei_model_asymptote(const qei_model* m, qei_asymptote_kind* kind, double* value) {
  return guard([&] {
    require(m, "m");
    const auto a = m->value.asymptote();
    if (kind != nullptr) *kind = asymptote_kind(a.kind);
    if (value != nullptr) *value = a.is_finite() ? a.value : 0.0;
  });
}

// ---- polynomial

qei_status qei_poly_create(const double* coefficients, size_t count, qei_poly** out) {
  return guard([&] {
    require(out, "out");
    if (count == 0) throw qei::invalid_argument("polynomial needs at least one coefficient");
    require(coefficients, "coefficients");
    *out = new qei_poly{qei::PolynomialP::from_coefficients({coefficients, coefficients + count})};
  });
}

qei_status qei_poly_linear(double alpha, qei_poly** out) {
  return guard([&] {
    require(out, "out");
    *out = new qei_poly{qei::PolynomialP::linear(alpha)};
  });
}

void qei_poly_free(qei_poly* p) { delete p; }

int qei_poly_degree(const qei_poly* p) { return p != nullptr ? p->value.degree() : -1; }

qei_status qei_poly_coefficients(const qei_poly* p, double* out, size_t cap, size_t* count) {
  return guard([&] {
    require(p, "p");
    const auto c = p->value.coefficients();
    if (count != nullptr) *count = c.size();
    if (out != nullptr)
      for (size_t i = 0; i < std::min(cap, c.size()); ++i) out[i] = c[i];
  });
}

qei_status qei_poly_describe(const qei_poly* p, char* buf, size_t cap, size_t* needed) {
  return guard([&] {
    require(p, "p");
    copy_string(p->value.describe(), buf, cap, needed);
  });
}

qei_status qei_f_p(const qei_model* m, const qei_poly* p, double theta, double* re, double* im) {
  return guard([&] {
    require(m, "m");
    require(p, "p");
    split(qei::f_p(m->value, p->value, theta), re, im);
  });
}

// ---- grids and kernels

void qei_grid_options_default(qei_grid_options* o) {
  if (o == nullptr) return;
  const qei::GridOptions d;
  o->kind = QEI_GRID_COMPOSITE;
  o->core_cutoff = d.core_cutoff;
  o->core_fraction = d.core_fraction;
}

qei_status qei_grid_create(double cutoff, size_t n, const qei_grid_options* options,
                           qei_grid** out) {
  return guard([&] {
    require(out, "out");
    auto g = options != nullptr ? qei::make_grid(cutoff, n, grid_options(*options))
                                : qei::make_grid(cutoff, n);
    *out = new qei_grid{std::move(g)};
  });
}

void qei_grid_free(qei_grid* g) { delete g; }

size_t qei_grid_size(const qei_grid* g) { return g != nullptr ? g->value.size() : 0; }

qei_status qei_grid_nodes(const qei_grid* g, double* nodes, double* weights) {
  return guard([&] {
    require(g, "g");
    for (size_t i = 0; i < g->value.size(); ++i) {
      if (nodes != nullptr) nodes[i] = g->value.nodes[i];
      if (weights != nullptr) weights[i] = g->value.weights[i];
    }
  });
}

qei_status qei_kernel_assemble(const qei_model* m, const qei_poly* p, const qei_testfn* g,
                               const qei_grid* grid, qei_convention c, qei_kernel** out) {
  return guard([&] {
    require(m, "m");
    require(p, "p");
    require(g, "g");
    require(grid, "grid");
    require(out, "out");
    *out = new qei_kernel{qei::assemble(m->value, p->value, g->value, grid->value, convention(c))};
  });
}

void qei_kernel_free(qei_kernel* k) { delete k; }
size_t qei_kernel_size(const qei_kernel* k) { return k != nullptr ? k->value.size() : 0; }
double qei_kernel_norm(const qei_kernel* k) { return k != nullptr ? k->value.norm() : 0.0; }
double qei_kernel_asymmetry(const qei_kernel* k) {
  return k != nullptr ? k->value.provenance().asymmetry : 0.0;
}
double qei_kernel_hermiticity_defect(const qei_kernel* k) {
  return k != nullptr ? k->value.hermiticity_defect() : 0.0;
}

qei_status qei_kernel_entry(const qei_kernel* k, size_t i, size_t j, double* re, double* im) {
  return guard([&] {
    require(k, "k");
    if (i >= k->value.size() || j >= k->value.size())
      throw qei::invalid_argument("kernel index out of range");
    split(k->value.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), re, im);
  });
}

qei_status qei_kernel_write_csv(const qei_kernel* k, const char* path) {
  return guard([&] {
    require(k, "k");
    require(path, "path");
    k->value.write_csv(path);
    const std::string sidecar = std::string(path) + ".json";
    FILE* f = std::fopen(sidecar.c_str(), "wb");
    if (f == nullptr) throw qei::io_error("cannot open " + sidecar + " for writing");
    const std::string json = k->value.provenance_json() + "\n";
    const bool ok = std::fwrite(json.data(), 1, json.size(), f) == json.size();
    if (std::fclose(f) != 0 || !ok) throw qei::io_error("write failed: " + sidecar);
  });
}

qei_status qei_kernel_provenance_json(const qei_kernel* k, char* buf, size_t cap, size_t* needed) {
  return guard([&] {
    require(k, "k");
    copy_string(k->value.provenance_json(), buf, cap, needed);
  });
}

qei_status qei_kernel_quadratic_form(const qei_kernel* k, const double* re, const double* im,
                                     size_t count, double* value) {
  return guard([&] {
    require(k, "k");
    require(value, "value");
    if (count != k->value.size()) throw qei::invalid_argument("state dimension mismatch");
    qei::StateVector phi;
    phi.coefficients.resize(count);
    for (size_t i = 0; i < count; ++i)
      phi.coefficients[i] = {re != nullptr ? re[i] : 0.0, im != nullptr ? im[i] : 0.0};
    *value = qei::quadratic_form(k->value, phi);
  });
}

qei_status qei_kernel_min_eigenpair(const qei_kernel* k, qei_eigen_info* info, double* vec_re,
                                    double* vec_im) {
  return guard([&] {
    require(k, "k");
    const auto e = qei::min_eigenpair(k->value);
    if (info != nullptr) {
      info->value = e.value;
      info->residual = e.residual;
      info->raw_value = e.raw_value;
      info->refinement_steps = e.refinement_steps;
      info->degenerate = e.degenerate;
      info->multiplicity = e.multiplicity;
    }
    for (size_t i = 0; i < e.vector.size(); ++i) {
      if (vec_re != nullptr) vec_re[i] = e.vector.coefficients[i].real();
      if (vec_im != nullptr) vec_im[i] = e.vector.coefficients[i].imag();
    }
  });
}

// ---- best constant

void qei_minimize_options_default(qei_minimize_options* o) {
  if (o == nullptr) return;
  const qei::BestConstantOptions d;
  o->tolerance = d.tolerance;
  o->convention = QEI_CONVENTION_PLAIN;
  qei_grid_options_default(&o->grid);
  o->boundary_mass_limit = d.boundary_mass_limit;
  o->cutoff_step = d.cutoff_step;
  o->max_cutoff_extensions = d.max_cutoff_extensions;
}

qei_status qei_best_constant(const qei_model* m, const qei_poly* p, const qei_testfn* g,
                             const qei_ladder_stage* ladder, size_t stages,
                             const qei_minimize_options* options, qei_converged** out) {
  return guard([&] {
    require(m, "m");
    require(p, "p");
    require(g, "g");
    require(out, "out");
    if (stages > 0) require(ladder, "ladder");
    std::vector<qei::LadderStage> lad;
    for (size_t i = 0; i < stages; ++i) lad.push_back({ladder[i].cutoff, ladder[i].n});
    qei::BestConstantOptions o;
    if (options != nullptr) {
      o.tolerance = options->tolerance;
      o.convention = convention(options->convention);
      o.grid = grid_options(options->grid);
      o.boundary_mass_limit = options->boundary_mass_limit;
      o.cutoff_step = options->cutoff_step;
      o.max_cutoff_extensions = options->max_cutoff_extensions;
    }
    *out = new qei_converged{qei::best_constant(m->value, p->value, g->value, lad, o)};
  });
}

void qei_converged_free(qei_converged* b) { delete b; }

qei_status qei_converged_summary(const qei_converged* b, qei_converged_info* info) {
  return guard([&] {
    require(b, "b");
    require(info, "info");
    const auto& v = b->value;
    info->lambda_min = v.lambda_min;
    info->error_estimate = v.error_estimate;
    info->converged = v.converged;
    info->degenerate = v.degenerate;
    info->residual = v.residual;
    info->ladder_size = v.ladder.size();
    info->witness_size = v.witness.size();
  });
}

qei_status qei_converged_ladder(const qei_converged* b, size_t index, qei_ladder_entry* e) {
  return guard([&] {
    require(b, "b");
    require(e, "e");
    if (index >= b->value.ladder.size()) throw qei::invalid_argument("ladder index out of range");
    const auto& l = b->value.ladder[index];
    *e = {l.cutoff, l.n, l.lambda, l.boundary_mass, l.hermiticity_defect, l.norm, l.extension};
  });
}

qei_status qei_converged_witness(const qei_converged* b, double* theta, double* re, double* im) {
  return guard([&] {
    require(b, "b");
    const auto values = b->value.witness_function();
    for (size_t i = 0; i < values.size(); ++i) {
      if (theta != nullptr) theta[i] = b->value.grid.nodes[i];
      if (re != nullptr) re[i] = values[i].real();
      if (im != nullptr) im[i] = values[i].imag();
    }
  });
}

qei_status qei_converged_write_witness_csv(const qei_converged* b, const char* path) {
  return guard([&] {
    require(b, "b");
    require(path, "path");
    FILE* f = std::fopen(path, "wb");
    if (f == nullptr) throw qei::io_error(std::string("cannot open ") + path + " for writing");
    const auto values = b->value.witness_function();
    bool ok = std::fputs("theta,re,im\n", f) >= 0;
    for (size_t i = 0; i < values.size() && ok; ++i)
      ok = std::fprintf(f, "%.17g,%.17g,%.17g\n", b->value.grid.nodes[i], values[i].real(),
                        values[i].imag()) > 0;
    if (std::fclose(f) != 0 || !ok) throw qei::io_error(std::string("write failed: ") + path);
  });
}

// ---- criteria

void qei_scan_options_default(qei_scan_options* o) {
  if (o == nullptr) return;
  const qei::ScanOptions d;
  o->theta_max = d.theta_max;
  o->samples = d.samples;
  o->epsilon = d.epsilon;
}

qei_status qei_negativity_scan(const qei_model* m, const qei_poly* p,
                               const qei_scan_options* options, const qei_converged* bound,
                               qei_witness_info* out) {
  return guard([&] {
    require(m, "m");
    require(p, "p");
    require(out, "out");
    qei::ScanOptions o;
    if (options != nullptr) o = {options->theta_max, options->samples, options->epsilon};
    *out = qei_witness_info{};
    auto w = qei::negativity_scan(m->value, p->value, o);
    if (!w) return;
    out->found = 1;
    out->theta = w->theta;
    out->magnitude = w->magnitude;
    if (bound != nullptr && qei::attach_witness(*w, bound->value)) {
      out->has_state = 1;
      out->energy = *w->energy;
    }
  });
}

qei_status qei_scan_profile(const qei_model* m, const qei_poly* p, double theta_max,
                            size_t samples, double* theta, double* magnitude) {
  return guard([&] {
    require(m, "m");
    require(p, "p");
    const auto prof = qei::scan_profile(m->value, p->value, theta_max, samples);
    for (size_t i = 0; i < prof.size(); ++i) {
      if (theta != nullptr) theta[i] = prof[i].first;
      if (magnitude != nullptr) magnitude[i] = prof[i].second;
    }
  });
}

qei_status qei_admissible_alpha_bound(const qei_model* m, int* finite, double* bound) {
  return guard([&] {
    require(m, "m");
    const auto b = qei::admissible_alpha_bound(m->value);
    if (finite != nullptr) *finite = b.has_value();
    if (bound != nullptr) *bound = b.value_or(0.0);
  });
}

void qei_classify_options_default(qei_classify_options* o) {
  if (o == nullptr) return;
  const qei::ClassifyOptions d;
  o->theta_max = d.theta_max;
  o->margin = d.margin;
  o->samples = d.samples;
}

const char* qei_verdict_name(qei_verdict v) {
  switch (v) {
    case QEI_VERDICT_HOLDS:
      return "Holds";
    case QEI_VERDICT_NOGO:
      return "NoGo";
    case QEI_VERDICT_INCONCLUSIVE:
      return "Inconclusive";
  }
  return "Inconclusive";
}

qei_status qei_classify(const qei_model* m, const qei_poly* p, const qei_classify_options* options,
                        qei_classification* out) {
  return guard([&] {
    require(m, "m");
    require(p, "p");
    require(out, "out");
    const auto c = qei::classify(m->value, p->value, classify_options(options));
    fill(c.verdict, out);
    out->asymptote_kind = asymptote_kind(c.asymptote.kind);
    out->asymptote = c.asymptote.is_finite() ? c.asymptote.value : 0.0;
    out->has_alpha_bound = c.alpha_bound.has_value();
    out->alpha_bound = c.alpha_bound.value_or(0.0);
    out->alpha_admissible = c.alpha_admissible ? (*c.alpha_admissible ? 1 : 0) : -1;
  });
}

qei_status qei_classify_qei(const qei_model* m, const qei_poly* p,
                            const qei_classify_options* options, qei_classification* out) {
  return guard([&] {
    require(m, "m");
    require(p, "p");
    require(out, "out");
    fill(qei::classify_qei(m->value, p->value, classify_options(options)), out);
    const auto a = m->value.asymptote();
    out->asymptote_kind = asymptote_kind(a.kind);
    out->asymptote = a.is_finite() ? a.value : 0.0;
  });
}

// ---- Ising bound

qei_status qei_q_function(double u, double* value) {
  return guard([&] {
    require(value, "value");
    *value = qei::q_function(u);
  });
}

qei_status qei_write_q_csv(const char* path, double u_max, size_t count) {
  return guard([&] {
    require(path, "path");
    qei::write_q_csv(path, u_max, count);
  });
}

void qei_ising_bound_options_default(qei_ising_bound_options* o) {
  if (o == nullptr) return;
  const qei::IsingBoundOptions d;
  o->convention = QEI_CONVENTION_PLAIN;
  o->tail_tolerance = d.tail_tolerance;
  o->initial_cutoff = d.initial_cutoff;
  o->max_doublings = d.max_doublings;
}

qei_status qei_ising_bound(const qei_testfn* g, double mass, const qei_ising_bound_options* options,
                           qei_bound_result* out) {
  return guard([&] {
    require(g, "g");
    require(out, "out");
    qei::IsingBoundOptions o;
    if (options != nullptr) {
      o.convention = convention(options->convention);
      o.tail_tolerance = options->tail_tolerance;
      o.initial_cutoff = options->initial_cutoff;
      o.max_doublings = options->max_doublings;
    }
    const auto r = qei::ising_bound(g->value, mass, o);
    *out = {r.value, r.error, r.omega_cutoff, r.extrapolated ? 1 : 0};
  });
}

}  // extern "C"
