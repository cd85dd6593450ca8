// Copyright 2026 The evindep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "evindep/evindep.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "evindep/clustering.hpp"
#include "evindep/datagen.hpp"
#include "evindep/dependence.hpp"
#include "evindep/error.hpp"
#include "evindep/independence.hpp"
#include "evindep/mass.hpp"
#include "evindep/product_frame.hpp"
#include "evindep/serialize.hpp"

struct evd_mass {
  evindep::MassFunction value;
};

struct evd_dataset {
  evindep::Dataset value;
};

struct evd_report {
  evindep::IndependenceReport value;
};

namespace {

thread_local std::string last_error;

evd_status fail(evd_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
evd_status guarded(F&& body) {
  try {
    body();
    return EVD_OK;
  } catch (const evindep::Error& e) {
    return fail(static_cast<evd_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(EVD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(EVD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(EVD_ERR_INTERNAL, "unknown failure");
  }
}

#define EVD_REQUIRE(ptr)                                              \
  do {                                                                \
    if ((ptr) == nullptr)                                             \
      return fail(EVD_ERR_NULL_ARGUMENT, #ptr " must not be null");   \
  } while (0)

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

evd_mass* wrap(evindep::MassFunction m) { return new evd_mass{std::move(m)}; }

evindep::Frame make_frame(const char* const* labels, size_t n_labels) {
  if (n_labels > 0 && labels == nullptr)
    throw evindep::Error(evindep::ErrorCode::kInvalidArgument,
                         "labels must not be null");
  std::vector<std::string> names;
  names.reserve(n_labels);
  for (size_t i = 0; i < n_labels; ++i) {
    if (labels[i] == nullptr)
      throw evindep::Error(evindep::ErrorCode::kInvalidArgument,
                           "label must not be null");
    names.emplace_back(labels[i]);
  }
  return evindep::Frame(std::move(names));
}

evindep::DependenceMass to_core(const evd_dependence& d) {
  evindep::DependenceMass m{d.independent,  d.positive,     d.negative,
                            d.indep_or_pos, d.indep_or_neg, d.ignorance};
  m.validate();
  return m;
}

evd_dependence to_c(const evindep::DependenceMass& m) {
  return {m.independent,  m.positive,     m.negative,
          m.indep_or_pos, m.indep_or_neg, m.ignorance};
}

const evindep::DirectionReport& direction(const evd_report* r,
                                          evd_direction dir) {
  switch (dir) {
    case EVD_FORWARD:
      return r->value.forward;
    case EVD_BACKWARD:
      return r->value.backward;
  }
  throw evindep::Error(evindep::ErrorCode::kInvalidArgument,
                       "unknown direction");
}

evd_status copy_assignment(const evindep::Partition& p, size_t* assignment,
                           size_t capacity) {
  const auto& a = p.assignment();
  if (capacity < a.size())
    return fail(EVD_ERR_BUFFER_TOO_SMALL,
                "assignment buffer needs " + std::to_string(a.size()) +
                    " entries");
  std::copy(a.begin(), a.end(), assignment);
  return EVD_OK;
}

}  // namespace

extern "C" {

const char* evd_version(void) { return "0.1.0"; }

const char* evd_status_name(evd_status status) {
  switch (status) {
    case EVD_OK:
      return "OK";
    case EVD_ERR_NULL_ARGUMENT:
      return "NullArgument";
    case EVD_ERR_BUFFER_TOO_SMALL:
      return "BufferTooSmall";
    case EVD_ERR_INTERNAL:
      return "Internal";
    default:
      break;
  }
  if (status >= EVD_ERR_NON_UNIT_SUM && status <= EVD_ERR_IO)
    return evindep::error_code_name(static_cast<evindep::ErrorCode>(status)).data();
  return "Unknown";
}

const char* evd_last_error(void) { return last_error.c_str(); }

void evd_string_free(char* s) { delete[] s; }

evd_status evd_mass_create(const char* const* labels, size_t n_labels,
                           const uint32_t* sets, const double* masses,
                           size_t n_focals, evd_mass** out) {
  EVD_REQUIRE(out);
  if (n_focals > 0) {
    EVD_REQUIRE(sets);
    EVD_REQUIRE(masses);
  }
  return guarded([&] {
    std::vector<std::pair<evindep::Subset, double>> assignments;
    assignments.reserve(n_focals);
    for (size_t i = 0; i < n_focals; ++i)
      assignments.emplace_back(evindep::Subset{sets[i]}, masses[i]);
    *out = wrap(evindep::MassFunction::make(make_frame(labels, n_labels),
                                            std::move(assignments)));
  });
}

evd_status evd_mass_vacuous(const char* const* labels, size_t n_labels,
                            evd_mass** out) {
  EVD_REQUIRE(out);
  return guarded([&] {
    *out = wrap(evindep::MassFunction::vacuous(make_frame(labels, n_labels)));
  });
}

evd_status evd_mass_clone(const evd_mass* m, evd_mass** out) {
  EVD_REQUIRE(m);
  EVD_REQUIRE(out);
  return guarded([&] { *out = wrap(m->value); });
}

void evd_mass_free(evd_mass* m) { delete m; }

size_t evd_mass_frame_size(const evd_mass* m) {
  return m ? m->value.frame().size() : 0;
}

const char* evd_mass_label(const evd_mass* m, size_t index) {
  if (m == nullptr || index >= m->value.frame().size()) return nullptr;
  return m->value.frame().label(index).c_str();
}

size_t evd_mass_focal_count(const evd_mass* m) {
  return m ? m->value.size() : 0;
}

evd_status evd_mass_focal(const evd_mass* m, size_t index, uint32_t* set,
                          double* mass) {
  EVD_REQUIRE(m);
  if (index >= m->value.size())
    return fail(EVD_ERR_INVALID_ARGUMENT, "focal index out of range");
  const auto& f = m->value.focals()[index];
  if (set) *set = f.set.bits;
  if (mass) *mass = f.mass;
  return EVD_OK;
}

double evd_mass_value(const evd_mass* m, uint32_t set) {
  return m ? m->value[evindep::Subset{set}] : 0.0;
}

evd_status evd_mass_from_json(const char* text, evd_mass** out) {
  EVD_REQUIRE(text);
  EVD_REQUIRE(out);
  return guarded([&] { *out = wrap(evindep::mass_from_json(text)); });
}

evd_status evd_mass_to_json(const evd_mass* m, char** out) {
  EVD_REQUIRE(m);
  EVD_REQUIRE(out);
  return guarded([&] { *out = duplicate(evindep::mass_to_json(m->value, 2)); });
}

evd_status evd_mass_load(const char* path, evd_mass** out) {
  EVD_REQUIRE(path);
  EVD_REQUIRE(out);
  return guarded([&] {
    *out = wrap(evindep::mass_from_json(evindep::read_text_file(path)));
  });
}

evd_status evd_mass_save(const evd_mass* m, const char* path) {
  EVD_REQUIRE(m);
  EVD_REQUIRE(path);
  return guarded([&] {
    evindep::write_text_file_atomic(path, evindep::mass_to_json(m->value, 2));
  });
}

evd_status evd_combine(evd_rule rule, const evd_mass* const* masses, size_t n,
                       evd_mass** out) {
  EVD_REQUIRE(out);
  if (n == 0) return fail(EVD_ERR_EMPTY_LIST, "nothing to combine");
  EVD_REQUIRE(masses);
  for (size_t i = 0; i < n; ++i) EVD_REQUIRE(masses[i]);
  return guarded([&] {
    switch (rule) {
      case EVD_RULE_CONJUNCTIVE:
      case EVD_RULE_DISJUNCTIVE: {
        evindep::MassFunction acc = masses[0]->value;
        for (size_t i = 1; i < n; ++i)
          acc = rule == EVD_RULE_CONJUNCTIVE
                    ? evindep::conjunctive(acc, masses[i]->value)
                    : evindep::disjunctive(acc, masses[i]->value);
        *out = wrap(std::move(acc));
        return;
      }
      case EVD_RULE_MEAN: {
        std::vector<evindep::MassFunction> all;
        all.reserve(n);
        for (size_t i = 0; i < n; ++i) all.push_back(masses[i]->value);
        *out = wrap(evindep::mean_combine(all));
        return;
      }
    }
    throw evindep::Error(evindep::ErrorCode::kInvalidArgument,
                         "unknown combination rule");
  });
}

evd_status evd_condition(const evd_mass* m, uint32_t set, evd_mass** out) {
  EVD_REQUIRE(m);
  EVD_REQUIRE(out);
  return guarded([&] {
    *out = wrap(evindep::condition(m->value, evindep::Subset{set}));
  });
}

evd_status evd_decondition(const evd_mass* m, uint32_t set, evd_mass** out) {
  EVD_REQUIRE(m);
  EVD_REQUIRE(out);
  return guarded([&] {
    *out = wrap(evindep::decondition(m->value, evindep::Subset{set}));
  });
}

evd_status evd_discount(const evd_mass* m, double alpha, evd_mass** out) {
  EVD_REQUIRE(m);
  EVD_REQUIRE(out);
  return guarded([&] { *out = wrap(evindep::discount(m->value, alpha)); });
}

evd_status evd_reliability_discount(const evd_mass* m, double alpha,
                                    evd_mass** out) {
  EVD_REQUIRE(m);
  EVD_REQUIRE(out);
  return guarded(
      [&] { *out = wrap(evindep::reliability_discount(m->value, alpha)); });
}

evd_status evd_pignistic(const evd_mass* m, double* probs, size_t capacity) {
  EVD_REQUIRE(m);
  EVD_REQUIRE(probs);
  if (capacity < m->value.frame().size())
    return fail(EVD_ERR_BUFFER_TOO_SMALL, "probability buffer too small");
  return guarded([&] {
    const auto betp = evindep::pignistic(m->value);
    std::copy(betp.probs.begin(), betp.probs.end(), probs);
  });
}

evd_status evd_jousselme(const evd_mass* a, const evd_mass* b, double* out) {
  EVD_REQUIRE(a);
  EVD_REQUIRE(b);
  EVD_REQUIRE(out);
  return guarded([&] { *out = evindep::jousselme(a->value, b->value); });
}

evd_status evd_decision_class(const evd_mass* m, size_t* out) {
  EVD_REQUIRE(m);
  EVD_REQUIRE(out);
  return guarded([&] {
    *out = evindep::decision_class(m->value).indices().front();
  });
}

evd_status evd_dependence_from_parameters(double alpha, double beta,
                                          double gamma, evd_dependence* out) {
  EVD_REQUIRE(out);
  return guarded([&] {
    *out = to_c(evindep::DependenceMass::from_parameters(alpha, beta, gamma));
  });
}

evd_status evd_independence_adjust(const evd_mass* m,
                                   const evd_dependence* dependence,
                                   evd_mass** out) {
  EVD_REQUIRE(m);
  EVD_REQUIRE(dependence);
  EVD_REQUIRE(out);
  return guarded([&] {
    *out = wrap(evindep::independence_adjust(m->value, to_core(*dependence)));
  });
}

evd_status evd_closed_form_adjust(const evd_mass* m,
                                  const evd_dependence* dependence,
                                  evd_mass** out) {
  EVD_REQUIRE(m);
  EVD_REQUIRE(dependence);
  EVD_REQUIRE(out);
  return guarded([&] {
    *out = wrap(evindep::closed_form_adjust(m->value, to_core(*dependence)));
  });
}

evd_status evd_independence_adjust_trace(const evd_mass* m,
                                         const evd_dependence* dependence,
                                         evd_adjust_trace* out) {
  EVD_REQUIRE(m);
  EVD_REQUIRE(dependence);
  EVD_REQUIRE(out);
  return guarded([&] {
    auto t = evindep::trace_independence_adjust(m->value, to_core(*dependence));
    evd_adjust_trace result{};
    try {
      result.extended = wrap(std::move(t.extended));
      result.deconditioned_indep = wrap(std::move(t.deconditioned_indep));
      result.deconditioned_neg = wrap(std::move(t.deconditioned_neg));
      result.combined = wrap(std::move(t.combined));
      result.marginal = wrap(std::move(t.marginal));
    } catch (...) {
      evd_adjust_trace_free(&result);
      throw;
    }
    *out = result;
  });
}

void evd_adjust_trace_free(evd_adjust_trace* trace) {
  if (trace == nullptr) return;
  evd_mass_free(trace->extended);
  evd_mass_free(trace->deconditioned_indep);
  evd_mass_free(trace->deconditioned_neg);
  evd_mass_free(trace->combined);
  evd_mass_free(trace->marginal);
  *trace = evd_adjust_trace{};
}

uint32_t evd_product_rectangle(size_t n_right, uint32_t left, uint32_t right) {
  uint32_t out = 0;
  for (size_t i = 0; i < 32 && (left >> i) != 0; ++i) {
    if (((left >> i) & 1u) == 0) continue;
    for (size_t j = 0; j < n_right; ++j)
      if ((right >> j) & 1u) {
        const size_t bit = i * n_right + j;
        if (bit < 32) out |= uint32_t{1} << bit;
      }
  }
  return out;
}

evd_status evd_dataset_create(const char* source, const evd_mass* const* masses,
                              size_t n, evd_dataset** out) {
  EVD_REQUIRE(out);
  if (n == 0) return fail(EVD_ERR_EMPTY_LIST, "a dataset needs an object");
  EVD_REQUIRE(masses);
  for (size_t i = 0; i < n; ++i) EVD_REQUIRE(masses[i]);
  return guarded([&] {
    evindep::Dataset d{source ? source : "", masses[0]->value.frame(), {}};
    d.masses.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      evindep::require_same_frame(d.frame, masses[i]->value.frame());
      d.masses.push_back(masses[i]->value);
    }
    *out = new evd_dataset{std::move(d)};
  });
}

void evd_dataset_free(evd_dataset* d) { delete d; }

size_t evd_dataset_size(const evd_dataset* d) {
  return d ? d->value.masses.size() : 0;
}

const char* evd_dataset_source(const evd_dataset* d) {
  return d ? d->value.source.c_str() : nullptr;
}

evd_status evd_dataset_mass(const evd_dataset* d, size_t index,
                            evd_mass** out) {
  EVD_REQUIRE(d);
  EVD_REQUIRE(out);
  if (index >= d->value.masses.size())
    return fail(EVD_ERR_INVALID_ARGUMENT, "object index out of range");
  return guarded([&] { *out = wrap(d->value.masses[index]); });
}

evd_status evd_dataset_from_json(const char* text, evd_dataset** out) {
  EVD_REQUIRE(text);
  EVD_REQUIRE(out);
  return guarded(
      [&] { *out = new evd_dataset{evindep::dataset_from_json(text)}; });
}

evd_status evd_dataset_to_json(const evd_dataset* d, char** out) {
  EVD_REQUIRE(d);
  EVD_REQUIRE(out);
  return guarded([&] { *out = duplicate(evindep::dataset_to_json(d->value)); });
}

evd_status evd_dataset_load(const char* path, evd_dataset** out) {
  EVD_REQUIRE(path);
  EVD_REQUIRE(out);
  return guarded([&] {
    *out = new evd_dataset{
        evindep::dataset_from_json(evindep::read_text_file(path))};
  });
}

evd_status evd_dataset_save(const evd_dataset* d, const char* path) {
  EVD_REQUIRE(d);
  EVD_REQUIRE(path);
  return guarded([&] {
    evindep::write_text_file_atomic(path, evindep::dataset_to_json(d->value));
  });
}

evd_status evd_is_dataset_json(const char* text, int* out) {
  EVD_REQUIRE(text);
  EVD_REQUIRE(out);
  return guarded([&] { *out = evindep::looks_like_dataset(text) ? 1 : 0; });
}

evd_status evd_generate(const evd_generate_config* config, evd_dataset** first,
                        evd_dataset** second) {
  EVD_REQUIRE(config);
  EVD_REQUIRE(first);
  EVD_REQUIRE(second);
  return guarded([&] {
    evindep::GenConfig gc;
    gc.frame_size = config->frame_size;
    gc.n = config->n;
    gc.seed = config->seed;
    switch (config->scenario) {
      case EVD_SCENARIO_INDEPENDENT:
        gc.scenario = evindep::Scenario::kIndependent;
        break;
      case EVD_SCENARIO_POSITIVE:
        gc.scenario = evindep::Scenario::kPositive;
        break;
      case EVD_SCENARIO_NEGATIVE:
        gc.scenario = evindep::Scenario::kNegative;
        break;
      default:
        throw evindep::Error(evindep::ErrorCode::kInvalidArgument,
                             "unknown scenario");
    }
    if (config->contradiction)
      gc.contradiction.assign(config->contradiction,
                              config->contradiction + config->frame_size);
    auto g = evindep::generate(gc);
    auto a = std::make_unique<evd_dataset>(
        evd_dataset{{"S1", g.frame, std::move(g.first)}});
    auto b = std::make_unique<evd_dataset>(
        evd_dataset{{"S2", g.frame, std::move(g.second)}});
    *first = a.release();
    *second = b.release();
  });
}

evd_status evd_cluster(const evd_dataset* d, size_t n_clusters, uint64_t seed,
                       size_t* assignment, size_t capacity) {
  EVD_REQUIRE(d);
  EVD_REQUIRE(assignment);
  evd_status status = EVD_OK;
  const evd_status caught = guarded([&] {
    const auto p = evindep::cluster_masses(d->value.masses, n_clusters, seed);
    status = copy_assignment(p, assignment, capacity);
  });
  return caught != EVD_OK ? caught : status;
}

evd_status evd_analyze(const evd_dataset* first, const evd_dataset* second,
                       const evd_analysis_config* config, evd_report** out) {
  EVD_REQUIRE(first);
  EVD_REQUIRE(second);
  EVD_REQUIRE(out);
  return guarded([&] {
    evindep::AnalysisConfig ac;
    if (config) {
      if (config->clusters != 0) ac.clusters = config->clusters;
      ac.seed = config->seed;
      switch (config->alpha_policy) {
        case EVD_ALPHA_ONE:
          ac.alpha_policy = evindep::AlphaPolicy::kOne;
          break;
        case EVD_ALPHA_CLUSTER_SIZE:
          ac.alpha_policy = evindep::AlphaPolicy::kClusterSize;
          break;
        default:
          throw evindep::Error(evindep::ErrorCode::kInvalidArgument,
                               "unknown alpha policy");
      }
    }
    evindep::require_same_frame(first->value.frame, second->value.frame);
    *out = new evd_report{
        evindep::analyze(first->value.masses, second->value.masses, ac)};
  });
}

void evd_report_free(evd_report* r) { delete r; }

size_t evd_report_clusters(const evd_report* r) {
  return r ? r->value.n_clusters : 0;
}

evd_status evd_report_direction(const evd_report* r, evd_direction dir,
                                evd_direction_summary* out) {
  EVD_REQUIRE(r);
  EVD_REQUIRE(out);
  return guarded([&] {
    const auto& d = direction(r, dir);
    evd_direction_summary s{};
    s.m_independent = d.independence.independent;
    s.m_dependent = d.independence.dependent;
    s.m_ignorance = d.independence.ignorance;
    s.dependence = to_c(d.dependence);
    s.independence_degree = d.degrees.independence;
    s.dependence_degree = d.degrees.dependence;
    s.betp_independent = d.dependence_degrees.independent;
    s.betp_positive = d.dependence_degrees.positive;
    s.betp_negative = d.dependence_degrees.negative;
    s.n_pairs = d.links.size();
    *out = s;
  });
}

evd_status evd_report_pair(const evd_report* r, evd_direction dir, size_t index,
                           evd_pair_link* out) {
  EVD_REQUIRE(r);
  EVD_REQUIRE(out);
  return guarded([&] {
    const auto& links = direction(r, dir).links;
    if (index >= links.size())
      throw evindep::Error(evindep::ErrorCode::kInvalidArgument,
                           "pair index out of range");
    const auto& l = links[index];
    *out = evd_pair_link{l.row, l.col, l.beta, l.alpha, l.conf.value_or(1.0)};
  });
}

evd_status evd_report_beta(const evd_report* r, evd_direction dir, size_t row,
                           size_t col, double* out) {
  EVD_REQUIRE(r);
  EVD_REQUIRE(out);
  return guarded([&] {
    const auto& m = dir == EVD_FORWARD ? r->value.m1 : r->value.m2;
    if (row >= m.size() || col >= m.size())
      throw evindep::Error(evindep::ErrorCode::kInvalidArgument,
                           "matrix index out of range");
    *out = m(row, col);
  });
}

evd_status evd_report_assignment(const evd_report* r, int source,
                                 size_t* assignment, size_t capacity) {
  EVD_REQUIRE(r);
  EVD_REQUIRE(assignment);
  if (source != 0 && source != 1)
    return fail(EVD_ERR_INVALID_ARGUMENT, "source must be 0 or 1");
  return copy_assignment(source == 0 ? r->value.first : r->value.second,
                         assignment, capacity);
}

evd_status evd_report_to_json(const evd_report* r, char** out) {
  EVD_REQUIRE(r);
  EVD_REQUIRE(out);
  return guarded([&] { *out = duplicate(evindep::report_to_json(r->value)); });
}

}  // extern "C"
