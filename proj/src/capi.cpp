#include "kherd.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "kherd/io.hpp"
#include "kherd/selection.hpp"
#include "kherd/svg.hpp"

namespace {

thread_local std::string g_last_error;

template <typename Fn>
kherd_status wrap(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return KHERD_OK;
  } catch (const kherd::IoError& e) {
    g_last_error = e.what();
    return KHERD_ERR_IO;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return KHERD_ERR_INVALID;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return KHERD_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KHERD_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

struct kherd_dataset {
  std::shared_ptr<const kherd::Dataset> data;
};

struct kherd_context {
  std::shared_ptr<const kherd::KernelContext> ctx;
  bool median_bandwidth = false;
};

struct kherd_selection {
  kherd::SelectionResult result;
  kherd::SelectionRecord record;
};

extern "C" {

const char* kherd_version(void) { return "0.1.0"; }

const char* kherd_last_error(void) { return g_last_error.c_str(); }

void kherd_string_free(char* s) { delete[] s; }

kherd_status kherd_dataset_create(const double* features, int64_t n, int64_t d,
                                  const int32_t* labels, kherd_dataset** out) {
  return wrap([&] {
    require(features != nullptr && out != nullptr, "null pointer argument");
    require(n >= 1 && d >= 1, "dataset must have n >= 1 and d >= 1");
    kherd::FeatureMatrix f(n, d);
    std::memcpy(f.data(), features,
                sizeof(double) * static_cast<std::size_t>(n) *
                    static_cast<std::size_t>(d));
    std::optional<std::vector<int32_t>> l;
    if (labels) l.emplace(labels, labels + n);
    auto ds = std::make_shared<const kherd::Dataset>(
        kherd::make_dataset(std::move(f), std::move(l)));
    *out = new kherd_dataset{std::move(ds)};
  });
}

kherd_status kherd_dataset_load(const char* path, const char* format,
                                kherd_dataset** out) {
  return wrap([&] {
    require(path != nullptr && out != nullptr, "null pointer argument");
    std::optional<kherd::FileFormat> fmt;
    if (format != nullptr) {
      const std::string f(format);
      if (f == "csv") {
        fmt = kherd::FileFormat::csv;
      } else if (f == "rdsb") {
        fmt = kherd::FileFormat::rdsb;
      } else {
        throw std::invalid_argument("unknown dataset format: " + f);
      }
    }
    auto ds = std::make_shared<const kherd::Dataset>(
        kherd::load_dataset(path, fmt));
    *out = new kherd_dataset{std::move(ds)};
  });
}

kherd_status kherd_dataset_save(const kherd_dataset* ds, const char* path,
                                const char* format) {
  return wrap([&] {
    require(ds != nullptr && path != nullptr && format != nullptr,
            "null pointer argument");
    const std::string f(format);
    kherd::FileFormat fmt;
    if (f == "csv") {
      fmt = kherd::FileFormat::csv;
    } else if (f == "rdsb") {
      fmt = kherd::FileFormat::rdsb;
    } else {
      throw std::invalid_argument("unknown dataset format: " + f);
    }
    kherd::save_dataset(*ds->data, path, fmt);
  });
}

int64_t kherd_dataset_n(const kherd_dataset* ds) {
  return ds ? ds->data->n() : 0;
}

int64_t kherd_dataset_d(const kherd_dataset* ds) {
  return ds ? ds->data->d() : 0;
}

int kherd_dataset_has_labels(const kherd_dataset* ds) {
  return ds && ds->data->has_labels() ? 1 : 0;
}

kherd_status kherd_dataset_fingerprint(const kherd_dataset* ds,
                                       char out[72]) {
  return wrap([&] {
    require(ds != nullptr && out != nullptr, "null pointer argument");
    const std::string hex = kherd::dataset_fingerprint(*ds->data);
    std::memcpy(out, hex.c_str(), hex.size() + 1);
  });
}

void kherd_dataset_free(kherd_dataset* ds) { delete ds; }

kherd_status kherd_synth(const char* dist, int64_t n, uint64_t seed,
                         kherd_dataset** out) {
  return wrap([&] {
    require(dist != nullptr && out != nullptr, "null pointer argument");
    auto ds = std::make_shared<const kherd::Dataset>(
        kherd::sample(kherd::DistributionSpec::from_name(dist), n, seed));
    *out = new kherd_dataset{std::move(ds)};
  });
}

kherd_status kherd_context_build(const kherd_dataset* ds,
                                 const kherd_kernel_options* opt,
                                 kherd_context** out) {
  return wrap([&] {
    require(ds != nullptr && out != nullptr, "null pointer argument");
    kherd::KernelSpec spec;
    bool median = true;
    double bandwidth = 0.0;
    bool cache_gram = false;
    if (opt) {
      if (opt->kind) spec.kind = kherd::kernel_kind_from_name(opt->kind);
      bandwidth = opt->bandwidth;
      if (opt->degree > 0.0) spec.degree = opt->degree;
      spec.offset = opt->offset;
      cache_gram = opt->cache_gram != 0;
    }
    if (spec.kind == kherd::KernelKind::polynomial) {
      median = false;
    } else if (bandwidth > 0.0) {
      spec.bandwidth = bandwidth;
      median = false;
    } else {
      spec.bandwidth = kherd::median_bandwidth(*ds->data);
    }
    spec.validate();
    kherd::ContextOptions ctx_opt;
    ctx_opt.cache_gram = cache_gram;
    auto ctx = std::make_shared<const kherd::KernelContext>(
        kherd::KernelContext::build(ds->data, spec, ctx_opt));
    *out = new kherd_context{std::move(ctx), median};
  });
}

double kherd_context_bandwidth(const kherd_context* ctx) {
  return ctx ? ctx->ctx->spec().bandwidth : 0.0;
}

double kherd_context_kbar(const kherd_context* ctx) {
  return ctx ? ctx->ctx->kbar() : 0.0;
}

void kherd_context_free(kherd_context* ctx) { delete ctx; }

kherd_status kherd_select(const kherd_context* ctx, int64_t m,
                          const kherd_select_options* opt,
                          kherd_selection** out) {
  return wrap([&] {
    require(ctx != nullptr && out != nullptr, "null pointer argument");
    kherd::SelectOptions options;
    bool check_bound = false;
    if (opt) {
      if (opt->algorithm) {
        options.algorithm = kherd::algorithm_from_name(opt->algorithm);
      }
      if (opt->alpha_rule) {
        options.alpha_rule = kherd::alpha_rule_from_name(opt->alpha_rule);
      }
      options.alpha = opt->alpha;
      options.seed = opt->seed;
      check_bound = opt->check_bound != 0;
    }

    auto sel = std::make_unique<kherd_selection>();
    sel->result = kherd::run_selection(*ctx->ctx, m, options);

    kherd::SelectionRecord& rec = sel->record;
    rec.dataset_hash = kherd::dataset_fingerprint(ctx->ctx->dataset());
    rec.n = ctx->ctx->n();
    rec.d = ctx->ctx->dataset().d();
    rec.kernel = ctx->ctx->spec();
    rec.sigma_rule = ctx->median_bandwidth ? "median" : "explicit";
    rec.alpha = sel->result.alpha;
    rec.algorithm = kherd::algorithm_name(sel->result.algorithm);
    rec.m = m;
    rec.indices = sel->result.indices;
    rec.final_alpha_mmd_sq = sel->result.criterion.value_or(0.0);
    if (check_bound) {
      const kherd::BoundConstants bc =
          kherd::bound_constants(*ctx->ctx, sel->result.alpha.value, m);
      kherd::BoundRecord br;
      br.c_alpha_sq = bc.c_alpha_sq;
      br.b = bc.b;
      br.rhs = bc.rhs;
      br.satisfied = rec.final_alpha_mmd_sq <= bc.rhs + 1e-9;
      rec.bound = br;
    }
    rec.wall_time_ms =
        static_cast<std::uint64_t>(sel->result.wall_ms < 0.0
                                       ? 0.0
                                       : sel->result.wall_ms + 0.5);
    rec.seed = opt ? opt->seed : 0;
    *out = sel.release();
  });
}

int64_t kherd_selection_size(const kherd_selection* sel) {
  return sel ? static_cast<int64_t>(sel->result.indices.size()) : 0;
}

kherd_status kherd_selection_indices(const kherd_selection* sel, int64_t* out,
                                     int64_t capacity) {
  return wrap([&] {
    require(sel != nullptr && out != nullptr, "null pointer argument");
    const auto& idx = sel->result.indices;
    require(capacity >= static_cast<int64_t>(idx.size()),
            "output capacity too small");
    for (std::size_t i = 0; i < idx.size(); ++i) {
      out[i] = static_cast<int64_t>(idx[i]);
    }
  });
}

double kherd_selection_criterion(const kherd_selection* sel) {
  return sel ? sel->result.criterion.value_or(0.0) : 0.0;
}

double kherd_selection_alpha(const kherd_selection* sel) {
  return sel ? sel->result.alpha.value : 0.0;
}

double kherd_selection_wall_ms(const kherd_selection* sel) {
  return sel ? sel->result.wall_ms : 0.0;
}

kherd_status kherd_selection_record_json(const kherd_selection* sel,
                                         char** out_json) {
  return wrap([&] {
    require(sel != nullptr && out_json != nullptr, "null pointer argument");
    *out_json = dup_string(kherd::to_json(sel->record));
  });
}

void kherd_selection_free(kherd_selection* sel) { delete sel; }

kherd_status kherd_alpha_mmd_sq(const kherd_context* ctx,
                                const int64_t* indices, int64_t m,
                                double alpha, double* out) {
  return wrap([&] {
    require(ctx != nullptr && indices != nullptr && out != nullptr,
            "null pointer argument");
    require(m >= 1, "index set must be non-empty");
    std::vector<kherd::Index> idx(indices, indices + m);
    *out = kherd::alpha_mmd_sq(*ctx->ctx, idx, alpha);
  });
}

kherd_status kherd_bound_constants(const kherd_context* ctx, double alpha,
                                   int64_t m, double* c_alpha_sq, double* b,
                                   double* rhs) {
  return wrap([&] {
    require(ctx != nullptr, "null pointer argument");
    const kherd::BoundConstants bc =
        kherd::bound_constants(*ctx->ctx, alpha, m);
    if (c_alpha_sq) *c_alpha_sq = bc.c_alpha_sq;
    if (b) *b = bc.b;
    if (rhs) *rhs = bc.rhs;
  });
}

kherd_status kherd_oracle_exhaustive_json(const kherd_context* ctx, int64_t m,
                                          double alpha, int with_replacement,
                                          char** out_json) {
  return wrap([&] {
    require(ctx != nullptr && out_json != nullptr, "null pointer argument");
    const kherd::OracleReport report =
        kherd::exhaustive_min(*ctx->ctx, m, alpha, with_replacement != 0);
    *out_json = dup_string(kherd::to_json(report));
  });
}

kherd_status kherd_bench_run_json(const char* config_json,
                                  char** out_report_json) {
  return wrap([&] {
    require(config_json != nullptr && out_report_json != nullptr,
            "null pointer argument");
    const kherd::BenchConfig config =
        kherd::bench_config_from_json(config_json);
    *out_report_json = dup_string(kherd::to_json(kherd::run_comparison(config)));
  });
}

kherd_status kherd_bench_report_csv(const char* report_json, char** out_csv) {
  return wrap([&] {
    require(report_json != nullptr && out_csv != nullptr,
            "null pointer argument");
    *out_csv = dup_string(
        kherd::bench_report_to_csv(kherd::bench_report_from_json(report_json)));
  });
}

kherd_status kherd_render_svg(const kherd_dataset* ds, const char* record_json,
                              int width, int height, char** out_svg) {
  return wrap([&] {
    require(ds != nullptr && record_json != nullptr && out_svg != nullptr,
            "null pointer argument");
    const kherd::SelectionRecord record =
        kherd::selection_record_from_json(record_json);
    kherd::SvgOptions options;
    if (width > 0) options.width = width;
    if (height > 0) options.height = height;
    *out_svg = dup_string(
        kherd::render_scatter_svg(*ds->data, record.indices, options));
  });
}

}  // extern "C"
