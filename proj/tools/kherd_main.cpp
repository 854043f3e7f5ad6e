// Command-line front end. Everything goes through the shared library's C API
// (kherd.h); this translation unit holds only flag parsing and file plumbing.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kherd.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

int exit_code_for(kherd_status status) {
  switch (status) {
    case KHERD_OK:
      return kExitOk;
    case KHERD_ERR_IO:
      return kExitIo;
    default:
      return kExitValidation;
  }
}

int fail(kherd_status status) {
  std::cerr << "error: " << kherd_last_error() << "\n";
  return exit_code_for(status);
}

// RAII helpers around the C handles.
struct DatasetHandle {
  kherd_dataset* ptr = nullptr;
  ~DatasetHandle() { kherd_dataset_free(ptr); }
};
struct ContextHandle {
  kherd_context* ptr = nullptr;
  ~ContextHandle() { kherd_context_free(ptr); }
};
struct SelectionHandle {
  kherd_selection* ptr = nullptr;
  ~SelectionHandle() { kherd_selection_free(ptr); }
};
struct ApiString {
  char* ptr = nullptr;
  ~ApiString() { kherd_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

int write_output(const std::string& path, const std::string& contents) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out || !out.write(contents.data(),
                           static_cast<std::streamsize>(contents.size()))) {
      std::cerr << "error: cannot write " << path << "\n";
      return kExitIo;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::cerr << "error: cannot write " << path << ": " << ec.message() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

std::optional<std::string> read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct SelectArgs {
  std::string input;
  std::int64_t m = 0;
  std::string alpha = "auto";
  std::string kernel = "gaussian";
  std::string bandwidth = "median";
  std::string algorithm = "gkhr";
  double degree = 2.0;
  double offset = 1.0;
  bool gram_cache = false;
  std::uint64_t seed = 0;
  std::string output;
  bool check_bound = false;
};

int run_select(const SelectArgs& args) {
  DatasetHandle ds;
  kherd_status st = kherd_dataset_load(args.input.c_str(), nullptr, &ds.ptr);
  if (st != KHERD_OK) return fail(st);

  if (args.kernel == "polynomial") {
    std::cerr << "warning: the polynomial kernel is not characteristic; the "
                 "discrepancy it induces is not a metric on distributions\n";
  }

  kherd_kernel_options kopt{};
  kopt.kind = args.kernel.c_str();
  kopt.bandwidth = 0.0;  // median
  if (args.bandwidth != "median") {
    try {
      kopt.bandwidth = std::stod(args.bandwidth);
    } catch (const std::exception&) {
      std::cerr << "error: --bandwidth must be 'median' or a number\n";
      return kExitValidation;
    }
    if (kopt.bandwidth <= 0.0) {
      std::cerr << "error: --bandwidth must be positive\n";
      return kExitValidation;
    }
  }
  kopt.degree = args.degree;
  kopt.offset = args.offset;
  kopt.cache_gram = args.gram_cache ? 1 : 0;

  ContextHandle ctx;
  st = kherd_context_build(ds.ptr, &kopt, &ctx.ptr);
  if (st != KHERD_OK) return fail(st);

  kherd_select_options sopt{};
  sopt.algorithm = args.algorithm.c_str();
  double alpha_value = 0.0;
  if (args.alpha == "auto") {
    sopt.alpha_rule = "auto";
  } else if (args.alpha == "ratio") {
    sopt.alpha_rule = "ratio";
  } else {
    try {
      alpha_value = std::stod(args.alpha);
    } catch (const std::exception&) {
      std::cerr << "error: --alpha must be 'auto', 'ratio' or a number\n";
      return kExitValidation;
    }
    sopt.alpha_rule = "explicit";
    sopt.alpha = alpha_value;
  }
  sopt.seed = args.seed;
  sopt.check_bound = args.check_bound ? 1 : 0;

  SelectionHandle sel;
  st = kherd_select(ctx.ptr, args.m, &sopt, &sel.ptr);
  if (st != KHERD_OK) return fail(st);

  ApiString json;
  st = kherd_selection_record_json(sel.ptr, &json.ptr);
  if (st != KHERD_OK) return fail(st);

  const int rc = write_output(args.output, json.str());
  if (rc != kExitOk) return rc;
  std::cout << "selected " << kherd_selection_size(sel.ptr) << " of "
            << kherd_dataset_n(ds.ptr)
            << " samples (alpha=" << kherd_selection_alpha(sel.ptr)
            << ", criterion=" << kherd_selection_criterion(sel.ptr) << ") -> "
            << args.output << "\n";
  return kExitOk;
}

struct BenchArgs {
  std::vector<std::string> dists;
  std::vector<std::int64_t> ns;
  std::vector<double> fracs;
  int runs = 10;
  std::string alpha_rule = "ratio";
  double alpha_explicit = 1.0;
  std::uint64_t seed = 0;
  std::string output;
  std::string csv;
};

int run_bench(const BenchArgs& args) {
  nlohmann::ordered_json config;
  config["distributions"] = args.dists;
  config["ns"] = args.ns;
  config["fracs"] = args.fracs;
  config["runs"] = args.runs;
  config["alpha_rule"] = args.alpha_rule;
  config["alpha_explicit"] = args.alpha_explicit;
  config["seed"] = args.seed;

  ApiString report;
  kherd_status st =
      kherd_bench_run_json(config.dump().c_str(), &report.ptr);
  if (st != KHERD_OK) return fail(st);

  const auto parsed = nlohmann::json::parse(report.str());
  for (const auto& warning : parsed.at("warnings")) {
    std::cerr << "warning: " << warning.get<std::string>() << "\n";
  }
  for (const auto& cell : parsed.at("cells")) {
    std::printf("%-15s n=%-6" PRId64 " m/n=%-5g m=%-5" PRId64
                " alpha=%-8g D=% .4f +/- %.4f\n",
                cell.at("distribution").get<std::string>().c_str(),
                cell.at("n").get<std::int64_t>(),
                cell.at("frac").get<double>(),
                cell.at("m").get<std::int64_t>(),
                cell.at("alpha").get<double>(),
                cell.at("d_mean").get<double>(),
                cell.at("d_std").get<double>());
  }

  int rc = write_output(args.output, report.str());
  if (rc != kExitOk) return rc;
  if (!args.csv.empty()) {
    ApiString csv;
    st = kherd_bench_report_csv(report.ptr, &csv.ptr);
    if (st != KHERD_OK) return fail(st);
    rc = write_output(args.csv, csv.str());
    if (rc != kExitOk) return rc;
  }
  return kExitOk;
}

struct SynthArgs {
  std::string dist;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "csv";
};

int run_synth(const SynthArgs& args) {
  DatasetHandle ds;
  kherd_status st = kherd_synth(args.dist.c_str(), args.n, args.seed, &ds.ptr);
  if (st != KHERD_OK) return fail(st);
  st = kherd_dataset_save(ds.ptr, args.output.c_str(), args.format.c_str());
  if (st != KHERD_OK) return fail(st);
  std::cout << "wrote " << kherd_dataset_n(ds.ptr) << "x"
            << kherd_dataset_d(ds.ptr) << " dataset -> " << args.output
            << "\n";
  return kExitOk;
}

struct OracleArgs {
  std::string input;
  std::int64_t m = 0;
  double alpha = 1.0;
  bool replacement = false;
  std::string bandwidth = "median";
  std::string output;
};

int run_oracle(const OracleArgs& args) {
  DatasetHandle ds;
  kherd_status st = kherd_dataset_load(args.input.c_str(), nullptr, &ds.ptr);
  if (st != KHERD_OK) return fail(st);

  kherd_kernel_options kopt{};
  kopt.kind = "gaussian";
  if (args.bandwidth != "median") {
    try {
      kopt.bandwidth = std::stod(args.bandwidth);
    } catch (const std::exception&) {
      std::cerr << "error: --bandwidth must be 'median' or a number\n";
      return kExitValidation;
    }
  }
  ContextHandle ctx;
  st = kherd_context_build(ds.ptr, &kopt, &ctx.ptr);
  if (st != KHERD_OK) return fail(st);

  ApiString json;
  st = kherd_oracle_exhaustive_json(ctx.ptr, args.m, args.alpha,
                                    args.replacement ? 1 : 0, &json.ptr);
  if (st != KHERD_OK) return fail(st);

  const int rc = write_output(args.output, json.str());
  if (rc != kExitOk) return rc;
  const auto parsed = nlohmann::json::parse(json.str());
  std::cout << "enumerated " << parsed.at("enumerated").get<std::uint64_t>()
            << " candidates; best value "
            << parsed.at("best_value").get<double>() << ", greedy gap "
            << parsed.at("gap").get<double>() << " -> " << args.output << "\n";
  return kExitOk;
}

struct VizArgs {
  std::string input;
  std::string selection;
  std::string output;
  int width = 800;
  int height = 800;
};

int run_viz(const VizArgs& args) {
  DatasetHandle ds;
  kherd_status st = kherd_dataset_load(args.input.c_str(), nullptr, &ds.ptr);
  if (st != KHERD_OK) return fail(st);

  const auto record = read_input(args.selection);
  if (!record) {
    std::cerr << "error: cannot open " << args.selection << "\n";
    return kExitIo;
  }
  ApiString svg;
  st = kherd_render_svg(ds.ptr, record->c_str(), args.width, args.height,
                        &svg.ptr);
  if (st != KHERD_OK) return fail(st);
  return write_output(args.output, svg.str());
}

struct TimeArgs {
  std::vector<std::int64_t> ns;
  std::int64_t m = 0;
  std::string dist = "uniform-square";
  std::uint64_t seed = 0;
  int runs = 3;
  std::string output;
};

int run_time(const TimeArgs& args) {
  nlohmann::ordered_json out;
  out["m"] = args.m;
  out["dist"] = args.dist;
  out["seed"] = args.seed;
  out["runs"] = args.runs;
  auto cells = nlohmann::ordered_json::array();

  std::vector<double> medians;
  for (std::size_t i = 0; i < args.ns.size(); ++i) {
    const std::int64_t n = args.ns[i];
    DatasetHandle ds;
    kherd_status st =
        kherd_synth(args.dist.c_str(), n, args.seed + i, &ds.ptr);
    if (st != KHERD_OK) return fail(st);
    ContextHandle ctx;
    kherd_kernel_options kopt{};  // gaussian, median bandwidth, no Gram cache
    st = kherd_context_build(ds.ptr, &kopt, &ctx.ptr);
    if (st != KHERD_OK) return fail(st);

    kherd_select_options sopt{};
    sopt.alpha_rule = "auto";
    std::vector<double> times;
    for (int run = -1; run < args.runs; ++run) {  // run -1 warms the cache
      SelectionHandle sel;
      st = kherd_select(ctx.ptr, args.m, &sopt, &sel.ptr);
      if (st != KHERD_OK) return fail(st);
      if (run >= 0) times.push_back(kherd_selection_wall_ms(sel.ptr));
    }
    std::vector<double> sorted = times;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];
    medians.push_back(median);
    std::printf("n=%-8" PRId64 " m=%-6" PRId64 " median %.3f ms over %d runs\n",
                n, args.m, median, args.runs);
    cells.push_back({{"n", n}, {"runs_ms", times}, {"median_ms", median}});
  }
  out["cells"] = cells;

  auto ratios = nlohmann::ordered_json::array();
  for (std::size_t i = 1; i < medians.size(); ++i) {
    const double ratio = medians[i] / medians[i - 1];
    std::printf("time(n=%" PRId64 ") / time(n=%" PRId64 ") = %.3f\n",
                args.ns[i], args.ns[i - 1], ratio);
    ratios.push_back(
        {{"n_from", args.ns[i - 1]}, {"n_to", args.ns[i]}, {"ratio", ratio}});
  }
  out["ratios"] = ratios;

  if (!args.output.empty()) {
    return write_output(args.output, out.dump(2) + "\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representative-and-diverse sample selection via generalized "
               "kernel herding"};
  app.require_subcommand(1);

  SelectArgs select_args;
  auto* select = app.add_subcommand(
      "select", "Select m samples from a dataset file");
  select->add_option("--input", select_args.input, "dataset file (csv/rdsb)")
      ->required();
  select->add_option("--m", select_args.m, "selection budget")->required();
  select->add_option("--alpha", select_args.alpha,
                     "'auto' (1-1/sqrt(m)), 'ratio' (m/n) or a value in [0,1]");
  select->add_option("--kernel", select_args.kernel, "kernel kind")
      ->check(CLI::IsMember({"gaussian", "laplacian", "polynomial"}));
  select->add_option("--bandwidth", select_args.bandwidth,
                     "'median' or an explicit sigma");
  select->add_option("--algorithm", select_args.algorithm, "selector")
      ->check(CLI::IsMember({"gkhr", "gkh", "random", "stratified", "kmeans"}));
  select->add_option("--degree", select_args.degree, "polynomial degree");
  select->add_option("--offset", select_args.offset, "polynomial offset");
  select->add_flag("--gram-cache", select_args.gram_cache,
                   "cache the dense Gram matrix");
  select->add_option("--seed", select_args.seed, "seed for baseline samplers");
  select->add_option("--output", select_args.output, "selection record JSON")
      ->required();
  select->add_flag("--check-bound", select_args.check_bound,
                   "attach the finite-sample bound verdict");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand(
      "bench", "Compare the herding variants on synthetic data");
  bench->add_option("--dist", bench_args.dists, "distributions")
      ->delimiter(',')
      ->check(CLI::IsMember(
          {"gmm1", "gmm2", "circle-annulus", "uniform-square"}))
      ->required();
  bench->add_option("--n", bench_args.ns, "sample counts")
      ->delimiter(',')
      ->required();
  bench->add_option("--frac", bench_args.fracs, "budget fractions m/n")
      ->delimiter(',')
      ->required();
  bench->add_option("--runs", bench_args.runs, "runs per cell");
  bench->add_option("--alpha-rule", bench_args.alpha_rule, "alpha rule")
      ->check(CLI::IsMember({"ratio", "auto", "explicit"}));
  bench->add_option("--alpha", bench_args.alpha_explicit,
                    "alpha for --alpha-rule explicit");
  bench->add_option("--seed", bench_args.seed, "master seed");
  bench->add_option("--output", bench_args.output, "report JSON")->required();
  bench->add_option("--csv", bench_args.csv, "also write a flat CSV");

  SynthArgs synth_args;
  auto* synth =
      app.add_subcommand("synth", "Sample a synthetic 2-D dataset");
  synth->add_option("--dist", synth_args.dist, "distribution")
      ->check(CLI::IsMember(
          {"gmm1", "gmm2", "circle-annulus", "uniform-square"}))
      ->required();
  synth->add_option("--n", synth_args.n, "sample count")->required();
  synth->add_option("--seed", synth_args.seed, "seed");
  synth->add_option("--output", synth_args.output, "output file")->required();
  synth->add_option("--format", synth_args.format, "file format")
      ->check(CLI::IsMember({"csv", "rdsb"}));

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand(
      "oracle", "Exhaustive minimisation on a small instance");
  oracle->add_option("--input", oracle_args.input, "dataset file")->required();
  oracle->add_option("--m", oracle_args.m, "selection budget")->required();
  oracle->add_option("--alpha", oracle_args.alpha, "alpha in [0,1]");
  oracle->add_flag("--replacement", oracle_args.replacement,
                   "enumerate multisets instead of subsets");
  oracle->add_option("--bandwidth", oracle_args.bandwidth,
                     "'median' or an explicit sigma");
  oracle->add_option("--output", oracle_args.output, "report JSON")
      ->required();

  VizArgs viz_args;
  auto* viz = app.add_subcommand("viz", "Render a selection as an SVG scatter");
  viz->add_option("--input", viz_args.input, "dataset file")->required();
  viz->add_option("--selection", viz_args.selection, "selection record JSON")
      ->required();
  viz->add_option("--output", viz_args.output, "SVG file")->required();
  viz->add_option("--width", viz_args.width, "viewport width");
  viz->add_option("--height", viz_args.height, "viewport height");

  TimeArgs time_args;
  auto* timecmd = app.add_subcommand(
      "time", "Measure selection wall time across dataset sizes");
  timecmd->add_option("--n", time_args.ns, "sample counts")
      ->delimiter(',')
      ->required();
  timecmd->add_option("--m", time_args.m, "selection budget")->required();
  timecmd->add_option("--dist", time_args.dist, "distribution")
      ->check(CLI::IsMember(
          {"gmm1", "gmm2", "circle-annulus", "uniform-square"}));
  timecmd->add_option("--seed", time_args.seed, "seed");
  timecmd->add_option("--runs", time_args.runs, "timed runs per cell");
  timecmd->add_option("--output", time_args.output, "timing table JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  if (select->parsed()) return run_select(select_args);
  if (bench->parsed()) return run_bench(bench_args);
  if (synth->parsed()) return run_synth(synth_args);
  if (oracle->parsed()) return run_oracle(oracle_args);
  if (viz->parsed()) return run_viz(viz_args);
  if (timecmd->parsed()) return run_time(time_args);
  return kExitValidation;
}
