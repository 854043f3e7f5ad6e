#include "kherd/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace kherd {

namespace {

using ordered_json = nlohmann::ordered_json;

void put_u32le(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_f64le(std::string& out, double v) {
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
  }
}

std::uint32_t get_u32le(const std::string& bytes, std::size_t offset) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) {
    v = (v << 8) |
        static_cast<std::uint8_t>(bytes[offset + static_cast<std::size_t>(i)]);
  }
  return v;
}

double get_f64le(const std::string& bytes, std::size_t offset) {
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) {
    bits = (bits << 8) |
           static_cast<std::uint8_t>(bytes[offset + static_cast<std::size_t>(i)]);
  }
  return std::bit_cast<double>(bits);
}

// Shortest decimal form that parses back to the same double.
std::string format_double(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

double parse_double(std::string_view token, const std::string& where) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw IoError("could not parse number '" + std::string(token) + "' at " +
                  where);
  }
  return v;
}

std::vector<std::string_view> split_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      fields.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return fields;
}

bool parses_as_double(std::string_view token) {
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

FileFormat detect_format(const std::string& path) {
  const std::filesystem::path p(path);
  const std::string ext = p.extension().string();
  if (ext == ".csv") return FileFormat::csv;
  if (ext == ".rdsb" || ext == ".bin") return FileFormat::rdsb;
  // Fall back to sniffing the magic bytes.
  std::ifstream in(path, std::ios::binary);
  char magic[4] = {0, 0, 0, 0};
  in.read(magic, 4);
  if (in.gcount() == 4 && std::memcmp(magic, "RDSB", 4) == 0) {
    return FileFormat::rdsb;
  }
  return FileFormat::csv;
}

ordered_json kernel_to_json(const KernelSpec& spec,
                            const std::string& sigma_rule) {
  ordered_json j;
  j["kind"] = kernel_kind_name(spec.kind);
  if (spec.kind == KernelKind::polynomial) {
    j["degree"] = spec.degree;
    j["offset"] = spec.offset;
  } else {
    j["sigma"] = spec.bandwidth;
    j["sigma_rule"] = sigma_rule;
  }
  return j;
}

ordered_json dist_to_json(const DistributionSpec& spec) {
  ordered_json j;
  j["kind"] = spec.name();
  switch (spec.kind) {
    case DistKind::gmm1:
    case DistKind::gmm2:
    case DistKind::custom_gmm: {
      ordered_json comps = ordered_json::array();
      for (const auto& c : spec.components) {
        comps.push_back({{"mean", {c.mean[0], c.mean[1]}},
                         {"variance", {c.variance[0], c.variance[1]}}});
      }
      j["components"] = comps;
      j["weights"] = spec.weights;
      break;
    }
    case DistKind::circle_annulus:
      j["weights"] = spec.weights;
      j["circle_radius"] = spec.circle_radius;
      j["annulus_inner"] = spec.annulus_inner;
      j["annulus_outer"] = spec.annulus_outer;
      break;
    case DistKind::uniform_square:
      j["low"] = spec.square_low;
      j["high"] = spec.square_high;
      break;
  }
  return j;
}

DistributionSpec dist_from_json(const ordered_json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "uniform-square") {
    DistributionSpec s = DistributionSpec::uniform_square();
    s.square_low = j.value("low", -10.0);
    s.square_high = j.value("high", 10.0);
    return s;
  }
  if (kind == "circle-annulus") {
    DistributionSpec s = DistributionSpec::circle_annulus();
    if (j.contains("weights")) {
      s.weights = j.at("weights").get<std::vector<double>>();
    }
    s.circle_radius = j.value("circle_radius", 0.5);
    s.annulus_inner = j.value("annulus_inner", 4.0);
    s.annulus_outer = j.value("annulus_outer", 6.0);
    return s;
  }
  DistributionSpec s;
  if (kind == "gmm1") {
    s = DistributionSpec::gmm1();
  } else if (kind == "gmm2") {
    s = DistributionSpec::gmm2();
  } else if (kind == "custom-gmm") {
    s.kind = DistKind::custom_gmm;
  } else {
    throw IoError("unknown distribution kind in JSON: " + kind);
  }
  if (j.contains("components")) {
    s.components.clear();
    for (const auto& c : j.at("components")) {
      GmmComponent comp;
      comp.mean << c.at("mean")[0].get<double>(), c.at("mean")[1].get<double>();
      comp.variance << c.at("variance")[0].get<double>(),
          c.at("variance")[1].get<double>();
      s.components.push_back(comp);
    }
    s.weights = j.at("weights").get<std::vector<double>>();
  }
  s.validate();
  return s;
}

ordered_json parse_json(const std::string& text, const char* what) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw IoError(std::string("malformed ") + what + " JSON");
  }
  return j;
}

}  // namespace

Dataset load_dataset(const std::string& path,
                     std::optional<FileFormat> format) {
  const FileFormat fmt = format ? *format : detect_format(path);
  const std::string bytes = read_file(path);
  try {
    return fmt == FileFormat::csv ? parse_csv(bytes) : parse_rdsb(bytes);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

void save_dataset(const Dataset& dataset, const std::string& path,
                  FileFormat format) {
  write_file_atomic(
      path, format == FileFormat::csv ? to_csv(dataset) : to_rdsb(dataset));
}

Dataset parse_csv(const std::string& text) {
  std::vector<std::string_view> lines;
  {
    std::string_view rest(text);
    while (!rest.empty()) {
      const std::size_t nl = rest.find('\n');
      std::string_view line = rest.substr(0, nl);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (!line.empty()) lines.push_back(line);
      if (nl == std::string_view::npos) break;
      rest.remove_prefix(nl + 1);
    }
  }
  if (lines.empty()) throw IoError("empty CSV file");

  auto first_fields = split_line(lines[0]);
  const bool has_header =
      !std::all_of(first_fields.begin(), first_fields.end(), parses_as_double);
  bool has_labels = false;
  if (has_header && !first_fields.empty() && first_fields.back() == "label") {
    has_labels = true;
  }
  const std::size_t first_data = has_header ? 1 : 0;
  if (lines.size() <= first_data) throw IoError("CSV has no data rows");

  const std::size_t cols = split_line(lines[first_data]).size();
  if (has_header && cols != first_fields.size()) {
    throw IoError("CSV row 0 width does not match header");
  }
  const std::size_t d = has_labels ? cols - 1 : cols;
  if (d < 1) throw IoError("CSV has no feature columns");

  const std::size_t n = lines.size() - first_data;
  FeatureMatrix features(static_cast<Index>(n), static_cast<Index>(d));
  std::optional<std::vector<std::int32_t>> labels;
  if (has_labels) labels.emplace(n);

  for (std::size_t r = 0; r < n; ++r) {
    const auto fields = split_line(lines[first_data + r]);
    const std::string where = "row " + std::to_string(r);
    if (fields.size() != cols) {
      throw IoError("inconsistent column count at " + where);
    }
    for (std::size_t c = 0; c < d; ++c) {
      const double v = parse_double(fields[c], where);
      if (!std::isfinite(v)) {
        throw IoError("non-finite value at " + where);
      }
      features(static_cast<Index>(r), static_cast<Index>(c)) = v;
    }
    if (has_labels) {
      long lv = 0;
      const auto tok = fields.back();
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lv);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw IoError("could not parse label at " + where);
      }
      (*labels)[r] = static_cast<std::int32_t>(lv);
    }
  }
  return make_dataset(std::move(features), std::move(labels));
}

std::string to_csv(const Dataset& dataset) {
  std::string out;
  const Index n = dataset.n();
  const Index d = dataset.d();
  for (Index c = 0; c < d; ++c) {
    if (c) out.push_back(',');
    out += "f" + std::to_string(c);
  }
  if (dataset.labels) out += ",label";
  out.push_back('\n');
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < d; ++c) {
      if (c) out.push_back(',');
      out += format_double(dataset.features(r, c));
    }
    if (dataset.labels) {
      out.push_back(',');
      out += std::to_string((*dataset.labels)[static_cast<std::size_t>(r)]);
    }
    out.push_back('\n');
  }
  return out;
}

Dataset parse_rdsb(const std::string& bytes) {
  if (bytes.size() < 13) {
    throw IoError("RDSB file truncated at offset " +
                  std::to_string(bytes.size()));
  }
  if (std::memcmp(bytes.data(), "RDSB", 4) != 0) {
    throw IoError("bad RDSB magic at offset 0");
  }
  if (static_cast<std::uint8_t>(bytes[4]) != 0x01) {
    throw IoError("unsupported RDSB version at offset 4");
  }
  const std::uint64_t n = get_u32le(bytes, 5);
  const std::uint64_t d = get_u32le(bytes, 9);
  if (n == 0 || d == 0) throw IoError("RDSB header declares empty shape");

  std::size_t offset = 13;
  // Guard against a header whose n*d would overflow the size arithmetic.
  if (d > (bytes.size() - offset) / 8 || n > (bytes.size() - offset) / 8 / d) {
    throw IoError("RDSB file truncated at offset " +
                  std::to_string(bytes.size()));
  }
  const std::uint64_t value_bytes = n * d * 8;
  if (bytes.size() < offset + value_bytes + 1) {
    throw IoError("RDSB file truncated at offset " +
                  std::to_string(bytes.size()));
  }
  FeatureMatrix features(static_cast<Index>(n), static_cast<Index>(d));
  for (std::uint64_t r = 0; r < n; ++r) {
    for (std::uint64_t c = 0; c < d; ++c) {
      const double v = get_f64le(bytes, offset);
      if (!std::isfinite(v)) {
        throw IoError("non-finite value at row " + std::to_string(r));
      }
      features(static_cast<Index>(r), static_cast<Index>(c)) = v;
      offset += 8;
    }
  }

  const std::uint8_t flag = static_cast<std::uint8_t>(bytes[offset]);
  std::optional<std::vector<std::int32_t>> labels;
  if (flag == 0x01) {
    ++offset;
    if (bytes.size() < offset + n * 4) {
      throw IoError("RDSB label block truncated at offset " +
                    std::to_string(bytes.size()));
    }
    labels.emplace(static_cast<std::size_t>(n));
    for (std::uint64_t r = 0; r < n; ++r) {
      (*labels)[static_cast<std::size_t>(r)] =
          static_cast<std::int32_t>(get_u32le(bytes, offset));
      offset += 4;
    }
  } else if (flag == 0x00) {
    ++offset;
  } else {
    throw IoError("bad RDSB label flag at offset " + std::to_string(offset));
  }
  if (offset != bytes.size()) {
    throw IoError("trailing data at offset " + std::to_string(offset));
  }
  return make_dataset(std::move(features), std::move(labels));
}

std::string to_rdsb(const Dataset& dataset) {
  const Index n = dataset.n();
  const Index d = dataset.d();
  if (n > 0xffffffffLL || d > 0xffffffffLL) {
    throw std::invalid_argument("dataset too large for RDSB header");
  }
  std::string out;
  out.reserve(14 + static_cast<std::size_t>(n) * static_cast<std::size_t>(d) * 8);
  out += "RDSB";
  out.push_back(0x01);
  put_u32le(out, static_cast<std::uint32_t>(n));
  put_u32le(out, static_cast<std::uint32_t>(d));
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < d; ++c) put_f64le(out, dataset.features(r, c));
  }
  if (dataset.labels) {
    out.push_back(0x01);
    for (Index r = 0; r < n; ++r) {
      put_u32le(out, static_cast<std::uint32_t>(
                         (*dataset.labels)[static_cast<std::size_t>(r)]));
    }
  } else {
    out.push_back(0x00);
  }
  return out;
}

std::string dataset_fingerprint(const Dataset& dataset) {
  std::string canonical;
  canonical.reserve(8 + static_cast<std::size_t>(dataset.n()) *
                            static_cast<std::size_t>(dataset.d()) * 8);
  put_u32le(canonical, static_cast<std::uint32_t>(dataset.n()));
  put_u32le(canonical, static_cast<std::uint32_t>(dataset.d()));
  for (Index r = 0; r < dataset.n(); ++r) {
    for (Index c = 0; c < dataset.d(); ++c) {
      put_f64le(canonical, dataset.features(r, c));
    }
  }

  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int digest_len = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), digest, &digest_len,
                 EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < digest_len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0x0f]);
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError("rename failed: " + path + ": " + ec.message());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) throw IoError("read failed: " + path);
  return buffer.str();
}

std::string to_json(const SelectionRecord& record) {
  ordered_json j;
  j["schema_version"] = record.schema_version;
  j["dataset"] = {{"hash", record.dataset_hash},
                  {"n", record.n},
                  {"d", record.d}};
  j["kernel"] = kernel_to_json(record.kernel, record.sigma_rule);
  j["alpha"] = {{"value", record.alpha.value},
                {"rule", alpha_rule_name(record.alpha.rule)}};
  j["algorithm"] = record.algorithm;
  j["m"] = record.m;
  j["indices"] = record.indices;
  auto sorted = record.indices;
  std::sort(sorted.begin(), sorted.end());
  j["indices_sorted"] = sorted;
  j["final_alpha_mmd_sq"] = record.final_alpha_mmd_sq;
  if (record.bound) {
    j["bound"] = {{"c_alpha_sq", record.bound->c_alpha_sq},
                  {"b", record.bound->b},
                  {"rhs", record.bound->rhs},
                  {"satisfied", record.bound->satisfied},
                  {"log", "natural"}};
  }
  j["wall_time_ms"] = record.wall_time_ms;
  j["seed"] = record.seed;
  return j.dump(2) + "\n";
}

SelectionRecord selection_record_from_json(const std::string& text) {
  const ordered_json j = parse_json(text, "selection record");
  SelectionRecord r;
  try {
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != 1) {
      throw IoError("unsupported selection record schema version");
    }
    r.dataset_hash = j.at("dataset").at("hash").get<std::string>();
    r.n = j.at("dataset").at("n").get<Index>();
    r.d = j.at("dataset").at("d").get<Index>();
    const auto& k = j.at("kernel");
    r.kernel.kind = kernel_kind_from_name(k.at("kind").get<std::string>());
    if (r.kernel.kind == KernelKind::polynomial) {
      r.kernel.degree = k.at("degree").get<double>();
      r.kernel.offset = k.at("offset").get<double>();
    } else {
      r.kernel.bandwidth = k.at("sigma").get<double>();
      r.sigma_rule = k.at("sigma_rule").get<std::string>();
    }
    r.alpha.value = j.at("alpha").at("value").get<double>();
    r.alpha.rule =
        alpha_rule_from_name(j.at("alpha").at("rule").get<std::string>());
    r.algorithm = j.at("algorithm").get<std::string>();
    r.m = j.at("m").get<Index>();
    r.indices = j.at("indices").get<std::vector<Index>>();
    r.final_alpha_mmd_sq = j.at("final_alpha_mmd_sq").get<double>();
    if (j.contains("bound")) {
      BoundRecord b;
      b.c_alpha_sq = j.at("bound").at("c_alpha_sq").get<double>();
      b.b = j.at("bound").at("b").get<double>();
      b.rhs = j.at("bound").at("rhs").get<double>();
      b.satisfied = j.at("bound").at("satisfied").get<bool>();
      r.bound = b;
    }
    r.wall_time_ms = j.at("wall_time_ms").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
  } catch (const ordered_json::exception& e) {
    throw IoError(std::string("selection record: ") + e.what());
  }
  return r;
}

std::string to_json(const OracleReport& report) {
  ordered_json j;
  j["schema_version"] = 1;
  j["m"] = report.m;
  j["alpha"] = report.alpha;
  j["with_replacement"] = report.with_replacement;
  j["best_indices"] = report.best_indices;
  j["best_value"] = report.best_value;
  j["enumerated"] = report.enumerated;
  j["greedy_value"] = report.greedy_value;
  j["gap"] = report.gap;
  return j.dump(2) + "\n";
}

OracleReport oracle_report_from_json(const std::string& text) {
  const ordered_json j = parse_json(text, "oracle report");
  OracleReport r;
  try {
    r.m = j.at("m").get<Index>();
    r.alpha = j.at("alpha").get<double>();
    r.with_replacement = j.at("with_replacement").get<bool>();
    r.best_indices = j.at("best_indices").get<std::vector<Index>>();
    r.best_value = j.at("best_value").get<double>();
    r.enumerated = j.at("enumerated").get<std::uint64_t>();
    r.greedy_value = j.at("greedy_value").get<double>();
    r.gap = j.at("gap").get<double>();
  } catch (const ordered_json::exception& e) {
    throw IoError(std::string("oracle report: ") + e.what());
  }
  return r;
}

std::string to_json(const BenchReport& report) {
  ordered_json j;
  j["schema_version"] = 1;
  j["rng"] = {{"algorithm", report.rng_algorithm},
              {"version", report.rng_version}};
  ordered_json dists = ordered_json::array();
  for (const auto& d : report.config.distributions) {
    dists.push_back(dist_to_json(d));
  }
  j["config"] = {{"distributions", dists},
                 {"ns", report.config.ns},
                 {"fracs", report.config.fracs},
                 {"runs", report.config.runs},
                 {"alpha_rule", alpha_rule_name(report.config.alpha_rule)},
                 {"alpha_explicit", report.config.alpha_explicit},
                 {"seed", report.config.seed}};
  j["warnings"] = report.warnings;
  ordered_json cells = ordered_json::array();
  for (const auto& c : report.cells) {
    cells.push_back({{"distribution", c.distribution},
                     {"n", c.n},
                     {"frac", c.frac},
                     {"m", c.m},
                     {"alpha", c.alpha},
                     {"d_values", c.d_values},
                     {"d_mean", c.d_mean},
                     {"d_std", c.d_std},
                     {"degenerate_runs", c.degenerate_runs},
                     {"seeds", c.seeds},
                     {"gkhr_ms", c.gkhr_ms},
                     {"gkh_ms", c.gkh_ms}});
  }
  j["cells"] = cells;
  return j.dump(2) + "\n";
}

BenchReport bench_report_from_json(const std::string& text) {
  const ordered_json j = parse_json(text, "bench report");
  BenchReport r;
  try {
    r.rng_algorithm = j.at("rng").at("algorithm").get<std::string>();
    r.rng_version = j.at("rng").at("version").get<int>();
    const auto& cfg = j.at("config");
    for (const auto& d : cfg.at("distributions")) {
      r.config.distributions.push_back(dist_from_json(d));
    }
    r.config.ns = cfg.at("ns").get<std::vector<Index>>();
    r.config.fracs = cfg.at("fracs").get<std::vector<double>>();
    r.config.runs = cfg.at("runs").get<int>();
    r.config.alpha_rule =
        alpha_rule_from_name(cfg.at("alpha_rule").get<std::string>());
    r.config.alpha_explicit = cfg.at("alpha_explicit").get<double>();
    r.config.seed = cfg.at("seed").get<std::uint64_t>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    for (const auto& c : j.at("cells")) {
      BenchCell cell;
      cell.distribution = c.at("distribution").get<std::string>();
      cell.n = c.at("n").get<Index>();
      cell.frac = c.at("frac").get<double>();
      cell.m = c.at("m").get<Index>();
      cell.alpha = c.at("alpha").get<double>();
      cell.d_values = c.at("d_values").get<std::vector<double>>();
      cell.d_mean = c.at("d_mean").get<double>();
      cell.d_std = c.at("d_std").get<double>();
      cell.degenerate_runs = c.at("degenerate_runs").get<int>();
      cell.seeds = c.at("seeds").get<std::vector<std::uint64_t>>();
      cell.gkhr_ms = c.at("gkhr_ms").get<std::vector<double>>();
      cell.gkh_ms = c.at("gkh_ms").get<std::vector<double>>();
      r.cells.push_back(std::move(cell));
    }
  } catch (const ordered_json::exception& e) {
    throw IoError(std::string("bench report: ") + e.what());
  }
  return r;
}

BenchConfig bench_config_from_json(const std::string& text) {
  const ordered_json j = parse_json(text, "bench config");
  BenchConfig config;
  try {
    for (const auto& d : j.at("distributions")) {
      if (d.is_string()) {
        config.distributions.push_back(
            DistributionSpec::from_name(d.get<std::string>()));
      } else {
        config.distributions.push_back(dist_from_json(d));
      }
    }
    config.ns = j.at("ns").get<std::vector<Index>>();
    config.fracs = j.at("fracs").get<std::vector<double>>();
    config.runs = j.value("runs", 10);
    if (j.contains("alpha_rule")) {
      config.alpha_rule =
          alpha_rule_from_name(j.at("alpha_rule").get<std::string>());
    }
    config.alpha_explicit = j.value("alpha_explicit", 1.0);
    config.seed = j.value("seed", std::uint64_t{0});
  } catch (const ordered_json::exception& e) {
    throw IoError(std::string("bench config: ") + e.what());
  }
  return config;
}

std::string bench_report_to_csv(const BenchReport& report) {
  std::string out =
      "distribution,n,frac,m,alpha,run,seed,d,gkhr_ms,gkh_ms\n";
  for (const auto& c : report.cells) {
    for (std::size_t run = 0; run < c.d_values.size(); ++run) {
      out += c.distribution;
      out += "," + std::to_string(c.n);
      out += "," + format_double(c.frac);
      out += "," + std::to_string(c.m);
      out += "," + format_double(c.alpha);
      out += "," + std::to_string(run);
      out += "," + std::to_string(c.seeds[run]);
      out += "," + format_double(c.d_values[run]);
      out += "," + format_double(c.gkhr_ms[run]);
      out += "," + format_double(c.gkh_ms[run]);
      out.push_back('\n');
    }
  }
  return out;
}

}  // namespace kherd
