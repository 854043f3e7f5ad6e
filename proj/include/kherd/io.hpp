#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "kherd/dataset.hpp"
#include "kherd/oracle.hpp"
#include "kherd/selection.hpp"
#include "kherd/synthbench.hpp"

namespace kherd {

// Unreadable, unwritable, or malformed files. Everything else throws
// std::invalid_argument.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FileFormat { csv, rdsb };

// CSV dialect: comma separator, dot decimal, LF, UTF-8, optional header row;
// a header column named "label" carries integer class ids. RDSB is the binary
// layout: magic "RDSB", version byte 0x01, u32-LE n, u32-LE d, n*d f64-LE
// values row-major, then a label flag byte (0x01 + n u32-LE labels, or 0x00).
Dataset load_dataset(const std::string& path,
                     std::optional<FileFormat> format = {});
void save_dataset(const Dataset& dataset, const std::string& path,
                  FileFormat format);

Dataset parse_csv(const std::string& text);
std::string to_csv(const Dataset& dataset);
Dataset parse_rdsb(const std::string& bytes);
std::string to_rdsb(const Dataset& dataset);

// "sha256:<hex>" over the canonical binary encoding of the feature matrix
// (u32-LE n, u32-LE d, row-major f64-LE values; labels excluded).
std::string dataset_fingerprint(const Dataset& dataset);

// Writes via a temp file in the same directory plus rename, so readers never
// observe a partial file.
void write_file_atomic(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

struct BoundRecord {
  double c_alpha_sq = 0.0;
  double b = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
};

// The serialised outcome of one selection run, schema version 1. `indices`
// preserves selection order; a sorted copy is emitted alongside it for
// diff-friendliness and is reconstructed on parse.
struct SelectionRecord {
  int schema_version = 1;
  std::string dataset_hash;
  Index n = 0;
  Index d = 0;
  KernelSpec kernel;
  std::string sigma_rule;  // "median" | "explicit"
  AlphaParam alpha;
  std::string algorithm;
  Index m = 0;
  std::vector<Index> indices;
  double final_alpha_mmd_sq = 0.0;
  std::optional<BoundRecord> bound;
  std::uint64_t wall_time_ms = 0;
  std::uint64_t seed = 0;
};

std::string to_json(const SelectionRecord& record);
SelectionRecord selection_record_from_json(const std::string& text);

std::string to_json(const OracleReport& report);
OracleReport oracle_report_from_json(const std::string& text);

std::string to_json(const BenchReport& report);
BenchReport bench_report_from_json(const std::string& text);
// Parses {"distributions": [names or objects], "ns", "fracs", "runs",
// "alpha_rule", "alpha_explicit", "seed"}; only "distributions", "ns" and
// "fracs" are required.
BenchConfig bench_config_from_json(const std::string& text);
// One row per (cell, run) with the D value and per-run timings.
std::string bench_report_to_csv(const BenchReport& report);

}  // namespace kherd
