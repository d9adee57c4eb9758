#pragma once

// JSON and CSV formats written and read by the command-line tool.

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "spectra/sparse_model.hpp"

namespace spectra::cli {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

// A persisted smoothing model: either a dense probability table or the
// retained terms of a bandlimited model.
struct ModelFile {
  int n = 0;
  json filter;  // {"type": "order_decay", "theta": ...} and variants
  std::string dataset_digest;
  std::string created_by;
  std::optional<std::vector<double>> probabilities;
  std::optional<SparseModel> sparse;
};

json to_json(const ModelFile& m);
// Throws ParseError on a wrong version or missing fields.
ModelFile model_from_json(const json& j);

struct SpectrumRecord {
  json frequency;  // bitstring text (Boolean) or integer vector (cyclic)
  int order = 0;
  double re = 0.0;
  double im = 0.0;
};

struct SpectrumFile {
  json group;
  std::string mode;  // "dense" or "bandlimited"
  std::optional<int> band;
  std::string dataset_digest;
  std::vector<SpectrumRecord> records;  // sorted by (order, frequency)
};

json to_json(const SpectrumFile& s);
SpectrumFile spectrum_from_json(const json& j);

// Whole-file helpers. Reading failures are InvalidArgument, malformed
// content is ParseError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);
json parse_json(const std::string& text, const std::string& what);

// Shortest text that reads back to the same double.
std::string format_double(double v);

}  // namespace spectra::cli
