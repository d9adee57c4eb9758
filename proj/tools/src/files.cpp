#include "spectra_cli/files.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "spectra/error.hpp"

namespace spectra::cli {

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

void check_version(const json& j) {
  const int v = field<int>(j, "format_version");
  if (v != kFormatVersion) {
    throw ParseError("unsupported format_version " + std::to_string(v));
  }
}

}  // namespace

json to_json(const ModelFile& m) {
  json j;
  j["format_version"] = kFormatVersion;
  j["group"] = {{"kind", "boolean"}, {"n", m.n}};
  j["filter"] = m.filter;
  j["dataset_digest"] = m.dataset_digest;
  j["created_by"] = m.created_by;
  if (m.probabilities) {
    j["kind"] = "dense";
    j["probabilities"] = *m.probabilities;
  } else if (m.sparse) {
    j["kind"] = "sparse";
    j["band"] = m.sparse->band;
    json terms = json::array();
    for (const auto& t : m.sparse->retained) {
      terms.push_back({{"support", t.support}, {"moment", t.moment}});
    }
    j["terms"] = std::move(terms);
  }
  return j;
}

ModelFile model_from_json(const json& j) {
  check_version(j);
  ModelFile m;
  const json group = field<json>(j, "group");
  if (field<std::string>(group, "kind") != "boolean") {
    throw ParseError("model group must be boolean");
  }
  m.n = field<int>(group, "n");
  if (m.n < 1) throw ParseError("model n must be positive");
  m.filter = field<json>(j, "filter");
  m.dataset_digest = field<std::string>(j, "dataset_digest");
  m.created_by = field<std::string>(j, "created_by");
  const auto kind = field<std::string>(j, "kind");
  if (kind == "dense") {
    auto p = field<std::vector<double>>(j, "probabilities");
    if (m.n > 24 || p.size() != (std::size_t{1} << m.n)) {
      throw ParseError("probability table length does not match n");
    }
    double total = 0.0;
    for (double v : p) {
      if (!std::isfinite(v) || v < 0) throw ParseError("probabilities must be finite and >= 0");
      total += v;
    }
    if (std::abs(total - 1.0) > 1e-6) throw ParseError("probabilities do not sum to one");
    m.probabilities = std::move(p);
  } else if (kind == "sparse") {
    SparseModel s;
    s.n = m.n;
    s.band = field<int>(j, "band");
    if (s.band < 0 || s.band > s.n) throw ParseError("band out of range");
    const auto terms = field<json>(j, "terms");
    if (!terms.is_array() || terms.empty()) throw ParseError("terms must be a nonempty array");
    for (const auto& t : terms) {
      SparseTerm term{field<std::vector<int>>(t, "support"), field<double>(t, "moment")};
      int prev = -1;
      for (int b : term.support) {
        if (b <= prev || b >= s.n) throw ParseError("term support must be ascending bits < n");
        prev = b;
      }
      if (static_cast<int>(term.support.size()) > s.band) {
        throw ParseError("term order exceeds band");
      }
      if (!std::isfinite(term.moment)) throw ParseError("term moment must be finite");
      s.retained.push_back(std::move(term));
    }
    if (!s.retained.front().support.empty()) throw ParseError("first term must be k = 0");
    m.sparse = std::move(s);
  } else {
    throw ParseError("model kind must be dense or sparse");
  }
  return m;
}

json to_json(const SpectrumFile& s) {
  json j;
  j["format_version"] = kFormatVersion;
  j["group"] = s.group;
  j["mode"] = s.mode;
  if (s.band) j["band"] = *s.band;
  j["dataset_digest"] = s.dataset_digest;
  json records = json::array();
  for (const auto& r : s.records) {
    records.push_back({{"frequency", r.frequency}, {"order", r.order}, {"re", r.re}, {"im", r.im}});
  }
  j["records"] = std::move(records);
  return j;
}

SpectrumFile spectrum_from_json(const json& j) {
  check_version(j);
  SpectrumFile s;
  s.group = field<json>(j, "group");
  s.mode = field<std::string>(j, "mode");
  if (j.contains("band")) s.band = field<int>(j, "band");
  s.dataset_digest = field<std::string>(j, "dataset_digest");
  for (const auto& r : field<json>(j, "records")) {
    s.records.push_back({field<json>(r, "frequency"), field<int>(r, "order"),
                         field<double>(r, "re"), field<double>(r, "im")});
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << contents;
  if (!out) throw InvalidArgument("failed writing '" + path + "'");
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

std::string format_double(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace spectra::cli
