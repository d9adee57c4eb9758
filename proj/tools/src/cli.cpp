#include "spectra_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "spectra/error.hpp"
#include "spectra/fourier.hpp"
#include "spectra/qnn.hpp"
#include "spectra/smoothing.hpp"
#include "spectra/sn.hpp"
#include "spectra/sparse_model.hpp"
#include "spectra/statevector.hpp"
#include "spectra_cli/files.hpp"

namespace spectra::cli {

namespace {

bool guard_override() {
  const char* v = std::getenv("SPECTRA_GUARD_OVERRIDE");
  return v != nullptr && std::string_view(v) == "1";
}

Dataset load_dataset(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return Dataset::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string probability_csv(const std::vector<double>& p, int n) {
  std::string s = "index,bitstring,probability\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    s += std::to_string(i) + "," + to_bitstring(i, n) + "," + format_double(p[i]) + "\n";
  }
  return s;
}

json order_decay(double theta, const char* type = "order_decay") {
  return {{"type", type}, {"theta", theta}};
}

// ---- spectrum --------------------------------------------------------------

struct SpectrumOptions {
  std::string input;
  std::string group = "boolean";
  std::size_t top = 0;
  std::optional<int> band;
  std::string out;
};

SpectrumFile boolean_spectrum(const Dataset& data, const SpectrumOptions& o) {
  const int n = data.n();
  SpectrumFile file;
  file.group = {{"kind", "boolean"}, {"n", n}};
  file.dataset_digest = data.digest();
  if (!o.band && n <= 16) {
    file.mode = "dense";
    const auto s = fourier(empirical_distribution(data));
    for (std::uint64_t k = 0; k < s.values.size(); ++k) {
      file.records.push_back({to_bitstring(k, n), std::popcount(k), s.values[k].real(), 0.0});
    }
    return file;
  }
  const int band = o.band.value_or(std::min(n, 2));
  if (band < 0 || band > n) throw InvalidArgument("--band must lie in [0, n]");
  file.mode = "bandlimited";
  file.band = band;
  const auto m = sparse_model(data, OrderDecay{0.0}, band);
  const double scale = std::pow(2.0, -0.5 * n);
  for (const auto& t : m.retained) {
    BitString k(n);
    for (int b : t.support) k.set(b, true);
    file.records.push_back({k.to_text(), static_cast<int>(t.support.size()), t.moment * scale, 0.0});
  }
  return file;
}

SpectrumFile cyclic_spectrum(const Dataset& data) {
  // Each bitstring is read as an element of Z_{2^n}.
  const int n = data.n();
  if (n > 24) throw GuardExceeded("cyclic spectrum needs n <= 24");
  const auto g = GroupSpec::cyclic(1 << n, 1);
  const auto p = empirical_distribution(data);
  const auto s = fourier(DenseFunction(g, p.values));
  SpectrumFile file;
  file.group = {{"kind", "cyclic"}, {"modulus", g.modulus()}, {"dims", 1}};
  file.mode = "dense";
  file.dataset_digest = data.digest();
  const std::uint64_t d = g.order();
  for (std::uint64_t k = 0; k < d; ++k) {
    file.records.push_back({json::array({k}), static_cast<int>(std::min(k, d - k)),
                            s.values[k].real(), s.values[k].imag()});
  }
  return file;
}

bool record_before(const SpectrumRecord& a, const SpectrumRecord& b) {
  if (a.order != b.order) return a.order < b.order;
  // Equal-length bitstrings compare numerically as text.
  return a.frequency < b.frequency;
}

int cmd_spectrum(const SpectrumOptions& o, std::ostream& out) {
  const auto data = load_dataset(o.input);
  SpectrumFile file;
  if (o.group == "cyclic") {
    if (o.band) throw InvalidArgument("--band applies to the boolean group only");
    file = cyclic_spectrum(data);
  } else {
    file = boolean_spectrum(data, o);
  }
  auto& r = file.records;
  std::sort(r.begin(), r.end(), record_before);
  if (o.top > 0 && o.top < r.size()) {
    std::stable_sort(r.begin(), r.end(), [](const auto& a, const auto& b) {
      return std::hypot(a.re, a.im) > std::hypot(b.re, b.im);
    });
    r.resize(o.top);
    std::sort(r.begin(), r.end(), record_before);
  }
  emit(o.out, dump(to_json(file)), out);
  return kOk;
}

// ---- smooth ----------------------------------------------------------------

struct SmoothOptions {
  std::string input;
  double theta = 0.0;
  std::optional<int> band;
  std::string out;
  std::string plot;
};

int cmd_smooth(const SmoothOptions& o, std::ostream& out) {
  const auto data = load_dataset(o.input);
  const int n = data.n();
  ModelFile file;
  file.n = n;
  file.filter = order_decay(o.theta);
  file.dataset_digest = data.digest();
  file.created_by = "spectra smooth";
  std::optional<std::vector<double>> table;
  if (o.band) {
    auto m = sparse_model(data, OrderDecay{o.theta}, *o.band);
    if (!o.plot.empty()) {
      if (n > Guards::kMaxDataQubits) throw GuardExceeded("--plot needs n <= 20");
      std::vector<double> p(std::size_t{1} << n);
      for (std::size_t x = 0; x < p.size(); ++x) p[x] = sparse_prob(m, BitString::from_index(x, n));
      table = std::move(p);
    }
    file.sparse = std::move(m);
  } else {
    const auto m = smooth(data, OrderDecay{o.theta});
    file.probabilities = as_distribution(m);
    table = file.probabilities;
  }
  if (!o.plot.empty()) write_file(o.plot, probability_csv(*table, n));
  if (!o.out.empty() || o.plot.empty()) emit(o.out, dump(to_json(file)), out);
  return kOk;
}

// ---- sample ----------------------------------------------------------------

struct SampleOptions {
  std::string model;
  bool kde = false;
  std::optional<double> theta;
  std::string input;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_sample(const SampleOptions& o, std::ostream& out) {
  if (o.kde == !o.model.empty()) {
    throw InvalidArgument("give exactly one of --model or --kde");
  }
  std::vector<std::string> lines;
  if (o.kde) {
    if (!o.theta || o.input.empty()) throw InvalidArgument("--kde needs --theta and --input");
    for (const auto& b : kde_sample(load_dataset(o.input), *o.theta, o.seed, o.count)) {
      lines.push_back(b.to_text());
    }
  } else {
    if (o.theta || !o.input.empty()) {
      throw InvalidArgument("--theta and --input apply to --kde only");
    }
    const auto m = model_from_json(parse_json(read_file(o.model), o.model));
    if (m.probabilities) {
      for (auto i : sample_indices(*m.probabilities, o.seed, o.count)) {
        lines.push_back(to_bitstring(i, m.n));
      }
    } else {
      for (const auto& b : autoregressive_sample(*m.sparse, o.seed, o.count)) {
        lines.push_back(b.to_text());
      }
    }
  }
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  emit(o.out, text, out);
  return kOk;
}

// ---- qsmooth ---------------------------------------------------------------

struct QsmoothOptions {
  std::string input;
  double theta = 0.0;
  std::string out;
  std::string report;
  std::string plot;
};

int cmd_qsmooth(const QsmoothOptions& o, std::ostream& out) {
  const auto data = load_dataset(o.input);
  const auto result = quantum_smooth(data, o.theta);

  const auto psi_hat = walsh_qft(prepare_superposition(data).state);
  const double r = 1.0 - 2.0 * o.theta;
  double closed = 0.0;
  for (std::size_t k = 0; k < psi_hat.dim(); ++k) {
    closed += std::norm(psi_hat.amps()[k]) * std::pow(r * r, std::popcount(k));
  }

  ModelFile file;
  file.n = data.n();
  file.filter = order_decay(o.theta, "amplitude_order_decay");
  file.dataset_digest = data.digest();
  file.created_by = "spectra qsmooth";
  file.probabilities = result.distribution.real();

  const json report = {
      {"n", data.n()},
      {"theta", o.theta},
      {"unique_samples", data.unique().size()},
      {"duplicates_collapsed", result.duplicates_collapsed},
      {"success_prob", result.success_prob},
      {"closed_form_success_prob", closed},
      {"abs_difference", std::abs(result.success_prob - closed)},
  };
  if (!o.out.empty()) write_file(o.out, dump(to_json(file)));
  if (!o.plot.empty()) write_file(o.plot, probability_csv(*file.probabilities, file.n));
  emit(o.report, dump(report), out);
  return kOk;
}

// ---- fit -------------------------------------------------------------------

struct FitOptions {
  std::string train;
  std::string valid;
  int grid = 21;
  std::string out;
};

int cmd_fit(const FitOptions& o, std::ostream& out) {
  if (o.grid < 3) throw InvalidArgument("--grid must be at least 3");
  const auto train = load_dataset(o.train);
  const auto valid = load_dataset(o.valid);
  if (train.n() != valid.n()) throw InvalidArgument("train and valid differ in n");
  const auto fit = fit_theta(train, valid, o.grid);
  if (!o.out.empty()) {
    std::string csv = "theta,log_likelihood\n";
    for (const auto& [t, ll] : fit.curve) csv += format_double(t) + "," + format_double(ll) + "\n";
    write_file(o.out, csv);
  }
  out << "theta=" << format_double(fit.theta) << "\n"
      << "log_likelihood=" << format_double(fit.log_likelihood) << "\n";
  return kOk;
}

// ---- qnn-spectrum ----------------------------------------------------------

struct QnnOptions {
  std::vector<std::string> eigs;
  bool demo = false;
  int kmax = 0;
  std::uint64_t seed = 1;
};

std::vector<double> parse_eigenvalues(std::string_view text) {
  std::vector<double> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) {
    throw InvalidArgument("--eigs needs at least one eigenvalue");
  }
  while (true) {
    const auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
      throw ParseError("bad eigenvalue '" + std::string(tok) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

int cmd_qnn(const QnnOptions& o, std::ostream& out) {
  QnnEncodingSpec spec;
  for (const auto& e : o.eigs) spec.gates.push_back(parse_eigenvalues(e));
  const auto omega = qnn_frequency_set(spec);
  json j = {{"gates", spec.gates},
            {"omega", omega.values},
            {"integer_spectrum", omega.integer_spectrum}};
  if (o.demo) {
    const int n = static_cast<int>(spec.gates.size());
    if (n > Guards::kMaxQnnQubits) throw GuardExceeded("demo model allows at most 10 gates");
    if (!omega.integer_spectrum) {
      throw InvalidArgument("demo model needs integer eigenvalue differences");
    }
    Rng rng(o.seed);
    const int dim = 1 << n;
    std::vector<QnnBlock> blocks{random_unitary(dim, rng)};
    for (int q = 0; q < n; ++q) {
      const auto& e = spec.gates[q];
      if (e.size() != 2) throw InvalidArgument("demo gates act on one qubit: give two eigenvalues");
      const Eigen::MatrixXcd v = random_unitary(2, rng);
      Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
      d(0, 0) = e[0];
      d(1, 1) = e[1];
      blocks.emplace_back(EncodingGate{q, v * d * v.adjoint()});
    }
    blocks.emplace_back(random_unitary(dim, rng));
    const QnnModel model(n, std::move(blocks), single_qubit_observable(n, 0, pauli::z()));
    int kmax = o.kmax;
    if (kmax <= 0) kmax = static_cast<int>(std::lround(omega.values.back())) + 2;
    const auto coeffs = qnn_extract_spectrum(model, kmax);
    json cs = json::array();
    double worst = 0.0;
    for (const auto& [k, c] : coeffs) {
      cs.push_back({{"k", k}, {"re", c.real()}, {"im", c.imag()}});
      const bool in_band = std::any_of(omega.values.begin(), omega.values.end(),
                                       [&](double w) { return std::abs(w - k) < 1e-9; });
      if (!in_band) worst = std::max(worst, std::abs(c));
    }
    j["seed"] = o.seed;
    j["kmax"] = kmax;
    j["coefficients"] = std::move(cs);
    j["max_out_of_band"] = worst;
  }
  out << dump(j);
  return kOk;
}

// ---- sn --------------------------------------------------------------------

struct SnOptions {
  int n = 0;
  std::string steps = "[]";
  std::vector<std::string> marginals;
  std::string out;
};

int json_index(const json& j, const char* key, int n) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("'") + key + "' must be an integer");
  }
  const auto v = j.at(key).get<long long>();
  if (v < 1 || v > n) throw ParseError(std::string("'") + key + "' out of range 1..n");
  return static_cast<int>(v);
}

double json_number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw ParseError(std::string("'") + key + "' must be a number");
  return j.at(key).get<double>();
}

std::vector<MarkovStep> parse_steps(const std::string& text, int n) {
  const json j = parse_json(text, "--steps");
  if (!j.is_array()) throw ParseError("--steps must be a JSON array");
  std::vector<MarkovStep> steps;
  for (const auto& s : j) {
    if (!s.is_object() || s.size() != 1) throw ParseError("each step must have one key");
    if (s.contains("diffuse")) {
      if (!s["diffuse"].is_number()) throw ParseError("'diffuse' must be a number");
      steps.emplace_back(Diffuse{s["diffuse"].get<double>()});
    } else if (s.contains("condition")) {
      const auto& c = s["condition"];
      if (!c.is_object()) throw ParseError("'condition' must be an object");
      steps.emplace_back(Condition{observation_likelihood(
          n, json_index(c, "object", n), json_index(c, "position", n),
          json_number(c, "hit", 1.0), json_number(c, "miss", 0.0))});
    } else {
      throw ParseError("unknown step '" + s.begin().key() + "'");
    }
  }
  return steps;
}

std::vector<PatternBlock> parse_pattern(const json& j) {
  if (!j.is_array()) throw ParseError("pattern must be a JSON array");
  std::vector<PatternBlock> blocks;
  for (const auto& b : j) {
    if (!b.is_object() || !b.contains("objects") || !b.contains("positions")) {
      throw ParseError("pattern blocks need 'objects' and 'positions'");
    }
    PatternBlock block;
    for (const char* key : {"objects", "positions"}) {
      const auto& arr = b.at(key);
      if (!arr.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
      auto& dst = std::string_view(key) == "objects" ? block.objects : block.positions;
      for (const auto& v : arr) {
        if (!v.is_number_integer()) throw ParseError("pattern entries must be integers");
        const auto x = v.get<long long>();
        if (x < 1 || x > 64) throw ParseError("pattern entry out of range");
        dst.push_back(static_cast<int>(x));
      }
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

int cmd_sn(const SnOptions& o, std::ostream& out) {
  const SnGuard guard{guard_override()};
  if (o.n < 1) throw InvalidArgument("--n must be positive");
  guard.check(o.n);
  const auto steps = parse_steps(o.steps, o.n);
  const auto dist = markov_model(o.n, steps, guard);

  json marginals = json::array();
  for (const auto& text : o.marginals) {
    const json pattern = parse_json(text, "--marginal");
    double p = 0.0;
    try {
      p = marginal_pattern(dist, parse_pattern(pattern));
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string("malformed pattern: ") + e.what());
    }
    marginals.push_back({{"pattern", pattern}, {"probability", p}});
  }
  if (!o.out.empty()) {
    std::string csv = "permutation,probability\n";
    const auto all = enumerate(o.n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      csv += "\"" + all[i].to_text() + "\"," + format_double(dist.values[i]) + "\n";
    }
    write_file(o.out, csv);
  }
  out << dump({{"n", o.n}, {"steps", steps.size()}, {"marginals", marginals}});
  return kOk;
}

// Runs `body`, translating library errors into exit codes.
template <typename F>
int guarded(F&& body, std::ostream& err) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const NegativeMass& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidModel;
  } catch (const NegativeConditional& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidModel;
  } catch (const ZeroPosteriorMass& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidModel;
  } catch (const ZeroSuccessProbability& e) {
    err << "error: " << e.what() << "\n";
    return kPostselection;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Spectral smoothing models over bitstrings and permutations", "spectra"};
  app.require_subcommand(1);

  SpectrumOptions spec_o;
  auto* spectrum = app.add_subcommand("spectrum", "Empirical Fourier spectrum of a dataset");
  spectrum->add_option("--input", spec_o.input, "Dataset file")->required();
  spectrum->add_option("--group", spec_o.group, "boolean or cyclic")
      ->check(CLI::IsMember({"boolean", "cyclic"}));
  spectrum->add_option("--top", spec_o.top, "Keep the K largest coefficients");
  spectrum->add_option("--band", spec_o.band, "Maximum order (bandlimited mode)");
  spectrum->add_option("--out", spec_o.out, "Output JSON (default stdout)");

  SmoothOptions smooth_o;
  auto* smooth_c = app.add_subcommand("smooth", "Classical empirical smoothing");
  smooth_c->add_option("--input", smooth_o.input, "Dataset file")->required();
  smooth_c->add_option("--theta", smooth_o.theta, "Bit-flip rate")->required();
  smooth_c->add_option("--band", smooth_o.band, "Store a bandlimited model");
  smooth_c->add_option("--out", smooth_o.out, "Model JSON");
  smooth_c->add_option("--plot", smooth_o.plot, "Probability CSV");

  SampleOptions sample_o;
  auto* sample = app.add_subcommand("sample", "Draw samples from a model or the noise kernel");
  sample->add_option("--model", sample_o.model, "Model JSON");
  sample->add_flag("--kde", sample_o.kde, "Sample by flipping bits of training points");
  sample->add_option("--theta", sample_o.theta, "Bit-flip rate for --kde");
  sample->add_option("--input", sample_o.input, "Dataset file for --kde");
  sample->add_option("--count", sample_o.count, "Number of samples")->required();
  sample->add_option("--seed", sample_o.seed, "64-bit seed")->required();
  sample->add_option("--out", sample_o.out, "Output file (default stdout)");

  QsmoothOptions q_o;
  auto* qsmooth = app.add_subcommand("qsmooth", "Simulated quantum empirical smoothing");
  qsmooth->add_option("--input", q_o.input, "Dataset file")->required();
  qsmooth->add_option("--theta", q_o.theta, "Filter rate")->required();
  qsmooth->add_option("--out", q_o.out, "Model JSON");
  qsmooth->add_option("--report", q_o.report, "Report JSON (default stdout)");
  qsmooth->add_option("--plot", q_o.plot, "Probability CSV");

  FitOptions fit_o;
  auto* fit = app.add_subcommand("fit", "Choose theta by held-out likelihood");
  fit->add_option("--train", fit_o.train, "Training dataset")->required();
  fit->add_option("--valid", fit_o.valid, "Validation dataset")->required();
  fit->add_option("--grid", fit_o.grid, "Grid points on [0, 1/2]");
  fit->add_option("--out", fit_o.out, "Curve CSV");

  QnnOptions qnn_o;
  auto* qnn = app.add_subcommand("qnn-spectrum", "Frequency set of an encoding scheme");
  qnn->add_option("--eigs", qnn_o.eigs, "Comma-separated eigenvalues of one gate (repeat)")
      ->required()
      ->allow_extra_args(false);
  qnn->add_flag("--demo-model", qnn_o.demo, "Also extract coefficients of a random model");
  qnn->add_option("--kmax", qnn_o.kmax, "Largest extracted frequency");
  qnn->add_option("--seed", qnn_o.seed, "Seed for the demo model");

  SnOptions sn_o;
  auto* sn = app.add_subcommand("sn", "Diffusion/conditioning model over permutations");
  sn->add_option("--n", sn_o.n, "Number of objects")->required();
  sn->add_option("--steps", sn_o.steps, "JSON list of steps");
  sn->add_option("--marginal", sn_o.marginals, "JSON pattern (repeat)")->allow_extra_args(false);
  sn->add_option("--out", sn_o.out, "Distribution CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  return guarded(
      [&]() -> int {
        if (spectrum->parsed()) return cmd_spectrum(spec_o, out);
        if (smooth_c->parsed()) return cmd_smooth(smooth_o, out);
        if (sample->parsed()) return cmd_sample(sample_o, out);
        if (qsmooth->parsed()) return cmd_qsmooth(q_o, out);
        if (fit->parsed()) return cmd_fit(fit_o, out);
        if (qnn->parsed()) return cmd_qnn(qnn_o, out);
        if (sn->parsed()) return cmd_sn(sn_o, out);
        return kUsage;
      },
      err);
}

}  // namespace spectra::cli
