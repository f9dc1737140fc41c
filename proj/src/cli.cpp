// Copyright 2026 The bornlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bornlab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "bornlab/additivity_lab.hpp"
#include "bornlab/measure_derivation.hpp"

#ifndef BORNLAB_VERSION
#define BORNLAB_VERSION "0.0.0"
#endif

namespace bornlab::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<double> parse_numbers(std::string_view text, const char* what) {
  std::vector<double> out;
  for (;;) {
    const auto comma = text.find(',');
    const std::string_view field = trim(text.substr(0, comma));
    double v = 0.0;
    const auto res =
        std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || res.ec != std::errc() ||
        res.ptr != field.data() + field.size() || !std::isfinite(v)) {
      throw ValidationError(std::string(what) + ": malformed number '" +
                            std::string(field) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

int parse_int(std::string_view text, const char* what) {
  text = trim(text);
  int v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() ||
      res.ptr != text.data() + text.size()) {
    throw ValidationError(std::string(what) + ": malformed integer '" +
                          std::string(text) + "'");
  }
  return v;
}

GudderFunctional parse_gudder_params(std::string_view text) {
  const auto p = parse_numbers(text, "gudder parameters");
  if (p.size() != 5) {
    throw ValidationError("gudder parameters: expected c,k0,k1,k2,k3");
  }
  return GudderFunctional{p[0], FourVector(p[1], p[2], p[3], p[4])};
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw ValidationError("--format must be json or csv");
}

const char* to_string(Format f) { return f == Format::Json ? "json" : "csv"; }

Json config_json(const RunConfig& cfg) {
  Json j{{"seed", cfg.seed},
         {"samples", cfg.samples},
         {"tol", cfg.tol},
         {"format", to_string(cfg.format)}};
  j["out"] = cfg.output_path ? Json(*cfg.output_path) : Json(nullptr);
  return j;
}

Json envelope(const std::string& command, Json config, Json result) {
  return Json{{"tool", "bornlab"},
              {"version", version()},
              {"command", command},
              {"config", std::move(config)},
              {"result", std::move(result)}};
}

// Writes the report to --out when given, else to `out`.
void emit(const RunConfig& cfg, const Json& report, std::ostream& out) {
  std::ostringstream text;
  if (cfg.format == Format::Json) {
    text << report.dump(2) << '\n';
  } else {
    json_to_csv(text, report);
  }
  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path, std::ios::binary);
    if (!file) {
      throw ValidationError("cannot open output file '" + *cfg.output_path +
                            "'");
    }
    file << text.str();
  } else {
    out << text.str();
  }
}

// Parsed-but-unvalidated command line.
struct Options {
  std::string bloch;
  std::string state;
  std::string proj;
  std::string target = "born";
  std::string generate;
  std::string input_path;
  std::string expect;
  std::string format = "json";
  std::string out_path;
  std::optional<long long> samples;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  double tol_rank = kDefaultRankTol;
  double tau_c = kDefaultTauC;
  double tau_fit = kDefaultTauFit;
};

RunConfig make_config(const Options& o, long long default_samples) {
  RunConfig cfg;
  const long long n = o.samples.value_or(default_samples);
  if (n < 1) throw ValidationError("--samples must be >= 1");
  cfg.samples = static_cast<std::size_t>(n);
  cfg.seed = o.seed;
  cfg.tol = o.tol;
  cfg.format = parse_format(o.format);
  if (!o.out_path.empty()) cfg.output_path = o.out_path;
  cfg.validate();
  return cfg;
}

void require_positive(double v, const char* flag) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(std::string(flag) + " must be positive");
  }
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_derive(const Options& o, std::ostream& out) {
  const RunConfig cfg = make_config(o, 1);
  const BlochVector n = parse_bloch(o.bloch);
  const Derivation d = derive_measure(n);
  Json config = config_json(cfg);
  config["bloch"] = n;
  emit(cfg, envelope("derive", std::move(config), Json(d)), out);
  return kExitOk;
}

int cmd_prob(const Options& o, std::ostream& out) {
  const RunConfig cfg = make_config(o, 1);
  const BlochVector state = parse_bloch(o.state);
  const BlochVector proj = parse_bloch(o.proj);

  const double bloch_form = born_probability(state, proj);
  const double ket_form =
      overlap_probability(ket_from_bloch(state), ket_from_bloch(proj));
  const double trace_form = hilbert_schmidt_inner(projector_from_bloch(state),
                                                  projector_from_bloch(proj));
  const double defect = std::max({std::abs(bloch_form - ket_form),
                                   std::abs(bloch_form - trace_form),
                                   std::abs(ket_form - trace_form)});
  Json result{{"probability", bloch_form},
              {"bloch_form", bloch_form},
              {"ket_form", ket_form},
              {"trace_form", trace_form},
              {"max_form_defect", defect}};
  Json config = config_json(cfg);
  config["state"] = state;
  config["proj"] = proj;
  emit(cfg, envelope("prob", std::move(config), std::move(result)), out);
  return kExitOk;
}

Json suite_entry(const std::string& name, const std::string& expected,
                 const std::string& observed, Json report) {
  return Json{{"name", name},
              {"expected", expected},
              {"observed", observed},
              {"ok", expected == observed},
              {"report", std::move(report)}};
}

int cmd_check(const Options& o, std::ostream& out) {
  const RunConfig cfg = make_config(o, 10000);
  require_positive(o.tol_rank, "--tol-rank");
  require_positive(o.tau_c, "--tau-c");
  require_positive(o.tau_fit, "--tau-fit");
  const CheckTarget target = parse_target(o.target);
  const BlochVector axis = parse_bloch(o.bloch.empty() ? "0,0,1" : o.bloch);
  require_unit(axis, "--bloch");
  const std::size_t n = cfg.samples;
  const std::size_t n_fit = std::max<std::size_t>(n, 5);
  auto pass_fail = [](bool p) { return std::string(p ? "pass" : "fail"); };

  Json suites = Json::array();
  std::uint64_t stream = cfg.seed;
  auto fit_entry = [&](const std::vector<MeasureSample>& samples,
                       const std::string& expected) {
    const FitReport fit =
        classify(fit_gudder(samples, o.tol_rank), o.tau_c, o.tau_fit);
    return suite_entry("fit", expected, to_string(*fit.verdict), Json(fit));
  };

  switch (target.kind) {
    case CheckTarget::Kind::Born: {
      const GudderFunctional f = derive_measure(axis).measure;
      Rng r1(stream++), r2(stream++), r3(stream++), r4(stream++);
      const auto orth = check_orthogonal_additivity(f, n, r1, cfg.tol);
      suites.push_back(suite_entry("orthogonal_additivity", "pass",
                                   pass_fail(orth.pass), Json(orth)));
      const auto full = check_full_additivity(f, n, r2, cfg.tol);
      suites.push_back(suite_entry("full_additivity", "pass",
                                   pass_fail(full.pass), Json(full)));
      const auto axioms =
          check_lattice_axioms(LatticeMeasure::born(axis), n, r3, cfg.tol);
      suites.push_back(suite_entry("lattice_axioms", "pass",
                                   pass_fail(axioms.pass), Json(axioms)));
      suites.push_back(
          fit_entry(sample_functional(f, n_fit, r4), "BornLinear"));
      break;
    }
    case CheckTarget::Kind::Gudder: {
      const GudderFunctional& f = target.gudder;
      Rng r1(stream++), r2(stream++), r3(stream++);
      const auto orth = check_orthogonal_additivity(f, n, r1, cfg.tol);
      suites.push_back(suite_entry("orthogonal_additivity", "pass",
                                   pass_fail(orth.pass), Json(orth)));
      // Only the c = 0 members are additive on arbitrary pairs.
      const auto full = check_full_additivity(f, n, r2, cfg.tol);
      suites.push_back(suite_entry("full_additivity",
                                   pass_fail(f.c == 0.0),
                                   pass_fail(full.pass), Json(full)));
      const bool linear = std::abs(f.c) <= o.tau_c;
      suites.push_back(fit_entry(sample_functional(f, n_fit, r3),
                                 linear ? "BornLinear" : "GudderQuadratic"));
      break;
    }
    case CheckTarget::Kind::Counterexample: {
      const LatticeMeasure p = odd_power_measure(axis, target.power);
      Rng r1(stream++), r2(stream++);
      const auto axioms = check_lattice_axioms(p, n, r1, cfg.tol);
      suites.push_back(suite_entry("lattice_axioms", "pass",
                                   pass_fail(axioms.pass), Json(axioms)));
      suites.push_back(
          fit_entry(sample_lattice_measure(p, n_fit, r2), "NonGudder"));
      break;
    }
  }

  const bool all_ok = std::all_of(suites.begin(), suites.end(),
                                  [](const Json& s) { return s["ok"] == true; });
  Json config = config_json(cfg);
  config["target"] = o.target;
  config["bloch"] = axis;
  config["tol_rank"] = o.tol_rank;
  config["tau_c"] = o.tau_c;
  config["tau_fit"] = o.tau_fit;
  emit(cfg,
       envelope("check", std::move(config),
                Json{{"suites", std::move(suites)}, {"all_ok", all_ok}}),
       out);
  return all_ok ? kExitOk : kExitExpectation;
}

std::vector<MeasureSample> read_sample_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read sample file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw ValidationError("sample file '" + path + "': " + e.what());
    }
    return samples_from_json(j);
  }
  std::istringstream is(text);
  return samples_from_csv(is);
}

int cmd_fit(const Options& o, std::ostream& out) {
  const RunConfig cfg = make_config(o, 200);
  require_positive(o.tol_rank, "--tol-rank");
  require_positive(o.tau_c, "--tau-c");
  require_positive(o.tau_fit, "--tau-fit");
  if (o.input_path.empty() == o.generate.empty()) {
    throw ValidationError("fit: give exactly one of --in or --generate");
  }
  if (!o.expect.empty() && o.expect != "linear" && o.expect != "born" &&
      o.expect != "nongudder") {
    throw ValidationError("--expect must be linear, born or nongudder");
  }
  const std::vector<MeasureSample> samples =
      o.input_path.empty()
          ? generate_samples(parse_generator(o.generate), cfg.samples, cfg.seed)
          : read_sample_file(o.input_path);

  const FitReport fit =
      classify(fit_gudder(samples, o.tol_rank), o.tau_c, o.tau_fit);

  Json config = config_json(cfg);
  config["in"] = o.input_path.empty() ? Json(nullptr) : Json(o.input_path);
  config["generate"] = o.generate.empty() ? Json(nullptr) : Json(o.generate);
  config["tol_rank"] = o.tol_rank;
  config["tau_c"] = o.tau_c;
  config["tau_fit"] = o.tau_fit;
  config["expect"] = o.expect.empty() ? Json(nullptr) : Json(o.expect);
  emit(cfg, envelope("fit", std::move(config), Json(fit)), out);

  const Verdict v = *fit.verdict;
  bool met = true;
  if (o.expect == "linear") met = v != Verdict::NonGudder;
  if (o.expect == "born") met = v == Verdict::BornLinear;
  if (o.expect == "nongudder") met = v == Verdict::NonGudder;
  return met ? kExitOk : kExitExpectation;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const RunConfig cfg = make_config(o, 200);
  if (o.generate.empty()) throw ValidationError("sample: --generate is required");
  const auto samples =
      generate_samples(parse_generator(o.generate), cfg.samples, cfg.seed);
  std::ostringstream text;
  if (cfg.format == Format::Json) {
    text << samples_to_json(samples).dump(2) << '\n';
  } else {
    samples_to_csv(text, samples);
  }
  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path, std::ios::binary);
    if (!file) {
      throw ValidationError("cannot open output file '" + *cfg.output_path +
                            "'");
    }
    file << text.str();
  } else {
    out << text.str();
  }
  return kExitOk;
}

}  // namespace

const char* version() { return BORNLAB_VERSION; }

void RunConfig::validate() const {
  if (samples < 1) throw ValidationError("samples must be >= 1");
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw ValidationError("tol must be positive");
  }
}

BlochVector parse_bloch(std::string_view text) {
  const auto v = parse_numbers(text, "bloch vector");
  if (v.size() != 3) {
    throw ValidationError("bloch vector: expected three comma-separated numbers");
  }
  return BlochVector(v[0], v[1], v[2]);
}

CheckTarget parse_target(std::string_view text) {
  CheckTarget t;
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view params =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (kind == "born" && colon == std::string_view::npos) {
    t.kind = CheckTarget::Kind::Born;
  } else if (kind == "gudder" && colon != std::string_view::npos) {
    t.kind = CheckTarget::Kind::Gudder;
    t.gudder = parse_gudder_params(params);
  } else if (kind == "counterexample") {
    t.kind = CheckTarget::Kind::Counterexample;
    if (colon != std::string_view::npos) t.power = parse_int(params, "target");
    if (t.power < 3 || t.power % 2 == 0) {
      throw ValidationError("counterexample exponent must be odd and >= 3");
    }
  } else {
    throw ValidationError("malformed target '" + std::string(text) +
                          "' (expected born, gudder:c,k0,k1,k2,k3 or "
                          "counterexample[:m])");
  }
  return t;
}

GeneratorSpec parse_generator(std::string_view text) {
  GeneratorSpec g;
  std::string_view body = text;
  std::string_view support;
  if (const auto at = text.find('@'); at != std::string_view::npos) {
    body = text.substr(0, at);
    support = text.substr(at + 1);
  }
  const auto colon = body.find(':');
  const std::string_view kind = body.substr(0, colon);
  const std::string_view params =
      colon == std::string_view::npos ? std::string_view{} : body.substr(colon + 1);

  if (kind == "born") {
    g.kind = GeneratorSpec::Kind::Born;
    if (!params.empty()) g.axis = parse_bloch(params);
    require_unit(g.axis, "born generator axis");
  } else if (kind == "gudder") {
    g.kind = GeneratorSpec::Kind::Gudder;
    g.gudder = parse_gudder_params(params);
  } else if (kind == "oddpower" || kind == "counterexample") {
    g.kind = GeneratorSpec::Kind::OddPower;
    g.support = GeneratorSpec::Support::Slice;
    if (!params.empty()) {
      const auto comma = params.find(',');
      g.power = parse_int(params.substr(0, comma), "oddpower exponent");
      if (comma != std::string_view::npos) {
        g.axis = parse_bloch(params.substr(comma + 1));
      }
    }
    // Validates exponent and axis.
    (void)odd_power_measure(g.axis, g.power);
  } else {
    throw ValidationError("malformed generator '" + std::string(text) + "'");
  }

  if (!support.empty()) {
    if (support == "general") {
      g.support = GeneratorSpec::Support::General;
    } else if (support == "slice") {
      g.support = GeneratorSpec::Support::Slice;
    } else if (support == "slice+anchor") {
      g.support = GeneratorSpec::Support::SliceWithAnchor;
    } else {
      throw ValidationError("unknown support '" + std::string(support) + "'");
    }
  }
  if (g.kind == GeneratorSpec::Kind::OddPower &&
      g.support != GeneratorSpec::Support::Slice) {
    throw ValidationError(
        "oddpower samples exist only on the slice (1, n); use @slice");
  }
  if (g.kind == GeneratorSpec::Kind::Gudder &&
      g.support == GeneratorSpec::Support::SliceWithAnchor) {
    throw ValidationError("slice+anchor support is defined for born only");
  }
  return g;
}

std::vector<MeasureSample> generate_samples(const GeneratorSpec& spec,
                                            std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  if (spec.kind == GeneratorSpec::Kind::OddPower) {
    return sample_lattice_measure(odd_power_measure(spec.axis, spec.power), n,
                                  rng);
  }
  const GudderFunctional f = spec.kind == GeneratorSpec::Kind::Born
                                 ? derive_measure(spec.axis).measure
                                 : spec.gudder;
  switch (spec.support) {
    case GeneratorSpec::Support::General:
      return sample_functional(f, n, rng);
    case GeneratorSpec::Support::Slice:
      return sample_functional_on_slice(f, n, rng);
    case GeneratorSpec::Support::SliceWithAnchor: {
      auto samples = sample_functional_on_slice(f, n, rng);
      const FourVector anchor(-1.0, spec.axis.coeffs());
      samples.push_back({anchor, f(anchor)});
      return samples;
    }
  }
  return {};
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"bornlab: qubit measure derivation and verification toolkit",
               "bornlab"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  Options o;
  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "Write the report to this file");
    sub->add_option("--format", o.format, "Report format: json or csv")
        ->capture_default_str();
  };
  auto add_run = [&o](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
    sub->add_option("--samples", o.samples, "Number of samples");
  };
  auto add_fit = [&o](CLI::App* sub) {
    sub->add_option("--tol-rank", o.tol_rank,
                    "Rank cutoff relative to the largest singular value")
        ->capture_default_str();
    sub->add_option("--tau-c", o.tau_c, "Threshold on |c| for BornLinear")
        ->capture_default_str();
    sub->add_option("--tau-fit", o.tau_fit, "RMS residual threshold")
        ->capture_default_str();
  };

  auto* derive = app.add_subcommand("derive", "Derive the measure for a state");
  derive->add_option("--bloch", o.bloch, "Unit Bloch vector x,y,z")->required();
  add_common(derive);

  auto* prob = app.add_subcommand("prob", "Born probability in three forms");
  prob->add_option("--state", o.state, "Unit Bloch vector of the state")
      ->required();
  prob->add_option("--proj", o.proj, "Unit Bloch vector of the projector")
      ->required();
  add_common(prob);

  auto* check = app.add_subcommand("check", "Run additivity and axiom suites");
  check->add_option("--target", o.target,
                    "born | gudder:c,k0,k1,k2,k3 | counterexample[:m]")
      ->capture_default_str();
  check->add_option("--bloch", o.bloch,
                    "Anchor axis for born and counterexample (default 0,0,1)");
  check->add_option("--tol", o.tol, "Defect tolerance")->capture_default_str();
  add_run(check);
  add_fit(check);
  add_common(check);

  auto* fit = app.add_subcommand("fit", "Fit the c (r.r) + k.r form to samples");
  fit->add_option("--in", o.input_path, "Sample file (JSON or CSV)");
  fit->add_option("--generate", o.generate, "Synthetic sample generator");
  fit->add_option("--expect", o.expect,
                  "Exit 3 unless the verdict matches: linear | born | nongudder");
  add_run(fit);
  add_fit(fit);
  add_common(fit);

  auto* sample = app.add_subcommand("sample", "Write synthetic sample files");
  sample->add_option("--generate", o.generate, "Synthetic sample generator")
      ->required();
  add_run(sample);
  add_common(sample);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*derive) return cmd_derive(o, out);
    if (*prob) return cmd_prob(o, out);
    if (*check) return cmd_check(o, out);
    if (*fit) return cmd_fit(o, out);
    if (*sample) return cmd_sample(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("bornlab");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace bornlab::cli
