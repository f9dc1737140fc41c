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

#include "bornlab/json_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace bornlab {

namespace {

double number_at(const Json& j, std::size_t i, const char* what) {
  if (!j.at(i).is_number()) {
    throw ValidationError(std::string(what) + ": expected a number");
  }
  return j.at(i).get<double>();
}

void require_array(const Json& j, std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != size) {
    std::ostringstream os;
    os << what << ": expected an array of " << size << " elements";
    throw ValidationError(os.str());
  }
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text, std::size_t line) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    std::ostringstream os;
    os << "samples csv line " << line << ": malformed number '" << text << "'";
    throw ValidationError(os.str());
  }
  return v;
}

void flatten(std::ostream& out, const std::string& prefix, const Json& j) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(out, prefix.empty() ? key : prefix + "." + key, value);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(out, prefix + "." + std::to_string(i), j[i]);
    }
  } else if (j.is_string()) {
    out << prefix << ',' << j.get<std::string>() << '\n';
  } else {
    out << prefix << ',' << j.dump() << '\n';
  }
}

}  // namespace

void to_json(Json& j, const FourVector& r) {
  j = Json::array({r[0], r[1], r[2], r[3]});
}

void to_json(Json& j, const BlochVector& n) {
  j = Json::array({n[0], n[1], n[2]});
}

void to_json(Json& j, const Hermitian2& a) {
  j = Json::array();
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < 2; ++col) {
      j.push_back(Json::array({a(row, col).real(), a(row, col).imag()}));
    }
  }
}

void to_json(Json& j, const MeasureSample& s) {
  j = Json{{"r", s.r}, {"value", s.value}};
}

void to_json(Json& j, const AdditivityReport& rep) {
  j = Json{{"samples", rep.samples},
           {"max_defect", rep.max_defect},
           {"mean_defect", rep.mean_defect},
           {"tol", rep.tol},
           {"pass", rep.pass}};
}

void to_json(Json& j, const LatticeAxiomReport& rep) {
  j = Json{{"samples", rep.samples},
           {"max_defect", rep.max_defect},
           {"mean_defect", rep.mean_defect},
           {"max_range_violation", rep.max_range_violation},
           {"max_complement_defect", rep.max_complement_defect},
           {"tol", rep.tol},
           {"pass", rep.pass}};
}

void to_json(Json& j, const EffectAdditivityReport& rep) {
  j = Json{{"defect", rep.defect},
           {"product_norm", rep.product_norm},
           {"tol", rep.tol},
           {"pass", rep.pass}};
}

void to_json(Json& j, const DensityExtraction& d) {
  j = Json{{"rho", d.rho},
           {"trace", d.trace},
           {"min_eigenvalue", d.min_eigenvalue},
           {"physical", d.physical}};
}

void to_json(Json& j, const FitReport& rep) {
  j = Json{{"schema_version", kFitReportSchemaVersion},
           {"c_hat", rep.c_hat},
           {"k_hat", rep.k_hat},
           {"rms_residual", rep.rms_residual},
           {"max_residual", rep.max_residual},
           {"samples", rep.samples},
           {"design_rank", rep.design_rank},
           {"tol_rank", rep.tol_rank},
           {"singular_values", rep.singular_values},
           {"null_space", rep.null_space},
           {"identifiable_note", rep.identifiable_note}};
  j["verdict"] = rep.verdict ? Json(to_string(*rep.verdict)) : Json(nullptr);
  j["rho_hat"] = rep.rho_hat ? Json(*rep.rho_hat) : Json(nullptr);
}

void to_json(Json& j, const Derivation& d) {
  const DerivationTrace& t = d.trace;
  j = Json{
      {"schema_version", kDerivationSchemaVersion},
      {"n_phi", t.n_phi},
      {"sum_constraint", t.sum_constraint},
      {"dot_constraint", t.dot_constraint},
      {"k_norm", t.k_norm},
      {"c", t.c},
      {"k0", t.k0},
      {"k", d.measure.k},
      {"steps",
       Json::array(
           {Json{{"name", "normalization_pair"},
                 {"constraint", "2c+k0+n.k=1 and 2c+k0-n.k=0"},
                 {"sum_constraint", t.sum_constraint},
                 {"dot_constraint", t.dot_constraint}},
            Json{{"name", "slice_range"},
                 {"constraint", "-1/2 <= |k| cos(theta) <= 1/2"},
                 {"range_bound", t.range_bound},
                 {"k_norm", t.k_norm},
                 {"k_spatial",
                  Json::array({d.measure.k[1], d.measure.k[2],
                               d.measure.k[3]})}},
            Json{{"name", "off_slice_complement"},
                 {"constraint", "2c-k0+n.k=0"},
                 {"complement_constraint", t.complement_constraint},
                 {"c", t.c},
                 {"k0", t.k0}}})},
      {"crosscheck_defect", t.crosscheck_defect}};
}

FourVector four_vector_from_json(const Json& j) {
  require_array(j, 4, "FourVector");
  return FourVector(number_at(j, 0, "FourVector"), number_at(j, 1, "FourVector"),
                    number_at(j, 2, "FourVector"), number_at(j, 3, "FourVector"));
}

BlochVector bloch_from_json(const Json& j) {
  require_array(j, 3, "BlochVector");
  return BlochVector(number_at(j, 0, "BlochVector"),
                     number_at(j, 1, "BlochVector"),
                     number_at(j, 2, "BlochVector"));
}

Hermitian2 hermitian_from_json(const Json& j) {
  require_array(j, 4, "Hermitian2");
  Eigen::Matrix2cd m;
  for (std::size_t i = 0; i < 4; ++i) {
    require_array(j[i], 2, "Hermitian2 entry");
    m(static_cast<Eigen::Index>(i / 2), static_cast<Eigen::Index>(i % 2)) =
        Complex(number_at(j[i], 0, "Hermitian2"),
                number_at(j[i], 1, "Hermitian2"));
  }
  return Hermitian2(m);
}

std::vector<MeasureSample> samples_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
        j["schema_version"].get<int>() != kSampleSchemaVersion) {
      throw ValidationError("samples: unsupported or missing schema_version");
    }
    if (!j.contains("samples")) {
      throw ValidationError("samples: missing 'samples' array");
    }
    arr = &j["samples"];
  }
  if (!arr->is_array()) {
    throw ValidationError("samples: expected a JSON array");
  }
  std::vector<MeasureSample> out;
  out.reserve(arr->size());
  for (const Json& item : *arr) {
    if (!item.is_object() || !item.contains("r") || !item.contains("value")) {
      throw ValidationError("samples: each entry needs 'r' and 'value'");
    }
    if (!item["value"].is_number()) {
      throw ValidationError("samples: 'value' must be a number");
    }
    const double v = item["value"].get<double>();
    if (!std::isfinite(v)) throw ValidationError("samples: non-finite value");
    out.push_back({four_vector_from_json(item["r"]), v});
  }
  return out;
}

Json samples_to_json(std::span<const MeasureSample> samples) {
  Json j = Json::array();
  for (const auto& s : samples) j.push_back(s);
  return j;
}

std::vector<MeasureSample> samples_from_csv(std::istream& in) {
  std::vector<MeasureSample> out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    if (!header_seen) {
      header_seen = true;
      if (line.rfind("r0", 0) == 0) continue;
      throw ValidationError("samples csv: missing header r0,r1,r2,r3,value");
    }
    std::array<double, 5> fields{};
    std::size_t count = 0;
    std::string_view rest(line);
    for (;;) {
      const auto comma = rest.find(',');
      if (count == fields.size()) {
        throw ValidationError("samples csv line " + std::to_string(line_no) +
                              ": expected 5 fields");
      }
      fields[count++] = parse_number(rest.substr(0, comma), line_no);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (count != fields.size()) {
      throw ValidationError("samples csv line " + std::to_string(line_no) +
                            ": expected 5 fields");
    }
    if (!std::isfinite(fields[4])) {
      throw ValidationError("samples csv: non-finite value");
    }
    out.push_back(
        {FourVector(fields[0], fields[1], fields[2], fields[3]), fields[4]});
  }
  return out;
}

void samples_to_csv(std::ostream& out, std::span<const MeasureSample> samples) {
  out << "r0,r1,r2,r3,value\n";
  for (const auto& s : samples) {
    out << format_number(s.r[0]) << ',' << format_number(s.r[1]) << ','
        << format_number(s.r[2]) << ',' << format_number(s.r[3]) << ','
        << format_number(s.value) << '\n';
  }
}

void json_to_csv(std::ostream& out, const Json& j) {
  out << "key,value\n";
  flatten(out, "", j);
}

}  // namespace bornlab
