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

#ifndef BORNLAB_JSON_IO_HPP
#define BORNLAB_JSON_IO_HPP

// JSON and CSV encodings shared by the library and the CLI. Layouts are
// documented in schemas/.
//
//   Hermitian2   [[re, im], [re, im], [re, im], [re, im]]  (a00 a01 a10 a11)
//   FourVector   [r0, r1, r2, r3]
//   BlochVector  [x, y, z]
//   samples      [{"r": [r0, r1, r2, r3], "value": v}, ...]
//
// Decoders throw ValidationError on malformed input.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "bornlab/additivity_lab.hpp"
#include "bornlab/gudder_fit.hpp"
#include "bornlab/measure_derivation.hpp"
#include "bornlab/pauli_algebra.hpp"

namespace bornlab {

using Json = nlohmann::json;

inline constexpr int kSampleSchemaVersion = 1;
inline constexpr int kFitReportSchemaVersion = 1;
inline constexpr int kDerivationSchemaVersion = 1;

void to_json(Json& j, const FourVector& r);
void to_json(Json& j, const BlochVector& n);
void to_json(Json& j, const Hermitian2& a);
void to_json(Json& j, const MeasureSample& s);
void to_json(Json& j, const AdditivityReport& rep);
void to_json(Json& j, const LatticeAxiomReport& rep);
void to_json(Json& j, const EffectAdditivityReport& rep);
void to_json(Json& j, const DensityExtraction& d);
void to_json(Json& j, const FitReport& rep);
void to_json(Json& j, const Derivation& d);

FourVector four_vector_from_json(const Json& j);
BlochVector bloch_from_json(const Json& j);
Hermitian2 hermitian_from_json(const Json& j);

/// Accepts a bare sample array, or {"schema_version": 1, "samples": [...]}.
std::vector<MeasureSample> samples_from_json(const Json& j);
Json samples_to_json(std::span<const MeasureSample> samples);

/// Header "r0,r1,r2,r3,value", then one sample per line.
std::vector<MeasureSample> samples_from_csv(std::istream& in);
void samples_to_csv(std::ostream& out, std::span<const MeasureSample> samples);

/// Flattens a JSON object into "key,value" lines with dotted paths, array
/// elements indexed as key.N. Used for --format csv reports.
void json_to_csv(std::ostream& out, const Json& j);

}  // namespace bornlab

#endif  // BORNLAB_JSON_IO_HPP
