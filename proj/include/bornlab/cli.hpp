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

#ifndef BORNLAB_CLI_HPP
#define BORNLAB_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bornlab/gudder_fit.hpp"
#include "bornlab/json_io.hpp"
#include "bornlab/pauli_algebra.hpp"

namespace bornlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitExpectation = 3;

const char* version();

enum class Format { Json, Csv };

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  double tol = 1e-8;
  std::optional<std::string> output_path;
  Format format = Format::Json;

  /// Throws ValidationError unless samples >= 1 and tol > 0.
  void validate() const;
};

/// "x,y,z" -> BlochVector. No normalization is applied.
BlochVector parse_bloch(std::string_view text);

/// Target of `check`.
struct CheckTarget {
  enum class Kind { Born, Gudder, Counterexample };
  Kind kind = Kind::Born;
  GudderFunctional gudder;  // Kind::Gudder
  int power = 3;            // Kind::Counterexample
};

/// "born" | "gudder:c,k0,k1,k2,k3" | "counterexample[:m]"
CheckTarget parse_target(std::string_view text);

/// Synthetic sample source for `fit` and `sample`:
///   born[:x,y,z][@general|@slice|@slice+anchor]
///   gudder:c,k0,k1,k2,k3[@general|@slice]
///   oddpower:m[,x,y,z][@slice]        (alias: counterexample)
struct GeneratorSpec {
  enum class Kind { Born, Gudder, OddPower };
  enum class Support { General, Slice, SliceWithAnchor };
  Kind kind = Kind::Born;
  Support support = Support::General;
  BlochVector axis{0.0, 0.0, 1.0};
  GudderFunctional gudder;
  int power = 3;
};

GeneratorSpec parse_generator(std::string_view text);

/// Deterministic given (spec, n, seed). SliceWithAnchor appends the single
/// off-slice point (-1, n_phi) to n slice samples.
std::vector<MeasureSample> generate_samples(const GeneratorSpec& spec,
                                            std::size_t n, std::uint64_t seed);

/// Entry point shared by the executable and the tests. Writes reports to
/// `out` (or --out), diagnostics to `err`, and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bornlab::cli

#endif  // BORNLAB_CLI_HPP
