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

#ifndef BORNLAB_RANDOM_HPP
#define BORNLAB_RANDOM_HPP

#include <cstdint>
#include <random>

namespace bornlab {

/// Seedable sample stream with a platform-independent sequence.
///
/// Bits come from std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. Distributions are implemented here rather than taken from
/// <random>, whose distribution algorithms are implementation-defined:
///
///   uniform()  top 53 bits of one draw, scaled to [0, 1)
///   normal()   Marsaglia polar method; one accepted pair yields one value,
///              the second is discarded so the stream has no hidden cache
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform();
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace bornlab

#endif  // BORNLAB_RANDOM_HPP
