// Copyright (c) 2025 The spoofsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPOOFSYNTH_RNG_H_
#define SPOOFSYNTH_RNG_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace spoofsynth {

// Deterministic random source. All draws are pure functions of the mt19937_64
// state (no std::*_distribution, whose internal caches are not serializable),
// so training can resume bit-exactly from a checkpoint.
class RandomSource {
 public:
  RandomSource() : engine_(0) {}
  explicit RandomSource(uint64_t seed) : engine_(seed) {}

  // [0, 1), 53-bit resolution.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; consumes exactly two engine draws.
  double Normal() {
    double u1 = Uniform();
    double u2 = Uniform();
    // Keep u1 away from 0 so log stays finite.
    u1 = 1.0 - u1;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // Uniform integer in [0, n), n > 0. Debiased by rejection.
  uint64_t Below(uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  std::mt19937_64& engine() { return engine_; }

  std::string SerializeState() const {
    std::ostringstream ss;
    ss << engine_;
    return ss.str();
  }
  void RestoreState(const std::string& state) {
    std::istringstream ss(state);
    ss >> engine_;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace spoofsynth

#endif  // SPOOFSYNTH_RNG_H_
