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

#ifndef SPOOFSYNTH_DSP_H_
#define SPOOFSYNTH_DSP_H_

#include <cstdint>
#include <memory>
#include <vector>

namespace spoofsynth {

struct SpectrogramParams {
  int n_fft = 1024;
  int hop = 256;
  int win = 1024;
  int sample_rate = 16000;
  int num_mels = 80;
  double mel_fmin = 0.0;
  double mel_fmax = 8000.0;
  double mel_floor = 1e-5;

  int NumBins() const { return n_fft / 2 + 1; }
  // Center-less framing: frames fully inside the signal.
  int64_t NumFrames(int64_t num_samples) const {
    if (num_samples < win) return 0;
    return 1 + (num_samples - win) / hop;
  }
  bool operator==(const SpectrogramParams& o) const = default;
};

// Precomputed analysis tables for one parameter set: periodic Hann window,
// one-sided DFT basis (cos/sin, row-major [win x bins]) and mel filterbank
// (row-major [bins x num_mels], HTK mel scale, triangular).
class StftBasis {
 public:
  explicit StftBasis(const SpectrogramParams& params);

  const SpectrogramParams& params() const { return params_; }
  const std::vector<double>& window() const { return window_; }
  const std::vector<double>& cos_basis() const { return cos_basis_; }
  const std::vector<double>& sin_basis() const { return sin_basis_; }
  const std::vector<double>& mel_filter() const { return mel_filter_; }

 private:
  SpectrogramParams params_;
  std::vector<double> window_;
  std::vector<double> cos_basis_;
  std::vector<double> sin_basis_;
  std::vector<double> mel_filter_;
};

// Magnitude STFT, row-major [frames x bins].
std::vector<double> StftMagnitude(const std::vector<double>& samples,
                                  const StftBasis& basis, int64_t* num_frames);

// log(max(mag @ mel_filter, floor)), row-major [frames x num_mels].
std::vector<double> MelFromMagnitude(const std::vector<double>& mag,
                                     int64_t num_frames,
                                     const StftBasis& basis);

double HzToMel(double hz);
double MelToHz(double mel);

}  // namespace spoofsynth

#endif  // SPOOFSYNTH_DSP_H_
