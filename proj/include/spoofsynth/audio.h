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

#ifndef SPOOFSYNTH_AUDIO_H_
#define SPOOFSYNTH_AUDIO_H_

#include <string>
#include <vector>

namespace spoofsynth {

// Mono waveform, samples in [-1, 1].
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = 0;

  double DurationSeconds() const {
    return sample_rate > 0
               ? static_cast<double>(samples.size()) / sample_rate
               : 0.0;
  }
};

// WAV PCM-16 mono only; anything else is rejected with BadFormat.
AudioClip ReadWav(const std::string& path);
void WriteWav(const std::string& path, const AudioClip& clip);

// Band-limited (Kaiser-windowed sinc) resampling. target == source returns
// the input unchanged. Output length is round(n * target / source), which
// conserves duration to within half a sample.
AudioClip Resample(const AudioClip& clip, int target_rate);

double PeakAmplitude(const AudioClip& clip);
double PeakDbfs(const AudioClip& clip);

// Pure peak scaling to 10^(target_peak_dbfs/20). Throws SilentClip when the
// input peak is below 1e-8.
AudioClip NormalizeVolume(const AudioClip& clip, double target_peak_dbfs);

}  // namespace spoofsynth

#endif  // SPOOFSYNTH_AUDIO_H_
