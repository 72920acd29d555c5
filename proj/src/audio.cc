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

#include "spoofsynth/audio.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "spoofsynth/error.h"

namespace spoofsynth {

namespace {

constexpr double kSilenceFloor = 1e-8;

uint32_t ReadU32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}
uint16_t ReadU16(const unsigned char* p) {
  return static_cast<uint16_t>(p[0]) | (static_cast<uint16_t>(p[1]) << 8);
}

void PutU32(std::string* s, uint32_t v) {
  s->push_back(static_cast<char>(v & 0xff));
  s->push_back(static_cast<char>((v >> 8) & 0xff));
  s->push_back(static_cast<char>((v >> 16) & 0xff));
  s->push_back(static_cast<char>((v >> 24) & 0xff));
}
void PutU16(std::string* s, uint16_t v) {
  s->push_back(static_cast<char>(v & 0xff));
  s->push_back(static_cast<char>((v >> 8) & 0xff));
}

// Zeroth-order modified Bessel function, power series.
double BesselI0(double x) {
  double sum = 1.0;
  double term = 1.0;
  double half_x = x / 2.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half_x / k) * (half_x / k);
    sum += term;
    if (term < 1e-16 * sum) break;
  }
  return sum;
}

double Sinc(double x) {
  if (std::fabs(x) < 1e-12) return 1.0;
  double px = M_PI * x;
  return std::sin(px) / px;
}

}  // namespace

AudioClip ReadWav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError("BadFormat", "cannot open wav file: " + path);
  }
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (bytes.size() < 44 || bytes.compare(0, 4, "RIFF") != 0 ||
      bytes.compare(8, 4, "WAVE") != 0) {
    throw DataError("BadFormat", "not a RIFF/WAVE file: " + path);
  }
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());

  // Walk chunks; require PCM-16 mono fmt before data.
  size_t pos = 12;
  int sample_rate = 0;
  bool fmt_seen = false;
  while (pos + 8 <= bytes.size()) {
    std::string id = bytes.substr(pos, 4);
    uint32_t size = ReadU32(p + pos + 4);
    size_t body = pos + 8;
    if (body + size > bytes.size()) {
      throw DataError("BadFormat", "truncated chunk in wav file: " + path);
    }
    if (id == "fmt ") {
      if (size < 16) throw DataError("BadFormat", "short fmt chunk: " + path);
      uint16_t format = ReadU16(p + body);
      uint16_t channels = ReadU16(p + body + 2);
      sample_rate = static_cast<int>(ReadU32(p + body + 4));
      uint16_t bits = ReadU16(p + body + 14);
      if (format != 1 || bits != 16) {
        throw DataError("BadFormat",
                        "only PCM-16 wav supported: " + path);
      }
      if (channels != 1) {
        throw DataError("BadFormat", "only mono wav supported: " + path);
      }
      fmt_seen = true;
    } else if (id == "data") {
      if (!fmt_seen) {
        throw DataError("BadFormat", "data chunk before fmt: " + path);
      }
      AudioClip clip;
      clip.sample_rate = sample_rate;
      size_t n = size / 2;
      clip.samples.resize(n);
      for (size_t i = 0; i < n; ++i) {
        int16_t v = static_cast<int16_t>(ReadU16(p + body + 2 * i));
        clip.samples[i] = static_cast<double>(v) / 32768.0;
      }
      return clip;
    }
    pos = body + size + (size & 1);  // chunks are word-aligned
  }
  throw DataError("BadFormat", "no data chunk in wav file: " + path);
}

void WriteWav(const std::string& path, const AudioClip& clip) {
  if (clip.sample_rate <= 0) {
    throw DataError("BadFormat", "invalid sample rate for wav write");
  }
  std::string out;
  uint32_t data_bytes = static_cast<uint32_t>(clip.samples.size() * 2);
  out.reserve(44 + data_bytes);
  out += "RIFF";
  PutU32(&out, 36 + data_bytes);
  out += "WAVEfmt ";
  PutU32(&out, 16);
  PutU16(&out, 1);  // PCM
  PutU16(&out, 1);  // mono
  PutU32(&out, static_cast<uint32_t>(clip.sample_rate));
  PutU32(&out, static_cast<uint32_t>(clip.sample_rate * 2));  // byte rate
  PutU16(&out, 2);   // block align
  PutU16(&out, 16);  // bits
  out += "data";
  PutU32(&out, data_bytes);
  for (double s : clip.samples) {
    double c = std::clamp(s, -1.0, 1.0);
    auto v = static_cast<int16_t>(std::lrint(c * 32767.0));
    PutU16(&out, static_cast<uint16_t>(v));
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw RuntimeFailure("IoError", "cannot write wav: " + path);
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw RuntimeFailure("IoError", "short wav write: " + path);
}

AudioClip Resample(const AudioClip& clip, int target_rate) {
  if (target_rate <= 0) {
    throw DataError("BadFormat", "target sample rate must be positive");
  }
  if (clip.sample_rate <= 0) {
    throw DataError("BadFormat", "source sample rate must be positive");
  }
  if (target_rate == clip.sample_rate) return clip;

  const double ratio = static_cast<double>(clip.sample_rate) / target_rate;
  const int64_t in_len = static_cast<int64_t>(clip.samples.size());
  const int64_t out_len = std::llround(
      static_cast<double>(in_len) * target_rate / clip.sample_rate);

  // Kaiser-windowed sinc, beta 10 (~ -100 dB stopband), 32 zero crossings at
  // the lower of the two rates. Cutoff 0.95 of the narrower Nyquist.
  const double kBeta = 10.0;
  const int kZeroCrossings = 32;
  const double fc = 0.95 * 0.5 * std::min(1.0, 1.0 / ratio);
  const double half_width =
      kZeroCrossings * std::max(1.0, ratio);  // in input samples
  const double i0_beta = BesselI0(kBeta);

  AudioClip out;
  out.sample_rate = target_rate;
  out.samples.resize(static_cast<size_t>(std::max<int64_t>(out_len, 0)));

  for (int64_t j = 0; j < out_len; ++j) {
    const double center = static_cast<double>(j) * ratio;
    const int64_t k0 =
        std::max<int64_t>(0, static_cast<int64_t>(std::ceil(center - half_width)));
    const int64_t k1 = std::min<int64_t>(
        in_len - 1, static_cast<int64_t>(std::floor(center + half_width)));
    double acc = 0.0;
    double norm = 0.0;
    for (int64_t k = k0; k <= k1; ++k) {
      const double d = (static_cast<double>(k) - center) / half_width;
      const double w = BesselI0(kBeta * std::sqrt(std::max(0.0, 1.0 - d * d))) /
                       i0_beta;
      const double h = 2.0 * fc * Sinc(2.0 * fc * (static_cast<double>(k) - center)) * w;
      acc += h * clip.samples[static_cast<size_t>(k)];
      norm += h;
    }
    // Normalizing by the kernel sum keeps unity DC gain at the edges too.
    out.samples[static_cast<size_t>(j)] = norm > 1e-12 ? acc / norm : acc;
  }
  return out;
}

double PeakAmplitude(const AudioClip& clip) {
  double peak = 0.0;
  for (double s : clip.samples) peak = std::max(peak, std::fabs(s));
  return peak;
}

double PeakDbfs(const AudioClip& clip) {
  double peak = PeakAmplitude(clip);
  if (peak < kSilenceFloor) return -200.0;
  return 20.0 * std::log10(peak);
}

AudioClip NormalizeVolume(const AudioClip& clip, double target_peak_dbfs) {
  if (target_peak_dbfs > 0.0) {
    throw DataError("BadFormat", "target peak above 0 dBFS would clip");
  }
  const double peak = PeakAmplitude(clip);
  if (peak < kSilenceFloor) {
    throw DataError("SilentClip", "cannot normalize an all-silent clip");
  }
  const double target = std::pow(10.0, target_peak_dbfs / 20.0);
  const double scale = target / peak;
  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.samples.resize(clip.samples.size());
  for (size_t i = 0; i < clip.samples.size(); ++i) {
    out.samples[i] = clip.samples[i] * scale;
  }
  return out;
}

}  // namespace spoofsynth
