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

#ifndef SPOOFSYNTH_UTIL_H_
#define SPOOFSYNTH_UTIL_H_

#include <cstdint>
#include <string>
#include <vector>

namespace spoofsynth {

// FNV-1a 64-bit. Used for content fingerprints (symbol table, configs).
uint64_t Fnv1a64(const void* data, size_t len);
uint64_t Fnv1a64(const std::string& s);
std::string ToHex(uint64_t v);

std::string ReadFileOrThrow(const std::string& path);
void WriteFileOrThrow(const std::string& path, const std::string& content);

std::vector<std::string> SplitString(const std::string& s, char delim);
std::string TrimString(const std::string& s);

// Current wall clock as "YYYY-MM-DDTHH:MM:SSZ".
std::string IsoTimestampUtc();

}  // namespace spoofsynth

#endif  // SPOOFSYNTH_UTIL_H_
