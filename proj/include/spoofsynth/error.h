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

#ifndef SPOOFSYNTH_ERROR_H_
#define SPOOFSYNTH_ERROR_H_

#include <stdexcept>
#include <string>

namespace spoofsynth {

// How a failure maps to a process exit code (see tools/spoofsynth_main.cc):
// kUsage -> 2, kData -> 3, kRuntime -> 4.
enum class ErrorClass { kUsage, kData, kRuntime };

/// All library errors carry a stable machine-readable category string
/// (e.g. "OutOfLexicon") next to the human-readable message.
class SpoofError : public std::runtime_error {
 public:
  SpoofError(ErrorClass cls, std::string category, const std::string& message)
      : std::runtime_error(category + ": " + message),
        cls_(cls),
        category_(std::move(category)) {}

  ErrorClass error_class() const { return cls_; }
  const std::string& category() const { return category_; }

 private:
  ErrorClass cls_;
  std::string category_;
};

inline SpoofError DataError(const std::string& category,
                            const std::string& message) {
  return SpoofError(ErrorClass::kData, category, message);
}

inline SpoofError RuntimeFailure(const std::string& category,
                                 const std::string& message) {
  return SpoofError(ErrorClass::kRuntime, category, message);
}

}  // namespace spoofsynth

#endif  // SPOOFSYNTH_ERROR_H_
