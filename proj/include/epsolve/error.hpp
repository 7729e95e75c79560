/**
 *  Copyright 2026 The epsolve Authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace epsolve {

enum class Errc {
  invalid_input,
  shape_mismatch,
  cap_exceeded,
  invariant_violation,
  parse_error,
  not_found,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the library. `detail` is a machine-readable
/// payload (witness elements, stage numbers, parse positions).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, nlohmann::json detail = nullptr)
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  Errc code() const noexcept { return code_; }
  const nlohmann::json& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  nlohmann::json detail_;
};

}  // namespace epsolve
