/*
   Copyright 2026 The cuphom Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

/**
 * @file spec_file.hpp
 * @brief JSON spec files.
 *
 * Schema:
 *   { "b1": int >= 1,
 *     "xi": [int, ...]              (b1 entries, not all zero),
 *     "cup3": [[i, j, k, value], ...] (1 <= i < j < k <= b1; optional),
 *     "ring": "Z" | "Q" | "Zmod:<m>" (optional, default "Z"),
 *     "truncation_power": int >= 1 (optional) }
 * Unknown keys are rejected. "value" may be an integer or a decimal string.
 */

#include <string>

#include "cuphom/verify.hpp"

namespace cuphom::cli {

class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

/// Throws SchemaError on shape problems and InputError (or TorsionSpinCError)
/// on invalid values.
ManifoldSpec spec_from_json(const Json& doc);
ManifoldSpec load_spec_file(const std::string& path);

}  // namespace cuphom::cli
