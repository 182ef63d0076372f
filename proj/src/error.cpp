/*
 * Copyright 2026 The casimir-matsubara Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "casimir/error.hpp"

namespace casimir {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::non_convergence: return "non_convergence";
    case ErrorKind::budget: return "budget";
    case ErrorKind::unsupported_dimension: return "unsupported_dimension";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::invalid_config: return "invalid_config";
  }
  return "unknown";
}

}  // namespace casimir
