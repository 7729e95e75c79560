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

#include <cstddef>

namespace epsolve {

/// Size limits shared by every enumerating operation.
struct Caps {
  std::size_t elems = 512;  // largest poset any construction may produce
  std::size_t hom = 64;     // largest |A|*|B| for pair enumeration
  std::size_t depth = 8;    // longest chain the solver will iterate
};

}  // namespace epsolve
