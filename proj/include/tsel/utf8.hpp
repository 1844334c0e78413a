// Copyright 2026 The tsel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace tsel {

// Returns the byte offset of the first byte that does not start a well-formed
// UTF-8 sequence, or nullopt if the whole buffer is valid. Overlong forms,
// surrogates and code points above U+10FFFF are rejected.
std::optional<std::size_t> find_invalid_utf8(std::string_view text);

}  // namespace tsel
