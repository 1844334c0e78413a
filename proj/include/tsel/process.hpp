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

#include <chrono>
#include <string>

namespace tsel {

struct ProcessResult {
  int exit_code = -1;   // -1 if terminated by a signal
  int term_signal = 0;
  bool timed_out = false;
  std::string out;
  std::string err;      // truncated to the last 64 KiB
};

// Runs `command` through /bin/sh, feeding `input` on stdin while collecting
// stdout and stderr. A zero timeout means no limit; on expiry the child is
// killed. Throws TranslatorError if the process cannot be started.
ProcessResult run_process(const std::string& command, const std::string& input,
                          std::chrono::milliseconds timeout);

}  // namespace tsel
