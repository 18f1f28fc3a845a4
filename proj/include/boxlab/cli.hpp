// Copyright 2026 The boxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "boxlab/json_io.hpp"

namespace boxlab::cli {

enum class Status { Ok, Violation, Error };

/// Exit codes: 0 ok, 2 a mathematical check failed, 1 usage or runtime error.
struct CommandResult {
  Status status = Status::Ok;
  Json payload;
  std::string out;  // text destined for stdout
  std::string err;  // text destined for stderr
  int exit_code() const { return status == Status::Ok ? 0 : status == Status::Violation ? 2 : 1; }
};

/// Runs one command line (args excludes the program name). Never throws.
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace boxlab::cli
