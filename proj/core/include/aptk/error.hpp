// Copyright 2026 The aptk Authors
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

#include <stdexcept>
#include <string>

namespace aptk {

// Error categories. The numeric values double as CLI exit codes.
enum class errc : int {
  parse = 2,        // malformed input file or configuration
  internal = 3,     // internal consistency failure (e.g. evaluation paths disagree)
  infeasible = 4,   // empty constraint set
  domain = 5,       // domain violation (bad alpha, negative density, ...)
  convergence = 6,  // solver did not converge
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }
[[noreturn]] inline void fail_domain(const std::string& what) { fail(errc::domain, what); }
[[noreturn]] inline void fail_parse(const std::string& what) { fail(errc::parse, what); }

}  // namespace aptk
