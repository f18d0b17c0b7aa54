// Copyright 2026 The graphent Authors
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
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphent::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kResource = 3,
  kConsistency = 4,
};

/// A flag value that does not make sense on its own (bad angle expression,
/// trials = 0, ...). Maps to kUsage.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr const char* kCsvHeader =
    "phi,spin,mode,mean_x,mean_y,mean_z,bloch_norm,entanglement,std_error,shots,seed";

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ValidateOptions {
  std::size_t max_n = 6;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
};

/// Oracle-equivalence checks on random graphs. Prints one line per property
/// and returns true when every property is within its threshold.
bool run_validation(const ValidateOptions& opt, std::ostream& out);

}  // namespace graphent::cli
