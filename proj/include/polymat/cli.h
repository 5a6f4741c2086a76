// Copyright 2026 The Authors.
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

// Command-line front end. Verbs: validate, info, convert, natural, check,
// rset, make. Exit codes: 0 success or axioms hold, 1 axioms fail,
// 2 usage, parse, or input error.

#ifndef POLYMAT_CLI_H_
#define POLYMAT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace polymat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAxiomsFail = 1;
inline constexpr int kExitInputError = 2;

// `args` excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polymat

#endif  // POLYMAT_CLI_H_
