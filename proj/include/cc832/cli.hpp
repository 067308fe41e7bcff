// Copyright 2026 The cc832 Authors
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

#ifndef CC832_CLI_HPP
#define CC832_CLI_HPP

#include <iosfwd>

namespace cc832 {

// Command-line driver: subcommands build, simulate, faults, synth, audit,
// compare.  Returns 0 on success, 2 on usage errors, 3 on resource errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cc832

#endif
