// SPDX-License-Identifier: Apache-2.0
//
// hybrid-irs: capacity and element-allocation simulator for hybrid active-passive IRS links
// Copyright (C) 2026 The hybrid-irs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#ifndef HIRS_CLI_HPP
#define HIRS_CLI_HPP

#include <ostream>

namespace hirs
{
    // Subcommands solve, sweep, capacity and thresholds. Returns 0 on success, 1 on a reported
    // error ("error: kind=<Kind> message=<text>" on err) and 2 on usage errors.
    int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
}

#endif
