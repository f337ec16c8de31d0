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


#ifndef HIRS_OUTPUT_HPP
#define HIRS_OUTPUT_HPP

#include "hirs/config.hpp"
#include "hirs/sweep.hpp"

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hirs
{
    // Column order shared by the CSV header and the JSON object keys.
    const std::vector<std::string> &sweep_columns();

    // Header row plus one line per row; floats with 17 significant digits, NA for missing values.
    void write_csv(std::span<const SweepRow> rows, std::ostream &out);

    // Array of row objects; null for missing values.
    void write_json(std::span<const SweepRow> rows, std::ostream &out);

    void write_rows(std::span<const SweepRow> rows, OutputFormat format, std::ostream &out);

    // Writes to path, or to stdout when path is empty. Throws IoError naming the path.
    void write_output(std::span<const SweepRow> rows, const std::string &path, OutputFormat format);
}

#endif
