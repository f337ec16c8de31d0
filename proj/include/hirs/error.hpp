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


#ifndef HIRS_ERROR_HPP
#define HIRS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hirs
{
    // Every failure the library reports carries one of these names. The CLI prints the name
    // verbatim so scripts can match on it.
    enum class ErrorKind
    {
        NonFinite,
        NonPositivePower,
        NonPositiveQuantity,
        AlphaMinBelowOne,
        AlphaBoundsInverted,
        NegativeBudget,
        NonPositiveCost,
        NegativeRicianFactor,
        InvalidAngle,
        DimensionMismatch,
        EmptyArray,
        InfeasibleAllocation,
        RegimeViolation,
        ChannelModelViolation,
        ParseError,
        UnknownKey,
        InvalidValue,
        IoError,
        Internal
    };

    constexpr std::string_view kind_name(ErrorKind kind)
    {
        switch (kind)
        {
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::NonPositivePower: return "NonPositivePower";
        case ErrorKind::NonPositiveQuantity: return "NonPositiveQuantity";
        case ErrorKind::AlphaMinBelowOne: return "AlphaMinBelowOne";
        case ErrorKind::AlphaBoundsInverted: return "AlphaBoundsInverted";
        case ErrorKind::NegativeBudget: return "NegativeBudget";
        case ErrorKind::NonPositiveCost: return "NonPositiveCost";
        case ErrorKind::NegativeRicianFactor: return "NegativeRicianFactor";
        case ErrorKind::InvalidAngle: return "InvalidAngle";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::EmptyArray: return "EmptyArray";
        case ErrorKind::InfeasibleAllocation: return "InfeasibleAllocation";
        case ErrorKind::RegimeViolation: return "RegimeViolation";
        case ErrorKind::ChannelModelViolation: return "ChannelModelViolation";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownKey: return "UnknownKey";
        case ErrorKind::InvalidValue: return "InvalidValue";
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::Internal: return "Internal";
        }
        return "Unknown";
    }

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorKind kind, const std::string &message)
            : std::runtime_error(std::string(kind_name(kind)) + ": " + message), kind_(kind)
        {
        }

        ErrorKind kind() const noexcept { return kind_; }

    private:
        ErrorKind kind_;
    };
}

#endif
