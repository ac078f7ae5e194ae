// SPDX-License-Identifier: Apache-2.0
//
// hrris: secrecy optimization toolkit for hybrid relay-reflecting surfaces
// Copyright (C) 2026 The hrris authors
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

#ifndef HRRIS_ERRORS_HPP
#define HRRIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hrris
{

// Base for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error
{
public:
    using Error::Error;
};

class SingularMatrix : public Error
{
public:
    using Error::Error;
};

class NoConvergence : public Error
{
public:
    using Error::Error;
};

class NonFiniteValue : public Error
{
public:
    using Error::Error;
};

class InvalidArgument : public Error
{
public:
    using Error::Error;
};

class InvalidKappa : public InvalidArgument
{
public:
    using InvalidArgument::InvalidArgument;
};

// No active amplitude >= 1 fits inside the power budget.
class InfeasibleBudget : public Error
{
public:
    using Error::Error;
};

// The swarm never visited a point that satisfies the budget.
class FeasibilityFailure : public Error
{
public:
    using Error::Error;
};

} // namespace hrris

#endif
