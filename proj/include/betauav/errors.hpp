// Copyright 2026 The betauav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace betauav {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class CurveError { SingularCurve, NotPrime, PointNotOnCurve, WrongOrder };

inline const char* to_string(CurveError e) {
    switch (e) {
        case CurveError::SingularCurve: return "SingularCurve";
        case CurveError::NotPrime: return "NotPrime";
        case CurveError::PointNotOnCurve: return "PointNotOnCurve";
        case CurveError::WrongOrder: return "WrongOrder";
    }
    return "?";
}

class CurveValidationError : public Error {
public:
    CurveValidationError(CurveError code, const std::string& what)
        : Error(std::string(to_string(code)) + ": " + what), code_(code) {}
    CurveError code() const { return code_; }

private:
    CurveError code_;
};

class ExpiryInPastError : public Error {
public:
    using Error::Error;
};

class UnknownTerminalError : public Error {
public:
    using Error::Error;
};

class LedgerUnavailableError : public Error {
public:
    using Error::Error;
};

class UnknownContractError : public Error {
public:
    using Error::Error;
};

class UnknownTxError : public Error {
public:
    using Error::Error;
};

class InvalidScenarioError : public Error {
public:
    using Error::Error;
};

}  // namespace betauav
