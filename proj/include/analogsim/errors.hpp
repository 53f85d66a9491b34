// Copyright 2026 The analogsim authors
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

namespace analogsim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands of mismatched qubit count / matrix dimension.
struct DimensionError : Error {
    using Error::Error;
};

// Request exceeds a hard size cap (qubit counts, enumeration ranges).
struct CapacityError : Error {
    using Error::Error;
};

// Invalid user-facing configuration (CLI, JSON, sampler setup).
struct ConfigError : Error {
    using Error::Error;
};

// A parameter left the mathematical domain of a formula (e.g. q >= 1/2).
struct OutOfDomainError : Error {
    using Error::Error;
};

// Channel has a non-positive Pauli fidelity; the factorization root is
// undefined.
struct SingularChannelError : Error {
    using Error::Error;
};

// Factorization exists but has some q_S outside [0, 1/2); the factorized
// sampler refuses it.
struct NonPhysicalError : Error {
    using Error::Error;
};

// A documented precondition was violated by the caller (e.g. probabilities
// of an unnormalized state).
struct ContractViolation : Error {
    using Error::Error;
};

}  // namespace analogsim
