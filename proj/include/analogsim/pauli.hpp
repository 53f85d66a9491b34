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

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "analogsim/errors.hpp"

namespace analogsim {

// An M-qubit Pauli string in symplectic (x, z) bit encoding. Per qubit:
// (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y. Immutable value type; equal strings
// compare equal bitwise.
class PauliString {
  public:
    PauliString() = default;  // single-qubit identity

    PauliString(int num_qubits, std::uint64_t x_bits, std::uint64_t z_bits);

    static PauliString identity(int num_qubits) {
        return PauliString(num_qubits, 0, 0);
    }

    // Parses strings over {I,X,Y,Z}; leftmost character addresses qubit 0.
    static PauliString from_text(std::string_view text);
    std::string text() const;

    int num_qubits() const { return num_qubits_; }
    std::uint64_t x_bits() const { return x_bits_; }
    std::uint64_t z_bits() const { return z_bits_; }
    bool is_identity() const { return x_bits_ == 0 && z_bits_ == 0; }

    // Number of Y factors; fixes the i^k phase of X^x Z^z.
    int y_count() const {
        return std::popcount(x_bits_ & z_bits_);
    }

    // Number of non-identity factors.
    int weight() const { return std::popcount(x_bits_ | z_bits_); }

    bool commutes_with(const PauliString& other) const;

    bool operator==(const PauliString& other) const {
        return num_qubits_ == other.num_qubits_ && x_bits_ == other.x_bits_ &&
               z_bits_ == other.z_bits_;
    }

    // Lexicographic on (x_bits, z_bits); matches enumeration order.
    bool operator<(const PauliString& other) const {
        if (x_bits_ != other.x_bits_) return x_bits_ < other.x_bits_;
        if (z_bits_ != other.z_bits_) return z_bits_ < other.z_bits_;
        return num_qubits_ < other.num_qubits_;
    }

  private:
    std::uint64_t x_bits_ = 0;
    std::uint64_t z_bits_ = 0;
    int num_qubits_ = 1;
};

using PauliProbabilities = std::map<PauliString, double>;

bool commutes(const PauliString& a, const PauliString& b);

// All 4^M strings, identity first, lexicographic on (x_bits, z_bits).
// 1 <= M <= 8.
std::vector<PauliString> enumerate_strings(int num_qubits);

// a(s): every string in S_M anticommuting with s. Empty for s = I; size
// 4^M / 2 otherwise.
std::vector<PauliString> anticommutant(const PauliString& s);

// Embeds a local string living on `qubits` into global x/z masks over a
// wider register (bit q of the mask = circuit qubit q).
void expand_masks(const PauliString& local, std::span<const int> qubits,
                  std::uint64_t& x_mask, std::uint64_t& z_mask);

}  // namespace analogsim
