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

#include "analogsim/pauli.hpp"

namespace analogsim {

PauliString::PauliString(int num_qubits, std::uint64_t x_bits,
                         std::uint64_t z_bits)
    : x_bits_(x_bits), z_bits_(z_bits), num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 64) {
        throw CapacityError("PauliString: num_qubits must be in [1, 64], got " +
                            std::to_string(num_qubits));
    }
    const std::uint64_t mask =
        num_qubits == 64 ? ~0ULL : ((1ULL << num_qubits) - 1);
    if ((x_bits & ~mask) != 0 || (z_bits & ~mask) != 0) {
        throw DimensionError("PauliString: bits set beyond qubit " +
                             std::to_string(num_qubits - 1));
    }
}

PauliString PauliString::from_text(std::string_view text) {
    if (text.empty() || text.size() > 64) {
        throw DimensionError("PauliString: text form must have 1..64 characters");
    }
    std::uint64_t x = 0, z = 0;
    for (std::size_t q = 0; q < text.size(); ++q) {
        switch (text[q]) {
            case 'I':
                break;
            case 'X':
                x |= 1ULL << q;
                break;
            case 'Z':
                z |= 1ULL << q;
                break;
            case 'Y':
                x |= 1ULL << q;
                z |= 1ULL << q;
                break;
            default:
                throw ConfigError(std::string("PauliString: invalid character '") +
                                  text[q] + "' (expected I, X, Y or Z)");
        }
    }
    return PauliString(static_cast<int>(text.size()), x, z);
}

std::string PauliString::text() const {
    std::string out(static_cast<std::size_t>(num_qubits_), 'I');
    for (int q = 0; q < num_qubits_; ++q) {
        const bool x = (x_bits_ >> q) & 1;
        const bool z = (z_bits_ >> q) & 1;
        if (x && z)
            out[static_cast<std::size_t>(q)] = 'Y';
        else if (x)
            out[static_cast<std::size_t>(q)] = 'X';
        else if (z)
            out[static_cast<std::size_t>(q)] = 'Z';
    }
    return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (num_qubits_ != other.num_qubits_) {
        throw DimensionError("commutes: operands act on " +
                             std::to_string(num_qubits_) + " vs " +
                             std::to_string(other.num_qubits_) + " qubits");
    }
    // Strings commute iff the count of pairwise-anticommuting sites is even.
    const int parity = (std::popcount(x_bits_ & other.z_bits_) ^
                        std::popcount(z_bits_ & other.x_bits_)) &
                       1;
    return parity == 0;
}

bool commutes(const PauliString& a, const PauliString& b) {
    return a.commutes_with(b);
}

std::vector<PauliString> enumerate_strings(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 8) {
        throw CapacityError("enumerate_strings: num_qubits must be in [1, 8], got " +
                            std::to_string(num_qubits));
    }
    const std::uint64_t dim = 1ULL << num_qubits;
    std::vector<PauliString> out;
    out.reserve(dim * dim);
    for (std::uint64_t x = 0; x < dim; ++x) {
        for (std::uint64_t z = 0; z < dim; ++z) {
            out.emplace_back(num_qubits, x, z);
        }
    }
    return out;
}

std::vector<PauliString> anticommutant(const PauliString& s) {
    std::vector<PauliString> out;
    if (s.is_identity()) return out;
    for (const PauliString& t : enumerate_strings(s.num_qubits())) {
        if (!t.commutes_with(s)) out.push_back(t);
    }
    return out;
}

void expand_masks(const PauliString& local, std::span<const int> qubits,
                  std::uint64_t& x_mask, std::uint64_t& z_mask) {
    if (static_cast<int>(qubits.size()) != local.num_qubits()) {
        throw DimensionError("expand_masks: support size " +
                             std::to_string(qubits.size()) +
                             " does not match a " +
                             std::to_string(local.num_qubits()) +
                             "-qubit string");
    }
    x_mask = 0;
    z_mask = 0;
    for (int i = 0; i < local.num_qubits(); ++i) {
        if ((local.x_bits() >> i) & 1) x_mask |= 1ULL << qubits[i];
        if ((local.z_bits() >> i) & 1) z_mask |= 1ULL << qubits[i];
    }
}

}  // namespace analogsim
