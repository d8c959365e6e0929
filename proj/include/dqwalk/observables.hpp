// Copyright 2026 The dqwalk Authors
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

#ifndef DQWALK_OBSERVABLES_HPP
#define DQWALK_OBSERVABLES_HPP

#include <span>
#include <vector>

#include "dqwalk/lattice_state.hpp"

namespace dqwalk {

struct ChiralityProbabilities {
    double left = 0.0;
    double right = 0.0;
};

/// Reduced coin density matrix rho_c = Tr_x |psi><psi|.
struct CoinDensity {
    Mat2 rho;

    /// Eigenvalues in ascending order, clamped to [0, 1].
    std::pair<double, double> eigenvalues() const;
};

/// P(u) = |psi_L(u)|^2 + |psi_R(u)|^2, indexed by register value.
std::vector<double> position_distribution(const WalkerState &s);

/// sum_x x P(x) over the signed coordinate.
double expectation_x(const WalkerState &s);

ChiralityProbabilities chirality_probabilities(const WalkerState &s);

CoinDensity reduced_coin_density(const WalkerState &s);

/// Von Neumann entropy of the reduced coin density, in bits.
double entanglement_entropy(const WalkerState &s);
double entropy_bits(const CoinDensity &density);

/// Span-level reductions shared with the evolution loop. `amplitudes` is a
/// c-major buffer of length 2N.
namespace reductions {

void position_distribution(std::span<const Complex> amplitudes, std::span<double> out);
double expectation_x(std::span<const Complex> amplitudes, const Lattice &lattice);
ChiralityProbabilities chirality_probabilities(std::span<const Complex> amplitudes);
CoinDensity reduced_coin_density(std::span<const Complex> amplitudes);

}  // namespace reductions

}  // namespace dqwalk

#endif
