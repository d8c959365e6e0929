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

#include "dqwalk/observables.hpp"

#include <algorithm>
#include <cmath>

namespace dqwalk {

namespace reductions {

void position_distribution(std::span<const Complex> amplitudes, std::span<double> out) {
    const std::size_t n = amplitudes.size() / 2;
    for (std::size_t u = 0; u < n; ++u) {
        out[u] = std::norm(amplitudes[u]) + std::norm(amplitudes[n + u]);
    }
}

double expectation_x(std::span<const Complex> amplitudes, const Lattice &lattice) {
    const std::size_t n = amplitudes.size() / 2;
    double total = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
        double p = std::norm(amplitudes[u]) + std::norm(amplitudes[n + u]);
        total += static_cast<double>(lattice.signed_coordinate(u)) * p;
    }
    return total;
}

ChiralityProbabilities chirality_probabilities(std::span<const Complex> amplitudes) {
    const std::size_t n = amplitudes.size() / 2;
    ChiralityProbabilities p;
    for (std::size_t u = 0; u < n; ++u) {
        p.left += std::norm(amplitudes[u]);
        p.right += std::norm(amplitudes[n + u]);
    }
    return p;
}

CoinDensity reduced_coin_density(std::span<const Complex> amplitudes) {
    const std::size_t n = amplitudes.size() / 2;
    double rho00 = 0.0;
    double rho11 = 0.0;
    Complex rho01 = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
        const Complex &l = amplitudes[u];
        const Complex &r = amplitudes[n + u];
        rho00 += std::norm(l);
        rho11 += std::norm(r);
        rho01 += l * std::conj(r);
    }
    CoinDensity d;
    d.rho << rho00, rho01, std::conj(rho01), rho11;
    return d;
}

}  // namespace reductions

std::pair<double, double> CoinDensity::eigenvalues() const {
    const double a = rho(0, 0).real();
    const double d = rho(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(rho(0, 1)));
    auto clamp = [](double x) { return std::clamp(x, 0.0, 1.0); };
    return {clamp(mean - half_gap), clamp(mean + half_gap)};
}

std::vector<double> position_distribution(const WalkerState &s) {
    std::vector<double> p(s.size());
    reductions::position_distribution(s.amplitudes(), p);
    return p;
}

double expectation_x(const WalkerState &s) {
    return reductions::expectation_x(s.amplitudes(), s.lattice());
}

ChiralityProbabilities chirality_probabilities(const WalkerState &s) {
    return reductions::chirality_probabilities(s.amplitudes());
}

CoinDensity reduced_coin_density(const WalkerState &s) {
    return reductions::reduced_coin_density(s.amplitudes());
}

double entropy_bits(const CoinDensity &density) {
    const auto [lo, hi] = density.eigenvalues();
    double s = 0.0;
    for (double lambda : {lo, hi}) {
        // 0 log 0 = 0; values within the 1e-12 clamp band count as zero.
        if (lambda > 1e-12) {
            s -= lambda * std::log2(lambda);
        }
    }
    return std::clamp(s, 0.0, 1.0);
}

double entanglement_entropy(const WalkerState &s) {
    return entropy_bits(reduced_coin_density(s));
}

}  // namespace dqwalk
