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

#ifndef DQWALK_WALK_HPP
#define DQWALK_WALK_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "dqwalk/coins.hpp"
#include "dqwalk/lattice_state.hpp"

namespace dqwalk {

/// Time-step rules. Products read right to left act first:
///   SB  = S (B x I)                       coin, then shift
///   BS  = (B x I) S                       shift, then coin
///   BSB = B(theta/2) S B(theta/2)         symmetric, half-angle coins
///   SBS = S_+ B S_-                       symmetric, half shifts
///   SQW = S_+ (B2 x I) S_- (B1 x I)       split-step walk
enum class Variant { SB, BS, BSB, SBS, SQW };

std::string_view to_string(Variant v);
/// Accepts the lower- or upper-case names ("sb", "BSB", ...).
Variant parse_variant(std::string_view name);

class WalkOperatorSpec {
   public:
    /// Single-coin variant; throws for SQW.
    WalkOperatorSpec(Variant variant, CoinSpec coin);
    static WalkOperatorSpec split_step(CoinSpec coin1, CoinSpec coin2);

    Variant variant() const { return variant_; }
    /// The coin of a single-coin variant, or the first coin of SQW.
    const CoinSpec &coin() const { return coin1_; }
    const CoinSpec &coin1() const { return coin1_; }
    /// Second SQW coin; throws for the other variants.
    const CoinSpec &coin2() const;

    /// Same operator expressed in the basis rotated by lambda: every coin
    /// axis advances by lambda.
    WalkOperatorSpec rotated(double lambda) const;

    /// Throws std::invalid_argument when a non-trivial coin is expressed in
    /// a basis other than basis_phi.
    void check_basis(double basis_phi) const;

    /// Basis angle of the first non-trivial coin, or `fallback` if every
    /// coin is +-identity.
    double basis_phi(double fallback = kWeylMajorana) const;

   private:
    WalkOperatorSpec(Variant variant, CoinSpec coin1, CoinSpec coin2);

    Variant variant_;
    CoinSpec coin1_;
    CoinSpec coin2_;
};

enum class HalfShift { Minus, Plus };

/// In-place kernels on c-major amplitude buffers of length 2N. These are the
/// building blocks of step() and evolve(); they do not check norms.
namespace kernels {

void apply_coin(std::span<Complex> amplitudes, const Mat2 &u);
void apply_shift(std::span<Complex> amplitudes);
void apply_half_shift(std::span<Complex> amplitudes, HalfShift side);

/// Precomputed coin matrices for one walk operator.
class StepRule {
   public:
    explicit StepRule(const WalkOperatorSpec &op);
    void apply(std::span<Complex> amplitudes) const;

   private:
    Variant variant_;
    Mat2 first_;
    Mat2 second_;
};

}  // namespace kernels

WalkerState apply_coin(const WalkerState &s, const Mat2 &u);
/// psi_L moves u -> u - 1, psi_R moves u -> u + 1 (mod N).
WalkerState apply_shift(const WalkerState &s);
/// Minus moves only psi_L left, Plus moves only psi_R right.
WalkerState apply_half_shift(const WalkerState &s, HalfShift side);

/// One application of the walk operator. The operator's coins must be
/// expressed in the state's basis.
WalkerState step(const WalkerState &s, const WalkOperatorSpec &op);

enum class Observe : unsigned {
    None = 0,
    Distribution = 1u << 0,
    Chirality = 1u << 1,
    Entropy = 1u << 2,
    MeanX = 1u << 3,
    All = (1u << 4) - 1,
};

constexpr Observe operator|(Observe a, Observe b) {
    return static_cast<Observe>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool has_flag(Observe set, Observe flag) {
    return (static_cast<unsigned>(set) & static_cast<unsigned>(flag)) != 0;
}

/// Per-step observables of an evolution. Series that were not requested are
/// left empty. distribution is row-major (T+1) x N, indexed by register
/// value u; use Lattice::signed_coordinate to label columns.
struct SpacetimeRecord {
    Lattice lattice;
    WalkOperatorSpec op;
    double basis_phi = 0.0;
    std::size_t steps = 0;
    Observe observed = Observe::None;
    /// Set when steps >= N/2: signed positions are ambiguous from row N/2
    /// on, and those mean_x entries are NaN.
    bool wraparound = false;

    std::vector<double> distribution{};
    std::vector<double> p_left{};
    std::vector<double> p_right{};
    std::vector<double> entropy{};
    std::vector<double> mean_x{};

    std::span<const double> distribution_row(std::size_t t) const;
};

struct Evolution {
    SpacetimeRecord record;
    WalkerState final_state;
};

Evolution evolve(const WalkerState &initial, const WalkOperatorSpec &op, std::size_t steps,
                 Observe observe = Observe::All);

/// Largest lattice accepted by dense_walk_matrix.
inline constexpr std::size_t kDenseMaxSites = 64;

/// The 2N x 2N one-step matrix in c-major vectorisation, assembled from
/// Kronecker products of the coin with I_N and the explicit shift
/// permutation. Independent of the streaming kernels.
Eigen::MatrixXcd dense_walk_matrix(const WalkOperatorSpec &op, const Lattice &lattice);

}  // namespace dqwalk

#endif
