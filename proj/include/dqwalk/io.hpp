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

#ifndef DQWALK_IO_HPP
#define DQWALK_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dqwalk/momentum.hpp"
#include "dqwalk/qasm.hpp"
#include "dqwalk/walk.hpp"

namespace dqwalk {

/// Parses an angle in radians: plain numbers ("1.5708") or multiples and
/// fractions of pi ("pi", "-pi/2", "3pi/4", "3*pi/4", "pi*0.25").
double parse_angle(std::string_view text);

/// {"k": int, "basis_phi": double, "amplitudes": [[re, im], ...]} with 2N
/// pairs in c-major (c * N + u) order.
nlohmann::json state_to_json(const WalkerState &s);
WalkerState state_from_json(const nlohmann::json &j);

nlohmann::json op_to_json(const WalkOperatorSpec &op);

/// CSV "t,x,P" with signed x, one line per (t, site), x ascending.
void write_spacetime_csv(std::ostream &out, const SpacetimeRecord &record);

/// CSV "t,pL,pR,entropy,mean_x"; unrecorded columns are left empty.
void write_series_csv(std::ostream &out, const SpacetimeRecord &record);

/// Metadata plus the pL/pR/entropy/mean_x series. NaN entries (wraparound)
/// are written as null.
nlohmann::json record_metadata(const SpacetimeRecord &record);

/// CSV "eps,error".
void write_scaling_csv(std::ostream &out, const ScalingReport &report);

nlohmann::json gate_counts_to_json(const GateCounts &counts);

}  // namespace dqwalk

#endif
