// Copyright 2026 The majsim Authors
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

#include <string>
#include <vector>

#include "majsim/fock.hpp"
#include "majsim/gates.hpp"

namespace majsim {

using EncodedBasis = Basis;

struct LogicalTwoQubit {
  Eigen::Vector4cd amplitudes;

  LogicalTwoQubit() : amplitudes(Eigen::Vector4cd::Zero()) { amplitudes(0) = 1.0; }
  explicit LogicalTwoQubit(const Eigen::Vector4cd& a);
  // "00", "01", "10" or "11".
  static LogicalTwoQubit basis(const std::string& bits);
};

// A=(1,2), B=(3,6), C=(4,5), D=(7,8): the pairing after gamma6 is moved
// between gamma3 and gamma4,5.
Pairing relabeled_pairing();

EncodedBasis sparse_even_basis(const FockSpace& space);
EncodedBasis sparse_noncomp_basis(const FockSpace& space);
EncodedBasis dense_basis(const FockSpace& space, Sector parity);

enum class SpReading {
  canonical_kets,  // amplitudes on canonical-pairing kets (matches B45 B56)
  relabeled_kets,  // same amplitudes on relabeled-pairing kets
};
EncodedBasis sp_basis(const FockSpace& space, SpReading reading = SpReading::canonical_kets);

// Collapsed bases in the relabeled pairing; labels are relabeled occupations ABCD.
EncodedBasis collapsed_even_basis(const FockSpace& space);
EncodedBasis collapsed_odd_basis(const FockSpace& space);
EncodedBasis corrected_basis(const FockSpace& space);
// Relabeled kets 0000, 0101, 1001, 1100: the dense even basis on (A, B, D)
// in the same order as dense_basis(even), used to lift dense gates.
EncodedBasis dense_frame_basis(const FockSpace& space);

std::vector<std::string> basis_names();
// Builds a named basis on the space size it requires.
EncodedBasis named_basis(const std::string& name);

StateVector encode_logical(const LogicalTwoQubit& l);
// Throws SectorLeakage when the state leaves the sparse computational span.
LogicalTwoQubit decode_logical(const StateVector& s, double tol = kTolSeq);

}  // namespace majsim
