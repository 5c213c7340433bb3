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

#include "majsim/encoding.hpp"

#include <cmath>
#include <map>
#include <utility>

#include <fmt/format.h>

namespace majsim {

namespace {

void need_modes(const FockSpace& space, int n, const char* what) {
  if (space.n_modes() != n) {
    throw DomainError(fmt::format("{} needs {} modes, got {}", what, n, space.n_modes()));
  }
}

using Term = std::pair<std::string, cplx>;

// Normalized superpositions of kets taken from `kets` (label -> state).
EncodedBasis superpositions(const FockSpace& space, const std::map<std::string, Vector>& kets,
                            const std::vector<std::vector<Term>>& rows,
                            const std::vector<std::string>& labels, std::string name,
                            const Pairing& pairing) {
  EncodedBasis b{std::move(name), {}};
  for (size_t r = 0; r < rows.size(); ++r) {
    Vector v = Vector::Zero(space.dim());
    for (const auto& [ket, c] : rows[r]) v += c * kets.at(ket);
    b.vectors.push_back({labels[r], StateVector::normalized(space, v, pairing)});
  }
  return b;
}

std::map<std::string, Vector> ket_table(const FockSpace& space, const Pairing& pairing) {
  std::map<std::string, Vector> t;
  for (const auto& ls : pairing_basis(space, pairing)) t.emplace(ls.label, ls.state.amplitudes());
  return t;
}

}  // namespace

LogicalTwoQubit::LogicalTwoQubit(const Eigen::Vector4cd& a) : amplitudes(a) {
  if (std::abs(a.norm() - 1.0) > kTolExact) throw DomainError("logical state not normalized");
}

LogicalTwoQubit LogicalTwoQubit::basis(const std::string& bits) {
  static const std::map<std::string, int> idx{{"00", 0}, {"01", 1}, {"10", 2}, {"11", 3}};
  const auto it = idx.find(bits);
  if (it == idx.end()) throw DomainError(fmt::format("bad logical label '{}'", bits));
  Eigen::Vector4cd a = Eigen::Vector4cd::Zero();
  a(it->second) = 1.0;
  return LogicalTwoQubit(a);
}

Pairing relabeled_pairing() { return Pairing({{1, 2}, {3, 6}, {4, 5}, {7, 8}}); }

EncodedBasis sparse_even_basis(const FockSpace& space) {
  need_modes(space, 4, "sparse basis");
  return occupation_basis(space, {"0000", "0011", "1100", "1111"}, "sparse-even");
}

EncodedBasis sparse_noncomp_basis(const FockSpace& space) {
  need_modes(space, 4, "sparse basis");
  return occupation_basis(space, {"0101", "0110", "1001", "1010"}, "sparse-noncomp");
}

EncodedBasis dense_basis(const FockSpace& space, Sector parity) {
  need_modes(space, 3, "dense basis");
  return dense_sector_basis(space, parity);
}

EncodedBasis sp_basis(const FockSpace& space, SpReading reading) {
  need_modes(space, 4, "SP basis");
  const Pairing pairing =
      reading == SpReading::canonical_kets ? space.canonical_pairing() : relabeled_pairing();
  const std::vector<std::vector<Term>> rows{
      {{"0000", kI}, {"0110", 1.0}},
      {{"0011", -1.0}, {"0101", kI}},
      {{"1010", 1.0}, {"1100", kI}},
      {{"1001", kI}, {"1111", -1.0}},
  };
  return superpositions(space, ket_table(space, pairing), rows, {"SP1", "SP2", "SP3", "SP4"},
                        reading == SpReading::canonical_kets ? "sp" : "sp-relabeled", pairing);
}

EncodedBasis collapsed_even_basis(const FockSpace& space) {
  need_modes(space, 4, "collapsed basis");
  const std::vector<std::string> k{"0000", "0101", "1100", "1001"};
  return superpositions(space, ket_table(space, relabeled_pairing()),
                        {{{k[0], 1.0}}, {{k[1], 1.0}}, {{k[2], 1.0}}, {{k[3], 1.0}}}, k,
                        "collapsed-even", relabeled_pairing());
}

EncodedBasis collapsed_odd_basis(const FockSpace& space) {
  need_modes(space, 4, "collapsed basis");
  const std::vector<std::string> k{"0110", "0011", "1010", "1111"};
  return superpositions(space, ket_table(space, relabeled_pairing()),
                        {{{k[0], 1.0}}, {{k[1], -1.0}}, {{k[2], 1.0}}, {{k[3], -1.0}}}, k,
                        "collapsed-odd", relabeled_pairing());
}

EncodedBasis corrected_basis(const FockSpace& space) {
  need_modes(space, 4, "corrected basis");
  const std::vector<std::string> k{"0101", "0000", "1001", "1100"};
  return superpositions(space, ket_table(space, relabeled_pairing()),
                        {{{k[0], 1.0}}, {{k[1], 1.0}}, {{k[2], 1.0}}, {{k[3], 1.0}}}, k,
                        "corrected", relabeled_pairing());
}

EncodedBasis dense_frame_basis(const FockSpace& space) {
  need_modes(space, 4, "dense frame basis");
  const std::vector<std::string> k{"0000", "0101", "1001", "1100"};
  return superpositions(space, ket_table(space, relabeled_pairing()),
                        {{{k[0], 1.0}}, {{k[1], 1.0}}, {{k[2], 1.0}}, {{k[3], 1.0}}}, k,
                        "dense-frame", relabeled_pairing());
}

std::vector<std::string> basis_names() {
  return {"sparse-even",    "sparse-noncomp", "dense-plus", "dense-minus",  "sp",
          "sp-relabeled",   "collapsed-even", "collapsed-odd", "corrected", "dense-frame",
          "even-sector"};
}

EncodedBasis named_basis(const std::string& name) {
  const FockSpace s3(3), s4(4);
  if (name == "sparse-even") return sparse_even_basis(s4);
  if (name == "sparse-noncomp") return sparse_noncomp_basis(s4);
  if (name == "dense-plus") return dense_basis(s3, Sector::even);
  if (name == "dense-minus") return dense_basis(s3, Sector::odd);
  if (name == "sp") return sp_basis(s4);
  if (name == "sp-relabeled") return sp_basis(s4, SpReading::relabeled_kets);
  if (name == "collapsed-even") return collapsed_even_basis(s4);
  if (name == "collapsed-odd") return collapsed_odd_basis(s4);
  if (name == "corrected") return corrected_basis(s4);
  if (name == "dense-frame") return dense_frame_basis(s4);
  if (name == "even-sector") return occupation_basis(s4, reference::even_sector_order(), "even-sector");
  throw DomainError(fmt::format("unknown basis '{}'", name));
}

StateVector encode_logical(const LogicalTwoQubit& l) {
  const FockSpace s4(4);
  const Vector v = sparse_even_basis(s4).columns() * Vector(l.amplitudes);
  return StateVector::normalized(s4, v);
}

LogicalTwoQubit decode_logical(const StateVector& s, double tol) {
  need_modes(s.space(), 4, "decode");
  const Matrix b = sparse_even_basis(s.space()).columns();
  const Vector c = b.adjoint() * s.amplitudes();
  const double leak = (s.amplitudes() - b * c).norm();
  if (leak > tol) throw SectorLeakage(leak);
  return LogicalTwoQubit(Eigen::Vector4cd(c / c.norm()));
}

}  // namespace majsim
