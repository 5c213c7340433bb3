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

#include "majsim/gates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>

namespace majsim {

namespace {

const double kS = 1.0 / std::sqrt(2.0);

Matrix mat(int n, std::initializer_list<cplx> v) {
  Matrix m(n, n);
  auto it = v.begin();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = *it++;
  return m;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

Matrix pick(const Matrix& m, const std::vector<int>& idx) {
  Matrix out(idx.size(), idx.size());
  for (size_t r = 0; r < idx.size(); ++r)
    for (size_t c = 0; c < idx.size(); ++c) out(r, c) = m(idx[r], idx[c]);
  return out;
}

void replace_all(std::string& s, const std::string& from, const std::string& to) {
  for (size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size()))
    s.replace(p, from.size(), to);
}

}  // namespace

cplx convention_phase(BraidConvention c) {
  return c == BraidConvention::mem ? kI : cplx{1.0, 0.0};
}

std::string to_string(BraidConvention c) { return c == BraidConvention::mem ? "mem" : "ivanov"; }

std::string to_string(Sector s) {
  switch (s) {
    case Sector::even: return "even";
    case Sector::odd: return "odd";
    case Sector::full: return "full";
  }
  return "?";
}

Sector parse_sector(const std::string& s) {
  if (s == "even") return Sector::even;
  if (s == "odd") return Sector::odd;
  if (s == "full") return Sector::full;
  throw DomainError(fmt::format("unknown sector '{}' (expected even, odd or full)", s));
}

bool GateMatrix::is_unitary(double tol) const {
  const Matrix id = Matrix::Identity(matrix.rows(), matrix.cols());
  return max_abs(matrix.adjoint() * matrix - id) <= tol;
}

Operator braid(const FockSpace& space, int i, int j, BraidConvention convention) {
  if (i == j) throw DomainError(fmt::format("braid indices must differ (got {} {})", i, j));
  const auto gg = majorana(space, j) * majorana(space, i);
  return (Operator::identity(space) + gg) * (kS * convention_phase(convention));
}

Operator phase_gate(const FockSpace& space, Pair mode, double theta) {
  if (mode.a == mode.b) throw DomainError("phase gate needs a pair of distinct indices");
  const auto parity = pair_parity_op(space, mode.a, mode.b);
  const auto id = Operator::identity(space);
  const cplx g = std::exp(-2.0 * kI * theta);
  return (id + parity) * 0.5 + (id - parity) * (0.5 * g);
}

GateMatrix transition_matrix(const Operator& u, const Basis& from, const Basis& to, double tol) {
  const Matrix f = from.columns();
  const Matrix t = to.columns();
  const Matrix image = u.matrix() * f;
  GateMatrix g;
  g.matrix = t.adjoint() * image;
  double leak = 0.0;
  for (int j = 0; j < image.cols(); ++j) {
    leak = std::max(leak, (image.col(j) - t * g.matrix.col(j)).norm());
  }
  if (leak > tol) throw SectorLeakage(leak);
  g.basis = to.labels();
  return g;
}

GateMatrix sector_matrix(const Operator& u, const Basis& basis, double tol) {
  return transition_matrix(u, basis, basis, tol);
}

Operator lift(const FockSpace& space, const Basis& basis, const Matrix& m) {
  const Matrix w = basis.columns();
  const Matrix id = Matrix::Identity(space.dim(), space.dim());
  return Operator(space, w * m * w.adjoint() + (id - w * w.adjoint()));
}

Basis one_qubit_basis(const FockSpace& space2, Sector s) {
  if (space2.n_modes() != 2) throw DomainError("one-qubit basis needs 2 modes");
  switch (s) {
    case Sector::even: return occupation_basis(space2, {"00", "11"}, "one-qubit-even");
    case Sector::odd: return occupation_basis(space2, {"01", "10"}, "one-qubit-odd");
    case Sector::full: return occupation_basis(space2, {"00", "01", "10", "11"}, "two-mode-full");
  }
  throw DomainError("bad sector");
}

Basis dense_sector_basis(const FockSpace& space3, Sector s) {
  if (space3.n_modes() != 3) throw DomainError("dense basis needs 3 modes");
  switch (s) {
    case Sector::even: return occupation_basis(space3, {"000", "011", "101", "110"}, "dense-plus");
    case Sector::odd: return occupation_basis(space3, {"001", "010", "100", "111"}, "dense-minus");
    case Sector::full: break;
  }
  throw DomainError("dense basis is defined only for even or odd parity");
}

namespace reference {

Matrix b23(BraidConvention c) {
  if (c == BraidConvention::mem) return mat(2, {kI, 1, 1, kI}) * kS;
  return mat(2, {1, -kI, -kI, 1}) * kS;
}

Matrix hadamard() { return mat(2, {1, 1, 1, -1}) * kS; }
Matrix pauli_x() { return mat(2, {0, 1, 1, 0}); }
Matrix pauli_y() { return mat(2, {0, -1, 1, 0}); }
Matrix pauli_z() { return mat(2, {1, 0, 0, -1}); }
Matrix phase_diag(double theta) { return mat(2, {1, 0, 0, std::exp(-2.0 * kI * theta)}); }

Matrix b45_dense() {
  return mat(4, {kI, 1, 0, 0, 1, kI, 0, 0, 0, 0, kI, 1, 0, 0, 1, kI}) * kS;
}

Matrix cnot() { return mat(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}); }
Matrix cy() { return mat(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -kI, 0, 0, kI, 0}); }
Matrix ciz() { return mat(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, kI, 0, 0, 0, 0, -kI}); }
Matrix swap() { return mat(4, {1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 1}); }
Matrix swap_prime() { return mat(4, {1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 1}); }
Matrix y2() { return block_diag(pauli_y(), pauli_y().transpose()); }

Matrix b45b56_even() {
  return mat(8, {kI, 0,  0,  1,  0,  0,  0,  0,   //
                 0,  -1, kI, 0,  0,  0,  0,  0,   //
                 0,  1,  kI, 0,  0,  0,  0,  0,   //
                 kI, 0,  0,  -1, 0,  0,  0,  0,   //
                 0,  0,  0,  0,  kI, 0,  0,  1,   //
                 0,  0,  0,  0,  0,  -1, kI, 0,   //
                 0,  0,  0,  0,  0,  1,  kI, 0,   //
                 0,  0,  0,  0,  kI, 0,  0,  -1}) *
         kS;
}

Matrix b65b54_even() {
  return mat(8, {-1,  0,   0,   -1, 0,   0,   0,   0,    //
                 0,   kI,  -kI, 0,  0,   0,   0,   0,    //
                 0,   -1,  -1,  0,  0,   0,   0,   0,    //
                 -kI, 0,   0,   kI, 0,   0,   0,   0,    //
                 0,   0,   0,   0,  -1,  0,   0,   -1,   //
                 0,   0,   0,   0,  0,   kI,  -kI, 0,    //
                 0,   0,   0,   0,  0,   -1,  -1,  0,    //
                 0,   0,   0,   0,  -kI, 0,   0,   kI}) *
         kS;
}

std::vector<std::string> even_sector_order() {
  return {"0000", "0011", "0101", "0110", "1001", "1010", "1100", "1111"};
}

}  // namespace reference

std::vector<std::string> gate_names() {
  return {"H",     "X",     "Y",   "Z",    "B23",  "B45", "R(-pi/4)", "R(-pi/10)", "R(-2pi/5)",
          "CNOT+", "CNOT-", "SWAP", "SWAP'", "CY", "CiZ", "Y2"};
}

std::string canonical_gate_name(const std::string& name) {
  std::string s = name;
  replace_all(s, "−", "-");
  replace_all(s, "′", "'");
  replace_all(s, "π", "pi");
  replace_all(s, "⁺", "+");
  replace_all(s, "⁻", "-");
  if (s == "CNOT") s = "CNOT+";
  if (s == "CZ" || s == "CIZ") s = "CiZ";
  const auto names = gate_names();
  if (std::find(names.begin(), names.end(), s) == names.end()) {
    throw DomainError(fmt::format("unknown gate '{}'", name));
  }
  return s;
}

namespace {

struct Construction {
  Operator op;
  Basis basis;
  Matrix reference;
  std::string provenance;
  std::optional<std::vector<int>> ref_block;
};

GateMatrix finish(Construction c) {
  GateMatrix g = sector_matrix(c.op, c.basis);
  Matrix ref = c.ref_block ? pick(c.reference, *c.ref_block) : c.reference;
  const Alignment al = align(g.matrix, ref);
  g.reference = ref;
  g.phase = al.phase;
  g.deviation = al.deviation;
  g.provenance = c.provenance;
  g.op = c.op;
  return g;
}

Operator braid_hadamard(const FockSpace& s2, BraidConvention conv) {
  const auto r = phase_gate(s2, {1, 2}, -kPi / 4);
  return r * braid(s2, 2, 3, conv) * r;
}

// Normalized H as a full two-mode operator (construction divided by its phase).
Operator normalized_hadamard(const FockSpace& s2, BraidConvention conv) {
  const auto hb = braid_hadamard(s2, conv);
  const auto m = sector_matrix(hb, one_qubit_basis(s2, Sector::even)).matrix;
  const cplx ph = align(m, reference::hadamard()).phase;
  return hb * std::conj(ph);
}

Operator dense_cnot_plus(const FockSpace& s3, BraidConvention conv) {
  const double q = -kPi / 4;
  const auto ra = phase_gate(s3, {1, 2}, q), rb = phase_gate(s3, {3, 4}, q),
             rc = phase_gate(s3, {5, 6}, q);
  const auto b = braid(s3, 4, 5, conv);
  return b * rb * rc * b * rc * rb * ra.adjoint();
}

Operator dense_cnot_minus(const FockSpace& s3, BraidConvention conv) {
  const double q = -kPi / 4;
  const auto ra = phase_gate(s3, {1, 2}, q), rb = phase_gate(s3, {3, 4}, q),
             rc = phase_gate(s3, {5, 6}, q);
  const auto b = braid(s3, 4, 5, conv);
  return b * rb.adjoint() * rc * b * rc.adjoint() * rb * ra;
}

void require(bool ok, const std::string& name, Sector s) {
  if (!ok) throw DomainError(fmt::format("gate {} is undefined in the {} sector", name, to_string(s)));
}

}  // namespace

GateMatrix named_gate(const std::string& raw_name, std::optional<Sector> sector,
                      BraidConvention conv) {
  const std::string name = canonical_gate_name(raw_name);
  const bool swapish = name == "SWAP" || name == "SWAP'";
  const Sector sec = sector.value_or(natural_sector(name));
  const FockSpace s2(2), s3(3);
  const double q = -kPi / 4;

  auto one_qubit = [&](Operator op, Matrix ref, std::string prov) {
    require(sec != Sector::full, name, sec);
    return finish({std::move(op), one_qubit_basis(s2, sec), std::move(ref), std::move(prov), {}});
  };
  auto r_gate = [&](double theta, std::string prov) {
    return one_qubit(phase_gate(s2, {1, 2}, theta), reference::phase_diag(theta), std::move(prov));
  };

  if (name == "B23") return one_qubit(braid(s2, 2, 3, conv), reference::b23(conv), "B23");
  if (name == "H") return one_qubit(braid_hadamard(s2, conv), reference::hadamard(), "R12(-pi/4) B23 R12(-pi/4)");
  if (name == "X") {
    return one_qubit(braid(s2, 2, 3, conv).pow(2) * (-kI), reference::pauli_x(), "-i B23^2");
  }
  if (name == "Z") return one_qubit(phase_gate(s2, {1, 2}, q).pow(2), reference::pauli_z(), "R12(-pi/4)^2");
  if (name == "Y") {
    const auto hz = normalized_hadamard(s2, conv) * phase_gate(s2, {1, 2}, q).pow(2);
    return one_qubit(hz * hz, reference::pauli_y(), "(H Z)^2");
  }
  if (name == "R(-pi/4)") return r_gate(-kPi / 4, "R12(-pi/4)");
  if (name == "R(-pi/10)") return r_gate(-kPi / 10, "R12(-pi/10)");
  if (name == "R(-2pi/5)") return r_gate(-2 * kPi / 5, "R12(-2pi/5)");

  if (name == "B45") {
    require(sec != Sector::full, name, sec);
    return finish({braid(s3, 4, 5, conv), dense_sector_basis(s3, sec), reference::b45_dense(), "B45", {}});
  }
  if (name == "CNOT+") {
    require(sec == Sector::even, name, sec);
    return finish({dense_cnot_plus(s3, conv), dense_sector_basis(s3, sec), reference::cnot(),
                   "B45 R34 R56 B45 R56 R34 R12^-1 (all R at -pi/4)", {}});
  }
  if (name == "CNOT-") {
    require(sec == Sector::odd, name, sec);
    return finish({dense_cnot_minus(s3, conv), dense_sector_basis(s3, sec), reference::cnot(),
                   "B45 R34^-1 R56 B45 R56^-1 R34 R12 (all R at -pi/4)", {}});
  }
  if (name == "CY" || name == "CiZ") {
    require(sec != Sector::full, name, sec);
    const auto cn = sec == Sector::even ? dense_cnot_plus(s3, conv) : dense_cnot_minus(s3, conv);
    const auto rb = phase_gate(s3, {3, 4}, q);
    const auto cy = rb * cn * rb.adjoint();
    if (name == "CY") {
      return finish({cy, dense_sector_basis(s3, sec), reference::cy(), "R34(-pi/4) CNOT R34(-pi/4)^-1", {}});
    }
    return finish({cn * cy, dense_sector_basis(s3, sec), reference::ciz(), "CNOT CY", {}});
  }
  if (swapish) {
    const bool prime = name == "SWAP'";
    const auto op = prime ? braid(s2, 2, 3, conv) * braid(s2, 1, 2, conv) * braid(s2, 3, 4, conv) *
                                braid(s2, 2, 3, conv)
                          : braid(s2, 3, 2, conv) * braid(s2, 2, 1, conv) * braid(s2, 4, 3, conv) *
                                braid(s2, 3, 2, conv);
    std::optional<std::vector<int>> block;
    if (sec == Sector::even) block = std::vector<int>{0, 3};
    if (sec == Sector::odd) block = std::vector<int>{1, 2};
    return finish({op, one_qubit_basis(s2, sec), prime ? reference::swap_prime() : reference::swap(),
                   prime ? "B23 B12 B34 B23" : "B32 B21 B43 B32", block});
  }
  if (name == "Y2") {
    require(sec == Sector::even, name, sec);
    const Matrix y = named_gate("Y", Sector::even, conv).normalized();
    const Matrix y2 = block_diag(y, y.transpose());
    const Basis b = dense_sector_basis(s3, Sector::even);
    return finish({lift(s3, b, y2), b, reference::y2(), "Y (+) Y^T", {}});
  }
  throw DomainError(fmt::format("unknown gate '{}'", raw_name));
}

Sector natural_sector(const std::string& raw) {
  const std::string name = canonical_gate_name(raw);
  if (name == "SWAP" || name == "SWAP'") return Sector::full;
  if (name == "CNOT-") return Sector::odd;
  return Sector::even;
}

int gate_mode_count(const std::string& raw) {
  const std::string name = canonical_gate_name(raw);
  for (const char* d : {"B45", "CNOT+", "CNOT-", "CY", "CiZ", "Y2"}) {
    if (name == d) return 3;
  }
  return 2;
}

Operator gate_operator(const std::string& name, BraidConvention convention) {
  return *named_gate(name, std::nullopt, convention).op;
}

Operator embed(const Operator& small, const FockSpace& big, const std::vector<int>& index_map) {
  const FockSpace& s = small.space();
  const int nm = s.n_majoranas();
  if (static_cast<int>(index_map.size()) != nm) throw DomainError("index map size mismatch");
  std::vector<Matrix> g_small, g_big;
  for (int k = 1; k <= nm; ++k) {
    g_small.push_back(majorana(s, k).matrix());
    g_big.push_back(majorana(big, index_map[k - 1]).matrix());
  }
  Matrix out = Matrix::Zero(big.dim(), big.dim());
  for (int mask = 0; mask < (1 << nm); ++mask) {
    Matrix ms = Matrix::Identity(s.dim(), s.dim());
    for (int k = 0; k < nm; ++k) {
      if (mask >> k & 1) ms = ms * g_small[k];
    }
    const cplx c = (ms.adjoint() * small.matrix()).trace() / static_cast<double>(s.dim());
    if (std::abs(c) < 1e-14) continue;
    if (std::popcount(static_cast<unsigned>(mask)) % 2) {
      throw DomainError("embed needs a parity-preserving operator");
    }
    Matrix mb = Matrix::Identity(big.dim(), big.dim());
    for (int k = 0; k < nm; ++k) {
      if (mask >> k & 1) mb = mb * g_big[k];
    }
    out += c * mb;
  }
  return Operator(big, out);
}

bool DualityReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
}

DualityReport duality_check(BraidConvention conv, std::optional<Matrix> h_override, double tol) {
  const FockSpace s2(2);
  DualityReport rep{conv, {}};
  const auto hb_full = braid_hadamard(s2, conv);
  for (Sector sec : {Sector::even, Sector::odd}) {
    const Basis basis = one_qubit_basis(s2, sec);
    const Matrix b = sector_matrix(braid(s2, 2, 3, conv), basis).matrix;
    const Matrix r = sector_matrix(phase_gate(s2, {1, 2}, -kPi / 4), basis).matrix;
    const Matrix hb = h_override ? Matrix(kI * *h_override) : sector_matrix(hb_full, basis).matrix;
    const Matrix h = h_override ? *h_override : Matrix(hb * std::conj(align(hb, reference::hadamard()).phase));
    const Matrix x = reference::pauli_x();
    auto add = [&](std::string name, const Matrix& lhs, const Matrix& rhs) {
      const Alignment al = align(lhs, rhs);
      rep.entries.push_back({std::move(name), to_string(sec), max_abs(lhs - rhs), al.phase,
                             al.deviation, al.deviation <= tol});
    };
    add("B23 = e^{-i pi/4} H R H^-1", b, std::exp(-kI * kPi / 4.0) * h * r * h.inverse());
    add("X = -i B23^2", x, -kI * b * b);
    add("X = -Hb R^2 Hb (Hb = R B23 R)", x, -hb * r * r * hb);
  }
  return rep;
}

bool DisplayReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; }) &&
         inverse_deviation <= kTolSeq;
}

DisplayReport display_check(BraidConvention conv, bool flip_b45, double tol) {
  const FockSpace s4(4);
  const Basis even = occupation_basis(s4, reference::even_sector_order(), "even-sector");
  const auto b45 = flip_b45 ? braid(s4, 5, 4, conv) : braid(s4, 4, 5, conv);
  const auto u = b45 * braid(s4, 5, 6, conv);
  const auto v = braid(s4, 6, 5, conv) * braid(s4, 5, 4, conv);
  DisplayReport rep;
  auto add = [&](std::string name, const Operator& op, const Matrix& printed) {
    const Matrix rows = sector_matrix(op, even).matrix.transpose();
    const Alignment al = align(rows, printed);
    rep.entries.push_back({std::move(name), "even", max_abs(rows - printed), al.phase, al.deviation,
                           al.deviation <= tol});
  };
  add("(B45 B56)+", u, reference::b45b56_even());
  add("(B65 B54)+", v, reference::b65b54_even());
  const Matrix vu = sector_matrix(v * u, even).matrix;
  rep.inverse_deviation = max_abs(vu - Matrix::Identity(8, 8));
  return rep;
}

}  // namespace majsim
