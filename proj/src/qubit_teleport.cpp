// Copyright 2026 The Bargmann Teleport Authors
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

#include "bargmann/qubit_teleport.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bargmann/errors.hpp"

namespace bargmann::qubit {
namespace {

constexpr double kProjectorTolerance = 1e-10;
constexpr double kMinForcedProbability = 1e-14;

std::size_t qubit_count(Eigen::Index dim, const char* what) {
  std::size_t n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if (dim < 2 || (Eigen::Index{1} << n) != dim)
    throw DimensionMismatch(std::string(what) + ": dimension must be a power of two ≥ 2");
  return n;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

MeasurementResult collapse(const std::vector<CMatrix>& projectors, const CVector& psi,
                           std::size_t m, double p) {
  return {m, projectors[m] * psi / std::sqrt(p), p};
}

void require_register(const std::vector<CMatrix>& projectors, const CVector& psi) {
  validate_projectors(projectors);
  if (projectors.front().rows() != psi.size())
    throw DimensionMismatch("measurement: projector and state dimensions differ");
  if (std::abs(psi.norm() - 1.0) > 1e-12)
    throw InvalidArgument("measurement: state must be normalized");
}

}  // namespace

QubitState::QubitState(CVector amplitudes)
    : n_(qubit_count(amplitudes.size(), "QubitState")), amps_(std::move(amplitudes)) {
  if (!amps_.allFinite()) throw InvalidArgument("QubitState: non-finite amplitudes");
  if (std::abs(amps_.norm() - 1.0) > 1e-12)
    throw InvalidArgument("QubitState: amplitudes must have unit norm");
}

QubitState QubitState::basis(std::size_t n_qubits, std::size_t index) {
  const auto dim = Eigen::Index{1} << n_qubits;
  if (static_cast<Eigen::Index>(index) >= dim) throw DimensionMismatch("basis: index out of range");
  CVector v = CVector::Zero(dim);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return QubitState(v);
}

GateMatrix::GateMatrix(CMatrix u) : n_(qubit_count(u.rows(), "GateMatrix")), u_(std::move(u)) {
  if (u_.rows() != u_.cols()) throw DimensionMismatch("GateMatrix: matrix must be square");
  const CMatrix id = CMatrix::Identity(u_.rows(), u_.cols());
  if (linalg::max_abs(u_.adjoint() * u_ - id) > 1e-12)
    throw ConstraintViolation("GateMatrix: matrix is not unitary");
}

const StandardGates& standard_gates() {
  static const StandardGates gates = [] {
    CMatrix x(2, 2), y(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    y << 0, -kI, kI, 0;
    z << 1, 0, 0, -1;
    const CMatrix h = (x + z) / std::sqrt(2.0);
    CMatrix cnot = CMatrix::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = 1;
    cnot(3, 2) = cnot(2, 3) = 1;
    return StandardGates{GateMatrix(x), GateMatrix(y), GateMatrix(z), GateMatrix(h),
                         GateMatrix(cnot)};
  }();
  return gates;
}

std::array<QubitState, 4> bell_states() {
  const auto& g = standard_gates();
  const CMatrix circuit = g.cnot.matrix() * kron(g.h.matrix(), CMatrix::Identity(2, 2));
  auto make = [&](std::size_t ij) { return QubitState(circuit.col(static_cast<Eigen::Index>(ij))); };
  return {make(0), make(1), make(2), make(3)};
}

std::array<cplx, 4> bell_decompose(const QubitState& psi) {
  if (psi.n_qubits() != 2) throw DimensionMismatch("bell_decompose: expected two qubits");
  const auto basis = bell_states();
  std::array<cplx, 4> out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = basis[k].amplitudes().dot(psi.amplitudes());
  return out;
}

CVector bell_recompose(const std::array<cplx, 4>& coefficients) {
  const auto basis = bell_states();
  CVector out = CVector::Zero(4);
  for (std::size_t k = 0; k < 4; ++k) out += coefficients[k] * basis[k].amplitudes();
  return out;
}

void validate_projectors(const std::vector<CMatrix>& projectors) {
  if (projectors.empty()) throw ConstraintViolation("projectors: empty set");
  const auto dim = projectors.front().rows();
  CMatrix sum = CMatrix::Zero(dim, dim);
  for (std::size_t m = 0; m < projectors.size(); ++m) {
    const CMatrix& p = projectors[m];
    if (p.rows() != dim || p.cols() != dim)
      throw DimensionMismatch("projectors: all must share one square dimension");
    if (linalg::max_abs(p - p.adjoint()) > kProjectorTolerance)
      throw ConstraintViolation("projector " + std::to_string(m) + " is not Hermitian");
    if (linalg::max_abs(p * p - p) > kProjectorTolerance)
      throw ConstraintViolation("projector " + std::to_string(m) + " is not idempotent");
    for (std::size_t k = 0; k < m; ++k)
      if (linalg::max_abs(p * projectors[k]) > kProjectorTolerance)
        throw ConstraintViolation("projectors " + std::to_string(k) + " and " + std::to_string(m) +
                                  " are not orthogonal");
    sum += p;
  }
  if (linalg::max_abs(sum - CMatrix::Identity(dim, dim)) > kProjectorTolerance)
    throw ConstraintViolation("projectors do not sum to the identity");
}

std::vector<double> outcome_probabilities(const std::vector<CMatrix>& projectors, const CVector& psi) {
  std::vector<double> p;
  p.reserve(projectors.size());
  for (const CMatrix& m : projectors) p.push_back(std::max(0.0, psi.dot(m * psi).real()));
  return p;
}

MeasurementResult projective_measurement(const std::vector<CMatrix>& projectors, const CVector& psi,
                                         RandomSource& rng) {
  require_register(projectors, psi);
  const std::vector<double> p = outcome_probabilities(projectors, psi);
  const double u = rng.uniform();
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (p[m] <= 0.0) continue;
    last = m;
    acc += p[m];
    if (u < acc) return collapse(projectors, psi, m, p[m]);
  }
  // u landed in the roundoff gap above Σp < 1.
  return collapse(projectors, psi, last, p[last]);
}

MeasurementResult projective_measurement(const std::vector<CMatrix>& projectors, const CVector& psi,
                                         std::size_t forced) {
  require_register(projectors, psi);
  if (forced >= projectors.size()) throw InvalidArgument("measurement: forced outcome out of range");
  const double p = outcome_probabilities(projectors, psi)[forced];
  if (p < kMinForcedProbability)
    throw MeasurementError("measurement: forced outcome " + std::to_string(forced) +
                           " has probability " + std::to_string(p));
  return collapse(projectors, psi, forced, p);
}

std::vector<CMatrix> teleport_projectors() {
  std::vector<CMatrix> out;
  for (Eigen::Index ij = 0; ij < 4; ++ij) {
    CMatrix va = CMatrix::Zero(4, 4);
    va(ij, ij) = 1.0;
    out.push_back(kron(va, CMatrix::Identity(2, 2)));
  }
  return out;
}

QubitTeleportResult teleport_qubit(const QubitState& input, std::optional<std::size_t> forced,
                                   RandomSource* rng) {
  if (input.n_qubits() != 1) throw DimensionMismatch("teleport_qubit: input must be one qubit");
  if (!forced && rng == nullptr)
    throw InvalidArgument("teleport_qubit: need a forced outcome or a random source");
  const auto& g = standard_gates();
  const CMatrix id2 = CMatrix::Identity(2, 2);
  const CVector psi0 = kron(input.amplitudes(), bell_states()[0].amplitudes());
  const CMatrix alice = kron(kron(g.h.matrix(), id2), id2) * kron(g.cnot.matrix(), id2);

  QubitTeleportResult r;
  r.pre_measurement = alice * psi0;
  const auto projectors = teleport_projectors();
  const std::vector<double> p = outcome_probabilities(projectors, r.pre_measurement);
  std::copy(p.begin(), p.end(), r.probabilities.begin());
  const MeasurementResult m = forced ? projective_measurement(projectors, r.pre_measurement, *forced)
                                     : projective_measurement(projectors, r.pre_measurement, *rng);
  r.i = m.outcome / 2;
  r.j = m.outcome % 2;
  r.bob_state = m.post_state.segment(static_cast<Eigen::Index>(2 * m.outcome), 2);
  // X fixes the bit flip from j, then Z the phase flip from i.
  CVector out = r.bob_state;
  if (r.j == 1) out = g.x.matrix() * out;
  if (r.i == 1) out = g.z.matrix() * out;
  r.output = out;
  r.fidelity = std::abs(input.amplitudes().dot(out));
  return r;
}

fock::FockTensor polarization_state_to_fock(const CVector& psi, std::size_t cutoff) {
  if (psi.size() != 4) throw DimensionMismatch("polarization state: expected 4 amplitudes");
  fock::FockTensor out(4, cutoff);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) {
      std::vector<std::size_t> n(4, 0);
      n[j] = 1;
      n[2 + k] = 1;
      out.data()(out.flat_index(n)) = psi(2 * j + k);
    }
  return out;
}

CoincidenceResult coincidence_bell_detect(const fock::FockTensor& psi) {
  if (psi.modes() != 4) throw DimensionMismatch("coincidence detection: expected 4 modes");
  // ψ_jk = ⟨1_{Vj} 1_{Ak}|ψ⟩; everything else must vanish.
  CVector sector(4);
  double outside = 0.0;
  double inside = 0.0;
  for (std::size_t flat = 0; flat < psi.dim(); ++flat) {
    std::size_t rest = flat;
    std::array<std::size_t, 4> n{};
    for (std::size_t k = 4; k-- > 0;) {
      n[k] = rest % (psi.cutoff() + 1);
      rest /= psi.cutoff() + 1;
    }
    const double w = std::norm(psi.data()(static_cast<Eigen::Index>(flat)));
    if (n[0] + n[1] == 1 && n[2] + n[3] == 1) {
      sector(static_cast<Eigen::Index>(2 * (n[0] == 1 ? 0 : 1) + (n[2] == 1 ? 0 : 1))) =
          psi.data()(static_cast<Eigen::Index>(flat));
      inside += w;
    } else {
      outside += w;
    }
  }
  if (outside > 1e-12)
    throw SectorViolation("coincidence detection: state has weight " + std::to_string(outside) +
                          " outside the one-photon-per-party sector");
  if (std::abs(inside - 1.0) > 1e-9)
    throw InvalidArgument("coincidence detection: state must be normalized");
  // ⟨Ω|b_{1k} b_{0j} = ½⟨Ω|(−a_{Vk} + a_{Ak})(a_{Vj} + a_{Aj}); only the
  // cross terms survive on this sector.
  CoincidenceResult r;
  r.probability = 0.0;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) {
      const cplx amp = 0.5 * (sector(2 * j + k) - sector(2 * k + j));
      r.amplitudes[2 * j + k] = amp;
      r.probability += std::norm(amp);
    }
  return r;
}

CoincidenceResult oracle_coincidence_detect(const fock::FockTensor& psi) {
  if (psi.modes() != 4) throw DimensionMismatch("coincidence oracle: expected 4 modes");
  const std::size_t n_cut = psi.cutoff();
  const std::size_t d = n_cut + 1;
  // The output-port operators b = U a U† belong to U† on states.
  const CMatrix bs = fock::fock_beam_splitter(-std::numbers::pi / 4.0, n_cut);
  CVector state = psi.data();
  for (std::size_t pol = 0; pol < 2; ++pol) {
    const std::size_t v = pol;
    const std::size_t a = 2 + pol;
    CVector next = CVector::Zero(state.size());
    for (std::size_t flat = 0; flat < psi.dim(); ++flat) {
      const cplx amp = state(static_cast<Eigen::Index>(flat));
      if (amp == cplx(0.0)) continue;
      std::vector<std::size_t> n(4);
      std::size_t rest = flat;
      for (std::size_t k = 4; k-- > 0;) {
        n[k] = rest % d;
        rest /= d;
      }
      const std::size_t col = n[v] * d + n[a];
      for (std::size_t row = 0; row < d * d; ++row) {
        const cplx u = bs(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
        if (u == cplx(0.0)) continue;
        std::vector<std::size_t> m = n;
        m[v] = row / d;
        m[a] = row % d;
        next(static_cast<Eigen::Index>(psi.flat_index(m))) += u * amp;
      }
    }
    state = next;
  }
  const fock::FockTensor out(4, n_cut, state);
  CoincidenceResult r;
  r.probability = 0.0;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) {
      std::vector<std::size_t> n(4, 0);
      n[j] += 1;      // port 0, polarization j
      n[2 + k] += 1;  // port 1, polarization k
      const cplx amp = out(n);
      r.amplitudes[2 * j + k] = amp;
      r.probability += std::norm(amp);
    }
  return r;
}

}  // namespace bargmann::qubit
