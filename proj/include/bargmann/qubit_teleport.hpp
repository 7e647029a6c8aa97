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

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "bargmann/fock_oracle.hpp"
#include "bargmann/linalg.hpp"
#include "bargmann/random.hpp"

namespace bargmann::qubit {

/// Normalized amplitudes over 2ⁿ basis kets; qubit 0 is the leftmost
/// tensor factor (most significant bit).
class QubitState {
 public:
  explicit QubitState(CVector amplitudes);
  static QubitState basis(std::size_t n_qubits, std::size_t index);

  std::size_t n_qubits() const { return n_; }
  const CVector& amplitudes() const { return amps_; }

 private:
  std::size_t n_;
  CVector amps_;
};

/// Unitary of dimension 2ᵏ, checked at construction.
class GateMatrix {
 public:
  explicit GateMatrix(CMatrix u);
  const CMatrix& matrix() const { return u_; }
  std::size_t n_qubits() const { return n_; }

 private:
  std::size_t n_;
  CMatrix u_;
};

struct StandardGates {
  GateMatrix x, y, z, h, cnot;
};
const StandardGates& standard_gates();

/// |β_ij⟩ = M_CNOT(H⊗I)|ij⟩ in the order β00, β01, β10, β11.
std::array<QubitState, 4> bell_states();
/// ⟨β_ij|ψ⟩ in the same order.
std::array<cplx, 4> bell_decompose(const QubitState& psi);
/// Σ c_ij |β_ij⟩
CVector bell_recompose(const std::array<cplx, 4>& coefficients);

struct MeasurementResult {
  std::size_t outcome = 0;
  CVector post_state;
  double probability = 0.0;
};

/// Throws ConstraintViolation unless the set is Hermitian, idempotent,
/// mutually orthogonal and complete within 1e−10.
void validate_projectors(const std::vector<CMatrix>& projectors);

/// p(m) = ⟨ψ|M_m|ψ⟩ for every projector.
std::vector<double> outcome_probabilities(const std::vector<CMatrix>& projectors, const CVector& psi);

/// Samples m with probability p(m) and returns M_m|ψ⟩/√p(m).
MeasurementResult projective_measurement(const std::vector<CMatrix>& projectors, const CVector& psi,
                                         RandomSource& rng);
/// Same with a prescribed outcome; MeasurementError when p(m) < 1e−14.
MeasurementResult projective_measurement(const std::vector<CMatrix>& projectors, const CVector& psi,
                                         std::size_t forced);

/// M_ij = |ij⟩⟨ij|_VA ⊗ I_B on the Victor–Alice–Bob register.
std::vector<CMatrix> teleport_projectors();

struct QubitTeleportResult {
  std::size_t i = 0;
  std::size_t j = 0;
  CVector pre_measurement;             // (H⊗I⊗I)(M_CNOT⊗I)(ψ⊗β00)
  std::array<double, 4> probabilities; // p(ij), index 2i + j
  CVector bob_state;                   // Bob's qubit before correction
  CVector output;                      // after I, X, Z or XZ
  double fidelity = 0.0;               // |⟨ψ_in|output⟩|
};

/// The three-qubit protocol; the outcome is forced when given, else sampled.
QubitTeleportResult teleport_qubit(const QubitState& input, std::optional<std::size_t> forced,
                                   RandomSource* rng = nullptr);

/// Coincidence detection behind a half beam splitter on two polarized
/// photons. The input is a Fock state on modes (V_0, V_1, A_0, A_1) holding
/// one photon on Victor's side and one on Alice's.
struct CoincidenceResult {
  std::array<cplx, 4> amplitudes;  // ⟨Ω|b_{1k} b_{0j}|ψ⟩ at index 2j + k
  double probability = 0.0;        // Σ_{j,k} |amplitude|²
};

/// Throws SectorViolation when ψ has weight outside the one-photon-per-party
/// sector.
CoincidenceResult coincidence_bell_detect(const fock::FockTensor& psi);

/// Embeds a two-photon polarization state ψ_jk (index 2j + k) into the
/// four-mode Fock space at the given cutoff.
fock::FockTensor polarization_state_to_fock(const CVector& psi, std::size_t cutoff);

/// Brute-force counterpart: mixes each polarization pair on a truncated
/// Fock beam splitter and reads off the coincidence amplitudes.
CoincidenceResult oracle_coincidence_detect(const fock::FockTensor& psi);

}  // namespace bargmann::qubit
