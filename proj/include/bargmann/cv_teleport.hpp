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

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "bargmann/fock_oracle.hpp"
#include "bargmann/gaussian_family.hpp"
#include "bargmann/gaussian_form.hpp"
#include "bargmann/random.hpp"

namespace bargmann::cv {

using core::GaussianForm;

/// Two-mode squeezed resource √(1−q²)·e^{qū₁ū₂}, 0 ≤ q < 1.
GaussianForm epr_state(double q);

/// π^{−1/2} Σ (D(α)|n⟩₀)⊗|n⟩₁ = π^{−1/2} e^{−|α|²/2} e^{ū₀ū₁} e^{αū₀ − ᾱū₁},
/// delta-normalized.
GaussianForm generalized_bell(cplx alpha);

/// α ↦ generalized_bell(α) as a family over (α, ᾱ, ū₀, ū₁).
core::GaussianFamily bell_family();

/// ∫|B(α)⟩⟨B(α)| dx dp with α = x + ip, as a kernel.
GaussianForm bell_completeness_kernel();
/// (1/π)∫|α⟩⟨α| d²α, as a kernel.
GaussianForm coherent_completeness_kernel();

enum class Quadrature { position, momentum };

/// |x⟩ = π^{−1/4} e^{−x²/2} e^{−ū²/2} e^{√2xū} or
/// |p⟩ = π^{−1/4} e^{−p²/2} e^{ū²/2} e^{i√2pū}.
GaussianForm quadrature_eigenstate(Quadrature kind, double lambda);

/// ∫ρ_σ(y − x)|y⟩dy with ρ_σ the centered normal density of width σ: a
/// normalizable stand-in for |x⟩ whose overlap with ⟨x′| is ρ_σ(x′ − x).
GaussianForm mollified_position_state(double x, double sigma);

/// Bivariate normal law of the outcome α = x + ip.
struct OutcomeDensity {
  RVector mean;        // (E x, E p)
  RMatrix covariance;  // 2×2
  double mass = 0.0;   // integral of the unnormalized density, 1 up to roundoff

  double operator()(double x, double p) const;
  cplx sample(RandomSource& rng) const;
};

/// Law of the Bell outcome when coherent(γ)⊗epr(q) is measured: the squared
/// norm of Bob's conditional state as a function of (x, p), obtained by
/// exact integration and normalized by its total mass.
OutcomeDensity bell_measurement_density(cplx gamma, double q);

struct CVTeleportConfig {
  double g = 0.0;
  cplx gamma{0.0, 0.0};
  std::optional<cplx> fixed_outcome;  // sampled when empty
  std::uint64_t seed = 0;

  double q() const;
  void validate() const;
};

struct CVTeleportResult {
  double g = 0.0;
  double q = 0.0;
  cplx gamma;
  cplx outcome;               // α = x₋ + ip₊
  GaussianForm bob_state_raw; // ⟨B(α)|ψ⊗EPR⟩ on Bob's mode
  GaussianForm output_state;  // D(α) applied to bob_state_raw
  double fidelity = 0.0;            // |⟨γ|φ⟩|, φ = Σqⁿ D(α)|n⟩⟨n|D(α)†|γ⟩
  double fidelity_normalized = 0.0; // |⟨γ|φ⟩| / ‖φ‖
};

/// Runs the protocol once. The outcome comes from cfg.fixed_outcome or is
/// drawn from bell_measurement_density with rng.
CVTeleportResult teleport_cv(const CVTeleportConfig& cfg, RandomSource& rng);
/// Same, with a source seeded from cfg.seed.
CVTeleportResult teleport_cv(const CVTeleportConfig& cfg);

/// exp(−(1−q)|α−γ|²)
double fidelity_coherent(cplx gamma, cplx alpha, double q);

/// |⟨ref|φ⟩| for a normalized reference; φ is used as given.
double fidelity_pure(const GaussianForm& ref, const GaussianForm& phi);

/// {gamma, g, q, x_minus, p_plus, fidelity, fidelity_normalized}
nlohmann::json to_json(const CVTeleportResult& r);

/// Outcome of the smeared quadrature measurement M = ∫χ(λ)|λ⟩⟨λ|dλ.
struct SmearedOutcome {
  fock::FockTensor state;  // M|ψ⟩ / ‖M|ψ⟩‖, truncated at the cutoff
  double probability = 0.0; // ⟨ψ|M*M|ψ⟩
};

/// χ(λ)² = ½[erf((λ−a)/ε) − erf((λ−b)/ε)], so the χ² of adjacent windows add
/// up to one. Integrals over λ use adaptive Simpson at 1e−8.
SmearedOutcome smeared_quadrature_measurement(const GaussianForm& psi, double a, double b,
                                              double epsilon = 0.1,
                                              Quadrature kind = Quadrature::position,
                                              std::size_t cutoff = 40);

/// χ(λ)² for the window [a, b] and smoothing ε.
double window_weight(double lambda, double a, double b, double epsilon);

}  // namespace bargmann::cv
