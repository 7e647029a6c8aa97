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

#include "bargmann/gaussian_family.hpp"
#include "bargmann/gaussian_form.hpp"
#include "bargmann/linalg.hpp"

namespace bargmann::devices {

using core::GaussianForm;

/// D(α) = exp(αa† − ᾱa): e^{−|α|²/2} exp(ūv − ᾱv + αū).
GaussianForm displacement_kernel(cplx alpha);

/// D(α)|0⟩ = e^{−|α|²/2} e^{αū}.
GaussianForm coherent_state(cplx alpha);

/// α ↦ |α⟩ as a family over (α, ᾱ, ū); its resolution() is the coherent
/// completeness integral (1/π)∫|α⟩⟨α|d²α.
core::GaussianFamily coherent_family();

/// Parametric amplifier kernel exp(itH) with B = −ig, C = 0, t = 1.
GaussianForm squeezer_kernel(double g);

/// (1 − tanh²g)^{1/4} exp(½ tanh g ū²).
GaussianForm squeezed_vacuum(double g);

/// Two-mode kernel for H_bs = iθ(a₁†a₂ − a₁a₂†). At θ = π/4 it maps
/// f(ū₁, ū₂) to f((ū₁ + ū₂)/√2, (−ū₁ + ū₂)/√2).
GaussianForm beam_splitter(double theta);
GaussianForm half_beam_splitter();

struct HomodyneSetting {
  double phase = 0.0;         // θ₂
  double lo_amplitude = 1.0;  // |α₂|
};

/// √2|α₂|⟨ψ|(q cos θ₂ + p sin θ₂)|ψ⟩ for a normalized one-mode state, with
/// q = (a + a†)/√2 and p = (a − a†)/(√2 i).
double homodyne_expectation(const GaussianForm& psi, const HomodyneSetting& s);

/// e^{−|β|²} e^{−βū sin θ} e^{|β|² cos θ} φ(ū cos θ + β̄ sin θ) with
/// β = α / sin θ: a strong beam β mixed with φ on a beam splitter of small
/// angle θ. As θ → 0 this tends to D(−α)φ.
GaussianForm displacement_limit(const GaussianForm& phi, cplx alpha, double theta);

}  // namespace bargmann::devices
