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

// Shared helpers for the unit and acceptance tests: seeded generators for
// random kernels and states, form comparison, Fock-side coherent probes.
#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>
#include <unsupported/Eigen/KroneckerProduct>

#include "bargmann/devices.hpp"
#include "bargmann/fock_oracle.hpp"
#include "bargmann/gaussian_form.hpp"
#include "bargmann/random.hpp"
#include "bargmann/transforms.hpp"

namespace bargmann::testing {

inline cplx random_complex(RandomSource& rng, double radius) {
  // uniform in the disc
  const double r = radius * std::sqrt(rng.uniform());
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  return std::polar(r, phi);
}

inline CVector random_vector(RandomSource& rng, std::size_t n, double radius) {
  CVector v(static_cast<Eigen::Index>(n));
  for (auto& x : v) x = random_complex(rng, radius);
  return v;
}

inline CMatrix random_matrix(RandomSource& rng, std::size_t n, double scale) {
  CMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = cplx(scale * rng.normal(), scale * rng.normal());
  return m;
}

inline transforms::QuadraticGenerator random_generator(RandomSource& rng, std::size_t n,
                                                       double scale) {
  const CMatrix x = random_matrix(rng, n, scale);
  const CMatrix y = random_matrix(rng, n, scale);
  transforms::QuadraticGenerator gen;
  gen.b = 0.5 * (x + x.transpose());
  gen.c = 0.5 * (y + y.adjoint());
  gen.t = 2.0 * rng.uniform() - 1.0;
  return gen;
}

// Products of a few squeezer / beam-splitter style evolutions.
inline transforms::SymplecticPair random_symplectic(RandomSource& rng, std::size_t n,
                                                   double scale = 0.35) {
  transforms::SymplecticPair s = transforms::SymplecticPair::identity(n);
  const int factors = 1 + static_cast<int>(3.0 * rng.uniform());
  for (int k = 0; k < factors; ++k)
    s = s * transforms::bogoliubov_from_generator(random_generator(rng, n, scale));
  return s;
}

// A unitary kernel from the transforms constructors: Bogoliubov, quadratic-Hamiltonian
// evolution and a shift, composed in random order.
inline core::GaussianForm random_unitary_kernel(RandomSource& rng, std::size_t n) {
  std::vector<core::GaussianForm> parts{
      transforms::bogoliubov_kernel(random_symplectic(rng, n)),
      transforms::quadratic_hamiltonian_kernel(random_generator(rng, n, 0.3)),
      transforms::linear_hamiltonian_kernel(random_vector(rng, n, 0.8), 2.0 * rng.uniform() - 1.0),
      transforms::inhomogeneous_kernel(random_vector(rng, n, 0.8)),
  };
  core::GaussianForm k = core::identity_kernel(n);
  for (int i = 0; i < 3; ++i) {
    const auto pick = static_cast<std::size_t>(rng.uniform() * static_cast<double>(parts.size()));
    k = core::compose(k, parts[std::min(pick, parts.size() - 1)]);
  }
  return k;
}

// Product of coherent states: a normalizable Gaussian state with linear terms.
inline core::GaussianForm coherent_product(const CVector& beta) {
  core::GaussianForm f = devices::coherent_state(beta(0));
  for (Eigen::Index k = 1; k < beta.size(); ++k) f = core::tensor(f, devices::coherent_state(beta(k)));
  return f;
}

inline CVector fock_coherent_product(const CVector& beta, std::size_t cutoff) {
  CVector v = fock::fock_coherent(beta(0), cutoff);
  for (Eigen::Index k = 1; k < beta.size(); ++k)
    v = Eigen::kroneckerProduct(v, fock::fock_coherent(beta(k), cutoff)).eval();
  return v;
}

// Random normalizable state: a unitary applied to a squeezed coherent product.
inline core::GaussianForm random_state(RandomSource& rng, std::size_t n, double squeeze = 0.35) {
  core::GaussianForm f = coherent_product(random_vector(rng, n, 0.6));
  return core::apply(transforms::bogoliubov_kernel(random_symplectic(rng, n, squeeze)), f);
}

inline void expect_forms_near(const core::GaussianForm& lhs, const core::GaussianForm& rhs,
                              double tol, bool compare_phase) {
  ASSERT_EQ(lhs.n_in(), rhs.n_in());
  ASSERT_EQ(lhs.n_out(), rhs.n_out());
  const core::FormDistance d = core::distance(lhs, rhs);
  EXPECT_LE(d.a, tol) << "A blocks differ\n" << lhs.a() << "\nvs\n" << rhs.a();
  EXPECT_LE(d.b, tol) << "b differs\n" << lhs.b().transpose() << "\nvs\n" << rhs.b().transpose();
  EXPECT_LE(d.c_modulus, tol) << "|c| differs: " << lhs.c() << " vs " << rhs.c();
  if (compare_phase) EXPECT_LE(d.c, tol) << "c differs: " << lhs.c() << " vs " << rhs.c();
}

inline double fidelity_of_vectors(const CVector& x, const CVector& y) {
  return std::abs(x.dot(y)) / (x.norm() * y.norm());
}

}  // namespace bargmann::testing
