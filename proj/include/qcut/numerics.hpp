// Copyright 2026 The qcut Authors
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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qcut {

using cd = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;

/// Default absolute tolerance for entrywise comparisons.
inline constexpr double kDefaultTol = 1e-9;
/// A singular value counts toward rank iff it exceeds this fraction of the largest one.
inline constexpr double kRankRelTol = 1e-10;
/// Coefficients at or below this magnitude are treated as exact zeros.
inline constexpr double kCoefDropTol = 1e-12;

struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);
const Mat2 &pauli_matrix(Pauli p);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

struct Svd {
    ComplexMatrix u;
    Eigen::VectorXd s;  // descending, nonnegative
    ComplexMatrix vh;   // V^dagger
};

/// Thin SVD, a = u * diag(s) * vh. Throws NumericsError on non-finite input or output.
Svd svd(const ComplexMatrix &a);

/// Number of singular values above kRankRelTol times the largest.
int numerical_rank(const Eigen::VectorXd &singular_values);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases of R's diagonal
/// moved into Q. Deterministic in `seed`.
ComplexMatrix haar_random_unitary(int dim, std::uint64_t seed);

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
bool all_finite(const ComplexMatrix &a);
bool is_unitary(const ComplexMatrix &a, double tol = kDefaultTol);
ComplexMatrix identity(int dim);

/// Trace distance 0.5 * ||a - b||_1 for Hermitian a, b.
double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// Number of qubits for a 2^n dimension; throws std::invalid_argument otherwise.
int qubits_for_dim(Eigen::Index dim);

}  // namespace qcut
