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

#include "qcut/numerics.hpp"

#include <cmath>
#include <random>

namespace qcut {

namespace {

const Mat2 kPauliI = (Mat2() << 1, 0, 0, 1).finished();
const Mat2 kPauliX = (Mat2() << 0, 1, 1, 0).finished();
const Mat2 kPauliY = (Mat2() << 0, cd(0, -1), cd(0, 1), 0).finished();
const Mat2 kPauliZ = (Mat2() << 1, 0, 0, -1).finished();

}  // namespace

char pauli_char(Pauli p) {
    static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
    return kChars[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
        case 'i':
            return Pauli::I;
        case 'X':
        case 'x':
            return Pauli::X;
        case 'Y':
        case 'y':
            return Pauli::Y;
        case 'Z':
        case 'z':
            return Pauli::Z;
    }
    throw std::invalid_argument(std::string("not a Pauli label: '") + c + "'");
}

const Mat2 &pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::I:
            return kPauliI;
        case Pauli::X:
            return kPauliX;
        case Pauli::Y:
            return kPauliY;
        case Pauli::Z:
            return kPauliZ;
    }
    return kPauliI;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Svd svd(const ComplexMatrix &a) {
    if (!all_finite(a)) {
        throw NumericsError("svd: input has non-finite entries");
    }
    Eigen::BDCSVD<ComplexMatrix> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (solver.info() != Eigen::Success) {
        throw NumericsError("svd: failed to converge");
    }
    Svd out{solver.matrixU(), solver.singularValues(), solver.matrixV().adjoint()};
    if (!all_finite(out.u) || !all_finite(out.vh) || !out.s.allFinite()) {
        throw NumericsError("svd: non-finite factors");
    }
    return out;
}

int numerical_rank(const Eigen::VectorXd &singular_values) {
    if (singular_values.size() == 0) {
        return 0;
    }
    double cutoff = kRankRelTol * singular_values.maxCoeff();
    int rank = 0;
    for (double s : singular_values) {
        if (s > cutoff) {
            ++rank;
        }
    }
    return rank;
}

ComplexMatrix haar_random_unitary(int dim, std::uint64_t seed) {
    if (dim < 1) {
        throw std::invalid_argument("haar_random_unitary: dim must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(dim, dim);
    for (int j = 0; j < dim; ++j) {
        for (int i = 0; i < dim; ++i) {
            double re = normal(rng);
            double im = normal(rng);
            g(i, j) = cd(re, im);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        cd d = r(j, j);
        double mag = std::abs(d);
        cd phase = mag > 0 ? d / mag : cd(1, 0);
        q.col(j) *= phase;
    }
    return q;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix &a) {
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        const cd &v = a.data()[k];
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            return false;
        }
    }
    return true;
}

bool is_unitary(const ComplexMatrix &a, double tol) {
    if (a.rows() != a.cols()) {
        return false;
    }
    return max_abs_diff(a.adjoint() * a, ComplexMatrix::Identity(a.rows(), a.cols())) <= tol;
}

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix d = a - b;
    ComplexMatrix herm = 0.5 * (d + d.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(herm, Eigen::EigenvaluesOnly);
    return 0.5 * eig.eigenvalues().cwiseAbs().sum();
}

int qubits_for_dim(Eigen::Index dim) {
    if (dim < 1 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        ++n;
    }
    return n;
}

}  // namespace qcut
