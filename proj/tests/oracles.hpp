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

// Test-only reference implementations. They are deliberately naive: explicit
// basis-index loops, no kernels, no SVD from the library. Library results are
// compared against these, never against themselves.

#pragma once

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <vector>

#include "qcut/circuit.hpp"

namespace oracle {

using qcut::cd;
using qcut::ComplexMatrix;
using qcut::ComplexVector;

inline int bit(long long x, int wire, int n) { return static_cast<int>((x >> (n - 1 - wire)) & 1); }

inline long long with_bit(long long x, int wire, int n, int v) {
    const long long mask = 1LL << (n - 1 - wire);
    return v ? (x | mask) : (x & ~mask);
}

inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

/// Full 2^n matrix of a one- or two-qubit matrix on the given wires, built column by column.
inline ComplexMatrix embed(const ComplexMatrix &u, const std::vector<int> &wires, int n) {
    const long long dim = 1LL << n;
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    const int k = static_cast<int>(wires.size());
    for (long long col = 0; col < dim; ++col) {
        int in_local = 0;
        for (int w : wires) in_local = (in_local << 1) | bit(col, w, n);
        for (int out_local = 0; out_local < (1 << k); ++out_local) {
            long long row = col;
            for (int i = 0; i < k; ++i) row = with_bit(row, wires[i], n, (out_local >> (k - 1 - i)) & 1);
            out(row, col) += u(out_local, in_local);
        }
    }
    return out;
}

inline ComplexMatrix gate_matrix(const qcut::Gate &g) {
    return g.arity() == 1 ? ComplexMatrix(g.matrix1()) : ComplexMatrix(g.matrix2());
}

inline ComplexMatrix unitary(const qcut::Circuit &c) {
    const long long dim = 1LL << c.n();
    ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
    for (const qcut::Gate &g : c.gates()) u = embed(gate_matrix(g), g.wires(), c.n()) * u;
    return u;
}

inline ComplexVector state(const qcut::Circuit &c, const ComplexVector &in) { return unitary(c) * in; }

inline ComplexVector basis(int n, long long index) {
    ComplexVector v = ComplexVector::Zero(1LL << n);
    v[index] = 1.0;
    return v;
}

inline ComplexMatrix pauli(char p) {
    ComplexMatrix m(2, 2);
    switch (p) {
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, cd(0, -1), cd(0, 1), 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: m << 1, 0, 0, 1; break;
    }
    return m;
}

inline ComplexMatrix pauli_string(const std::string &label) {
    ComplexMatrix m = pauli(label[0]);
    for (std::size_t i = 1; i < label.size(); ++i) m = kron(m, pauli(label[i]));
    return m;
}

/// R[(ra,ca),(rb,cb)] = u[(ra,rb),(ca,cb)] for a 4x4 u.
inline ComplexMatrix realign(const ComplexMatrix &u) {
    ComplexMatrix r(4, 4);
    for (int ra = 0; ra < 2; ++ra)
        for (int rb = 0; rb < 2; ++rb)
            for (int ca = 0; ca < 2; ++ca)
                for (int cb = 0; cb < 2; ++cb) r(2 * ra + ca, 2 * rb + cb) = u(2 * ra + rb, 2 * ca + cb);
    return r;
}

/// Singular values from the eigenvalues of M^dagger M (or M M^dagger, whichever is smaller), descending.
inline std::vector<double> singular_values(const ComplexMatrix &m) {
    ComplexMatrix g = m.rows() <= m.cols() ? ComplexMatrix(m * m.adjoint()) : ComplexMatrix(m.adjoint() * m);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g);
    std::vector<double> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(std::sqrt(std::max(0.0, es.eigenvalues()[i])));
    std::sort(out.rbegin(), out.rend());
    return out;
}

inline int rank(const std::vector<double> &s, double rel = 1e-7) {
    if (s.empty() || s[0] == 0.0) return 0;
    return static_cast<int>(std::count_if(s.begin(), s.end(), [&](double x) { return x > rel * s[0]; }));
}

/// Amplitudes as a matrix over (partition wires) x (other wires), both in ascending wire order.
inline ComplexMatrix reshape_state(const ComplexVector &psi, const std::vector<int> &part, int n) {
    std::vector<int> rest;
    for (int w = 0; w < n; ++w)
        if (std::find(part.begin(), part.end(), w) == part.end()) rest.push_back(w);
    std::vector<int> a = part;
    std::sort(a.begin(), a.end());
    ComplexMatrix m(1LL << a.size(), 1LL << rest.size());
    for (long long x = 0; x < psi.size(); ++x) {
        long long ia = 0, ib = 0;
        for (int w : a) ia = (ia << 1) | bit(x, w, n);
        for (int w : rest) ib = (ib << 1) | bit(x, w, n);
        m(ia, ib) = psi[x];
    }
    return m;
}

/// Tr_a of a (da*db)-dimensional operator, block a the more significant factor.
inline ComplexMatrix trace_out_a(const ComplexMatrix &rho, int da, int db) {
    ComplexMatrix out = ComplexMatrix::Zero(db, db);
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < db; ++j)
            for (int a = 0; a < da; ++a) out(i, j) += rho(a * db + i, a * db + j);
    return out;
}

inline double max_diff(const ComplexMatrix &a, const ComplexMatrix &b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace oracle
