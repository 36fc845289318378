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

// Hot loops of the simulators. Every kernel has a plain serial reference and an
// OpenMP version; the serial one is kept for cross-checking in tests and as the
// baseline in bench/.
//
// Basis convention: wire w of an n-wire register is bit (n - 1 - w) of the
// amplitude index, so wire 0 is the leftmost tensor factor.

#pragma once

#include <span>
#include <vector>

#include "qcut/numerics.hpp"

namespace qcut {

enum class Exec { Serial, Parallel };

/// Compensated (Kahan) accumulator for complex sums.
struct KahanSum {
    cd sum{0.0, 0.0};
    cd carry{0.0, 0.0};

    void add(cd v) {
        cd y = v - carry;
        cd t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

/// Mutable view of a state vector's amplitudes for the kernels below.
inline std::span<cd> amplitudes(ComplexVector &v) { return {v.data(), static_cast<std::size_t>(v.size())}; }

namespace kernels {

void apply_1q(std::span<cd> psi, int n, int wire, const Mat2 &m, Exec exec = Exec::Parallel);

/// `m` acts in the |w0 w1> basis, w0 the more significant local bit.
void apply_2q(std::span<cd> psi, int n, int w0, int w1, const Mat4 &m, Exec exec = Exec::Parallel);

/// Sum over all (i, j) of conj(c_i) c_j prod_w <f_{i,w}| P_w |f_{j,w}>, where term i is the
/// product vector factors[i*n .. i*n+n). Rows are reduced in index order so the result does
/// not depend on the thread count.
cd product_cross_sum(std::span<const cd> coefs, std::span<const Vec2> factors, int n,
                     std::span<const Pauli> paulis, Exec exec = Exec::Parallel);

}  // namespace kernels
}  // namespace qcut
