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

#include "qcut/kernels.hpp"

#include <cstdint>

namespace qcut::kernels {

namespace {

// Below this many amplitudes the thread fork costs more than the loop.
constexpr std::int64_t kParallelMinDim = std::int64_t{1} << 12;
constexpr std::int64_t kParallelMinPairs = std::int64_t{1} << 14;

inline std::int64_t insert_zero_bit(std::int64_t i, int bit) {
    std::int64_t low = i & ((std::int64_t{1} << bit) - 1);
    return ((i >> bit) << (bit + 1)) | low;
}

void apply_1q_serial(std::span<cd> psi, int n, int wire, const Mat2 &m) {
    const std::int64_t mask = std::int64_t{1} << (n - 1 - wire);
    const auto dim = static_cast<std::int64_t>(psi.size());
    for (std::int64_t i0 = 0; i0 < dim; ++i0) {
        if (i0 & mask) {
            continue;
        }
        std::int64_t i1 = i0 | mask;
        cd a = psi[i0];
        cd b = psi[i1];
        psi[i0] = m(0, 0) * a + m(0, 1) * b;
        psi[i1] = m(1, 0) * a + m(1, 1) * b;
    }
}

void apply_1q_parallel(std::span<cd> psi, int n, int wire, const Mat2 &m) {
    const int bit = n - 1 - wire;
    const std::int64_t mask = std::int64_t{1} << bit;
    const std::int64_t half = static_cast<std::int64_t>(psi.size()) / 2;
    const cd m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
    cd *data = psi.data();
#pragma omp parallel for schedule(static) if (2 * half >= kParallelMinDim)
    for (std::int64_t k = 0; k < half; ++k) {
        std::int64_t i0 = insert_zero_bit(k, bit);
        std::int64_t i1 = i0 | mask;
        cd a = data[i0];
        cd b = data[i1];
        data[i0] = m00 * a + m01 * b;
        data[i1] = m10 * a + m11 * b;
    }
}

void apply_2q_serial(std::span<cd> psi, int n, int w0, int w1, const Mat4 &m) {
    const std::int64_t m0 = std::int64_t{1} << (n - 1 - w0);
    const std::int64_t m1 = std::int64_t{1} << (n - 1 - w1);
    const auto dim = static_cast<std::int64_t>(psi.size());
    for (std::int64_t base = 0; base < dim; ++base) {
        if ((base & m0) || (base & m1)) {
            continue;
        }
        const std::int64_t idx[4] = {base, base | m1, base | m0, base | m0 | m1};
        cd in[4];
        for (int r = 0; r < 4; ++r) {
            in[r] = psi[idx[r]];
        }
        for (int r = 0; r < 4; ++r) {
            cd acc = 0;
            for (int c = 0; c < 4; ++c) {
                acc += m(r, c) * in[c];
            }
            psi[idx[r]] = acc;
        }
    }
}

void apply_2q_parallel(std::span<cd> psi, int n, int w0, int w1, const Mat4 &m) {
    const int b0 = n - 1 - w0;
    const int b1 = n - 1 - w1;
    const int lo = b0 < b1 ? b0 : b1;
    const int hi = b0 < b1 ? b1 : b0;
    const std::int64_t m0 = std::int64_t{1} << b0;
    const std::int64_t m1 = std::int64_t{1} << b1;
    const std::int64_t quarter = static_cast<std::int64_t>(psi.size()) / 4;
    cd mm[16];
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            mm[4 * r + c] = m(r, c);
        }
    }
    cd *data = psi.data();
#pragma omp parallel for schedule(static) if (4 * quarter >= kParallelMinDim)
    for (std::int64_t k = 0; k < quarter; ++k) {
        std::int64_t base = insert_zero_bit(insert_zero_bit(k, lo), hi);
        const std::int64_t idx[4] = {base, base | m1, base | m0, base | m0 | m1};
        const cd in0 = data[idx[0]], in1 = data[idx[1]], in2 = data[idx[2]], in3 = data[idx[3]];
        for (int r = 0; r < 4; ++r) {
            data[idx[r]] = mm[4 * r] * in0 + mm[4 * r + 1] * in1 + mm[4 * r + 2] * in2 + mm[4 * r + 3] * in3;
        }
    }
}

inline void apply_pauli(Pauli p, const Vec2 &f, Vec2 &out) {
    switch (p) {
        case Pauli::I:
            out = f;
            break;
        case Pauli::X:
            out << f(1), f(0);
            break;
        case Pauli::Y:
            out << cd(0, -1) * f(1), cd(0, 1) * f(0);
            break;
        case Pauli::Z:
            out << f(0), -f(1);
            break;
    }
}

cd cross_sum_serial(std::span<const cd> coefs, std::span<const Vec2> factors, int n,
                    std::span<const Pauli> paulis) {
    const auto terms = static_cast<std::int64_t>(coefs.size());
    KahanSum total;
    Vec2 pf;
    for (std::int64_t i = 0; i < terms; ++i) {
        for (std::int64_t j = 0; j < terms; ++j) {
            cd prod = std::conj(coefs[i]) * coefs[j];
            for (int w = 0; w < n; ++w) {
                apply_pauli(paulis[w], factors[j * n + w], pf);
                prod *= factors[i * n + w].dot(pf);
            }
            total.add(prod);
        }
    }
    return total.sum;
}

cd cross_sum_parallel(std::span<const cd> coefs, std::span<const Vec2> factors, int n,
                      std::span<const Pauli> paulis) {
    const auto terms = static_cast<std::int64_t>(coefs.size());
    // P applied to every ket factor once, conj of every bra factor once.
    std::vector<cd> kets(static_cast<std::size_t>(terms * n * 2));
    std::vector<cd> bras(kets.size());
    Vec2 pf;
    for (std::int64_t j = 0; j < terms; ++j) {
        for (int w = 0; w < n; ++w) {
            const Vec2 &f = factors[j * n + w];
            apply_pauli(paulis[w], f, pf);
            kets[2 * (j * n + w)] = pf(0);
            kets[2 * (j * n + w) + 1] = pf(1);
            bras[2 * (j * n + w)] = std::conj(f(0));
            bras[2 * (j * n + w) + 1] = std::conj(f(1));
        }
    }
    std::vector<cd> rows(static_cast<std::size_t>(terms));
    const cd *kp = kets.data();
    const cd *bp = bras.data();
#pragma omp parallel for schedule(static) if (terms * terms >= kParallelMinPairs)
    for (std::int64_t i = 0; i < terms; ++i) {
        KahanSum row;
        const cd *bra = bp + 2 * i * n;
        for (std::int64_t j = 0; j < terms; ++j) {
            const cd *ket = kp + 2 * j * n;
            cd prod = coefs[j];
            for (int w = 0; w < n; ++w) {
                prod *= bra[2 * w] * ket[2 * w] + bra[2 * w + 1] * ket[2 * w + 1];
            }
            row.add(prod);
        }
        rows[i] = std::conj(coefs[i]) * row.sum;
    }
    KahanSum total;
    for (const cd &r : rows) {
        total.add(r);
    }
    return total.sum;
}

}  // namespace

void apply_1q(std::span<cd> psi, int n, int wire, const Mat2 &m, Exec exec) {
    if (exec == Exec::Serial) {
        apply_1q_serial(psi, n, wire, m);
    } else {
        apply_1q_parallel(psi, n, wire, m);
    }
}

void apply_2q(std::span<cd> psi, int n, int w0, int w1, const Mat4 &m, Exec exec) {
    if (exec == Exec::Serial) {
        apply_2q_serial(psi, n, w0, w1, m);
    } else {
        apply_2q_parallel(psi, n, w0, w1, m);
    }
}

cd product_cross_sum(std::span<const cd> coefs, std::span<const Vec2> factors, int n,
                     std::span<const Pauli> paulis, Exec exec) {
    if (factors.size() != coefs.size() * static_cast<std::size_t>(n) ||
        paulis.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("product_cross_sum: size mismatch");
    }
    if (exec == Exec::Serial) {
        return cross_sum_serial(coefs, factors, n, paulis);
    }
    return cross_sum_parallel(coefs, factors, n, paulis);
}

}  // namespace qcut::kernels
