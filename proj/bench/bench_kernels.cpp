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

// Serial reference vs OpenMP kernels. Prints best-of-N wall time per kernel and
// the largest deviation between the two results.

#include <chrono>
#include <cstdio>
#include <functional>

#include "qcut/decompose.hpp"
#include "qcut/gadget.hpp"
#include "qcut/generators.hpp"
#include "qcut/kernels.hpp"
#include "qcut/simulate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qcut;

namespace {

double best_ms(int reps, const std::function<void()> &f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void report(const char *name, double serial, double parallel, double dev) {
    std::printf("%-28s serial %9.3f ms  parallel %9.3f ms  speedup %5.2fx  max dev %.2e\n", name, serial, parallel,
                serial / parallel, dev);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP: the parallel kernels run on one thread\n");
#endif
    Rng rng(7);

    for (int n : {14, 18, 20}) {
        ComplexVector base = random_product_state(n, rng).dense();
        Mat2 u1 = haar_random_unitary(2, rng());
        Mat4 u2 = haar_random_unitary(4, rng());
        ComplexVector a = base, b = base;
        double s = best_ms(3, [&] {
            for (int w = 0; w < n; ++w) kernels::apply_1q(amplitudes(a), n, w, u1, Exec::Serial);
        });
        double p = best_ms(3, [&] {
            for (int w = 0; w < n; ++w) kernels::apply_1q(amplitudes(b), n, w, u1, Exec::Parallel);
        });
        char name[64];
        std::snprintf(name, sizeof name, "apply_1q sweep n=%d", n);
        report(name, s, p, (a - b).cwiseAbs().maxCoeff());

        a = base;
        b = base;
        s = best_ms(3, [&] {
            for (int w = 0; w + 1 < n; ++w) kernels::apply_2q(amplitudes(a), n, w, w + 1, u2, Exec::Serial);
        });
        p = best_ms(3, [&] {
            for (int w = 0; w + 1 < n; ++w) kernels::apply_2q(amplitudes(b), n, w, w + 1, u2, Exec::Parallel);
        });
        std::snprintf(name, sizeof name, "apply_2q sweep n=%d", n);
        report(name, s, p, (a - b).cwiseAbs().maxCoeff());
    }

    for (int terms : {256, 1024, 4096}) {
        const int n = 10;
        std::vector<cd> coefs(static_cast<std::size_t>(terms));
        std::vector<Vec2> factors;
        for (cd &c : coefs) c = haar_random_unitary(2, rng())(0, 0);
        for (int i = 0; i < terms * n; ++i) factors.push_back(haar_random_unitary(2, rng()).col(0));
        std::vector<Pauli> paulis(n, Pauli::Z);
        cd rs, rp;
        double s = best_ms(3, [&] { rs = kernels::product_cross_sum(coefs, factors, n, paulis, Exec::Serial); });
        double p = best_ms(3, [&] { rp = kernels::product_cross_sum(coefs, factors, n, paulis, Exec::Parallel); });
        char name[64];
        std::snprintf(name, sizeof name, "cross sum L=%d n=%d", terms, n);
        report(name, s, p, std::abs(rs - rp));
    }

    {
        Circuit c(3);
        for (int k = 0; k < 10; ++k) c.append(Gate::cz(k % 3, (k + 1) % 3));
        ExtractedComb ext = extract_comb(gadgetize(c));
        std::size_t ls = 0, lp = 0;
        double s = best_ms(3, [&] { ls = cut_comb(ext.comb, ext.gap_gates, CutMode::Schmidt, kDefaultMaxTerms, Exec::Serial).term_count(); });
        double p = best_ms(3, [&] { lp = cut_comb(ext.comb, ext.gap_gates, CutMode::Schmidt, kDefaultMaxTerms, Exec::Parallel).term_count(); });
        report("cut_comb 10 CZ gaps", s, p, static_cast<double>(ls > lp ? ls - lp : lp - ls));
    }
    return 0;
}
