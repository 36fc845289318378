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

#include "qcut/observable.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qcut/kernels.hpp"

namespace qcut {

namespace {

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
        }
    }
    return out;
}

// U+2212 MINUS SIGN -> '-'
std::string normalize_minus(std::string_view s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
            static_cast<unsigned char>(s[i + 1]) == 0x88 && static_cast<unsigned char>(s[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
        } else {
            out.push_back(s[i]);
        }
    }
    return out;
}

Vec2 state_for_label(std::string_view label) {
    const double r = 1.0 / std::numbers::sqrt2;
    if (label == "0") return Vec2(1, 0);
    if (label == "1") return Vec2(0, 1);
    if (label == "+") return Vec2(r, r);
    if (label == "-") return Vec2(r, -r);
    if (label == "i") return Vec2(r, cd(0, r));
    if (label == "-i") return Vec2(r, cd(0, -r));
    throw std::invalid_argument("unknown state label '" + std::string(label) + "'");
}

}  // namespace

ProductState::ProductState(std::vector<Vec2> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw std::invalid_argument("product state needs at least one wire");
    }
    for (std::size_t w = 0; w < factors_.size(); ++w) {
        if (!factors_[w].allFinite() || std::abs(factors_[w].norm() - 1.0) > 1e-12) {
            throw std::invalid_argument("product state factor " + std::to_string(w) + " is not normalized");
        }
    }
}

ProductState ProductState::zeros(int n) { return ProductState(std::vector<Vec2>(n, Vec2(1, 0))); }

ComplexVector ProductState::dense() const {
    ComplexMatrix out = factors_[0];
    for (std::size_t w = 1; w < factors_.size(); ++w) {
        out = kron(out, factors_[w]);
    }
    return out;
}

ProductState ProductState::extended(int extra) const {
    std::vector<Vec2> f = factors_;
    f.insert(f.end(), extra, Vec2(1, 0));
    return ProductState(std::move(f));
}

ProductState parse_product_state(std::string_view text_in) {
    std::string text = strip_spaces(normalize_minus(text_in));
    if (text.empty()) {
        throw std::invalid_argument("empty input state");
    }
    std::vector<Vec2> factors;
    if (text.find(',') == std::string::npos) {
        for (char c : text) {
            factors.push_back(state_for_label(std::string_view(&c, 1)));
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(',', start);
            if (end == std::string::npos) {
                end = text.size();
            }
            factors.push_back(state_for_label(std::string_view(text).substr(start, end - start)));
            start = end + 1;
        }
    }
    return ProductState(std::move(factors));
}

std::string PauliString::label() const {
    std::string out;
    for (Pauli p : paulis) {
        out.push_back(pauli_char(p));
    }
    return out;
}

PauliObservable::PauliObservable(int n, std::vector<PauliString> terms) : n_(n), terms_(std::move(terms)) {
    if (n < 1) {
        throw std::invalid_argument("observable needs at least one wire");
    }
    for (const PauliString &t : terms_) {
        if (static_cast<int>(t.paulis.size()) != n) {
            throw std::invalid_argument("Pauli string " + t.label() + " does not have " + std::to_string(n) +
                                        " labels");
        }
        if (!std::isfinite(t.weight)) {
            throw std::invalid_argument("non-finite observable weight");
        }
    }
}

PauliObservable PauliObservable::single(std::string_view label, double weight) {
    PauliString s{weight, {}};
    for (char c : label) {
        s.paulis.push_back(pauli_from_char(c));
    }
    return PauliObservable(static_cast<int>(s.paulis.size()), {s});
}

PauliObservable PauliObservable::extended(int extra) const {
    std::vector<PauliString> terms = terms_;
    for (PauliString &t : terms) {
        t.paulis.insert(t.paulis.end(), extra, Pauli::I);
    }
    return PauliObservable(n_ + extra, std::move(terms));
}

ComplexMatrix PauliObservable::dense() const {
    const Eigen::Index dim = Eigen::Index{1} << n_;
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (const PauliString &t : terms_) {
        ComplexMatrix m = pauli_matrix(t.paulis[0]);
        for (int w = 1; w < n_; ++w) {
            m = kron(m, pauli_matrix(t.paulis[w]));
        }
        out += t.weight * m;
    }
    return out;
}

std::string PauliObservable::str() const {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0) {
            out << " + ";
        }
        out << terms_[i].weight << "*" << terms_[i].label();
    }
    return out.str();
}

PauliObservable parse_observable(std::string_view text_in) {
    std::string text = strip_spaces(normalize_minus(text_in));
    if (text.empty()) {
        throw std::invalid_argument("empty observable");
    }
    // Split at '+'/'-' that start a new term (not an exponent sign).
    std::vector<std::string> chunks;
    std::size_t start = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        char c = text[i];
        if ((c == '+' || c == '-') && text[i - 1] != 'e' && text[i - 1] != 'E' && text[i - 1] != '*') {
            chunks.push_back(text.substr(start, i - start));
            start = i;
        }
    }
    chunks.push_back(text.substr(start));

    std::vector<PauliString> terms;
    int n = -1;
    for (const std::string &chunk : chunks) {
        std::string body = chunk;
        double sign = 1.0;
        if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
            sign = body[0] == '-' ? -1.0 : 1.0;
            body.erase(0, 1);
        }
        double weight = 1.0;
        std::string labels = body;
        if (auto star = body.find('*'); star != std::string::npos) {
            const std::string num = body.substr(0, star);
            labels = body.substr(star + 1);
            auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), weight);
            if (ec != std::errc() || ptr != num.data() + num.size()) {
                throw std::invalid_argument("bad observable weight '" + num + "'");
            }
        }
        if (labels.empty()) {
            throw std::invalid_argument("observable term '" + chunk + "' has no Pauli labels");
        }
        PauliString s{sign * weight, {}};
        for (char c : labels) {
            s.paulis.push_back(pauli_from_char(c));
        }
        if (n >= 0 && static_cast<int>(s.paulis.size()) != n) {
            throw std::invalid_argument("observable terms have different lengths");
        }
        n = static_cast<int>(s.paulis.size());
        terms.push_back(std::move(s));
    }
    return PauliObservable(n, std::move(terms));
}

namespace {

struct StringMasks {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    cd phase{1, 0};  // i^(number of Y)
};

StringMasks masks_for(int n, const std::vector<Pauli> &paulis) {
    StringMasks m;
    for (int w = 0; w < n; ++w) {
        std::uint64_t bit = std::uint64_t{1} << (n - 1 - w);
        switch (paulis[w]) {
            case Pauli::I:
                break;
            case Pauli::X:
                m.x |= bit;
                break;
            case Pauli::Y:
                m.x |= bit;
                m.z |= bit;
                m.phase *= cd(0, 1);
                break;
            case Pauli::Z:
                m.z |= bit;
                break;
        }
    }
    return m;
}

}  // namespace

void apply_pauli_string(std::span<cd> psi, int n, const std::vector<Pauli> &paulis) {
    StringMasks m = masks_for(n, paulis);
    std::vector<cd> out(psi.size());
    for (std::uint64_t i = 0; i < psi.size(); ++i) {
        double sign = (std::popcount(i & m.z) & 1) ? -1.0 : 1.0;
        out[i ^ m.x] = m.phase * sign * psi[i];
    }
    std::copy(out.begin(), out.end(), psi.begin());
}

cd expectation(const ComplexVector &psi, const PauliObservable &m) {
    const int n = m.n();
    if (psi.size() != (Eigen::Index{1} << n)) {
        throw std::invalid_argument("expectation: state dimension does not match observable width");
    }
    KahanSum total;
    for (const PauliString &t : m.terms()) {
        StringMasks mk = masks_for(n, t.paulis);
        KahanSum term;
        for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(psi.size()); ++i) {
            double sign = (std::popcount(i & mk.z) & 1) ? -1.0 : 1.0;
            term.add(std::conj(psi[static_cast<Eigen::Index>(i ^ mk.x)]) * sign * psi[static_cast<Eigen::Index>(i)]);
        }
        total.add(t.weight * mk.phase * term.sum);
    }
    return total.sum;
}

}  // namespace qcut
