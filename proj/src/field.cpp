/*
 * Copyright 2026 The ranklab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ranklab/field.hpp"

#include <algorithm>

namespace ranklab {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Dense polynomial helpers over F_q; coefficient i of x^i at index i.
// Degree is tracked implicitly via trailing zeros.

int poly_degree(const std::vector<uint8_t>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        if (p[i] != 0) return i;
    }
    return -1;
}

// r <- r mod d (d nonzero, monic not required), in place.
void poly_mod_inplace(std::vector<uint8_t>& r, const std::vector<uint8_t>& d, uint32_t q,
                      const std::vector<uint8_t>& fq_inv) {
    const int dd = poly_degree(d);
    const uint8_t lead_inv = fq_inv[d[dd]];
    for (int rd = poly_degree(r); rd >= dd; rd = poly_degree(r)) {
        const uint8_t c = static_cast<uint8_t>((static_cast<uint32_t>(r[rd]) * lead_inv) % q);
        const int shift = rd - dd;
        for (int i = 0; i <= dd; ++i) {
            const uint32_t sub = (static_cast<uint32_t>(c) * d[i]) % q;
            r[i + shift] = static_cast<uint8_t>((r[i + shift] + q - sub) % q);
        }
    }
}

bool poly_divides(const std::vector<uint8_t>& d, const std::vector<uint8_t>& p, uint32_t q,
                  const std::vector<uint8_t>& fq_inv) {
    std::vector<uint8_t> r = p;
    poly_mod_inplace(r, d, q, fq_inv);
    return poly_degree(r) < 0;
}

// Trial division against all monic polynomials of degree 1..m/2.
bool poly_irreducible(const std::vector<uint8_t>& f, uint32_t q, uint32_t m,
                      const std::vector<uint8_t>& fq_inv) {
    if (f[0] == 0) return m == 1;  // divisible by x
    for (uint32_t d = 1; 2 * d <= m; ++d) {
        std::vector<uint8_t> div(d + 1, 0);
        div[d] = 1;
        // enumerate the q^d lower coefficient vectors
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= q;
        for (uint64_t v = 0; v < count; ++v) {
            uint64_t t = v;
            for (uint32_t i = 0; i < d; ++i) {
                div[i] = static_cast<uint8_t>(t % q);
                t /= q;
            }
            if (poly_divides(div, f, q, fq_inv)) return false;
        }
    }
    return true;
}

}  // namespace

FieldContext::FieldContext(uint32_t q, uint32_t m) : q_(q), m_(m) {
    if (!is_prime(q)) throw NonPrimeQ("q = " + std::to_string(q));
    if (q > kMaxQ) throw NonPrimeQ("q = " + std::to_string(q) + " exceeds byte-residue limit");
    if (m < 1 || m > kMaxDegree) {
        throw DegreeMismatch("extension degree m = " + std::to_string(m) +
                             " outside [1, " + std::to_string(kMaxDegree) + "]");
    }
    fq_inv_.assign(q_, 0);
    for (uint32_t a = 1; a < q_; ++a) {
        for (uint32_t b = 1; b < q_; ++b) {
            if ((a * b) % q_ == 1) {
                fq_inv_[a] = static_cast<uint8_t>(b);
                break;
            }
        }
    }
    // smallest monic irreducible of degree m, coefficient vectors ordered
    // as base-q integers (c_0 least significant)
    modulus_.assign(m_ + 1, 0);
    modulus_[m_] = 1;
    uint64_t count = 1;
    for (uint32_t i = 0; i < m_; ++i) count *= q_;
    bool found = false;
    for (uint64_t v = 0; v < count && !found; ++v) {
        uint64_t t = v;
        for (uint32_t i = 0; i < m_; ++i) {
            modulus_[i] = static_cast<uint8_t>(t % q_);
            t /= q_;
        }
        found = poly_irreducible(modulus_, q_, m_, fq_inv_);
    }
    if (!found) throw ReducibleModulus("no irreducible modulus found");  // unreachable
    init_tables();
}

FieldContext::FieldContext(uint32_t q, uint32_t m, std::vector<uint8_t> modulus)
    : q_(q), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(q)) throw NonPrimeQ("q = " + std::to_string(q));
    if (q > kMaxQ) throw NonPrimeQ("q = " + std::to_string(q) + " exceeds byte-residue limit");
    if (m < 1 || m > kMaxDegree) {
        throw DegreeMismatch("extension degree m = " + std::to_string(m) +
                             " outside [1, " + std::to_string(kMaxDegree) + "]");
    }
    if (modulus_.size() != m_ + 1 || modulus_[m_] != 1) {
        throw DegreeMismatch("modulus must be monic of degree m");
    }
    for (uint8_t c : modulus_) {
        if (c >= q_) throw DegreeMismatch("modulus coefficient out of range");
    }
    fq_inv_.assign(q_, 0);
    for (uint32_t a = 1; a < q_; ++a) {
        for (uint32_t b = 1; b < q_; ++b) {
            if ((a * b) % q_ == 1) {
                fq_inv_[a] = static_cast<uint8_t>(b);
                break;
            }
        }
    }
    if (!poly_irreducible(modulus_, q_, m_, fq_inv_)) {
        throw ReducibleModulus("modulus factors over F_q");
    }
    init_tables();
}

void FieldContext::init_tables() {
    // x^{m+d} mod f for d = 0..m-2
    if (m_ > 1) {
        xpow_red_.assign((m_ - 1) * m_, 0);
        std::vector<uint8_t> cur(modulus_.begin(), modulus_.begin() + m_);
        for (auto& c : cur) c = fq_neg(c);  // x^m = -(f - x^m)
        for (uint32_t d = 0;; ++d) {
            std::copy(cur.begin(), cur.end(), xpow_red_.begin() + d * m_);
            if (d + 1 >= m_ - 1) break;
            // multiply by x and reduce
            uint8_t top = cur[m_ - 1];
            for (uint32_t i = m_ - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top != 0) {
                for (uint32_t i = 0; i < m_; ++i) {
                    cur[i] = fq_sub(cur[i], fq_mul(top, modulus_[i]));
                }
            }
        }
    }

    packed_gf2_ = (q_ == 2);
    if (packed_gf2_) {
        mod_bits_ = 0;
        for (uint32_t i = 0; i <= m_; ++i) {
            if (modulus_[i]) mod_bits_ |= (1ULL << i);
        }
    }

    // Frobenius matrices: frob_[i] maps coefficient vectors to their q^i-th
    // power. Built from the one-step images of the basis monomials.
    frob_.assign(static_cast<size_t>(m_) * m_ * m_, 0);
    // i = 0: identity
    for (uint32_t t = 0; t < m_; ++t) frob_[t * m_ + t] = 1;
    if (m_ > 1) {
        // one-step images: (x^s)^q
        std::vector<uint8_t> step(m_ * m_, 0);  // column s at step[. ][s]
        std::vector<uint8_t> xs(m_, 0), acc(m_, 0);
        for (uint32_t s = 0; s < m_; ++s) {
            std::fill(xs.begin(), xs.end(), 0);
            xs[s] = 1;
            // xs^q by square-and-multiply on the exponent q
            std::vector<uint8_t> result(m_, 0), base = xs;
            result[0] = 1;
            uint32_t e = q_;
            while (e > 0) {
                if (e & 1) {
                    mul_generic(result, base, acc);
                    result.assign(acc.begin(), acc.end());
                }
                e >>= 1;
                if (e) {
                    mul_generic(base, base, acc);
                    base.assign(acc.begin(), acc.end());
                }
            }
            for (uint32_t t = 0; t < m_; ++t) step[t * m_ + s] = result[t];
        }
        // frob_[1] = step, frob_[i] = step * frob_[i-1]
        std::copy(step.begin(), step.end(), frob_.begin() + m_ * m_);
        for (uint32_t i = 2; i < m_; ++i) {
            uint8_t* dst = frob_.data() + static_cast<size_t>(i) * m_ * m_;
            const uint8_t* prev = frob_.data() + static_cast<size_t>(i - 1) * m_ * m_;
            for (uint32_t r = 0; r < m_; ++r) {
                for (uint32_t c = 0; c < m_; ++c) {
                    uint32_t sum = 0;
                    for (uint32_t t = 0; t < m_; ++t) {
                        sum += static_cast<uint32_t>(step[r * m_ + t]) * prev[t * m_ + c];
                    }
                    dst[r * m_ + c] = static_cast<uint8_t>(sum % q_);
                }
            }
        }
    }
}

void FieldContext::add(std::span<const uint8_t> a, std::span<const uint8_t> b,
                       std::span<uint8_t> out) const {
    for (uint32_t i = 0; i < m_; ++i) out[i] = fq_add(a[i], b[i]);
}

void FieldContext::sub(std::span<const uint8_t> a, std::span<const uint8_t> b,
                       std::span<uint8_t> out) const {
    for (uint32_t i = 0; i < m_; ++i) out[i] = fq_sub(a[i], b[i]);
}

void FieldContext::neg(std::span<const uint8_t> a, std::span<uint8_t> out) const {
    for (uint32_t i = 0; i < m_; ++i) out[i] = fq_neg(a[i]);
}

void FieldContext::mul_generic(std::span<const uint8_t> a, std::span<const uint8_t> b,
                               std::span<uint8_t> out) const {
    uint32_t prod[2 * kMaxDegree] = {0};
    for (uint32_t i = 0; i < m_; ++i) {
        if (a[i] == 0) continue;
        const uint32_t ai = a[i];
        for (uint32_t j = 0; j < m_; ++j) {
            prod[i + j] += ai * b[j];
        }
    }
    for (uint32_t d = 0; d < 2 * m_ - 1; ++d) prod[d] %= q_;
    // fold x^{m+d} tails through the reduction table
    uint32_t acc[kMaxDegree];
    for (uint32_t t = 0; t < m_; ++t) acc[t] = prod[t];
    for (uint32_t d = 0; d + 1 < m_; ++d) {
        const uint32_t c = prod[m_ + d];
        if (c == 0) continue;
        const uint8_t* red = xpow_red_.data() + d * m_;
        for (uint32_t t = 0; t < m_; ++t) acc[t] += c * red[t];
    }
    for (uint32_t t = 0; t < m_; ++t) out[t] = static_cast<uint8_t>(acc[t] % q_);
}

void FieldContext::mul(std::span<const uint8_t> a, std::span<const uint8_t> b,
                       std::span<uint8_t> out) const {
    if (packed_gf2_) {
        uint64_t pa = 0, pb = 0;
        for (uint32_t i = 0; i < m_; ++i) {
            pa |= static_cast<uint64_t>(a[i] & 1) << i;
            pb |= static_cast<uint64_t>(b[i] & 1) << i;
        }
        uint64_t acc = 0;
        while (pa) {
            const int bit = __builtin_ctzll(pa);
            acc ^= pb << bit;
            pa &= pa - 1;
        }
        for (int d = static_cast<int>(2 * m_ - 2); d >= static_cast<int>(m_); --d) {
            if (acc >> d & 1) acc ^= mod_bits_ << (d - m_);
        }
        for (uint32_t i = 0; i < m_; ++i) out[i] = static_cast<uint8_t>(acc >> i & 1);
        return;
    }
    mul_generic(a, b, out);
}

void FieldContext::inv(std::span<const uint8_t> a, std::span<uint8_t> out) const {
    if (is_zero(a)) throw DivisionByZero("inverse of 0 in F_{q^m}");
    // extended Euclid on (f, a) over F_q[x]; t-coefficients track s with
    // s * a = r (mod f)
    std::vector<uint8_t> r0(modulus_), r1(a.begin(), a.end());
    r1.resize(m_ + 1, 0);
    std::vector<uint8_t> s0(m_ + 1, 0), s1(m_ + 1, 0);
    s1[0] = 1;
    while (true) {
        const int d1 = poly_degree(r1);
        if (d1 <= 0) break;
        const uint8_t lead_inv = fq_inv_[r1[d1]];
        for (int d0 = poly_degree(r0); d0 >= d1; d0 = poly_degree(r0)) {
            const uint8_t c = fq_mul(r0[d0], lead_inv);
            const int shift = d0 - d1;
            for (int i = 0; i <= d1; ++i) {
                r0[i + shift] = fq_sub(r0[i + shift], fq_mul(c, r1[i]));
            }
            for (int i = 0; i + shift <= static_cast<int>(m_); ++i) {
                s0[i + shift] = fq_sub(s0[i + shift], fq_mul(c, s1[i]));
            }
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    // r1 is a nonzero constant (f irreducible, a != 0)
    const uint8_t scale = fq_inv_[r1[0]];
    std::vector<uint8_t> res(s1.begin(), s1.begin() + m_ + 1);
    poly_mod_inplace(res, modulus_, q_, fq_inv_);
    for (uint32_t i = 0; i < m_; ++i) out[i] = fq_mul(res[i], scale);
}

void FieldContext::frobenius(std::span<const uint8_t> a, long long i,
                             std::span<uint8_t> out) const {
    const uint32_t r = static_cast<uint32_t>(((i % m_) + m_) % m_);
    if (r == 0) {
        if (out.data() != a.data()) std::copy(a.begin(), a.begin() + m_, out.begin());
        return;
    }
    const uint8_t* mat = frob_.data() + static_cast<size_t>(r) * m_ * m_;
    uint8_t tmp[kMaxDegree];
    for (uint32_t t = 0; t < m_; ++t) {
        uint32_t sum = 0;
        for (uint32_t s = 0; s < m_; ++s) {
            sum += static_cast<uint32_t>(mat[t * m_ + s]) * a[s];
        }
        tmp[t] = static_cast<uint8_t>(sum % q_);
    }
    std::copy(tmp, tmp + m_, out.begin());
}

bool FieldContext::is_zero(std::span<const uint8_t> a) const {
    for (uint32_t i = 0; i < m_; ++i) {
        if (a[i] != 0) return false;
    }
    return true;
}

bool FieldContext::is_one(std::span<const uint8_t> a) const {
    if (a[0] != 1) return false;
    for (uint32_t i = 1; i < m_; ++i) {
        if (a[i] != 0) return false;
    }
    return true;
}

ExtElement FieldContext::one() const {
    ExtElement e(m_, 0);
    e[0] = 1;
    return e;
}

ExtElement FieldContext::element(std::initializer_list<uint8_t> coeffs) const {
    if (coeffs.size() > m_) throw DegreeMismatch("too many coefficients");
    ExtElement e(coeffs);
    e.resize(m_, 0);
    check_element(e);
    return e;
}

ExtElement FieldContext::add(const ExtElement& a, const ExtElement& b) const {
    ExtElement out(m_);
    add(std::span<const uint8_t>(a), std::span<const uint8_t>(b), std::span<uint8_t>(out));
    return out;
}

ExtElement FieldContext::sub(const ExtElement& a, const ExtElement& b) const {
    ExtElement out(m_);
    sub(std::span<const uint8_t>(a), std::span<const uint8_t>(b), std::span<uint8_t>(out));
    return out;
}

ExtElement FieldContext::mul(const ExtElement& a, const ExtElement& b) const {
    ExtElement out(m_);
    mul(std::span<const uint8_t>(a), std::span<const uint8_t>(b), std::span<uint8_t>(out));
    return out;
}

ExtElement FieldContext::inv(const ExtElement& a) const {
    ExtElement out(m_);
    inv(std::span<const uint8_t>(a), std::span<uint8_t>(out));
    return out;
}

ExtElement FieldContext::frobenius(const ExtElement& a, long long i) const {
    ExtElement out(m_);
    frobenius(std::span<const uint8_t>(a), i, std::span<uint8_t>(out));
    return out;
}

ExtElement FieldContext::random_element(Rng& rng) const {
    ExtElement e(m_);
    for (uint32_t i = 0; i < m_; ++i) e[i] = static_cast<uint8_t>(rng.below(q_));
    return e;
}

void FieldContext::check_element(std::span<const uint8_t> a) const {
    if (a.size() != m_) throw DegreeMismatch("element must have m coefficients");
    for (uint8_t c : a) {
        if (c >= q_) throw DegreeMismatch("coefficient out of range [0, q)");
    }
}

FieldCtxPtr make_context(uint32_t q, uint32_t m, const std::vector<uint8_t>* modulus) {
    if (modulus) return std::make_shared<FieldContext>(q, m, *modulus);
    return std::make_shared<FieldContext>(q, m);
}

}  // namespace ranklab
