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

#ifndef RANKLAB_FIELD_HPP
#define RANKLAB_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "ranklab/errors.hpp"
#include "ranklab/rng.hpp"

namespace ranklab {

/// An element of F_{q^m}: m residues mod q, coefficient of x^i at index i.
using ExtElement = std::vector<uint8_t>;

/*
 * Arithmetic context for F_q and its extension F_{q^m} = F_q[x]/(f(x)),
 * f monic irreducible of degree m. Immutable after construction; all
 * element operations are pure functions of their inputs, so a context can
 * be shared freely across threads.
 *
 * q must be a prime <= 251 (residues are stored one per byte) and
 * m <= 32. That covers the whole working range of this library; both
 * limits are checked at construction.
 */
class FieldContext {
   public:
    static constexpr uint32_t kMaxQ = 251;
    static constexpr uint32_t kMaxDegree = 32;

    /// Context with the deterministically chosen modulus: the monic
    /// irreducible of degree m whose coefficient vector (c_0,...,c_{m-1})
    /// is smallest as a base-q integer.
    FieldContext(uint32_t q, uint32_t m);

    /// Context with an explicit monic irreducible modulus (m+1 coefficients,
    /// constant first). Throws ReducibleModulus / DegreeMismatch / NonPrimeQ.
    FieldContext(uint32_t q, uint32_t m, std::vector<uint8_t> modulus);

    uint32_t q() const { return q_; }
    uint32_t m() const { return m_; }
    const std::vector<uint8_t>& modulus() const { return modulus_; }

    // ---- base field F_q ----
    uint8_t fq_add(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + b) % q_); }
    uint8_t fq_sub(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + q_ - b) % q_); }
    uint8_t fq_mul(uint8_t a, uint8_t b) const {
        return static_cast<uint8_t>((static_cast<uint32_t>(a) * b) % q_);
    }
    uint8_t fq_neg(uint8_t a) const { return a == 0 ? 0 : static_cast<uint8_t>(q_ - a); }
    uint8_t fq_inv(uint8_t a) const {
        if (a == 0) throw DivisionByZero("inverse of 0 in F_q");
        return fq_inv_[a];
    }

    // ---- extension field, span flavor (hot paths) ----
    // All spans must have length m; out may alias a or b for add/sub/neg.
    void add(std::span<const uint8_t> a, std::span<const uint8_t> b, std::span<uint8_t> out) const;
    void sub(std::span<const uint8_t> a, std::span<const uint8_t> b, std::span<uint8_t> out) const;
    void neg(std::span<const uint8_t> a, std::span<uint8_t> out) const;
    void mul(std::span<const uint8_t> a, std::span<const uint8_t> b, std::span<uint8_t> out) const;
    void inv(std::span<const uint8_t> a, std::span<uint8_t> out) const;
    /// out = a^{q^i}; any integer i (reduced mod m). out may alias a.
    void frobenius(std::span<const uint8_t> a, long long i, std::span<uint8_t> out) const;
    bool is_zero(std::span<const uint8_t> a) const;
    bool is_one(std::span<const uint8_t> a) const;

    /// Generic-route multiply (schoolbook + modulus reduction) regardless of
    /// the packed GF(2) fast path; exposed for equivalence tests.
    void mul_generic(std::span<const uint8_t> a, std::span<const uint8_t> b,
                     std::span<uint8_t> out) const;

    // ---- ExtElement flavor ----
    ExtElement zero() const { return ExtElement(m_, 0); }
    ExtElement one() const;
    ExtElement element(std::initializer_list<uint8_t> coeffs) const;
    ExtElement add(const ExtElement& a, const ExtElement& b) const;
    ExtElement sub(const ExtElement& a, const ExtElement& b) const;
    ExtElement mul(const ExtElement& a, const ExtElement& b) const;
    ExtElement inv(const ExtElement& a) const;
    ExtElement frobenius(const ExtElement& a, long long i) const;
    ExtElement random_element(Rng& rng) const;

    /// Validates coefficient count and residue range; used by parsers.
    void check_element(std::span<const uint8_t> a) const;

    bool operator==(const FieldContext& other) const {
        return q_ == other.q_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

   private:
    void init_tables();

    uint32_t q_ = 0;
    uint32_t m_ = 0;
    std::vector<uint8_t> modulus_;   // m+1 coefficients, monic
    std::vector<uint8_t> fq_inv_;    // q entries, fq_inv_[0] unused
    std::vector<uint8_t> xpow_red_;  // (m-1) x m: x^{m+d} mod f
    std::vector<uint8_t> frob_;      // m x (m x m) row-major Frobenius^i matrices
    bool packed_gf2_ = false;        // q == 2 carry-less multiply fast path
    uint64_t mod_bits_ = 0;          // packed modulus bits for the fast path
};

using FieldCtxPtr = std::shared_ptr<const FieldContext>;

/// Convenience factory mirroring the construction contract above.
FieldCtxPtr make_context(uint32_t q, uint32_t m,
                         const std::vector<uint8_t>* modulus = nullptr);

}  // namespace ranklab

#endif  // RANKLAB_FIELD_HPP
