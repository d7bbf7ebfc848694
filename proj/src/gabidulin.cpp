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

#include "ranklab/gabidulin.hpp"

#include <algorithm>

namespace ranklab {

ExtMatrix q_vandermonde(const ExtMatrix& seed, size_t rows) {
    const auto& f = seed.field();
    ExtMatrix out(seed.field_ptr(), rows, seed.cols());
    for (size_t c = 0; c < seed.cols(); ++c) {
        std::copy_n(seed.at(0, c).begin(), f.m(), out.at(0, c).begin());
    }
    for (size_t r = 1; r < rows; ++r) {
        for (size_t c = 0; c < seed.cols(); ++c) {
            f.frobenius(out.at(r - 1, c), 1, out.at(r, c));
        }
    }
    return out;
}

GabidulinCode::GabidulinCode(ExtMatrix g, size_t k) : g_(std::move(g)), k_(k) {
    if (g_.rows() != 1) throw LengthMismatch("seed must be a 1 x n vector");
    const size_t n = g_.cols();
    if (k_ < 1 || k_ >= n) throw LengthMismatch("need 1 <= k < n");
    if (rank_weight(g_) != n) {
        throw InvalidRank("seed must have rank weight n (requires n <= m)");
    }
}

ExtMatrix generator_matrix(const GabidulinCode& code) { return q_vandermonde(code.g(), code.k()); }

ExtMatrix encode(const ExtMatrix& msg, const GabidulinCode& code) {
    if (msg.rows() != 1 || msg.cols() != code.k()) {
        throw LengthMismatch("message must be 1 x k");
    }
    return mul(msg, generator_matrix(code));
}

namespace {

// Normalize a 1 x n vector so its first nonzero entry is 1.
void normalize_first_nonzero(ExtMatrix& v) {
    const auto& f = v.field();
    std::vector<uint8_t> s(f.m());
    for (size_t c = 0; c < v.cols(); ++c) {
        if (!v.entry_is_zero(0, c)) {
            f.inv(v.at(0, c), s);
            for (size_t j = c; j < v.cols(); ++j) {
                auto e = v.at(0, j);
                f.mul(e, s, e);
            }
            return;
        }
    }
}

}  // namespace

Decoded decode(const ExtMatrix& y, const GabidulinCode& code) {
    const auto& f = y.field();
    const size_t n = code.n(), k = code.k(), m = f.m();
    if (y.rows() != 1 || y.cols() != n) throw LengthMismatch("received word must be 1 x n");
    const size_t tau = code.decoding_radius();
    const size_t wlen = tau + 1, nlen = k + tau;

    // Interpolation system: for every position i,
    //   sum_u w_u y_i^{[u]}  -  sum_v n_v g_i^{[v]}  =  0.
    ExtMatrix sys(y.field_ptr(), n, wlen + nlen);
    {
        ExtMatrix ypow = q_vandermonde(y, wlen);
        ExtMatrix gpow = q_vandermonde(code.g(), nlen);
        std::vector<uint8_t> tmp(m);
        for (size_t i = 0; i < n; ++i) {
            for (size_t u = 0; u < wlen; ++u) sys.set(i, u, ypow.at(u, i));
            for (size_t v = 0; v < nlen; ++v) {
                f.neg(gpow.at(v, i), tmp);
                sys.set(i, wlen + v, tmp);
            }
        }
    }
    const ExtMatrix kernel = dual_space(sys);

    std::vector<uint8_t> acc(m), tmp(m), w_lead_inv(m);
    for (size_t kv = 0; kv < kernel.rows(); ++kv) {
        // split into W and N coefficient vectors
        long w_deg = -1;
        for (long u = static_cast<long>(wlen) - 1; u >= 0; --u) {
            if (!kernel.entry_is_zero(kv, u)) {
                w_deg = u;
                break;
            }
        }
        if (w_deg < 0) continue;  // W = 0 solves nothing
        long nu = -1;
        for (long v = static_cast<long>(nlen) - 1; v >= 0; --v) {
            if (!kernel.entry_is_zero(kv, wlen + v)) {
                nu = v;
                break;
            }
        }

        ExtMatrix msg(y.field_ptr(), 1, k);
        if (nu < 0) {
            // N = 0: y must itself be an error around the zero codeword
        } else {
            const long delta = nu - w_deg;
            if (delta < 0 || delta >= static_cast<long>(k)) continue;
            // symbolic left division N = W o msg, peeling top coefficients
            ExtMatrix rem(y.field_ptr(), 1, nlen);
            for (size_t v = 0; v < nlen; ++v) rem.set(0, v, kernel.at(kv, wlen + v));
            f.inv(kernel.at(kv, static_cast<size_t>(w_deg)), w_lead_inv);
            bool ok = true;
            for (long d = delta; d >= 0; --d) {
                f.mul(rem.at(0, static_cast<size_t>(w_deg + d)), w_lead_inv, acc);
                f.frobenius(acc, -w_deg, acc);
                msg.set(0, static_cast<size_t>(d), acc);
                if (f.is_zero(acc)) continue;
                for (long u = 0; u <= w_deg; ++u) {
                    f.frobenius(acc, u, tmp);  // msg_d^{[u]}
                    f.mul(kernel.at(kv, static_cast<size_t>(u)), tmp, tmp);
                    auto r = rem.at(0, static_cast<size_t>(u + d));
                    f.sub(r, tmp, r);
                }
            }
            if (!rem.is_zero()) ok = false;
            if (!ok) continue;
        }

        ExtMatrix err = sub(y, encode(msg, code));
        const size_t erank = rank_weight(err);
        if (erank <= tau) {
            return Decoded{std::move(msg), RankError{std::move(err), erank}};
        }
    }
    throw DecodingFailure("no interpolation solution within the rank radius");
}

ExtMatrix dual_vector(const ExtMatrix& g) {
    const size_t n = g.cols();
    if (g.rows() != 1 || n < 2) throw DegenerateSystem("need a 1 x n seed with n >= 2");
    if (rank_weight(g) != n) throw DegenerateSystem("seed must have rank weight n");
    ExtMatrix d = dual_space(q_vandermonde(g, n - 1));
    if (d.rows() != 1) {
        throw DegenerateSystem("dual of Gab_{n-1}(g) has dimension " + std::to_string(d.rows()));
    }
    normalize_first_nonzero(d);
    if (rank_weight(d) != n) throw DegenerateSystem("dual vector is rank deficient");
    return d;
}

ExtMatrix twisted_kernel_vector(const ExtMatrix& v) {
    const auto& f = v.field();
    const size_t n = v.cols();
    if (v.rows() != 1 || n < 2) throw DegenerateSystem("need a 1 x n vector with n >= 2");
    ExtMatrix sys(v.field_ptr(), n - 1, n);
    for (size_t i = 0; i < n; ++i) {
        std::copy_n(v.at(0, i).begin(), f.m(), sys.at(0, i).begin());
    }
    for (size_t j = 1; j + 1 < n; ++j) {
        for (size_t i = 0; i < n; ++i) {
            f.frobenius(sys.at(j - 1, i), -1, sys.at(j, i));
        }
    }
    ExtMatrix kernel = dual_space(sys);
    if (kernel.rows() != 1) {
        throw DegenerateSystem("twisted kernel has dimension " + std::to_string(kernel.rows()));
    }
    normalize_first_nonzero(kernel);
    return kernel;
}

RankError random_rank_error(const FieldCtxPtr& ctx, size_t n, size_t t, Rng& rng) {
    if (t > std::min<size_t>(n, ctx->m())) {
        throw InvalidRank("target rank exceeds min(n, m)");
    }
    if (t == 0) return RankError{ExtMatrix(ctx, 1, n), 0};
    ExtMatrix u(ctx, 1, t);
    do {
        u = ExtMatrix::random(ctx, 1, t, rng);
    } while (rank_weight(u) != t);
    BaseMatrix v(ctx->q(), t, n);
    do {
        v = BaseMatrix::random(ctx->q(), t, n, rng);
    } while (v.rank() != t);
    return RankError{mul_ext_base(u, v), t};
}

ExtMatrix random_full_rank_vector(const FieldCtxPtr& ctx, size_t n, Rng& rng) {
    if (n > ctx->m()) throw InvalidRank("rank-n vectors need n <= m");
    for (;;) {
        ExtMatrix g = ExtMatrix::random(ctx, 1, n, rng);
        if (rank_weight(g) == n) return g;
    }
}

}  // namespace ranklab
