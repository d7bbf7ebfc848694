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

#include "ranklab/ranklin.hpp"

#include <algorithm>
#include <cstring>

#include "ranklab/kernels.hpp"

namespace ranklab {

namespace {

// RREF over F_q on a raw row-major buffer. Pivots are searched in the
// first pivot_cols columns only; row operations span the full width
// (augmented columns ride along). Returns the rank.
size_t rref_base_raw(uint8_t* data, size_t rows, size_t width, size_t pivot_cols, uint32_t q) {
    size_t pivot_row = 0;
    for (size_t col = 0; col < pivot_cols && pivot_row < rows; ++col) {
        size_t r = pivot_row;
        while (r < rows && data[r * width + col] == 0) ++r;
        if (r == rows) continue;
        if (r != pivot_row) {
            for (size_t j = 0; j < width; ++j) {
                std::swap(data[r * width + j], data[pivot_row * width + j]);
            }
        }
        uint8_t* prow = data + pivot_row * width;
        const uint8_t pv = prow[col];
        if (pv != 1) {
            uint8_t pv_inv = 1;
            for (uint32_t b = 1; b < q; ++b) {
                if ((static_cast<uint32_t>(pv) * b) % q == 1) {
                    pv_inv = static_cast<uint8_t>(b);
                    break;
                }
            }
            kern::row_scale(prow, width, pv_inv, static_cast<uint8_t>(q));
        }
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == pivot_row) continue;
            const uint8_t c = data[rr * width + col];
            if (c == 0) continue;
            // y -= c * pivot  ==  y += (q - c) * pivot
            kern::row_addmul(data + rr * width, prow, width, static_cast<uint8_t>(q - c),
                             static_cast<uint8_t>(q));
        }
        ++pivot_row;
    }
    return pivot_row;
}

}  // namespace

// ---------------------------------------------------------------- BaseMatrix

BaseMatrix BaseMatrix::identity(uint32_t q, size_t n) {
    BaseMatrix m(q, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

BaseMatrix BaseMatrix::random(uint32_t q, size_t rows, size_t cols, Rng& rng) {
    BaseMatrix m(q, rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = static_cast<uint8_t>(rng.below(q));
    }
    return m;
}

BaseMatrix BaseMatrix::random_invertible(uint32_t q, size_t n, Rng& rng) {
    for (;;) {
        BaseMatrix m = random(q, n, n, rng);
        if (m.rank() == n) return m;
    }
}

BaseMatrix BaseMatrix::transposed() const {
    BaseMatrix out(q_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    }
    return out;
}

BaseMatrix operator*(const BaseMatrix& a, const BaseMatrix& b) {
    BaseMatrix out(a.q_, a.rows_, b.cols_);
    for (size_t r = 0; r < a.rows_; ++r) {
        uint8_t* orow = out.row(r);
        for (size_t t = 0; t < a.cols_; ++t) {
            const uint8_t c = a.at(r, t);
            if (c == 0) continue;
            kern::row_addmul(orow, b.row(t), b.cols_, c, static_cast<uint8_t>(a.q_));
        }
    }
    return out;
}

BaseMatrix BaseMatrix::inverse() const {
    const size_t n = rows_;
    std::vector<uint8_t> aug(n * 2 * n, 0);
    for (size_t r = 0; r < n; ++r) {
        std::memcpy(aug.data() + r * 2 * n, row(r), n);
        aug[r * 2 * n + n + r] = 1;
    }
    const size_t rank = rref_base_raw(aug.data(), n, 2 * n, n, q_);
    if (rank != n) throw DegenerateSystem("base matrix is singular");
    BaseMatrix out(q_, n, n);
    for (size_t r = 0; r < n; ++r) {
        std::memcpy(out.row(r), aug.data() + r * 2 * n + n, n);
    }
    return out;
}

size_t BaseMatrix::rank() const {
    BaseMatrix copy = *this;
    return rref_base_in_place(copy);
}

bool BaseMatrix::is_zero() const { return kern::row_is_zero(a_.data(), a_.size()); }

bool BaseMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            if (at(r, c) != (r == c ? 1 : 0)) return false;
        }
    }
    return true;
}

size_t rref_base_in_place(BaseMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return rref_base_raw(m.row(0), m.rows(), m.cols(), m.cols(), m.q());
}

// ----------------------------------------------------------------- ExtMatrix

ExtMatrix::ExtMatrix(FieldCtxPtr ctx, size_t rows, size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(rows * cols * ctx_->m(), 0) {}

ExtMatrix ExtMatrix::identity(FieldCtxPtr ctx, size_t n) {
    ExtMatrix m(std::move(ctx), n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i)[0] = 1;
    return m;
}

ExtMatrix ExtMatrix::random(FieldCtxPtr ctx, size_t rows, size_t cols, Rng& rng) {
    ExtMatrix m(ctx, rows, cols);
    const uint32_t q = ctx->q();
    for (auto& b : m.a_) b = static_cast<uint8_t>(rng.below(q));
    return m;
}

void ExtMatrix::set(size_t r, size_t c, std::span<const uint8_t> v) {
    ctx_->check_element(v);
    std::copy(v.begin(), v.end(), at(r, c).begin());
}

bool ExtMatrix::is_zero() const { return kern::row_is_zero(a_.data(), a_.size()); }

void ExtMatrix::swap_rows(size_t r1, size_t r2) {
    if (r1 == r2) return;
    std::swap_ranges(row_data(r1), row_data(r1) + row_bytes(), row_data(r2));
}

// ---------------------------------------------------- construction / slicing

ExtMatrix hstack(const ExtMatrix& a, const ExtMatrix& b) {
    ExtMatrix out(a.field_ptr(), a.rows(), a.cols() + b.cols());
    for (size_t r = 0; r < a.rows(); ++r) {
        std::memcpy(out.row_data(r), a.row_data(r), a.row_bytes());
        std::memcpy(out.row_data(r) + a.row_bytes(), b.row_data(r), b.row_bytes());
    }
    return out;
}

ExtMatrix row_vector(const ExtMatrix& m, size_t r) {
    ExtMatrix out(m.field_ptr(), 1, m.cols());
    std::memcpy(out.row_data(0), m.row_data(r), m.row_bytes());
    return out;
}

ExtMatrix columns_range(const ExtMatrix& m, size_t c0, size_t c1) {
    const size_t mm = m.field().m();
    ExtMatrix out(m.field_ptr(), m.rows(), c1 - c0);
    for (size_t r = 0; r < m.rows(); ++r) {
        std::memcpy(out.row_data(r), m.row_data(r) + c0 * mm, (c1 - c0) * mm);
    }
    return out;
}

ExtMatrix transposed(const ExtMatrix& m) {
    ExtMatrix out(m.field_ptr(), m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            auto src = m.at(r, c);
            std::copy(src.begin(), src.end(), out.at(c, r).begin());
        }
    }
    return out;
}

ExtMatrix frobenius_map(const ExtMatrix& m, long long i) {
    const auto& f = m.field();
    ExtMatrix out(m.field_ptr(), m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            f.frobenius(m.at(r, c), i, out.at(r, c));
        }
    }
    return out;
}

// ------------------------------------------------------------------ arithmetic

ExtMatrix add(const ExtMatrix& a, const ExtMatrix& b) {
    ExtMatrix out = a;
    for (size_t r = 0; r < a.rows(); ++r) {
        kern::row_addmul(out.row_data(r), b.row_data(r), a.row_bytes(), 1,
                         static_cast<uint8_t>(a.field().q()));
    }
    return out;
}

ExtMatrix sub(const ExtMatrix& a, const ExtMatrix& b) {
    const uint8_t q = static_cast<uint8_t>(a.field().q());
    ExtMatrix out = a;
    for (size_t r = 0; r < a.rows(); ++r) {
        kern::row_addmul(out.row_data(r), b.row_data(r), a.row_bytes(),
                         static_cast<uint8_t>(q - 1), q);
    }
    return out;
}

ExtMatrix mul(const ExtMatrix& a, const ExtMatrix& b) {
    const auto& f = a.field();
    ExtMatrix out(a.field_ptr(), a.rows(), b.cols());
    std::vector<uint8_t> tmp(f.m());
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t t = 0; t < a.cols(); ++t) {
            auto av = a.at(r, t);
            if (f.is_zero(av)) continue;
            for (size_t c = 0; c < b.cols(); ++c) {
                auto bv = b.at(t, c);
                if (f.is_zero(bv)) continue;
                f.mul(av, bv, tmp);
                auto o = out.at(r, c);
                f.add(o, tmp, o);
            }
        }
    }
    return out;
}

ExtMatrix mul_ext_base(const ExtMatrix& a, const BaseMatrix& b) {
    const auto& f = a.field();
    const size_t m = f.m();
    const uint8_t q = static_cast<uint8_t>(f.q());
    ExtMatrix out(a.field_ptr(), a.rows(), b.cols());
    // per coefficient plane: out_plane = a_plane * b, all over F_q
    std::vector<uint8_t> plane(b.cols());
    for (size_t r = 0; r < a.rows(); ++r) {
        const uint8_t* arow = a.row_data(r);
        uint8_t* orow = out.row_data(r);
        for (size_t t = 0; t < m; ++t) {
            std::fill(plane.begin(), plane.end(), 0);
            for (size_t u = 0; u < a.cols(); ++u) {
                const uint8_t c = arow[u * m + t];
                if (c == 0) continue;
                kern::row_addmul(plane.data(), b.row(u), b.cols(), c, q);
            }
            for (size_t j = 0; j < b.cols(); ++j) orow[j * m + t] = plane[j];
        }
    }
    return out;
}

ExtMatrix ext_inverse(const ExtMatrix& a) {
    const size_t n = a.rows();
    ExtMatrix aug = hstack(a, ExtMatrix::identity(a.field_ptr(), n));
    // pivots confined to the left block by construction when rank is full
    const size_t rank = rref_ext_in_place(aug);
    if (rank != n) throw DegenerateSystem("matrix over F_{q^m} is singular");
    for (size_t i = 0; i < n; ++i) {
        if (!a.field().is_one(aug.at(i, i))) {
            throw DegenerateSystem("matrix over F_{q^m} is singular");
        }
    }
    return columns_range(aug, n, 2 * n);
}

ExtMatrix solve_left_factor(const ExtMatrix& a, const ExtMatrix& b) {
    // X * A = B  <=>  A^T X^T = B^T; eliminate [A^T | B^T]
    const size_t k = a.rows();
    ExtMatrix aug = hstack(transposed(a), transposed(b));
    rref_ext_in_place(aug);
    // rank(A) must be k: pivots occupy columns 0..k-1 in order
    const auto& f = a.field();
    for (size_t i = 0; i < k; ++i) {
        if (!f.is_one(aug.at(i, i))) throw DegenerateSystem("left factor system is rank deficient");
        for (size_t j = 0; j < i; ++j) {
            if (!aug.entry_is_zero(i, j)) {
                throw DegenerateSystem("left factor system is rank deficient");
            }
        }
    }
    for (size_t r = k; r < aug.rows(); ++r) {
        for (size_t c = k; c < aug.cols(); ++c) {
            if (!aug.entry_is_zero(r, c)) throw DegenerateSystem("left factor system inconsistent");
        }
    }
    ExtMatrix xt(a.field_ptr(), k, b.rows());
    for (size_t r = 0; r < k; ++r) {
        for (size_t c = 0; c < b.rows(); ++c) {
            xt.set(r, c, aug.at(r, k + c));
        }
    }
    return transposed(xt);
}

// -------------------------------------------------------- rank-metric ops

BaseMatrix expand_to_base(const ExtMatrix& v) {
    const auto& f = v.field();
    const size_t m = f.m(), n = v.cols();
    BaseMatrix out(f.q(), m, n);
    for (size_t j = 0; j < n; ++j) {
        auto e = v.at(0, j);
        for (size_t t = 0; t < m; ++t) out.at(t, j) = e[t];
    }
    return out;
}

BaseMatrix expand_rows_stacked(const ExtMatrix& m) {
    const auto& f = m.field();
    const size_t deg = f.m(), n = m.cols();
    BaseMatrix out(f.q(), m.rows() * deg, n);
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t j = 0; j < n; ++j) {
            auto e = m.at(r, j);
            for (size_t t = 0; t < deg; ++t) out.at(r * deg + t, j) = e[t];
        }
    }
    return out;
}

size_t rank_weight(const ExtMatrix& v) {
    BaseMatrix b = expand_to_base(v);
    return rref_base_in_place(b);
}

size_t column_rank(const ExtMatrix& m) {
    BaseMatrix b = expand_rows_stacked(m);
    return rref_base_in_place(b);
}

RankReduction rank_reduction(const ExtMatrix& m) {
    const size_t n = m.cols();
    const uint32_t q = m.field().q();
    const size_t s = column_rank(m);
    if (s == n) {
        return {m, BaseMatrix::identity(q, n), s};
    }
    // Eliminate the transpose of the stacked expansion while recording the
    // row operations; transposing the record gives T with M T = (M* | 0).
    BaseMatrix bt = expand_rows_stacked(m).transposed();  // n x (k*m)
    const size_t kw = bt.cols();
    std::vector<uint8_t> aug(n * (kw + n), 0);
    for (size_t r = 0; r < n; ++r) {
        std::memcpy(aug.data() + r * (kw + n), bt.row(r), kw);
        aug[r * (kw + n) + kw + r] = 1;
    }
    rref_base_raw(aug.data(), n, kw + n, kw, q);
    BaseMatrix t_ops(q, n, n);
    for (size_t r = 0; r < n; ++r) {
        std::memcpy(t_ops.row(r), aug.data() + r * (kw + n) + kw, n);
    }
    BaseMatrix t = t_ops.transposed();
    ExtMatrix transformed = mul_ext_base(m, t);
    RankReduction out{columns_range(transformed, 0, s), std::move(t), s};
    return out;
}

ExtMatrix lambda(const ExtMatrix& m, size_t i) {
    const size_t k = m.rows();
    ExtMatrix out(m.field_ptr(), (i + 1) * k, m.cols());
    std::memcpy(out.row_data(0), m.row_data(0), k * m.row_bytes());
    const auto& f = m.field();
    for (size_t block = 1; block <= i; ++block) {
        for (size_t r = 0; r < k; ++r) {
            const size_t src = (block - 1) * k + r, dst = block * k + r;
            for (size_t c = 0; c < m.cols(); ++c) {
                f.frobenius(out.at(src, c), 1, out.at(dst, c));
            }
        }
    }
    return out;
}

size_t rref_ext_in_place(ExtMatrix& m) {
    const auto& f = m.field();
    const uint8_t q = static_cast<uint8_t>(f.q());
    const size_t deg = f.m();
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<uint8_t> pivot_inv(deg), coef(deg), scratch(m.row_bytes());
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        size_t r = pivot_row;
        while (r < rows && m.entry_is_zero(r, col)) ++r;
        if (r == rows) continue;
        m.swap_rows(r, pivot_row);
        if (!f.is_one(m.at(pivot_row, col))) {
            f.inv(m.at(pivot_row, col), pivot_inv);
            for (size_t c = col; c < cols; ++c) {
                auto e = m.at(pivot_row, c);
                f.mul(e, pivot_inv, e);
            }
        }
        const uint8_t* prow = m.row_data(pivot_row);
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == pivot_row || m.entry_is_zero(rr, col)) continue;
            std::copy_n(m.at(rr, col).begin(), deg, coef.begin());
            // scratch = coef * pivot row (entrywise products), then row-
            // subtract in one coefficientwise kernel pass
            std::fill(scratch.begin(), scratch.end(), 0);
            for (size_t c = col; c < cols; ++c) {
                std::span<const uint8_t> pe(prow + c * deg, deg);
                if (f.is_zero(pe)) continue;
                f.mul(coef, pe, std::span<uint8_t>(scratch.data() + c * deg, deg));
            }
            kern::row_addmul(m.row_data(rr), scratch.data(), m.row_bytes(),
                             static_cast<uint8_t>(q - 1), q);
        }
        ++pivot_row;
    }
    return pivot_row;
}

size_t row_space_dim(const ExtMatrix& m) {
    ExtMatrix copy = m;
    return rref_ext_in_place(copy);
}

ExtMatrix dual_space(const ExtMatrix& m) {
    const auto& f = m.field();
    const size_t n = m.cols();
    ExtMatrix r = m;
    const size_t rank = rref_ext_in_place(r);
    std::vector<size_t> pivot_col(rank);
    std::vector<bool> is_pivot(n, false);
    for (size_t p = 0; p < rank; ++p) {
        size_t c = 0;
        while (c < n && r.entry_is_zero(p, c)) ++c;
        pivot_col[p] = c;
        is_pivot[c] = true;
    }
    ExtMatrix out(m.field_ptr(), n - rank, n);
    size_t row = 0;
    std::vector<uint8_t> tmp(f.m());
    for (size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        out.at(row, fc)[0] = 1;
        for (size_t p = 0; p < rank; ++p) {
            f.neg(r.at(p, fc), tmp);
            out.set(row, pivot_col[p], tmp);
        }
        ++row;
    }
    return out;
}

ExtMatrix puncture(const ExtMatrix& m, const std::vector<size_t>& positions) {
    const size_t n = m.cols();
    std::vector<bool> drop(n, false);
    for (size_t p : positions) {
        if (p < 1 || p > n) {
            throw InvalidPositions("position " + std::to_string(p) + " outside [1, " +
                                   std::to_string(n) + "]");
        }
        if (drop[p - 1]) throw InvalidPositions("duplicate position " + std::to_string(p));
        drop[p - 1] = true;
    }
    if (positions.size() >= n) throw InvalidPositions("cannot remove every column");
    const size_t deg = m.field().m();
    ExtMatrix out(m.field_ptr(), m.rows(), n - positions.size());
    for (size_t r = 0; r < m.rows(); ++r) {
        uint8_t* dst = out.row_data(r);
        const uint8_t* src = m.row_data(r);
        for (size_t c = 0; c < n; ++c) {
            if (drop[c]) continue;
            std::memcpy(dst, src + c * deg, deg);
            dst += deg;
        }
    }
    return out;
}

bool row_space_equal(const ExtMatrix& a, const ExtMatrix& b) {
    if (a.cols() != b.cols() || !(a.field() == b.field())) return false;
    ExtMatrix ra = a, rb = b;
    const size_t da = rref_ext_in_place(ra), db = rref_ext_in_place(rb);
    if (da != db) return false;
    for (size_t r = 0; r < da; ++r) {
        if (std::memcmp(ra.row_data(r), rb.row_data(r), ra.row_bytes()) != 0) return false;
    }
    return true;
}

// --------------------------------------------------------------- EchelonSpace

EchelonSpace::EchelonSpace(const ExtMatrix& m) {
    ExtMatrix r = m;
    const size_t rank = rref_ext_in_place(r);
    basis_ = ExtMatrix(m.field_ptr(), rank, m.cols());
    if (rank > 0) std::memcpy(basis_.row_data(0), r.row_data(0), rank * r.row_bytes());
}

size_t EchelonSpace::dim_if_column_removed(size_t col) const {
    ExtMatrix probe = puncture(basis_, {col + 1});
    return rref_ext_in_place(probe);
}

void EchelonSpace::remove_column(size_t col) {
    ExtMatrix next = puncture(basis_, {col + 1});
    const size_t rank = rref_ext_in_place(next);
    ExtMatrix kept(basis_.field_ptr(), rank, next.cols());
    if (rank > 0) std::memcpy(kept.row_data(0), next.row_data(0), rank * next.row_bytes());
    basis_ = std::move(kept);
}

}  // namespace ranklab
