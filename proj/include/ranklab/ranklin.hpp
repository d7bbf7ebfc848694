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

#ifndef RANKLAB_RANKLIN_HPP
#define RANKLAB_RANKLIN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ranklab/field.hpp"

namespace ranklab {

/// Dense matrix over the base field F_q, one residue per byte, row-major.
/// Used for column scramblers and base-field expansions.
class BaseMatrix {
   public:
    BaseMatrix() = default;
    BaseMatrix(uint32_t q, size_t rows, size_t cols)
        : q_(q), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static BaseMatrix identity(uint32_t q, size_t n);
    static BaseMatrix random(uint32_t q, size_t rows, size_t cols, Rng& rng);
    static BaseMatrix random_invertible(uint32_t q, size_t n, Rng& rng);

    uint32_t q() const { return q_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint8_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    uint8_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    uint8_t* row(size_t r) { return a_.data() + r * cols_; }
    const uint8_t* row(size_t r) const { return a_.data() + r * cols_; }

    BaseMatrix transposed() const;
    /// Throws DegenerateSystem when singular.
    BaseMatrix inverse() const;
    size_t rank() const;
    bool is_zero() const;
    bool is_identity() const;

    friend BaseMatrix operator*(const BaseMatrix& a, const BaseMatrix& b);
    bool operator==(const BaseMatrix& o) const {
        return q_ == o.q_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

   private:
    uint32_t q_ = 0;
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint8_t> a_;
};

/// In-place reduced row echelon form over F_q; returns the rank. Pivot
/// search scans columns left to right and takes the first nonzero row,
/// so the result is canonical.
size_t rref_base_in_place(BaseMatrix& m);

/// Dense matrix over F_{q^m}; each entry is m contiguous residues, rows
/// are contiguous. A 1 x n ExtMatrix doubles as a vector (ExtVector).
class ExtMatrix {
   public:
    ExtMatrix() = default;
    ExtMatrix(FieldCtxPtr ctx, size_t rows, size_t cols);

    static ExtMatrix identity(FieldCtxPtr ctx, size_t n);
    static ExtMatrix random(FieldCtxPtr ctx, size_t rows, size_t cols, Rng& rng);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldContext& field() const { return *ctx_; }
    const FieldCtxPtr& field_ptr() const { return ctx_; }

    std::span<uint8_t> at(size_t r, size_t c) {
        return {a_.data() + (r * cols_ + c) * ctx_->m(), ctx_->m()};
    }
    std::span<const uint8_t> at(size_t r, size_t c) const {
        return {a_.data() + (r * cols_ + c) * ctx_->m(), ctx_->m()};
    }
    uint8_t* row_data(size_t r) { return a_.data() + r * cols_ * ctx_->m(); }
    const uint8_t* row_data(size_t r) const { return a_.data() + r * cols_ * ctx_->m(); }
    size_t row_bytes() const { return cols_ * ctx_->m(); }

    ExtElement get(size_t r, size_t c) const {
        auto s = at(r, c);
        return ExtElement(s.begin(), s.end());
    }
    void set(size_t r, size_t c, std::span<const uint8_t> v);
    bool entry_is_zero(size_t r, size_t c) const { return ctx_->is_zero(at(r, c)); }
    bool is_zero() const;

    void swap_rows(size_t r1, size_t r2);

    bool operator==(const ExtMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && *ctx_ == *o.ctx_ && a_ == o.a_;
    }

   private:
    FieldCtxPtr ctx_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint8_t> a_;
};

using ExtVector = ExtMatrix;  // 1 x n by convention

// ---- construction / slicing ----

ExtMatrix hstack(const ExtMatrix& a, const ExtMatrix& b);
ExtMatrix row_vector(const ExtMatrix& m, size_t r);
/// Columns [c0, c1) as a new matrix.
ExtMatrix columns_range(const ExtMatrix& m, size_t c0, size_t c1);
ExtMatrix transposed(const ExtMatrix& m);
/// Entrywise a^{[i]}.
ExtMatrix frobenius_map(const ExtMatrix& m, long long i);

// ---- arithmetic ----

ExtMatrix add(const ExtMatrix& a, const ExtMatrix& b);
ExtMatrix sub(const ExtMatrix& a, const ExtMatrix& b);
ExtMatrix mul(const ExtMatrix& a, const ExtMatrix& b);
/// Right-multiply by a base-field matrix (rank-metric isometry direction).
ExtMatrix mul_ext_base(const ExtMatrix& a, const BaseMatrix& b);
/// Inverse of a square matrix over F_{q^m}; throws DegenerateSystem.
ExtMatrix ext_inverse(const ExtMatrix& a);
/// Solve X * A = B (A with full row-space dim); throws DegenerateSystem.
ExtMatrix solve_left_factor(const ExtMatrix& a, const ExtMatrix& b);

// ---- rank-metric operations ----

/// m x n base-field expansion of a 1 x n vector: column j holds the
/// modulus-basis coefficients of v_j.
BaseMatrix expand_to_base(const ExtMatrix& v);

/// (k*m) x n stacked expansion of all rows of a k x n matrix.
BaseMatrix expand_rows_stacked(const ExtMatrix& m);

/// Rank weight of a 1 x n vector: F_q-rank of its expansion.
size_t rank_weight(const ExtMatrix& v);

/// Column rank over F_q of a k x n matrix (dimension of the F_q-span of
/// its columns), distinct from its rank over F_{q^m}.
size_t column_rank(const ExtMatrix& m);

/// Rank-reduction transform: T in GL_n(F_q) with M * T = (M* | 0), where
/// M* keeps exactly s = column_rank(M) columns of full column rank.
/// When s = n, T is the identity and m_star = M.
struct RankReduction {
    ExtMatrix m_star;
    BaseMatrix t;
    size_t s = 0;
};
RankReduction rank_reduction(const ExtMatrix& m);

/// Frobenius stacking: vertical stack of M^{[0]}, ..., M^{[i]}.
ExtMatrix lambda(const ExtMatrix& m, size_t i);

/// In-place canonical RREF over F_{q^m}; returns the rank.
size_t rref_ext_in_place(ExtMatrix& m);

/// Rank over F_{q^m}.
size_t row_space_dim(const ExtMatrix& m);

/// Canonical basis of { z : c . z = 0 for all codewords c }, one row per
/// free column of the RREF, (n - r) x n.
ExtMatrix dual_space(const ExtMatrix& m);

/// Remove the columns at the given 1-based positions (set semantics:
/// duplicates, out-of-range or removing every column raise
/// InvalidPositions). Order of the remaining columns is preserved.
ExtMatrix puncture(const ExtMatrix& m, const std::vector<size_t>& positions);

bool row_space_equal(const ExtMatrix& a, const ExtMatrix& b);

/*
 * Echelonized row space supporting repeated single-column deletion. The
 * redundancy search probes dim(Lambda_f(C^j)) for many candidate columns
 * j at a fixed f; eliminating Lambda_f once and re-eliminating the small
 * echelon basis per candidate keeps that loop cheap.
 */
class EchelonSpace {
   public:
    explicit EchelonSpace(const ExtMatrix& m);

    size_t dim() const { return basis_.rows(); }
    size_t cols() const { return basis_.cols(); }
    /// Rank after deleting the (0-based) column, without committing.
    size_t dim_if_column_removed(size_t col) const;
    /// Delete the (0-based) column and re-echelonize.
    void remove_column(size_t col);

   private:
    ExtMatrix basis_;  // RREF, nonzero rows only
};

}  // namespace ranklab

#endif  // RANKLAB_RANKLIN_HPP
