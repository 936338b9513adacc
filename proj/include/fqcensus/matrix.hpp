#pragma once

// Dense exact linear algebra over F_q: rank, RREF and kernels, the
// characteristic polynomial, the Kalman-style rank tests, and the
// exhaustive enumeration of matrices and of subspaces in RREF canonical
// form. Everything here is pure; enumeration spaces split into contiguous
// code ranges so shards can run on independent workers.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "fqcensus/errors.hpp"
#include "fqcensus/field.hpp"
#include "fqcensus/numbers.hpp"
#include "fqcensus/poly.hpp"

namespace fqcensus {

class MatrixFq {
public:
    // Zero matrix. Degenerate dimensions (0 rows or columns) are legal.
    MatrixFq(const FieldCtx& F, std::uint32_t rows, std::uint32_t cols)
        : F_(&F), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

    static MatrixFq identity(const FieldCtx& F, std::uint32_t n);
    // Entries given as element codes, row by row.
    static MatrixFq of(const FieldCtx& F, std::initializer_list<std::initializer_list<int>> rows);

    const FieldCtx& ctx() const { return *F_; }
    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }

    Elem get(std::uint32_t r, std::uint32_t c) const { return a_[std::size_t(r) * cols_ + c]; }
    void set(std::uint32_t r, std::uint32_t c, Elem v) { a_[std::size_t(r) * cols_ + c] = v; }
    const std::vector<Elem>& entries() const { return a_; }

    MatrixFq transpose() const;
    MatrixFq operator*(const MatrixFq& o) const;  // throws on dim/context mismatch
    bool operator==(const MatrixFq& o) const;
    bool operator!=(const MatrixFq& o) const { return !(*this == o); }

    // Base-q row-major integer code; the enumeration key of this matrix.
    std::uint64_t code() const;
    static MatrixFq from_code(const FieldCtx& F, std::uint32_t rows, std::uint32_t cols,
                              std::uint64_t code);
    // Overwrites an existing matrix of matching shape; allocation-free.
    void assign_code(std::uint64_t code);

    std::string str() const;

private:
    const FieldCtx* F_;
    std::uint32_t rows_, cols_;
    std::vector<Elem> a_;
};

int rank(MatrixFq m);  // by value: eliminates in the copy

struct RrefKernel {
    MatrixFq rref;    // the unique reduced row echelon form
    MatrixFq kernel;  // cols x (cols - rank); columns form a right-nullspace basis
};
RrefKernel rref_and_kernel(const MatrixFq& m);

// det(xI - a), computed by fraction-free (Bareiss) elimination over
// F_q[x]. Monic of degree n. Throws on non-square input.
PolyFq char_poly(const MatrixFq& a);

// rank of [C; CA; ...; CA^{k-1}] for A (k x k), C ((n-k) x k).
int observability_rank(const MatrixFq& C, const MatrixFq& A);

// True iff the intersection of ker(CA^i), i = 0..k-1, is {0}. The primary
// route is observability_rank == k; every call is cross-checked against
// the direct kernel-intersection route and a disagreement throws
// verification_error.
bool is_zero_kernel_pair(const MatrixFq& C, const MatrixFq& A);

// The independent route: intersects the kernels explicitly.
bool zero_kernel_pair_by_kernels(const MatrixFq& C, const MatrixFq& A);

// Kalman rank condition: rank [B AB ... A^{k-1}B] = k.
bool is_reachable(const MatrixFq& A, const MatrixFq& B);

// The space of all rows x cols matrices over F, ordered by base-q
// row-major codes. Splitting [0, size) into contiguous code ranges gives
// disjoint shards whose union is the whole space.
class MatrixSpace {
public:
    // Throws budget_error if q^{rows*cols} exceeds the budget.
    MatrixSpace(const FieldCtx& F, std::uint32_t rows, std::uint32_t cols,
                std::uint64_t budget = kDefaultBudget);
    std::uint64_t size() const { return size_; }
    MatrixFq at(std::uint64_t code) const { return MatrixFq::from_code(*F_, rows_, cols_, code); }

private:
    const FieldCtx* F_;
    std::uint32_t rows_, cols_;
    std::uint64_t size_;
};

// q^{rows*cols} as an exact count (no budget applied).
BigCount matrix_space_size(const FieldCtx& F, std::uint32_t rows, std::uint32_t cols);

// A k-dimensional subspace of F_q^n, identified by its RREF basis: the
// k x n reduced row echelon matrix of full row rank. The RREF form is the
// canonical representative, so equality of SubspaceBasis values is
// equality of subspaces.
class SubspaceBasis {
public:
    // Canonicalizes the row space of an arbitrary generating matrix.
    static SubspaceBasis from_rows(const MatrixFq& rows);

    const MatrixFq& basis() const { return b_; }
    std::uint32_t ambient() const { return b_.cols(); }
    std::uint32_t dim() const { return b_.rows(); }
    const std::vector<std::uint32_t>& pivots() const { return pivots_; }

    // Membership of a coordinate vector (length = ambient).
    bool contains(const std::vector<Elem>& v) const;

    bool operator==(const SubspaceBasis& o) const { return b_ == o.b_; }
    bool operator!=(const SubspaceBasis& o) const { return !(*this == o); }

private:
    friend std::vector<SubspaceBasis> enumerate_subspaces(const FieldCtx&, std::uint32_t,
                                                          std::uint32_t, std::uint64_t);
    SubspaceBasis(MatrixFq b, std::vector<std::uint32_t> pivots)
        : b_(std::move(b)), pivots_(std::move(pivots)) {}
    MatrixFq b_;
    std::vector<std::uint32_t> pivots_;
};

// All k-dimensional subspaces of F_q^n, each exactly once, via RREF
// canonical forms: pivot-column sets in lexicographic order, then free
// entries in base-q counter order.
std::vector<SubspaceBasis> enumerate_subspaces(const FieldCtx& F, std::uint32_t n,
                                               std::uint32_t k,
                                               std::uint64_t budget = kDefaultBudget);

// dim(U ∩ W) = dim U + dim W - rank of the stacked bases.
int intersection_dim(const SubspaceBasis& u, const SubspaceBasis& w);

// span(e_1, ..., e_k) in F_q^n.
SubspaceBasis coordinate_subspace(const FieldCtx& F, std::uint32_t n, std::uint32_t k);

}  // namespace fqcensus
