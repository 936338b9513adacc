#pragma once

// Matrices over F_q[x]: the pencil constructor x[I_k; 0] - Y, Smith
// invariant factors over the Euclidean domain F_q[x], unimodularity, and
// the independent gcd-of-maximal-minors oracle.

#include <cstdint>
#include <vector>

#include "fqcensus/errors.hpp"
#include "fqcensus/matrix.hpp"
#include "fqcensus/poly.hpp"

namespace fqcensus {

class PolyMatrix {
public:
    PolyMatrix(const FieldCtx& F, std::uint32_t rows, std::uint32_t cols)
        : F_(&F), rows_(rows), cols_(cols), e_(std::size_t(rows) * cols, PolyFq(F)) {}

    const FieldCtx& ctx() const { return *F_; }
    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }

    const PolyFq& get(std::uint32_t r, std::uint32_t c) const {
        return e_[std::size_t(r) * cols_ + c];
    }
    void set(std::uint32_t r, std::uint32_t c, PolyFq p) {
        e_[std::size_t(r) * cols_ + c] = std::move(p);
    }

    bool operator==(const PolyMatrix& o) const {
        return F_->same_field(*o.F_) && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    std::string str() const;

private:
    const FieldCtx* F_;
    std::uint32_t rows_, cols_;
    std::vector<PolyFq> e_;
};

// The n x k pencil x[I_k; 0] - Y for Y in M_{n,k}(F_q); requires k < n.
PolyMatrix build_pencil(const MatrixFq& Y);

struct SmithForm {
    // min(rows, cols) factors; monic with f_i | f_{i+1}, possibly with
    // trailing zeros for rank-deficient input.
    std::vector<PolyFq> invariant_factors;
};

// Invariant factors by elementary row/column operations: the minimal
// degree nonzero entry (ties broken (row, col) lexicographically) moves
// to the pivot, its row and column reduce by division, the pivot restarts
// whenever a nonzero remainder appears, and divisibility is enforced into
// the trailing block. The divisibility chain is asserted on every call.
SmithForm smith_invariant_factors(const PolyMatrix& M);

// True iff all cols invariant factors equal 1. Requires rows >= cols.
bool is_unimodular(const PolyMatrix& M);

// Monic gcd of all cols x cols minors (zero polynomial if all vanish).
// The independent unimodularity oracle: the gcd is 1 iff M is unimodular.
// Throws budget_error if binomial(rows, cols) exceeds the budget.
PolyFq minors_gcd(const PolyMatrix& M, std::uint64_t budget = kDefaultBudget);

// Exact determinant by fraction-free (Bareiss) elimination over F_q[x].
PolyFq poly_det(const PolyMatrix& M);

}  // namespace fqcensus
