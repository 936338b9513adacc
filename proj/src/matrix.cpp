#include "fqcensus/matrix.hpp"

#include <stdexcept>

#include "fqcensus/detail/combinations.hpp"
#include "fqcensus/poly_matrix.hpp"

namespace fqcensus {

MatrixFq MatrixFq::identity(const FieldCtx& F, std::uint32_t n) {
    MatrixFq m(F, n, n);
    for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

MatrixFq MatrixFq::of(const FieldCtx& F,
                      std::initializer_list<std::initializer_list<int>> rows) {
    const std::uint32_t r = static_cast<std::uint32_t>(rows.size());
    const std::uint32_t c = r == 0 ? 0 : static_cast<std::uint32_t>(rows.begin()->size());
    MatrixFq m(F, r, c);
    std::uint32_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
        std::uint32_t j = 0;
        for (int v : row) {
            if (v < 0 || static_cast<std::uint32_t>(v) >= F.q())
                throw std::invalid_argument("element code out of range");
            m.set(i, j++, static_cast<Elem>(v));
        }
        ++i;
    }
    return m;
}

MatrixFq MatrixFq::transpose() const {
    MatrixFq t(*F_, cols_, rows_);
    for (std::uint32_t i = 0; i < rows_; ++i)
        for (std::uint32_t j = 0; j < cols_; ++j) t.set(j, i, get(i, j));
    return t;
}

MatrixFq MatrixFq::operator*(const MatrixFq& o) const {
    if (!F_->same_field(*o.F_)) throw std::invalid_argument("matrix context mismatch");
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    MatrixFq r(*F_, rows_, o.cols_);
    for (std::uint32_t i = 0; i < rows_; ++i) {
        for (std::uint32_t k = 0; k < cols_; ++k) {
            const Elem a = get(i, k);
            if (a == 0) continue;
            for (std::uint32_t j = 0; j < o.cols_; ++j)
                r.set(i, j, F_->add(r.get(i, j), F_->mul(a, o.get(k, j))));
        }
    }
    return r;
}

bool MatrixFq::operator==(const MatrixFq& o) const {
    return F_->same_field(*o.F_) && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::uint64_t MatrixFq::code() const {
    std::uint64_t c = 0;
    for (std::size_t i = a_.size(); i-- > 0;) c = c * F_->q() + a_[i];
    return c;
}

MatrixFq MatrixFq::from_code(const FieldCtx& F, std::uint32_t rows, std::uint32_t cols,
                             std::uint64_t code) {
    MatrixFq m(F, rows, cols);
    m.assign_code(code);
    return m;
}

void MatrixFq::assign_code(std::uint64_t code) {
    const std::uint32_t q = F_->q();
    for (std::size_t i = 0; i < a_.size(); ++i) {
        a_[i] = static_cast<Elem>(code % q);
        code /= q;
    }
}

std::string MatrixFq::str() const {
    std::string s = "[";
    for (std::uint32_t i = 0; i < rows_; ++i) {
        s += i == 0 ? "[" : " [";
        for (std::uint32_t j = 0; j < cols_; ++j) {
            if (j > 0) s += " ";
            s += std::to_string(get(i, j));
        }
        s += "]";
        if (i + 1 < rows_) s += "\n";
    }
    return s + "]";
}

namespace {

// In-place row reduction; returns pivot columns. full=true produces the
// reduced (unique) echelon form, otherwise stops at row echelon.
std::vector<std::uint32_t> eliminate(MatrixFq& m, bool full) {
    const FieldCtx& F = m.ctx();
    std::vector<std::uint32_t> pivots;
    std::uint32_t row = 0;
    for (std::uint32_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::uint32_t pr = row;
        while (pr < m.rows() && m.get(pr, col) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::uint32_t j = col; j < m.cols(); ++j) {
                const Elem t = m.get(row, j);
                m.set(row, j, m.get(pr, j));
                m.set(pr, j, t);
            }
        const Elem piv_inv = F.inv(m.get(row, col));
        if (piv_inv != 1)
            for (std::uint32_t j = col; j < m.cols(); ++j)
                m.set(row, j, F.mul(piv_inv, m.get(row, j)));
        const std::uint32_t start = full ? 0 : row + 1;
        for (std::uint32_t i = start; i < m.rows(); ++i) {
            if (i == row) continue;
            const Elem f = m.get(i, col);
            if (f == 0) continue;
            for (std::uint32_t j = col; j < m.cols(); ++j)
                m.set(i, j, F.sub(m.get(i, j), F.mul(f, m.get(row, j))));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(MatrixFq m) { return static_cast<int>(eliminate(m, false).size()); }

RrefKernel rref_and_kernel(const MatrixFq& m) {
    const FieldCtx& F = m.ctx();
    MatrixFq r = m;
    const std::vector<std::uint32_t> pivots = eliminate(r, true);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::uint32_t p : pivots) is_pivot[p] = true;

    MatrixFq kernel(F, m.cols(), m.cols() - static_cast<std::uint32_t>(pivots.size()));
    std::uint32_t kcol = 0;
    for (std::uint32_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        kernel.set(j, kcol, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            kernel.set(pivots[i], kcol, F.neg(r.get(static_cast<std::uint32_t>(i), j)));
        ++kcol;
    }
    return {std::move(r), std::move(kernel)};
}

PolyFq char_poly(const MatrixFq& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("char_poly of non-square matrix");
    const FieldCtx& F = a.ctx();
    const std::uint32_t n = a.rows();
    PolyMatrix xia(F, n, n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            std::vector<Elem> c{F.neg(a.get(i, j))};
            if (i == j) c.push_back(1);
            xia.set(i, j, PolyFq(F, std::move(c)));
        }
    return poly_det(xia);
}

int observability_rank(const MatrixFq& C, const MatrixFq& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("A must be square");
    if (C.cols() != A.rows()) throw std::invalid_argument("C/A dimension mismatch");
    if (!C.ctx().same_field(A.ctx())) throw std::invalid_argument("matrix context mismatch");
    const std::uint32_t k = A.rows();
    if (k == 0) return 0;

    MatrixFq stacked(C.ctx(), C.rows() * k, k);
    MatrixFq block = C;
    for (std::uint32_t b = 0; b < k; ++b) {
        for (std::uint32_t i = 0; i < C.rows(); ++i)
            for (std::uint32_t j = 0; j < k; ++j)
                stacked.set(b * C.rows() + i, j, block.get(i, j));
        if (b + 1 < k) block = block * A;
    }
    return rank(stacked);
}

bool zero_kernel_pair_by_kernels(const MatrixFq& C, const MatrixFq& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("A must be square");
    if (C.cols() != A.rows()) throw std::invalid_argument("C/A dimension mismatch");
    const FieldCtx& F = C.ctx();
    const std::uint32_t k = A.rows();

    // B carries a basis (as columns) of the running intersection of
    // ker(C), ker(CA), ..., starting from the whole space.
    MatrixFq B = MatrixFq::identity(F, k);
    MatrixFq block = C;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (B.cols() == 0) break;
        const MatrixFq ker = rref_and_kernel(block * B).kernel;
        B = B * ker;
        if (i + 1 < k) block = block * A;
    }
    return B.cols() == 0;
}

bool is_zero_kernel_pair(const MatrixFq& C, const MatrixFq& A) {
    const bool by_rank = observability_rank(C, A) == static_cast<int>(A.rows());
    const bool by_kernels = zero_kernel_pair_by_kernels(C, A);
    if (by_rank != by_kernels)
        throw verification_error("zero-kernel-pair routes disagree for C=" + C.str() +
                                 " A=" + A.str());
    return by_rank;
}

bool is_reachable(const MatrixFq& A, const MatrixFq& B) {
    if (A.rows() != A.cols()) throw std::invalid_argument("A must be square");
    if (B.rows() != A.rows()) throw std::invalid_argument("A/B dimension mismatch");
    if (!A.ctx().same_field(B.ctx())) throw std::invalid_argument("matrix context mismatch");
    const std::uint32_t k = A.rows();
    if (k == 0) return true;

    MatrixFq ctrl(A.ctx(), k, k * B.cols());
    MatrixFq block = B;
    for (std::uint32_t b = 0; b < k; ++b) {
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < B.cols(); ++j)
                ctrl.set(i, b * B.cols() + j, block.get(i, j));
        if (b + 1 < k) block = A * block;
    }
    return rank(ctrl) == static_cast<int>(k);
}

BigCount matrix_space_size(const FieldCtx& F, std::uint32_t rows, std::uint32_t cols) {
    return big_pow(BigCount(F.q()), std::uint64_t(rows) * cols);
}

MatrixSpace::MatrixSpace(const FieldCtx& F, std::uint32_t rows, std::uint32_t cols,
                         std::uint64_t budget)
    : F_(&F), rows_(rows), cols_(cols) {
    const BigCount total = matrix_space_size(F, rows, cols);
    if (total > budget)
        throw budget_error("matrix space " + total.str() + " exceeds budget " +
                           std::to_string(budget));
    size_ = total.convert_to<std::uint64_t>();
}

SubspaceBasis SubspaceBasis::from_rows(const MatrixFq& rows) {
    MatrixFq r = rows;
    const std::vector<std::uint32_t> pivots = eliminate(r, true);
    MatrixFq b(rows.ctx(), static_cast<std::uint32_t>(pivots.size()), rows.cols());
    for (std::uint32_t i = 0; i < b.rows(); ++i)
        for (std::uint32_t j = 0; j < rows.cols(); ++j) b.set(i, j, r.get(i, j));
    return SubspaceBasis(std::move(b), pivots);
}

bool SubspaceBasis::contains(const std::vector<Elem>& v) const {
    if (v.size() != ambient()) throw std::invalid_argument("vector/ambient mismatch");
    const FieldCtx& F = b_.ctx();
    std::vector<Elem> w = v;
    for (std::uint32_t i = 0; i < dim(); ++i) {
        const Elem c = w[pivots_[i]];
        if (c == 0) continue;
        for (std::uint32_t j = 0; j < ambient(); ++j) w[j] = F.sub(w[j], F.mul(c, b_.get(i, j)));
    }
    for (Elem x : w)
        if (x != 0) return false;
    return true;
}

std::vector<SubspaceBasis> enumerate_subspaces(const FieldCtx& F, std::uint32_t n,
                                               std::uint32_t k, std::uint64_t budget) {
    if (k > n) throw std::invalid_argument("subspace dimension exceeds ambient");

    // Count first: Gaussian binomial via the q-Pascal recurrence, checked
    // against the budget before any matrix is built.
    std::vector<std::vector<BigCount>> binom(n + 1, std::vector<BigCount>(k + 1, 0));
    for (std::uint32_t i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (std::uint32_t j = 1; j <= std::min(i, k); ++j)
            binom[i][j] = binom[i - 1][j - 1] +
                          (i > j ? binom[i - 1][j] * big_pow(BigCount(F.q()), j) : BigCount(0));
    }
    if (binom[n][k] > budget)
        throw budget_error("subspace count " + binom[n][k].str() + " exceeds budget " +
                           std::to_string(budget));

    std::vector<SubspaceBasis> out;
    out.reserve(binom[n][k].convert_to<std::size_t>());

    detail::for_each_combination(n, k, [&](const std::vector<std::uint32_t>& pivots) {
        std::vector<bool> is_pivot(n, false);
        for (std::uint32_t p : pivots) is_pivot[p] = true;

        // Free cells: row i may hold arbitrary values right of its pivot
        // in non-pivot columns.
        std::vector<std::pair<std::uint32_t, std::uint32_t>> free_cells;
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = pivots[i] + 1; j < n; ++j)
                if (!is_pivot[j]) free_cells.emplace_back(i, j);

        std::uint64_t count = 1;
        for (std::size_t i = 0; i < free_cells.size(); ++i) count *= F.q();

        MatrixFq b(F, k, n);
        for (std::uint32_t i = 0; i < k; ++i) b.set(i, pivots[i], 1);
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t c = code;
            for (const auto& [i, j] : free_cells) {
                b.set(i, j, static_cast<Elem>(c % F.q()));
                c /= F.q();
            }
            out.push_back(SubspaceBasis(b, pivots));
        }
    });
    return out;
}

int intersection_dim(const SubspaceBasis& u, const SubspaceBasis& w) {
    if (u.ambient() != w.ambient() || !u.basis().ctx().same_field(w.basis().ctx()))
        throw std::invalid_argument("ambient space mismatch");
    MatrixFq stacked(u.basis().ctx(), u.dim() + w.dim(), u.ambient());
    for (std::uint32_t i = 0; i < u.dim(); ++i)
        for (std::uint32_t j = 0; j < u.ambient(); ++j) stacked.set(i, j, u.basis().get(i, j));
    for (std::uint32_t i = 0; i < w.dim(); ++i)
        for (std::uint32_t j = 0; j < w.ambient(); ++j)
            stacked.set(u.dim() + i, j, w.basis().get(i, j));
    return static_cast<int>(u.dim()) + static_cast<int>(w.dim()) - rank(stacked);
}

SubspaceBasis coordinate_subspace(const FieldCtx& F, std::uint32_t n, std::uint32_t k) {
    if (k > n) throw std::invalid_argument("subspace dimension exceeds ambient");
    MatrixFq b(F, k, n);
    for (std::uint32_t i = 0; i < k; ++i) b.set(i, i, 1);
    return SubspaceBasis::from_rows(b);
}

}  // namespace fqcensus
