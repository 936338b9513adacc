#include "fqcensus/poly_matrix.hpp"

#include <optional>
#include <stdexcept>

#include "fqcensus/detail/combinations.hpp"

namespace fqcensus {

std::string PolyMatrix::str() const {
    std::string s = "[";
    for (std::uint32_t i = 0; i < rows_; ++i) {
        s += i == 0 ? "[" : " [";
        for (std::uint32_t j = 0; j < cols_; ++j) {
            if (j > 0) s += ", ";
            s += get(i, j).str();
        }
        s += "]";
        if (i + 1 < rows_) s += "\n";
    }
    return s + "]";
}

PolyMatrix build_pencil(const MatrixFq& Y) {
    const std::uint32_t n = Y.rows(), k = Y.cols();
    if (k >= n) throw std::invalid_argument("pencil requires k < n");
    const FieldCtx& F = Y.ctx();
    PolyMatrix P(F, n, k);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < k; ++j) {
            std::vector<Elem> c{F.neg(Y.get(i, j))};
            if (i == j) c.push_back(1);  // x on the top-block diagonal
            P.set(i, j, PolyFq(F, std::move(c)));
        }
    return P;
}

namespace {

// Shared pivot-at-a-time Smith reduction. Runs the elimination on a
// working copy; when stop_on_nonunit is set, stops as soon as the chain
// is known to contain a nonunit factor (enough to refute unimodularity).
struct SmithEngine {
    const FieldCtx& F;
    std::uint32_t rows, cols;
    std::vector<PolyFq> w;

    explicit SmithEngine(const PolyMatrix& M)
        : F(M.ctx()), rows(M.rows()), cols(M.cols()), w() {
        w.reserve(std::size_t(rows) * cols);
        for (std::uint32_t i = 0; i < rows; ++i)
            for (std::uint32_t j = 0; j < cols; ++j) w.push_back(M.get(i, j));
    }

    PolyFq& at(std::uint32_t r, std::uint32_t c) { return w[std::size_t(r) * cols + c]; }

    void swap_rows(std::uint32_t a, std::uint32_t b, std::uint32_t from_col) {
        for (std::uint32_t j = from_col; j < cols; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(std::uint32_t a, std::uint32_t b, std::uint32_t from_row) {
        for (std::uint32_t i = from_row; i < rows; ++i) std::swap(at(i, a), at(i, b));
    }
    // row_i -= f * row_k
    void row_submul(std::uint32_t i, std::uint32_t k, const PolyFq& f, std::uint32_t from_col) {
        for (std::uint32_t j = from_col; j < cols; ++j)
            if (!at(k, j).is_zero()) at(i, j) = at(i, j) - f * at(k, j);
    }
    void col_submul(std::uint32_t j, std::uint32_t k, const PolyFq& f, std::uint32_t from_row) {
        for (std::uint32_t i = from_row; i < rows; ++i)
            if (!at(i, k).is_zero()) at(i, j) = at(i, j) - f * at(i, k);
    }
    void row_add(std::uint32_t dst, std::uint32_t src, std::uint32_t from_col) {
        for (std::uint32_t j = from_col; j < cols; ++j)
            if (!at(src, j).is_zero()) at(dst, j) = at(dst, j) + at(src, j);
    }
    void scale_row(std::uint32_t i, Elem c, std::uint32_t from_col) {
        for (std::uint32_t j = from_col; j < cols; ++j)
            if (!at(i, j).is_zero()) at(i, j) = at(i, j).scaled(c);
    }

    // Completes pivot t; returns the monic invariant factor, or nullopt
    // when the trailing block is entirely zero.
    std::optional<PolyFq> reduce_pivot(std::uint32_t t) {
        for (;;) {
            // Minimal-degree nonzero entry, ties (row, col) lexicographic.
            std::uint32_t pi = 0, pj = 0;
            int best = -1;
            for (std::uint32_t i = t; i < rows; ++i)
                for (std::uint32_t j = t; j < cols; ++j) {
                    const int d = at(i, j).deg();
                    if (d >= 0 && (best < 0 || d < best)) {
                        best = d;
                        pi = i;
                        pj = j;
                    }
                }
            if (best < 0) return std::nullopt;
            if (pi != t) swap_rows(pi, t, t);
            if (pj != t) swap_cols(pj, t, t);
            if (at(t, t).lead() != 1) scale_row(t, F.inv(at(t, t).lead()), t);

            bool restart = false;
            for (std::uint32_t i = t + 1; i < rows; ++i) {
                if (at(i, t).is_zero()) continue;
                PolyDivMod d = divmod(at(i, t), at(t, t));
                row_submul(i, t, d.quot, t);
                if (!d.rem.is_zero()) restart = true;
            }
            if (restart) continue;
            for (std::uint32_t j = t + 1; j < cols; ++j) {
                if (at(t, j).is_zero()) continue;
                PolyDivMod d = divmod(at(t, j), at(t, t));
                col_submul(j, t, d.quot, t);
                if (!d.rem.is_zero()) restart = true;
            }
            if (restart) continue;

            // Pivot row/column clean; force divisibility into the block.
            if (at(t, t).deg() > 0) {
                bool fixed = false;
                for (std::uint32_t i = t + 1; i < rows && !fixed; ++i)
                    for (std::uint32_t j = t + 1; j < cols && !fixed; ++j) {
                        if (at(i, j).is_zero()) continue;
                        if (!divmod(at(i, j), at(t, t)).rem.is_zero()) {
                            row_add(t, i, t);
                            fixed = true;
                        }
                    }
                if (fixed) continue;
            }
            return at(t, t);
        }
    }
};

}  // namespace

SmithForm smith_invariant_factors(const PolyMatrix& M) {
    SmithEngine eng(M);
    const std::uint32_t steps = std::min(M.rows(), M.cols());
    SmithForm out;
    out.invariant_factors.reserve(steps);
    for (std::uint32_t t = 0; t < steps; ++t) {
        std::optional<PolyFq> f = eng.reduce_pivot(t);
        if (!f) break;
        out.invariant_factors.push_back(std::move(*f));
    }
    while (out.invariant_factors.size() < steps)
        out.invariant_factors.push_back(PolyFq(M.ctx()));

    // Chain property holds on every call, by construction; refuse to
    // return anything that violates it.
    for (std::size_t i = 0; i + 1 < out.invariant_factors.size(); ++i) {
        const PolyFq& a = out.invariant_factors[i];
        const PolyFq& b = out.invariant_factors[i + 1];
        if (a.is_zero()) {
            if (!b.is_zero()) throw verification_error("smith: zero factor before nonzero");
        } else if (!a.is_monic() || (!b.is_zero() && !divmod(b, a).rem.is_zero())) {
            throw verification_error("smith: divisibility chain violated");
        }
    }
    if (!out.invariant_factors.empty()) {
        const PolyFq& last = out.invariant_factors.back();
        if (!last.is_zero() && !last.is_monic())
            throw verification_error("smith: factor not monic");
    }
    return out;
}

bool is_unimodular(const PolyMatrix& M) {
    if (M.rows() < M.cols()) throw std::invalid_argument("unimodularity requires rows >= cols");

    if (M.cols() == 1) {
        // One column: the single invariant factor is the gcd of the entries.
        PolyFq g(M.ctx());
        for (std::uint32_t i = 0; i < M.rows(); ++i) {
            if (M.get(i, 0).is_zero()) continue;
            g = g.is_zero() ? M.get(i, 0).monic() : gcd(g, M.get(i, 0));
            if (g.deg() == 0) return true;
        }
        return !g.is_zero() && g.deg() == 0;
    }

    SmithEngine eng(M);
    for (std::uint32_t t = 0; t < M.cols(); ++t) {
        std::optional<PolyFq> f = eng.reduce_pivot(t);
        // A missing or nonconstant pivot makes this and all later factors
        // nonunit (the divisibility chain); stop immediately.
        if (!f || f->deg() != 0) return false;
    }
    return true;
}

PolyFq poly_det(const PolyMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const FieldCtx& F = M.ctx();
    const std::uint32_t n = M.rows();
    if (n == 0) return PolyFq::constant(F, 1);

    std::vector<PolyFq> w;
    w.reserve(std::size_t(n) * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) w.push_back(M.get(i, j));
    auto at = [&](std::uint32_t r, std::uint32_t c) -> PolyFq& { return w[std::size_t(r) * n + c]; };

    // Bareiss: every division below is exact in F_q[x].
    PolyFq prev = PolyFq::constant(F, 1);
    bool negate = false;
    for (std::uint32_t t = 0; t + 1 < n; ++t) {
        if (at(t, t).is_zero()) {
            std::uint32_t r = t + 1;
            while (r < n && at(r, t).is_zero()) ++r;
            if (r == n) return PolyFq(F);  // a zero column: det vanishes
            for (std::uint32_t j = t; j < n; ++j) std::swap(at(t, j), at(r, j));
            negate = !negate;
        }
        for (std::uint32_t i = t + 1; i < n; ++i) {
            for (std::uint32_t j = t + 1; j < n; ++j) {
                PolyDivMod d = divmod(at(i, j) * at(t, t) - at(i, t) * at(t, j), prev);
                if (!d.rem.is_zero()) throw verification_error("bareiss division not exact");
                at(i, j) = std::move(d.quot);
            }
            at(i, t) = PolyFq(F);
        }
        prev = at(t, t);
    }
    PolyFq det = at(n - 1, n - 1);
    return negate ? -det : det;
}

PolyFq minors_gcd(const PolyMatrix& M, std::uint64_t budget) {
    const std::uint32_t n = M.rows(), k = M.cols();
    if (n < k) throw std::invalid_argument("minors_gcd requires rows >= cols");

    BigCount minors = 1;
    for (std::uint32_t i = 0; i < k; ++i) minors = minors * (n - i) / (i + 1);
    if (minors > budget)
        throw budget_error("minor count " + minors.str() + " exceeds budget " +
                           std::to_string(budget));

    const FieldCtx& F = M.ctx();
    PolyFq g(F);
    bool done = false;
    detail::for_each_combination(n, k, [&](const std::vector<std::uint32_t>& rows) {
        if (done) return;
        PolyMatrix sub(F, k, k);
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < k; ++j) sub.set(i, j, M.get(rows[i], j));
        const PolyFq d = poly_det(sub);
        if (d.is_zero()) return;
        g = g.is_zero() ? d.monic() : gcd(g, d);
        if (g.deg() == 0) done = true;  // gcd hit 1
    });
    return g;
}

}  // namespace fqcensus
