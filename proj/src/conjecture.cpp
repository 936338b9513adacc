#include "fqcensus/conjecture.hpp"

#include <limits>
#include <stdexcept>

#include "fqcensus/formulas.hpp"
#include "fqcensus/worker_pool.hpp"

namespace fqcensus {

namespace {

void require_case(unsigned n, unsigned k, unsigned m) {
    if (k >= n) throw std::invalid_argument("conjecture case requires k < n");
    if (m < 1) throw std::invalid_argument("conjecture case requires m >= 1");
}

// Fills the entry polynomials of a family member in place. Coefficient i
// of entry (r, c) is A_i[r][c]; the top-block diagonal carries x^m.
void build_member(const FieldCtx& F, unsigned n, unsigned k, unsigned m, std::uint64_t code,
                  std::uint64_t per_matrix, PolyMatrix& out) {
    std::vector<std::uint64_t> a_codes(m);
    for (unsigned i = m; i-- > 0;) {  // A_0 in the most significant digits
        a_codes[i] = code % per_matrix;
        code /= per_matrix;
    }
    std::vector<Elem> coeffs(m + 1);
    std::vector<std::vector<Elem>> digits(m, std::vector<Elem>(std::size_t(n) * k));
    for (unsigned i = 0; i < m; ++i) {
        std::uint64_t c = a_codes[i];
        for (std::size_t cell = 0; cell < digits[i].size(); ++cell) {
            digits[i][cell] = static_cast<Elem>(c % F.q());
            c /= F.q();
        }
    }
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < k; ++c) {
            for (unsigned i = 0; i < m; ++i) coeffs[i] = digits[i][std::size_t(r) * k + c];
            coeffs[m] = (r == c) ? 1 : 0;
            out.set(r, c, PolyFq(F, coeffs));
        }
}

std::string dump_member(const PolyMatrix& M, std::uint64_t code) {
    return "family member code " + std::to_string(code) + ":\n" + M.str();
}

}  // namespace

std::uint64_t family_size_checked(const FieldCtx& F, unsigned n, unsigned k, unsigned m,
                                  std::uint64_t budget) {
    require_case(n, k, m);
    const BigCount total = big_pow(BigCount(F.q()), std::uint64_t(n) * k * m);
    if (total > budget)
        throw budget_error("family size " + total.str() + " exceeds budget " +
                           std::to_string(budget));
    return total.convert_to<std::uint64_t>();
}

PolyMatrix family_member(const FieldCtx& F, unsigned n, unsigned k, unsigned m,
                         std::uint64_t code) {
    require_case(n, k, m);
    const BigCount per = big_pow(BigCount(F.q()), std::uint64_t(n) * k);
    PolyMatrix out(F, n, k);
    build_member(F, n, k, m, code, per.convert_to<std::uint64_t>(), out);
    return out;
}

ConjectureVerdict verify_conjecture(const FieldCtx& F, unsigned n, unsigned k, unsigned m,
                                    const RunOptions& opts) {
    const std::uint64_t total = family_size_checked(F, n, k, m, opts.budget);
    const std::uint64_t per_matrix =
        big_pow(BigCount(F.q()), std::uint64_t(n) * k).convert_to<std::uint64_t>();
    const std::uint64_t shards = planned_shards(total);

    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> parts(shards, 0);
    std::vector<std::uint64_t> first_bad(shards, kNone);
    parallel_shards(total, opts.jobs, [&](std::uint64_t s, std::uint64_t lo, std::uint64_t hi) {
        PolyMatrix member(F, n, k);
        for (std::uint64_t code = lo; code < hi; ++code) {
            build_member(F, n, k, m, code, per_matrix, member);
            if (is_unimodular(member))
                ++parts[s];
            else if (first_bad[s] == kNone)
                first_bad[s] = code;
        }
    });

    ConjectureVerdict v;
    std::uint64_t count = 0;
    for (std::uint64_t p : parts) count += p;
    v.unimodular_count = count;
    v.total = total;
    v.predicted = delta(n, k, BigCount(F.q()));
    v.observed = ExactRational(v.unimodular_count, v.total);
    v.match = v.observed == v.predicted;
    if (!v.match) {
        std::uint64_t bad = kNone;
        for (std::uint64_t c : first_bad)
            if (c != kNone) {
                bad = c;
                break;  // shards are ascending code ranges
            }
        if (bad != kNone) v.witness = dump_member(family_member(F, n, k, m, bad), bad);
    }
    return v;
}

bool m1_crosscheck(const FieldCtx& F, unsigned n, unsigned k, const RunOptions& opts) {
    const ConjectureVerdict v = verify_conjecture(F, n, k, 1, opts);
    return v.unimodular_count == count_unimodular_pencils(F, n, k, opts);
}

}  // namespace fqcensus
