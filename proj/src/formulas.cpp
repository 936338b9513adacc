#include "fqcensus/formulas.hpp"

#include <stdexcept>

#include "fqcensus/errors.hpp"

namespace fqcensus {

BigCount gauss_binom(unsigned n, unsigned k, const BigCount& q) {
    if (q < 2) throw std::invalid_argument("gauss_binom requires q >= 2");
    if (k > n) return 0;
    if (k > n - k) k = n - k;  // symmetry keeps the products short
    BigCount num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= big_pow(q, n - i) - 1;
        den *= big_pow(q, k - i) - 1;
    }
    BigCount quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) throw verification_error("gaussian binomial division not exact");
    return quot;
}

BigCount psi(unsigned n, unsigned k, const BigCount& q) {
    if (k >= n) throw std::invalid_argument("psi requires k < n");
    const BigCount qn = big_pow(q, n);
    BigCount r = 1;
    for (unsigned i = 1; i <= k; ++i) r *= qn - big_pow(q, i);
    return r;
}

BigCount sigma_formula(unsigned n, unsigned k, unsigned l, const BigCount& q) {
    if (l > k || k > n) throw std::invalid_argument("sigma requires l <= k <= n");
    return gauss_binom(k, l, q) * gauss_binom(n - k, k - l, q) *
           big_pow(q, std::uint64_t(k - l) * (k - l));
}

BigCount gl_order(unsigned k, const BigCount& q) {
    const BigCount qk = big_pow(q, k);
    BigCount r = 1;
    for (unsigned i = 0; i < k; ++i) r *= qk - big_pow(q, i);
    return r;
}

BigCount mu(unsigned k, unsigned l, const BigCount& q) {
    if (l > k) throw std::invalid_argument("mu requires l <= k");
    if (k == 0) return 1;
    return big_pow(q, k) - big_pow(q, l);
}

BigCount tau_closed(unsigned k, unsigned l, const BigCount& q) {
    if (l > k) throw std::invalid_argument("tau requires l <= k");
    const BigCount qk = big_pow(q, k);
    BigCount r = mu(k, l, q);
    for (unsigned i = 1; i < k; ++i) r *= qk - big_pow(q, i);
    return r;
}

const BigCount& TauRecurrence::value(unsigned k, unsigned l) {
    if (l > k) throw std::invalid_argument("tau requires l <= k");
    const auto key = std::make_pair(k, l);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    BigCount v;
    if (k == l) {
        v = (k == 0) ? 1 : 0;
    } else if (l == 0) {
        v = gl_order(k, q_);
    } else {
        const BigCount qk = big_pow(q_, k);
        BigCount ext = 1;  // ways to extend off the intersection
        for (unsigned i = l; i < k; ++i) ext *= qk - big_pow(q_, i);
        BigCount sum = 0;
        for (unsigned m = 0; m <= l; ++m) sum += sigma_formula(k, l, m, q_) * value(l, m);
        v = sum * ext;
    }
    return memo_.emplace(key, std::move(v)).first->second;
}

BigCount tau_recurrence(unsigned k, unsigned l, const BigCount& q) {
    TauRecurrence table(q);
    return table.value(k, l);
}

BigCount psi_from_sum(unsigned n, unsigned k, const BigCount& q) {
    if (k >= n) throw std::invalid_argument("psi requires k < n");
    BigCount sum = 0;
    for (unsigned l = 0; l <= k; ++l) sum += sigma_formula(n, k, l, q) * tau_closed(k, l, q);
    return sum;
}

bool tau_psi_relation(unsigned n, unsigned k, const BigCount& q) {
    if (k >= n) throw std::invalid_argument("relation requires k < n");
    const BigCount qn = big_pow(q, n);
    BigCount rhs = psi(n, k, q);
    for (unsigned i = k; i < n; ++i) rhs *= qn - big_pow(q, i);
    return tau_closed(n, k, q) == rhs;
}

ExactRational delta(unsigned n, unsigned k, const BigCount& q) {
    if (k >= n) throw std::invalid_argument("delta requires k < n");
    return ExactRational(psi(n, k, q), big_pow(q, std::uint64_t(n) * k));
}

}  // namespace fqcensus
