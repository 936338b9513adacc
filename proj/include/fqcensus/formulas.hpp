#pragma once

// Exact closed forms and recurrences over arbitrary-precision integers:
// Gaussian binomials, psi, sigma, tau (closed form and recurrence), mu,
// |GL_k|, and the unimodularity density delta. All functions are pure and
// exact; no floating point anywhere.

#include <map>
#include <utility>

#include "fqcensus/numbers.hpp"

namespace fqcensus {

// Gaussian binomial [n, k]_q: the number of k-dimensional subspaces of an
// n-dimensional space over F_q. Returns 0 for k > n by convention.
// Requires q >= 2; computed by exact division of products.
BigCount gauss_binom(unsigned n, unsigned k, const BigCount& q);

// psi(n, k) = prod_{i=1}^{k} (q^n - q^i); the common answer to all four
// counting problems. Requires 0 <= k < n; k = 0 gives the empty product 1.
BigCount psi(unsigned n, unsigned k, const BigCount& q);

// sigma(n, k, l) = [k, l]_q [n-k, k-l]_q q^{(k-l)^2}: the number of
// k-dimensional subspaces meeting a fixed k-dimensional subspace in
// dimension l. Zero when k - l > n - k (binomial convention).
BigCount sigma_formula(unsigned n, unsigned k, unsigned l, const BigCount& q);

// |GL_k(F_q)| = prod_{i=0}^{k-1} (q^k - q^i); 1 for k = 0.
BigCount gl_order(unsigned k, const BigCount& q);

// mu(k, l): 1 when k = l = 0, otherwise q^k - q^l.
BigCount mu(unsigned k, unsigned l, const BigCount& q);

// tau(k, l) = mu(k, l) * prod_{i=1}^{k-1} (q^k - q^i): the number of
// simple maps between two k-dimensional subspaces meeting in dimension l.
BigCount tau_closed(unsigned k, unsigned l, const BigCount& q);

// tau by its recurrence
//   tau(k, l) = sum_{m=0}^{l} sigma(k, l, m) tau(l, m) prod_{i=l}^{k-1} (q^k - q^i)
// with base cases tau(0,0) = 1, tau(k,k) = 0 and tau(k,0) = |GL_k| for
// k >= 1. The degenerate self-referential l = k instance reduces to
// tau = tau and is excluded in favor of the base case.
//
// A TauRecurrence instance memoizes per (k, l) for one q. Instances are
// not internally synchronized: confine one to a worker or guard it.
class TauRecurrence {
public:
    explicit TauRecurrence(BigCount q) : q_(std::move(q)) {}
    const BigCount& value(unsigned k, unsigned l);

private:
    BigCount q_;
    std::map<std::pair<unsigned, unsigned>, BigCount> memo_;
};

// One-shot convenience wrapper around TauRecurrence.
BigCount tau_recurrence(unsigned k, unsigned l, const BigCount& q);

// psi recovered from sigma and tau: sum_{l=0}^{k} sigma(n,k,l) tau(k,l).
// Must agree with psi(n, k, q); the equality is the identity under test.
BigCount psi_from_sum(unsigned n, unsigned k, const BigCount& q);

// True iff tau(n, k) = psi(n, k) * prod_{i=k}^{n-1} (q^n - q^i), the
// relation that yields the main counting theorem.
bool tau_psi_relation(unsigned n, unsigned k, const BigCount& q);

// delta(n, k) = prod_{i=1}^{k} (1 - q^{i-n}) = psi(n, k) / q^{nk}, the
// exact probability that a uniformly random pencil is unimodular.
// Requires 0 <= k < n.
ExactRational delta(unsigned n, unsigned k, const BigCount& q);

}  // namespace fqcensus
