#pragma once

// Univariate polynomials over F_q: ring arithmetic, monic gcd,
// irreducibility by trial division, and the irreducible-count formula.

#include <cstdint>
#include <string>
#include <vector>

#include "fqcensus/field.hpp"
#include "fqcensus/numbers.hpp"

namespace fqcensus {

class PolyFq {
public:
    explicit PolyFq(const FieldCtx& F) : F_(&F) {}
    PolyFq(const FieldCtx& F, std::vector<Elem> coeffs);  // trims trailing zeros

    static PolyFq constant(const FieldCtx& F, Elem c);
    static PolyFq x(const FieldCtx& F);
    static PolyFq monomial(const FieldCtx& F, unsigned deg, Elem c = 1);

    const FieldCtx& ctx() const { return *F_; }
    // Degree; -1 is the sentinel for deg(0) = -infinity.
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Elem coeff(unsigned i) const { return i < c_.size() ? c_[i] : 0; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<Elem>& coeffs() const { return c_; }

    PolyFq operator+(const PolyFq& o) const;
    PolyFq operator-(const PolyFq& o) const;
    PolyFq operator-() const;
    PolyFq operator*(const PolyFq& o) const;
    PolyFq scaled(Elem c) const;  // c * this
    bool operator==(const PolyFq& o) const;
    bool operator!=(const PolyFq& o) const { return !(*this == o); }

    PolyFq monic() const;  // normalizes the leading coefficient to 1

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    const FieldCtx* F_;
    std::vector<Elem> c_;  // low-to-high, no trailing zeros; empty = zero
};

struct PolyDivMod {
    PolyFq quot;
    PolyFq rem;
};

// Euclidean division; deg(rem) < deg(divisor). Throws std::domain_error
// on a zero divisor.
PolyDivMod divmod(const PolyFq& a, const PolyFq& b);

// Monic gcd via Euclid with monic normalization at each step.
// gcd(f, 0) = monic(f); gcd(0, 0) throws std::domain_error.
PolyFq gcd(const PolyFq& a, const PolyFq& b);

// Trial division by every monic polynomial of degree <= deg(f)/2.
// Constant input throws std::invalid_argument.
bool is_irreducible(const PolyFq& f);

// Number of monic irreducible polynomials of degree n over F_q,
// (1/n) sum_{d|n} mobius(d) q^{n/d}.
BigCount count_irreducibles(unsigned n, const FieldCtx& F);

// The monic degree-deg polynomial whose low coefficients are the base-q
// digits of code. Enumeration key for monic polynomials.
PolyFq monic_poly_from_code(const FieldCtx& F, unsigned deg, std::uint64_t code);

}  // namespace fqcensus
