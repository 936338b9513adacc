#pragma once

// Finite fields F_q, q = p^e. Elements are stored as integer codes in
// [0, q): the code is the base-p digit string (c_0, ..., c_{e-1}) of the
// coefficient vector of sum c_i a^i, where a is a root of the field
// modulus. Code 0 is the additive identity and code 1 the multiplicative
// identity; the encoding is a bijection between [0, q) and the field.
//
// A FieldCtx is immutable after construction and safe to share across
// threads; every operation is pure. Element codes are only meaningful
// relative to the context that produced them.

#include <cstdint>
#include <vector>

#include "fqcensus/errors.hpp"

namespace fqcensus {

using Elem = std::uint32_t;

struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    std::vector<std::uint32_t> modulus;  // monic, degree e, coeffs low-to-high over F_p
    bool operator==(const FieldSpec&) const = default;
};

class FieldCtx {
public:
    // Largest supported field order.
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

    // Builds F_{p^e} with the lexicographically smallest monic irreducible
    // modulus of degree e over F_p (coefficients compared low-degree-first
    // as base-p digits). Deterministic across runs and machines.
    FieldCtx(std::uint32_t p, std::uint32_t e);

    // Override hook: builds the field on an explicit modulus (monic,
    // degree e, irreducible over F_p; for e = 1 it must be the canonical
    // x, i.e. {0, 1}). Intended for cross-checking against other tools.
    FieldCtx(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    FieldSpec spec() const { return FieldSpec{p_, e_, modulus_}; }

    // Two contexts describe the same field iff their (p, e, modulus)
    // triples match; element codes are interchangeable exactly then.
    bool same_field(const FieldCtx& other) const {
        return this == &other ||
               (p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_);
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    // Embeds an integer via the prime subfield: v mod p as a constant.
    Elem of_int(std::uint64_t v) const { return static_cast<Elem>(v % p_); }

    Elem add(Elem a, Elem b) const {
        if (!add_tab_.empty()) return add_tab_[std::size_t(a) * q_ + b];
        return add_slow(a, b);
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const {
        if (!neg_tab_.empty()) return neg_tab_[a];
        return neg_slow(a);
    }
    Elem mul(Elem a, Elem b) const {
        if (!mul_tab_.empty()) return mul_tab_[std::size_t(a) * q_ + b];
        return mul_slow(a, b);
    }
    // Throws std::domain_error on inversion of zero.
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t n) const;

    // All q elements in increasing code order, starting at 0.
    std::vector<Elem> elements() const;

private:
    void init(std::vector<std::uint32_t> modulus);
    Elem add_slow(Elem a, Elem b) const;
    Elem neg_slow(Elem a) const;
    Elem mul_slow(Elem a, Elem b) const;

    std::uint32_t p_ = 2;
    std::uint32_t e_ = 1;
    std::uint32_t q_ = 2;
    std::vector<std::uint32_t> modulus_;

    // Small-field operation tables, filled from the schoolbook routines at
    // construction. Purely an access-path optimization.
    static constexpr std::uint32_t kTableLimit = 256;
    std::vector<Elem> add_tab_;
    std::vector<Elem> mul_tab_;
    std::vector<Elem> neg_tab_;
    std::vector<Elem> inv_tab_;  // inv_tab_[0] unused
};

}  // namespace fqcensus
