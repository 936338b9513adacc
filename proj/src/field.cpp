#include "fqcensus/field.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace fqcensus {

namespace {

// Plain F_p[x] helpers over raw coefficient vectors (low-to-high). These
// run before any FieldCtx exists: the modulus search cannot depend on the
// field it is about to define.

void trim(std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Remainder of a by monic divisor b over F_p.
std::vector<std::uint32_t> fp_rem(std::vector<std::uint32_t> a,
                                  const std::vector<std::uint32_t>& b,
                                  std::uint32_t p) {
    const std::size_t db = b.size() - 1;  // b monic, nonzero
    while (a.size() > db) {
        const std::uint64_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j < db; ++j) {
                const std::uint64_t t = lead * b[j] % p;
                a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - t) % p);
            }
        }
        a.pop_back();
    }
    trim(a);
    return a;
}

std::vector<std::uint32_t> digits_of(std::uint64_t code, std::uint32_t p, std::uint32_t len) {
    std::vector<std::uint32_t> d(len);
    for (std::uint32_t i = 0; i < len; ++i) {
        d[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    return d;
}

// Trial division by every monic polynomial of degree <= deg(f)/2.
bool fp_is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::size_t d = f.size() - 1;
    for (std::size_t t = 1; t <= d / 2; ++t) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < t; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint32_t> div = digits_of(code, p, static_cast<std::uint32_t>(t));
            div.push_back(1);
            if (fp_rem(f, div, p).empty()) return false;
        }
    }
    return true;
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t e,
                                                std::uint64_t q) {
    for (std::uint64_t code = 0; code < q; ++code) {
        std::vector<std::uint32_t> f = digits_of(code, p, e);
        f.push_back(1);
        if (fp_is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible modulus found");  // unreachable
}

}  // namespace

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t e) {
    p_ = p;
    e_ = e;
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds configured bound");
    }
    init(smallest_irreducible(p, e, q));
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
    p_ = p;
    e_ = e;
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds configured bound");
    }
    if (modulus.size() != std::size_t(e) + 1 || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree e");
    for (std::uint32_t c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (e == 1 && modulus[0] != 0)
        throw std::invalid_argument("degree-1 modulus must be the canonical x");
    if (!fp_is_irreducible(modulus, p))
        throw std::invalid_argument("modulus is reducible over F_p");
    init(std::move(modulus));
}

void FieldCtx::init(std::vector<std::uint32_t> modulus) {
    modulus_ = std::move(modulus);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e_; ++i) q *= p_;
    q_ = static_cast<std::uint32_t>(q);

    if (q_ <= kTableLimit) {
        add_tab_.resize(std::size_t(q_) * q_);
        mul_tab_.resize(std::size_t(q_) * q_);
        neg_tab_.resize(q_);
        inv_tab_.assign(q_, 0);
        for (Elem a = 0; a < q_; ++a) {
            neg_tab_[a] = neg_slow(a);
            for (Elem b = 0; b < q_; ++b) {
                add_tab_[std::size_t(a) * q_ + b] = add_slow(a, b);
                mul_tab_[std::size_t(a) * q_ + b] = mul_slow(a, b);
            }
        }
        for (Elem a = 1; a < q_; ++a) {
            for (Elem b = 1; b < q_; ++b) {
                if (mul_tab_[std::size_t(a) * q_ + b] == 1) {
                    inv_tab_[a] = b;
                    break;
                }
            }
        }
    }
}

Elem FieldCtx::add_slow(Elem a, Elem b) const {
    if (e_ == 1) {
        const std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem r = 0;
    std::uint32_t mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        const std::uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        std::uint32_t s = da + db;
        if (s >= p_) s -= p_;
        r += s * mult;
        mult *= p_;
    }
    return r;
}

Elem FieldCtx::neg_slow(Elem a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    Elem r = 0;
    std::uint32_t mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        const std::uint32_t d = a % p_;
        a /= p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
    }
    return r;
}

// Schoolbook polynomial multiply followed by reduction mod the modulus,
// all at the digit level.
Elem FieldCtx::mul_slow(Elem a, Elem b) const {
    if (e_ == 1) return static_cast<Elem>(std::uint64_t(a) * b % p_);

    std::array<std::uint32_t, 64> da{}, db{}, t{};
    for (std::uint32_t i = 0; i < e_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < e_; ++j)
            t[i + j] = static_cast<std::uint32_t>((t[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
    }
    // x^e == -(m_0 + m_1 x + ... + m_{e-1} x^{e-1})
    for (std::uint32_t i = 2 * e_ - 2; i >= e_; --i) {
        const std::uint32_t c = t[i];
        if (c != 0) {
            t[i] = 0;
            for (std::uint32_t j = 0; j < e_; ++j) {
                const std::uint64_t sub = std::uint64_t(c) * modulus_[j] % p_;
                t[i - e_ + j] = static_cast<std::uint32_t>((t[i - e_ + j] + p_ - sub) % p_);
            }
        }
        if (i == e_) break;
    }
    Elem r = 0;
    std::uint32_t mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += t[i] * mult;
        mult *= p_;
    }
    return r;
}

Elem FieldCtx::pow(Elem a, std::uint64_t n) const {
    Elem r = 1, b = a;
    while (n != 0) {
        if (n & 1) r = mul(r, b);
        b = mul(b, b);
        n >>= 1;
    }
    return r;
}

Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inversion of zero field element");
    if (!inv_tab_.empty()) return inv_tab_[a];
    return pow(a, std::uint64_t(q_) - 2);  // Lagrange: a^(q-1) = 1
}

std::vector<Elem> FieldCtx::elements() const {
    std::vector<Elem> v(q_);
    for (Elem i = 0; i < q_; ++i) v[i] = i;
    return v;
}

}  // namespace fqcensus
