#include "fqcensus/poly.hpp"

#include <stdexcept>

namespace fqcensus {

PolyFq::PolyFq(const FieldCtx& F, std::vector<Elem> coeffs) : F_(&F), c_(std::move(coeffs)) {
    trim();
}

void PolyFq::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFq PolyFq::constant(const FieldCtx& F, Elem c) {
    PolyFq r(F);
    if (c != 0) r.c_ = {c};
    return r;
}

PolyFq PolyFq::x(const FieldCtx& F) { return monomial(F, 1); }

PolyFq PolyFq::monomial(const FieldCtx& F, unsigned deg, Elem c) {
    PolyFq r(F);
    if (c != 0) {
        r.c_.assign(deg + 1, 0);
        r.c_[deg] = c;
    }
    return r;
}

PolyFq PolyFq::operator+(const PolyFq& o) const {
    if (!F_->same_field(*o.F_)) throw std::invalid_argument("polynomial context mismatch");
    PolyFq r(*F_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = F_->add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    r.trim();
    return r;
}

PolyFq PolyFq::operator-() const {
    PolyFq r(*F_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_->neg(c_[i]);
    return r;
}

PolyFq PolyFq::operator-(const PolyFq& o) const { return *this + (-o); }

PolyFq PolyFq::operator*(const PolyFq& o) const {
    if (!F_->same_field(*o.F_)) throw std::invalid_argument("polynomial context mismatch");
    PolyFq r(*F_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = F_->add(r.c_[i + j], F_->mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

PolyFq PolyFq::scaled(Elem c) const {
    PolyFq r(*F_);
    if (c == 0) return r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_->mul(c, c_[i]);
    r.trim();
    return r;
}

bool PolyFq::operator==(const PolyFq& o) const {
    return F_->same_field(*o.F_) && c_ == o.c_;
}

PolyFq PolyFq::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    return scaled(F_->inv(c_.back()));
}

std::string PolyFq::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || c_[i] != 1) s += std::to_string(c_[i]);
        if (i > 0) {
            if (c_[i] != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

PolyDivMod divmod(const PolyFq& a, const PolyFq& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const FieldCtx& F = a.ctx();
    if (!F.same_field(b.ctx())) throw std::invalid_argument("polynomial context mismatch");

    std::vector<Elem> rem(a.coeffs());
    const int db = b.deg();
    if (a.deg() < db) return {PolyFq(F), a};

    std::vector<Elem> quot(a.deg() - db + 1, 0);
    const Elem lead_inv = F.inv(b.lead());
    for (int i = a.deg(); i >= db; --i) {
        const Elem c = rem[i];
        if (c == 0) continue;
        const Elem f = F.mul(c, lead_inv);
        quot[i - db] = f;
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] = F.sub(rem[i - db + j], F.mul(f, b.coeff(j)));
    }
    return {PolyFq(F, std::move(quot)), PolyFq(F, std::move(rem))};
}

PolyFq gcd(const PolyFq& a, const PolyFq& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    PolyFq u = a.monic(), v = b.monic();
    if (u.is_zero()) return v;
    while (!v.is_zero()) {
        PolyFq r = divmod(u, v).rem;
        u = std::move(v);
        v = r.monic();
    }
    return u;
}

PolyFq monic_poly_from_code(const FieldCtx& F, unsigned deg, std::uint64_t code) {
    std::vector<Elem> c(deg + 1, 0);
    for (unsigned i = 0; i < deg; ++i) {
        c[i] = static_cast<Elem>(code % F.q());
        code /= F.q();
    }
    c[deg] = 1;
    return PolyFq(F, std::move(c));
}

bool is_irreducible(const PolyFq& f) {
    if (f.deg() < 1) throw std::invalid_argument("irreducibility of a constant is undefined");
    const FieldCtx& F = f.ctx();
    const unsigned d = static_cast<unsigned>(f.deg());
    for (unsigned t = 1; t <= d / 2; ++t) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < t; ++i) count *= F.q();
        for (std::uint64_t code = 0; code < count; ++code) {
            if (divmod(f, monic_poly_from_code(F, t, code)).rem.is_zero()) return false;
        }
    }
    return true;
}

namespace {

int mobius(unsigned n) {
    int mu = 1;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;  // squared factor
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

BigCount count_irreducibles(unsigned n, const FieldCtx& F) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    const BigCount q = F.q();
    BigCount sum = 0;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const int mu = mobius(d);
        if (mu == 1)
            sum += big_pow(q, n / d);
        else if (mu == -1)
            sum -= big_pow(q, n / d);
    }
    BigCount quot, rem;
    boost::multiprecision::divide_qr(sum, BigCount(n), quot, rem);
    if (rem != 0) throw verification_error("necklace count not divisible by degree");
    return quot;
}

}  // namespace fqcensus
