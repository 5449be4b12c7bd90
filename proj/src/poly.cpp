#include "acp/poly.hpp"

#include <algorithm>
#include <tuple>

namespace acp {

Poly::Poly(const Field* f, std::vector<Elem> coeffs) : f_(f), c_(std::move(coeffs)) {
    for (const Elem& c : c_)
        if (c.field() != f_) throw std::invalid_argument("polynomial coefficients must share one field");
    strip();
}

void Poly::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::zero(const Field* f) { return Poly(f, {}); }
Poly Poly::one(const Field* f) { return Poly(f, {f->one()}); }
Poly Poly::x(const Field* f) { return Poly(f, {f->zero(), f->one()}); }
Poly Poly::constant(const Elem& c) { return Poly(c.field(), {c}); }

Poly Poly::xn_minus(const Field* f, std::size_t n, const Elem& lambda) {
    if (n == 0) throw std::invalid_argument("length must be positive");
    std::vector<Elem> c(n + 1, f->zero());
    c[0] = f->neg(embed_into(lambda, f));
    c[n] = f->one();
    return Poly(f, std::move(c));
}

bool Poly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

Elem Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_->zero(); }

Elem Poly::leading() const {
    if (c_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    if (f_ != o.f_) throw std::invalid_argument("field mismatch");
    std::vector<Elem> c(std::max(c_.size(), o.c_.size()), f_->zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return Poly(f_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    if (f_ != o.f_) throw std::invalid_argument("field mismatch");
    std::vector<Elem> c(std::max(c_.size(), o.c_.size()), f_->zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return Poly(f_, std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Elem> c(c_.size(), f_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Poly(f_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (f_ != o.f_) throw std::invalid_argument("field mismatch");
    if (is_zero() || o.is_zero()) return zero(f_);
    std::vector<Elem> c(c_.size() + o.c_.size() - 1, f_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
    }
    return Poly(f_, std::move(c));
}

Poly Poly::operator*(const Elem& s) const {
    std::vector<Elem> c(c_.size(), f_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return Poly(f_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (f_ != divisor.f_) throw std::invalid_argument("field mismatch");
    if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    std::vector<Elem> rem = c_;
    const int dd = divisor.degree();
    const Elem lead_inv = divisor.leading().inverse();
    std::vector<Elem> quot(degree() >= dd ? degree() - dd + 1 : 0, f_->zero());
    for (int i = degree(); i >= dd; --i) {
        Elem& top = rem[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        Elem factor = top * lead_inv;
        quot[static_cast<std::size_t>(i - dd)] = factor;
        for (int j = 0; j <= dd; ++j) {
            std::size_t idx = static_cast<std::size_t>(i - dd + j);
            rem[idx] = rem[idx] - factor * divisor.c_[static_cast<std::size_t>(j)];
        }
    }
    return {Poly(f_, std::move(quot)), Poly(f_, std::move(rem))};
}

Poly Poly::monic() const {
    if (is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
    return *this * leading().inverse();
}

Poly Poly::embedded(const Field* target) const {
    std::vector<Elem> c;
    c.reserve(c_.size());
    for (const Elem& e : c_) c.push_back(embed_into(e, target));
    return Poly(target, std::move(c));
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b) {
    const Field* f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(f), s1 = Poly::zero(f);
    Poly t0 = Poly::zero(f), t1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Elem scale = r0.leading().inverse();
    return {r0 * scale, s0 * scale, t0 * scale};
}

Poly poly_powmod(const Poly& base, u128 e, const Poly& modulus) {
    Poly result = Poly::one(base.field()).mod(modulus);
    Poly sq = base.mod(modulus);
    while (e > 0) {
        if (e & 1) result = (result * sq).mod(modulus);
        e >>= 1;
        if (e > 0) sq = (sq * sq).mod(modulus);
    }
    return result;
}

Poly poly_frobenius_powmod(const Poly& modulus, std::size_t reps) {
    const Field* f = modulus.field();
    const u128 Q = f->size();
    Poly t = Poly::x(f).mod(modulus);
    for (std::size_t i = 0; i < reps; ++i) t = poly_powmod(t, Q, modulus);
    return t;
}

bool is_irreducible(const Poly& f) {
    const int d = f.degree();
    if (d < 1) throw std::invalid_argument("irreducibility is undefined for constants");
    if (d == 1) return true;
    const Field* F = f.field();
    Poly fm = f.monic();
    // gcd(X^{Q^{d/r}} - X, f) must be trivial for every prime r | d.
    std::size_t rest = static_cast<std::size_t>(d);
    std::vector<std::size_t> prime_divs;
    for (std::size_t r = 2; r * r <= rest; ++r) {
        if (rest % r) continue;
        prime_divs.push_back(r);
        while (rest % r == 0) rest /= r;
    }
    if (rest > 1) prime_divs.push_back(rest);
    for (std::size_t r : prime_divs) {
        Poly xq = poly_frobenius_powmod(fm, static_cast<std::size_t>(d) / r);
        Poly g = poly_gcd(xq - Poly::x(F), fm);
        if (g.degree() != 0) return false;
    }
    Poly xqd = poly_frobenius_powmod(fm, static_cast<std::size_t>(d));
    return (xqd - Poly::x(F)).mod(fm).is_zero();
}

Elem poly_eval(const Poly& f, const Elem& x) {
    const Field* target = x.field();
    Elem acc = target->zero();
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * x + embed_into(f.coeffs()[i], target);
    return acc;
}

}  // namespace acp
