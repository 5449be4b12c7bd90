#pragma once

#include <utility>
#include <vector>

#include "acp/gf.hpp"

namespace acp {

/// Dense univariate polynomial over a finite field, coefficients low-degree
/// first with trailing zeros stripped. degree() of the zero polynomial is -1,
/// the "minus infinity" marker.
class Poly {
public:
    Poly() = default;
    Poly(const Field* f, std::vector<Elem> coeffs);

    static Poly zero(const Field* f);
    static Poly one(const Field* f);
    static Poly x(const Field* f);
    static Poly constant(const Elem& c);
    /// X^n - lambda (lambda given in the same field).
    static Poly xn_minus(const Field* f, std::size_t n, const Elem& lambda);

    const Field* field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem coeff(std::size_t i) const;  // zero beyond degree
    Elem leading() const;             // requires nonzero

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Elem& s) const;
    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Quotient and remainder with deg(remainder) < deg(divisor).
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly mod(const Poly& divisor) const { return divmod(divisor).second; }

    Poly monic() const;  // requires nonzero

    /// Lifts coefficients into `target` (a field extending this one).
    Poly embedded(const Field* target) const;

private:
    const Field* f_ = nullptr;
    std::vector<Elem> c_;
    void strip();
};

/// Monic gcd; gcd(f, 0) is the monic normalization of f, gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b);

/// (base^e) mod modulus, exponent taken bit by bit.
Poly poly_powmod(const Poly& base, u128 e, const Poly& modulus);

/// X^(Q^reps) mod modulus where Q = |field|, computed by repeated Q-th powers.
Poly poly_frobenius_powmod(const Poly& modulus, std::size_t reps);

/// Irreducibility over the coefficient field via the standard test: f of
/// degree d is irreducible iff X^{Q^d} = X (mod f) and gcd(X^{Q^{d/r}} - X, f)
/// = 1 for every prime r | d. Throws on constant input.
bool is_irreducible(const Poly& f);

/// Horner evaluation; coefficients are embedded into x's field when x lives
/// in an extension of the coefficient field.
Elem poly_eval(const Poly& f, const Elem& x);

}  // namespace acp
