#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acp/errors.hpp"

namespace acp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

class Field;

/// An element of a finite field, stored as its coordinate vector over the
/// prime subfield (low index = low basis power). Elements are immutable
/// values and may be shared freely between threads.
class Elem {
public:
    Elem() = default;  // invalid element (no field attached)
    Elem(const Field* f, std::vector<std::uint16_t> coords);

    const Field* field() const { return f_; }
    bool valid() const { return f_ != nullptr; }
    bool is_zero() const;
    bool is_one() const;
    std::span<const std::uint16_t> coords() const { return c_; }

    /// Base-p integer encoding of the coordinate vector; defines the
    /// canonical total order used by all deterministic scans.
    u128 value() const;

    Elem operator+(const Elem& o) const;
    Elem operator-(const Elem& o) const;
    Elem operator-() const;
    Elem operator*(const Elem& o) const;
    Elem inverse() const;
    Elem pow(u128 e) const;

    bool operator==(const Elem& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Elem& o) const { return !(*this == o); }

private:
    const Field* f_ = nullptr;
    std::vector<std::uint16_t> c_;

    friend class Field;
    friend class PrimeField;
    friend class ExtField;
};

/// A finite field. Concrete instances are either prime fields F_p or
/// extensions base[X]/(modulus). Instances are interned: requesting the same
/// construction twice yields the same pointer, so pointer equality is field
/// equality. All instances are immutable and live for the program duration.
class Field {
public:
    virtual ~Field() = default;

    u64 characteristic() const { return p_; }
    std::size_t prime_dim() const { return dim_; }  // degree over F_p
    u128 size() const { return size_; }
    u64 size_u64() const;  // throws std::overflow_error when size > 2^64-1
    const Field* base() const { return base_; }  // nullptr for prime fields
    std::size_t degree() const { return deg_; }  // over base (1 for prime fields)

    Elem zero() const;
    Elem one() const;
    Elem from_int(u64 residue) const;       // embedding of a prime residue
    Elem from_value(u128 v) const;           // inverse of Elem::value
    Elem element(std::span<const Elem> base_coeffs) const;
    std::vector<Elem> coeffs_over_base(const Elem& x) const;
    Elem embed(const Elem& base_elem) const;        // base field -> this
    bool in_base(const Elem& x) const;              // lies in embedded base?
    Elem project_to_base(const Elem& x) const;      // requires in_base(x)
    const std::vector<Elem>& modulus() const;       // extensions only

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    virtual Elem mul(const Elem& a, const Elem& b) const = 0;
    virtual Elem inv(const Elem& a) const = 0;  // throws on zero
    Elem pow(const Elem& a, u128 e) const;

    /// Least t >= 1 with x^t = 1. Requires x != 0 and size() to fit in u64.
    u64 multiplicative_order(const Elem& x) const;

    /// First element in value order that generates the multiplicative group.
    /// Cached after the first call. Requires size() to fit in u64.
    const Elem& primitive_element() const;

    /// Discrete log of x with respect to primitive_element(); builds a log
    /// table on first use, so only sensible for small fields.
    std::optional<u64> dlog(const Elem& x) const;

    std::string name() const;  // e.g. "GF(9)"

protected:
    Field(u64 p, std::size_t dim, const Field* base, std::size_t deg);
    void check_same_field(const Elem& a, const Elem& b) const;
    void check_field(const Elem& a) const;

    u64 p_ = 0;
    std::size_t dim_ = 0;
    u128 size_ = 0;
    const Field* base_ = nullptr;
    std::size_t deg_ = 1;

private:
    mutable Elem prim_;                       // guarded by intern registry mutex
    mutable std::vector<u64> dlog_table_;     // value -> exponent+1, 0 = unset
};

bool is_prime(u64 n);

/// Interned prime field F_p. Throws std::invalid_argument for non-prime p.
const Field* prime_field(u64 p);

/// Interned extension base[X]/(modulus). The modulus must be monic of degree
/// >= 1 with coefficients in `base` (low-degree first, length degree+1) and
/// irreducible over it.
const Field* ext_field(const Field* base, const std::vector<Elem>& modulus);

/// Interned extension of the given degree over `base` using the canonical
/// modulus: the first monic irreducible polynomial of that degree in value
/// order (coefficients read as base-|base| digits, high power most
/// significant). This scan is the versioned default-modulus rule; it yields
/// X^2+X+1 for GF(4), X^3+X+1 for GF(8), X^2+1 for GF(9), X^2+2 for GF(25).
const Field* canonical_ext(const Field* base, std::size_t degree);
std::vector<Elem> canonical_modulus(const Field* base, std::size_t degree);

/// Version tag of the default-modulus rule shipped with this library.
inline constexpr const char* kModulusTableVersion = "modulus-scan-v1";

/// The tower F_p <= F_q <= F_{q^m} with q = p^k. Copyable descriptor; the
/// underlying fields are interned singletons.
class FieldTower {
public:
    /// Builds the tower, deriving canonical moduli unless explicit ones are
    /// supplied (low-degree-first residue digit lists over the level below).
    static FieldTower build(u64 p, std::size_t k, std::size_t m,
                            const std::vector<u64>* mid_modulus = nullptr,
                            const std::vector<u64>* top_modulus = nullptr);

    u64 p() const { return p_; }
    std::size_t k() const { return k_; }
    std::size_t m() const { return m_; }
    u64 q() const { return q_; }     // |mid|
    u64 qm() const { return qm_; }   // |top|

    const Field* prime() const { return prime_; }
    const Field* mid() const { return mid_; }
    const Field* top() const { return top_; }

    bool operator==(const FieldTower& o) const { return top_ == o.top_; }
    bool operator!=(const FieldTower& o) const { return !(*this == o); }

    /// Residue of X in the top field; {1, alpha, ..., alpha^{m-1}} is the
    /// mid-basis used by coordinate expansion and lifting.
    Elem alpha() const;

    /// Canonical primitive element of the top field (cached).
    Elem omega() const { return top_->primitive_element(); }

    Elem embed_to_top(const Elem& x) const;  // from prime, mid or top
    Elem embed_to_mid(const Elem& x) const;  // from prime or mid

    /// Tr(x) = x + x^q + ... + x^{q^{m-1}}, landing in the mid field.
    Elem trace_to_mid(const Elem& x) const;

    /// x -> x^{p^j} on the top field; requires 0 <= j < k*m.
    Elem frobenius(unsigned j, const Elem& x) const;

    /// The m mid-field coordinates of a top element w.r.t. {1,alpha,...}.
    std::vector<Elem> top_coords(const Elem& x) const;
    Elem from_top_coords(std::span<const Elem> mid_coeffs) const;

    void require_top(const Elem& x) const;
    void require_mid(const Elem& x) const;

private:
    u64 p_ = 0;
    std::size_t k_ = 0, m_ = 0;
    u64 q_ = 0, qm_ = 0;
    const Field* prime_ = nullptr;
    const Field* mid_ = nullptr;
    const Field* top_ = nullptr;
};

/// Embeds x into `target`, which must be reachable from x's field by a chain
/// of base-field steps (e.g. prime -> mid -> top).
Elem embed_into(const Elem& x, const Field* target);

}  // namespace acp
