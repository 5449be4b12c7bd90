#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "acp/oracle.hpp"
#include "acp/poly.hpp"
#include "acp/verdict.hpp"

namespace acp {

using BigInt = boost::multiprecision::cpp_int;

/// Orbit partition of Z_N under multiplication by b (requires gcd(b,N)=1).
/// Cosets are sorted internally and listed by ascending least representative.
struct CosetPartition {
    u64 n_mod = 0;
    u64 base = 0;
    std::vector<std::vector<u64>> cosets;
};
CosetPartition cyclotomic_cosets(u64 n_mod, u64 base);

/// One block of the semisimple decomposition of F_{q^m}[X]/(X^n - lambda):
/// the q-coset of root exponents, the factor of X^n - lambda over F_q, its
/// irreducible factors over F_{q^m}, the component field K = F_q[X]/(p), and
/// an m-element K-basis of the block inside F_{q^m}^n.
struct Component {
    std::vector<u64> coset;          // root exponents (mod N)
    u64 root_order = 0;              // multiplicative order of its roots
    Poly factor_mid;                 // p_i over F_q
    std::vector<Poly> factors_top;   // irreducible pieces over F_{q^m}
    bool merged = false;             // more than one top factor
    const Field* component_field = nullptr;  // K = F_q[X]/(p_i)
    std::vector<Elem> idempotent;    // e_i as a vector in F_q^n (mid level)
    Mat k_basis;                     // m rows over the top field spanning the block over K
};

struct RingDecomposition {
    FieldTower tower;
    std::size_t n = 0;
    Elem lambda;      // mid level
    u64 t = 0;        // multiplicative order of lambda
    u64 n_mod = 0;    // N = n t
    std::vector<Component> components;

    std::size_t degree(std::size_t i) const { return static_cast<std::size_t>(components[i].factor_mid.degree()); }
};

enum class FactorLevel { mid, top };

/// Factors X^n - lambda into monic irreducibles over F_q or F_{q^m}; factors
/// are listed per coset in canonical order (ascending root order, then least
/// coset representative) and re-multiply to X^n - lambda exactly.
std::vector<Poly> factor_xn_minus_lambda(const FieldTower& t, std::size_t n, const Elem& lambda,
                                         FactorLevel level);

/// Full decomposition: both factorizations, the shared/merged classification
/// and explicit component bases. Requires gcd(n, p) = 1 and lambda != 0.
RingDecomposition decompose_ring(const FieldTower& t, std::size_t n, const Elem& lambda);

/// The lambda-constacyclic shift (c_0,...,c_{n-1}) -> (lambda c_{n-1}, c_0,
/// ..., c_{n-2}).
std::vector<Elem> constacyclic_shift(const FieldTower& t, const Elem& lambda, std::span<const Elem> v);

/// True when the shift of every basis row stays in the code.
bool is_constacyclic(const AdditiveCode& c, const Elem& lambda);

/// The K_i-coordinate matrix (rref over K_i) of the projection of C onto
/// component i; rows are K_i-coordinates w.r.t. the component basis.
Mat component_coordinates(const AdditiveCode& c, const RingDecomposition& dec, std::size_t i);

/// Projections of C onto every component, returned as additive codes; their
/// join reassembles C exactly.
std::vector<AdditiveCode> components(const AdditiveCode& c, const RingDecomposition& dec);

/// Componentwise complementarity test; equals the definitional check for
/// shift-closed codes. Reports the first failing component index.
struct ConstacyclicVerdict {
    bool complementary = false;
    std::optional<std::size_t> failing_component;
};
ConstacyclicVerdict is_acp_constacyclic(const AdditiveCode& c, const AdditiveCode& d,
                                        const RingDecomposition& dec);

/// Exact Gaussian binomial [m v]_Q.
BigInt gaussian_binomial(std::size_t m, std::size_t v, const BigInt& q);

/// Number of shift-closed complementary pairs: the product over all
/// components of sum_v [m v]_{q_i} q_i^{v(m-v)} with q_i = q^{d_i}.
BigInt count_acp(const FieldTower& t, std::size_t n, const Elem& lambda);

enum class EnumerationMode { componentwise, raw };

/// Oracle for count_acp: componentwise mode multiplies per-component pair
/// counts found by explicit subspace enumeration; raw mode enumerates every
/// F_q-subspace of F_{q^m}^n, filters the shift-closed ones and counts
/// complementary pairs. Both modes agree wherever both run.
BigInt enumerate_constacyclic_acp(const FieldTower& t, std::size_t n, const Elem& lambda,
                                  EnumerationMode mode, const EnumBudget& budget = {});

}  // namespace acp
