#pragma once

#include "acp/code.hpp"

namespace acp {

/// The data (mu, sigma, pi) defining the pairings
///   B(a, b)  = sum_i Tr(mu_i a_i pi(b_sigma(i)))      into F_q
///   Bt(a, b) = sum_i     mu_i a_i pi(b_sigma(i))      into F_{q^m}
/// with mu_i nonzero top-level elements, sigma a permutation of the
/// coordinates (stored 0-based) and pi(x) = x^{p^pi_exp}.
struct FormSpec {
    std::vector<Elem> mu;
    std::vector<std::size_t> sigma;
    unsigned pi_exp = 0;

    static FormSpec identity(const FieldTower& t, std::size_t n);
    static FormSpec make(const FieldTower& t, std::vector<Elem> mu, std::vector<std::size_t> sigma,
                         unsigned pi_exp);

    std::size_t length() const { return mu.size(); }
    std::vector<std::size_t> sigma_inverse() const;
    bool is_identity() const;
};

/// sigma(i) = n-1-i, the reversal permutation.
std::vector<std::size_t> antidiagonal_sigma(std::size_t n);

Elem eval_B(const FieldTower& t, const FormSpec& f, std::span<const Elem> a, std::span<const Elem> b);
Elem eval_Btilde(const FieldTower& t, const FormSpec& f, std::span<const Elem> a, std::span<const Elem> b);

/// {a : B(a, c) = 0 for all c in C}; dim_fq(C) + dim_fq(left dual) = n m.
AdditiveCode left_dual(const FormSpec& f, const AdditiveCode& c);

/// {a : B(c, a) = 0 for all c in C}.
AdditiveCode right_dual(const FormSpec& f, const AdditiveCode& c);

/// F_q-generator matrix of the left dual; v is a member of C exactly when
/// B(h, v) = 0 for every row h.
Mat parity_check(const FormSpec& f, const AdditiveCode& c);

/// M (pi(G) P)^T as an n x rows(G) top-level matrix: column j holds the
/// vector (mu_i pi(g_j, sigma(i)))_i, so x . column_j = Bt(x, g_j).
Mat form_product_matrix(const FieldTower& t, const FormSpec& f, const Mat& g);

}  // namespace acp
