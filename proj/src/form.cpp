#include "acp/form.hpp"

#include <algorithm>

namespace acp {

FormSpec FormSpec::identity(const FieldTower& t, std::size_t n) {
    FormSpec f;
    f.mu.assign(n, t.top()->one());
    f.sigma.resize(n);
    for (std::size_t i = 0; i < n; ++i) f.sigma[i] = i;
    f.pi_exp = 0;
    return f;
}

FormSpec FormSpec::make(const FieldTower& t, std::vector<Elem> mu, std::vector<std::size_t> sigma,
                        unsigned pi_exp) {
    const std::size_t n = mu.size();
    if (sigma.size() != n) throw std::invalid_argument("mu and sigma lengths differ");
    std::vector<bool> seen(n, false);
    for (std::size_t s : sigma) {
        if (s >= n || seen[s]) throw std::invalid_argument("sigma is not a permutation");
        seen[s] = true;
    }
    for (const Elem& m : mu) {
        t.require_top(m);
        if (m.is_zero()) throw std::invalid_argument("mu coordinates must be nonzero");
    }
    if (pi_exp >= t.k() * t.m()) throw std::invalid_argument("automorphism exponent out of range");
    FormSpec f;
    f.mu = std::move(mu);
    f.sigma = std::move(sigma);
    f.pi_exp = pi_exp;
    return f;
}

std::vector<std::size_t> FormSpec::sigma_inverse() const {
    std::vector<std::size_t> inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i]] = i;
    return inv;
}

bool FormSpec::is_identity() const {
    if (pi_exp != 0) return false;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        if (sigma[i] != i || !mu[i].is_one()) return false;
    return true;
}

std::vector<std::size_t> antidiagonal_sigma(std::size_t n) {
    std::vector<std::size_t> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = n - 1 - i;
    return s;
}

Elem eval_Btilde(const FieldTower& t, const FormSpec& f, std::span<const Elem> a, std::span<const Elem> b) {
    const std::size_t n = f.length();
    if (a.size() != n || b.size() != n) throw std::invalid_argument("vector length mismatch");
    Elem acc = t.top()->zero();
    for (std::size_t i = 0; i < n; ++i) {
        t.require_top(a[i]);
        t.require_top(b[f.sigma[i]]);
        acc = acc + f.mu[i] * a[i] * t.frobenius(f.pi_exp, b[f.sigma[i]]);
    }
    return acc;
}

Elem eval_B(const FieldTower& t, const FormSpec& f, std::span<const Elem> a, std::span<const Elem> b) {
    return t.trace_to_mid(eval_Btilde(t, f, a, b));
}

Mat form_product_matrix(const FieldTower& t, const FormSpec& f, const Mat& g) {
    if (g.field() != t.top()) throw std::invalid_argument("expected a top-level matrix");
    if (g.cols() != f.length()) throw std::invalid_argument("form length mismatch");
    const std::size_t n = f.length();
    Mat out(t.top(), n, g.rows());
    for (std::size_t j = 0; j < g.rows(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            out.at(i, j) = f.mu[i] * t.frobenius(f.pi_exp, g.at(j, f.sigma[i]));
    return out;
}

namespace {

// The nm x k mid-field matrix of the F_q-linear map x -> (B(x, c_j))_j on
// expanded coordinates; its left kernel is the left dual.
Mat left_dual_system(const FieldTower& t, const FormSpec& f, const Mat& basis) {
    const std::size_t n = f.length(), m = t.m(), k = basis.rows();
    Mat sys(t.mid(), n * m, k);
    Elem alpha = t.alpha();
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            Elem core = f.mu[i] * t.frobenius(f.pi_exp, basis.at(j, f.sigma[i]));
            Elem power = t.top()->one();
            for (std::size_t l = 0; l < m; ++l) {
                sys.at(i * m + l, j) = t.trace_to_mid(power * core);
                power = power * alpha;
            }
        }
    }
    return sys;
}

// Same for the map y -> (sum_i Tr(mu_i c_i y_sigma(i)))_j; the right dual is
// the entrywise pi^{-1} image of this system's left kernel.
Mat right_dual_system(const FieldTower& t, const FormSpec& f, const Mat& basis) {
    const std::size_t n = f.length(), m = t.m(), k = basis.rows();
    std::vector<std::size_t> sinv = f.sigma_inverse();
    Mat sys(t.mid(), n * m, k);
    Elem alpha = t.alpha();
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t u = 0; u < n; ++u) {
            std::size_t i = sinv[u];
            Elem core = f.mu[i] * basis.at(j, i);
            Elem power = t.top()->one();
            for (std::size_t l = 0; l < m; ++l) {
                sys.at(u * m + l, j) = t.trace_to_mid(power * core);
                power = power * alpha;
            }
        }
    }
    return sys;
}

AdditiveCode dual_from_system(const FieldTower& t, std::size_t n, const Mat& sys) {
    Mat lk = left_kernel(sys);  // rows are expanded coordinates of dual vectors
    if (lk.rows() == 0) return AdditiveCode::zero(t, n);
    return AdditiveCode::span_fq(t, contract_coords(t, lk));
}

}  // namespace

AdditiveCode left_dual(const FormSpec& f, const AdditiveCode& c) {
    if (f.length() != c.length()) throw std::invalid_argument("form length mismatch");
    const FieldTower& t = c.tower();
    if (c.dim_fq() == 0) return AdditiveCode::full(t, c.length());
    return dual_from_system(t, c.length(), left_dual_system(t, f, c.basis()));
}

AdditiveCode right_dual(const FormSpec& f, const AdditiveCode& c) {
    if (f.length() != c.length()) throw std::invalid_argument("form length mismatch");
    const FieldTower& t = c.tower();
    if (c.dim_fq() == 0) return AdditiveCode::full(t, c.length());
    AdditiveCode pre = dual_from_system(t, c.length(), right_dual_system(t, f, c.basis()));
    if (f.pi_exp == 0) return pre;
    unsigned inv_exp = static_cast<unsigned>((t.k() * t.m() - f.pi_exp) % (t.k() * t.m()));
    Mat mapped = frobenius_entrywise(t, inv_exp, pre.basis());
    return AdditiveCode::span_fq(t, mapped);
}

Mat parity_check(const FormSpec& f, const AdditiveCode& c) { return left_dual(f, c).basis(); }

}  // namespace acp
