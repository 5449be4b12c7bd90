#include "acp/constacyclic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "acp/errors.hpp"

namespace acp {

namespace {

u64 order_mod(u64 b, u64 n_mod) {
    if (n_mod == 1) return 1;
    b %= n_mod;
    if (std::gcd(b, n_mod) != 1) throw std::invalid_argument("base must be coprime to the modulus");
    u64 t = 1;
    u64 cur = b;
    while (cur != 1) {
        cur = static_cast<u64>((static_cast<u128>(cur) * b) % n_mod);
        ++t;
    }
    return t;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

struct RootOfUnity {
    const Field* ext;
    Elem zeta;
};

// A primitive N-th root zeta with zeta^n = lambda, inside the canonical
// degree-L extension of `base`, L = ord(|base| mod N). The scan is
// deterministic: for ascending z in value order, y = z^((|E|-1)/N) is tested
// for exact order N; the first such y is raised to ascending exponents u
// coprime to N until zeta^n matches lambda.
RootOfUnity find_zeta(const Field* base, u64 n_mod, std::size_t n, const Elem& lambda) {
    if (n_mod == 1) {
        Elem z = base->one();
        if (embed_into(lambda, base) != z) throw std::logic_error("unit root mismatch at N = 1");
        return {base, z};
    }
    const u64 level = order_mod(base->size_u64() % n_mod, n_mod);
    const Field* ext = level == 1 ? base : canonical_ext(base, level);
    const u128 group = ext->size() - 1;
    if (group % n_mod != 0) throw std::logic_error("splitting field misses the torsion");
    const u128 cofactor = group / n_mod;
    const std::vector<u64> n_primes = prime_factors(n_mod);
    const Elem lam = embed_into(lambda, ext);

    for (u128 zv = 2; zv < ext->size(); ++zv) {
        Elem y = ext->from_value(zv).pow(cofactor);
        bool full_order = !y.is_zero();
        for (u64 r : n_primes)
            full_order = full_order && !y.pow(n_mod / r).is_one();
        if (!full_order) continue;
        for (u64 u = 1; u < n_mod; ++u) {
            if (std::gcd(u, n_mod) != 1) continue;
            Elem zeta = y.pow(u);
            if (zeta.pow(n) == lam) return {ext, zeta};
        }
        throw std::logic_error("no primitive root matched the shift constant");
    }
    throw std::logic_error("no element of full torsion order found");
}

// Product over the coset of (X - zeta^u), with all coefficients verified to
// land in `base`.
Poly coset_factor(const Field* base, const RootOfUnity& root, std::span<const u64> coset) {
    Poly f = Poly::one(root.ext);
    for (u64 u : coset) {
        Poly lin(root.ext, {root.ext->neg(root.zeta.pow(u)), root.ext->one()});
        f = f * lin;
    }
    if (root.ext == base) return f;
    std::vector<Elem> coeffs;
    coeffs.reserve(f.coeffs().size());
    for (const Elem& c : f.coeffs()) {
        if (!root.ext->in_base(c)) throw std::logic_error("factor coefficient escaped the base field");
        coeffs.push_back(root.ext->project_to_base(c));
    }
    return Poly(base, std::move(coeffs));
}

// Orbits of the residue set {1 + t j mod N} under multiplication by b,
// ordered by (root order, least representative).
std::vector<std::vector<u64>> residue_cosets(u64 n_mod, u64 t, std::size_t n, u64 b) {
    std::vector<u64> residues(n);
    for (std::size_t j = 0; j < n; ++j) residues[j] = (1 + t * static_cast<u64>(j)) % n_mod;
    std::sort(residues.begin(), residues.end());
    std::map<u64, bool> seen;
    for (u64 r : residues) seen[r] = false;
    std::vector<std::vector<u64>> cosets;
    for (u64 r : residues) {
        if (seen[r]) continue;
        std::vector<u64> orbit;
        u64 cur = r;
        do {
            orbit.push_back(cur);
            auto it = seen.find(cur);
            if (it == seen.end()) throw std::logic_error("coset left the residue set");
            it->second = true;
            cur = static_cast<u64>((static_cast<u128>(cur) * b) % n_mod);
        } while (cur != r);
        std::sort(orbit.begin(), orbit.end());
        cosets.push_back(std::move(orbit));
    }
    auto root_order = [&](const std::vector<u64>& c) { return c[0] == 0 ? u64{1} : n_mod / std::gcd(c[0], n_mod); };
    std::stable_sort(cosets.begin(), cosets.end(), [&](const auto& a, const auto& b2) {
        return std::make_pair(root_order(a), a[0]) < std::make_pair(root_order(b2), b2[0]);
    });
    return cosets;
}

void check_constacyclic_inputs(const FieldTower& t, std::size_t n, const Elem& lambda) {
    if (n == 0) throw std::invalid_argument("length must be positive");
    t.require_mid(lambda);
    if (lambda.is_zero()) throw std::invalid_argument("shift constant must be nonzero");
    if (n % t.p() == 0) throw PreconditionError("length must be coprime to the characteristic");
}

Poly xn_minus_lambda(const FieldTower& t, const Field* level, std::size_t n, const Elem& lambda) {
    return Poly::xn_minus(level, n, embed_into(lambda, level));
}

// Multiplies a length-n coefficient vector over the top field by the
// polynomial g (mid coefficients) modulo X^n - lambda.
std::vector<Elem> mul_by_poly_mod(const FieldTower& t, const Elem& lambda, std::span<const Elem> v,
                                  const Poly& g) {
    std::vector<Elem> acc(v.size(), t.top()->zero());
    std::vector<Elem> shifted(v.begin(), v.end());
    for (std::size_t a = 0; a < g.coeffs().size(); ++a) {
        const Elem& ga = g.coeffs()[a];
        if (!ga.is_zero()) {
            Elem gt = t.embed_to_top(ga);
            for (std::size_t j = 0; j < v.size(); ++j) acc[j] = acc[j] + gt * shifted[j];
        }
        if (a + 1 < g.coeffs().size()) shifted = constacyclic_shift(t, lambda, shifted);
    }
    return acc;
}

}  // namespace

CosetPartition cyclotomic_cosets(u64 n_mod, u64 base) {
    if (n_mod == 0) throw std::invalid_argument("modulus must be positive");
    if (std::gcd(base % n_mod, n_mod) != 1)
        throw std::invalid_argument("base must be coprime to the modulus");
    CosetPartition part;
    part.n_mod = n_mod;
    part.base = base;
    std::vector<bool> seen(n_mod, false);
    for (u64 r = 0; r < n_mod; ++r) {
        if (seen[r]) continue;
        std::vector<u64> orbit;
        u64 cur = r;
        do {
            orbit.push_back(cur);
            seen[cur] = true;
            cur = static_cast<u64>((static_cast<u128>(cur) * base) % n_mod);
        } while (cur != r);
        std::sort(orbit.begin(), orbit.end());
        part.cosets.push_back(std::move(orbit));
    }
    return part;
}

std::vector<Poly> factor_xn_minus_lambda(const FieldTower& t, std::size_t n, const Elem& lambda,
                                         FactorLevel level) {
    check_constacyclic_inputs(t, n, lambda);
    const u64 ord = t.mid()->multiplicative_order(lambda);
    const u64 n_mod = ord * static_cast<u64>(n);
    const Field* base = level == FactorLevel::mid ? t.mid() : t.top();
    RootOfUnity root = find_zeta(base, n_mod, n, lambda);
    std::vector<Poly> factors;
    Poly check = Poly::one(base);
    for (const auto& coset : residue_cosets(n_mod, ord, n, base->size_u64() % std::max<u64>(n_mod, 1))) {
        factors.push_back(coset_factor(base, root, coset));
        check = check * factors.back();
    }
    if (check != xn_minus_lambda(t, base, n, lambda))
        throw std::logic_error("factor product does not reassemble");
    return factors;
}

RingDecomposition decompose_ring(const FieldTower& t, std::size_t n, const Elem& lambda) {
    check_constacyclic_inputs(t, n, lambda);
    RingDecomposition dec;
    dec.tower = t;
    dec.n = n;
    dec.lambda = lambda;
    dec.t = t.mid()->multiplicative_order(lambda);
    dec.n_mod = dec.t * static_cast<u64>(n);

    RootOfUnity mid_root = find_zeta(t.mid(), dec.n_mod, n, lambda);
    auto mid_cosets = residue_cosets(dec.n_mod, dec.t, n, t.q() % dec.n_mod);
    RootOfUnity top_root = find_zeta(t.top(), dec.n_mod, n, lambda);
    auto top_cosets = residue_cosets(dec.n_mod, dec.t, n, t.qm() % dec.n_mod);

    std::vector<Poly> top_factors;
    top_factors.reserve(top_cosets.size());
    for (const auto& coset : top_cosets) top_factors.push_back(coset_factor(t.top(), top_root, coset));

    Poly whole_mid = xn_minus_lambda(t, t.mid(), n, lambda);
    Poly product_mid = Poly::one(t.mid());
    for (const auto& coset : mid_cosets) {
        Component comp;
        comp.coset = coset;
        comp.root_order = coset[0] == 0 ? 1 : dec.n_mod / std::gcd(coset[0], dec.n_mod);
        comp.factor_mid = coset_factor(t.mid(), mid_root, coset);
        product_mid = product_mid * comp.factor_mid;

        Poly embedded = comp.factor_mid.embedded(t.top());
        Poly rest = embedded;
        for (const Poly& tf : top_factors) {
            if (rest.degree() < tf.degree()) continue;
            if (rest.mod(tf).is_zero()) {
                comp.factors_top.push_back(tf);
                rest = rest.divmod(tf).first;
            }
        }
        Poly reassembled = Poly::one(t.top());
        for (const Poly& tf : comp.factors_top) reassembled = reassembled * tf;
        if (reassembled != embedded) throw std::logic_error("top factors do not split the mid factor");
        comp.merged = comp.factors_top.size() > 1;
        comp.component_field = ext_field(t.mid(), comp.factor_mid.coeffs());
        dec.components.push_back(std::move(comp));
    }
    if (product_mid != whole_mid) throw std::logic_error("factor product does not reassemble");

    // CRT idempotents over F_q and K-bases of the blocks
    Poly one_mid = Poly::one(t.mid());
    Poly idem_sum = Poly::zero(t.mid());
    for (auto& comp : dec.components) {
        Poly cofactor = whole_mid.divmod(comp.factor_mid).first;
        auto [g, u, v] = poly_xgcd(comp.factor_mid, cofactor);
        if (g.degree() != 0) throw std::logic_error("component factors are not coprime");
        Elem scale_inv = g.coeff(0).inverse();
        Poly idem = ((v * scale_inv) * cofactor).mod(whole_mid);
        if ((idem * idem).mod(whole_mid) != idem) throw std::logic_error("idempotent check failed");
        idem_sum = idem_sum + idem;
        comp.idempotent.assign(n, t.mid()->zero());
        for (std::size_t a = 0; a < idem.coeffs().size(); ++a) comp.idempotent[a] = idem.coeffs()[a];

        // greedy K-basis of the block e_i * F_{q^m}[X]/(X^n - lambda)
        const std::size_t d = static_cast<std::size_t>(comp.factor_mid.degree());
        std::vector<Elem> e_top(n, t.top()->zero());
        for (std::size_t a = 0; a < n; ++a) e_top[a] = t.embed_to_top(comp.idempotent[a]);
        std::vector<std::vector<Elem>> basis_rows;       // chosen block basis over K
        std::vector<std::vector<Elem>> span_rows;        // their X^c shifts, expanded
        Mat span_expanded(t.mid(), 0, n * t.m());
        Elem alpha = t.alpha();
        for (std::size_t a = 0; a < n && basis_rows.size() < t.m(); ++a) {
            for (std::size_t l = 0; l < t.m() && basis_rows.size() < t.m(); ++l) {
                // candidate X^a alpha^l e_i
                std::vector<Elem> cand = e_top;
                Elem al = alpha.pow(l);
                for (auto& x : cand) x = x * al;
                for (std::size_t s = 0; s < a; ++s) cand = constacyclic_shift(t, lambda, cand);
                std::vector<Elem> cand_exp = expand_vector(t, cand);
                if (span_expanded.rows() > 0 && in_row_space(span_expanded, cand_exp)) continue;
                if (span_expanded.rows() == 0) {
                    bool zero = std::all_of(cand_exp.begin(), cand_exp.end(),
                                            [](const Elem& e) { return e.is_zero(); });
                    if (zero) continue;
                }
                basis_rows.push_back(cand);
                std::vector<Elem> shifted = cand;
                for (std::size_t cdeg = 0; cdeg < d; ++cdeg) {
                    span_rows.push_back(expand_vector(t, shifted));
                    if (cdeg + 1 < d) shifted = constacyclic_shift(t, lambda, shifted);
                }
                span_expanded = Mat::from_rows(t.mid(), span_rows);
            }
        }
        if (basis_rows.size() != t.m()) throw std::logic_error("component basis is incomplete");
        comp.k_basis = Mat::from_rows(t.top(), basis_rows);
    }
    if (idem_sum != one_mid) throw std::logic_error("idempotents do not sum to one");
    return dec;
}

std::vector<Elem> constacyclic_shift(const FieldTower& t, const Elem& lambda, std::span<const Elem> v) {
    std::vector<Elem> out(v.size(), t.top()->zero());
    if (v.empty()) return out;
    Elem lt = t.embed_to_top(lambda);
    out[0] = lt * v.back();
    for (std::size_t j = 1; j < v.size(); ++j) out[j] = v[j - 1];
    return out;
}

bool is_constacyclic(const AdditiveCode& c, const Elem& lambda) {
    const FieldTower& t = c.tower();
    for (std::size_t i = 0; i < c.dim_fq(); ++i) {
        std::vector<Elem> row = c.basis().row(i);
        if (!c.member(constacyclic_shift(t, lambda, row))) return false;
    }
    return true;
}

Mat component_coordinates(const AdditiveCode& c, const RingDecomposition& dec, std::size_t i) {
    const FieldTower& t = dec.tower;
    const Component& comp = dec.components[i];
    const std::size_t d = static_cast<std::size_t>(comp.factor_mid.degree());
    const Field* k_field = comp.component_field;

    // solve basis: X^c w_j expanded, ordered j outer, c inner
    std::vector<std::vector<Elem>> rows;
    for (std::size_t j = 0; j < t.m(); ++j) {
        std::vector<Elem> w = comp.k_basis.row(j);
        for (std::size_t cdeg = 0; cdeg < d; ++cdeg) {
            rows.push_back(expand_vector(t, w));
            if (cdeg + 1 < d) w = constacyclic_shift(t, dec.lambda, w);
        }
    }
    Mat solve_basis = Mat::from_rows(t.mid(), rows);

    Poly idem(t.mid(), comp.idempotent);
    std::vector<std::vector<Elem>> coord_rows;
    for (std::size_t r = 0; r < c.dim_fq(); ++r) {
        std::vector<Elem> proj = mul_by_poly_mod(t, dec.lambda, c.basis().row(r), idem);
        auto sol = solve_left(solve_basis, expand_vector(t, proj));
        if (!sol) throw std::logic_error("projection escaped the component block");
        std::vector<Elem> krow;
        krow.reserve(t.m());
        for (std::size_t j = 0; j < t.m(); ++j) {
            std::vector<Elem> coeffs((*sol).begin() + j * d, (*sol).begin() + (j + 1) * d);
            krow.push_back(k_field->element(coeffs));
        }
        coord_rows.push_back(std::move(krow));
    }
    Mat coords = coord_rows.empty() ? Mat(k_field, 0, t.m()) : Mat::from_rows(k_field, coord_rows);
    RrefResult rr = rref(coords);
    std::vector<std::size_t> keep(rr.rank);
    for (std::size_t j = 0; j < rr.rank; ++j) keep[j] = j;
    return take_rows(rr.r, keep);
}

std::vector<AdditiveCode> components(const AdditiveCode& c, const RingDecomposition& dec) {
    const FieldTower& t = dec.tower;
    if (!is_constacyclic(c, dec.lambda)) throw PreconditionError("code is not shift-closed");
    std::vector<AdditiveCode> out;
    for (const Component& comp : dec.components) {
        Poly idem(t.mid(), comp.idempotent);
        std::vector<std::vector<Elem>> rows;
        for (std::size_t r = 0; r < c.dim_fq(); ++r)
            rows.push_back(mul_by_poly_mod(t, dec.lambda, c.basis().row(r), idem));
        Mat m = rows.empty() ? Mat(t.top(), 0, c.length()) : Mat::from_rows(t.top(), rows);
        out.push_back(AdditiveCode::span_fq(t, m));
    }
    return out;
}

ConstacyclicVerdict is_acp_constacyclic(const AdditiveCode& c, const AdditiveCode& d,
                                        const RingDecomposition& dec) {
    if (c.tower() != dec.tower || d.tower() != dec.tower || c.length() != dec.n || d.length() != dec.n)
        throw std::invalid_argument("codes do not match the decomposition");
    if (!is_constacyclic(c, dec.lambda) || !is_constacyclic(d, dec.lambda))
        throw PreconditionError("codes must be shift-closed for the given constant");
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
        Mat u = component_coordinates(c, dec, i);
        Mat v = component_coordinates(d, dec, i);
        bool ok = u.rows() + v.rows() == dec.tower.m() &&
                  (u.rows() == 0 || v.rows() == 0 || rank(vstack(u, v)) == dec.tower.m());
        if (!ok) return {false, i};
    }
    return {true, std::nullopt};
}

BigInt gaussian_binomial(std::size_t m, std::size_t v, const BigInt& q) {
    if (v > m) throw std::invalid_argument("subspace dimension out of range");
    if (q < 2) throw std::invalid_argument("field size must be at least 2");
    auto qpow = [&](std::size_t e) {
        BigInt r = 1;
        for (std::size_t i = 0; i < e; ++i) r *= q;
        return r;
    };
    BigInt bin = 1;
    for (std::size_t j = 1; j <= v; ++j) bin = bin * (qpow(m - v + j) - 1) / (qpow(j) - 1);
    return bin;
}

BigInt count_acp(const FieldTower& t, std::size_t n, const Elem& lambda) {
    RingDecomposition dec = decompose_ring(t, n, lambda);
    BigInt total = 1;
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
        BigInt qi = 1;
        for (std::size_t e = 0; e < dec.degree(i); ++e) qi *= t.q();
        BigInt comp_sum = 0;
        for (std::size_t v = 0; v <= t.m(); ++v) {
            BigInt complements = 1;
            for (std::size_t e = 0; e < v * (t.m() - v); ++e) complements *= qi;
            comp_sum += gaussian_binomial(t.m(), v, qi) * complements;
        }
        total *= comp_sum;
    }
    return total;
}

namespace {

BigInt componentwise_enumeration(const FieldTower& t, const RingDecomposition& dec,
                                 const EnumBudget& budget) {
    u64 total_pairs = 0;
    for (const Component& comp : dec.components) {
        u64 cnt = subspace_count(comp.component_field->size_u64(), t.m());
        if (cnt > budget.max_subspaces / std::max<u64>(cnt, 1))
            throw BudgetError("componentwise enumeration exceeds budget");
        u64 sq = cnt * cnt;
        if (total_pairs > budget.max_subspaces - sq)
            throw BudgetError("componentwise enumeration exceeds budget");
        total_pairs += sq;
    }
    BigInt result = 1;
    for (const Component& comp : dec.components) {
        std::vector<Mat> subs;
        enumerate_subspaces(comp.component_field, t.m(), budget, [&](const Mat& m) { subs.push_back(m); });
        u64 good = 0;
        for (const Mat& u : subs)
            for (const Mat& v : subs) {
                if (u.rows() + v.rows() != t.m()) continue;
                if (u.rows() == 0 || v.rows() == 0 || rank(vstack(u, v)) == t.m()) ++good;
            }
        result *= good;
    }
    return result;
}

BigInt raw_enumeration(const FieldTower& t, std::size_t n, const Elem& lambda, const EnumBudget& budget) {
    const std::size_t nm = n * t.m();
    // vector budget: q^{nm} must stay within max_vectors
    u128 vecs = 1;
    for (std::size_t i = 0; i < nm; ++i) {
        vecs *= t.q();
        if (vecs > budget.max_vectors) throw BudgetError("raw enumeration exceeds the vector budget");
    }
    if (subspace_count(t.q(), nm) > budget.max_subspaces)
        throw BudgetError("raw enumeration exceeds the subspace budget");

    std::vector<std::pair<std::size_t, Mat>> closed;  // (dim, expanded rref)
    enumerate_subspaces(t.mid(), nm, budget, [&](const Mat& m) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::vector<Elem> top_row = contract_vector(t, m.row(r));
            std::vector<Elem> shifted = constacyclic_shift(t, lambda, top_row);
            if (!in_row_space(m, expand_vector(t, shifted))) return;
        }
        closed.emplace_back(m.rows(), m);
    });
    u64 good = 0;
    for (const auto& [dc, mc] : closed)
        for (const auto& [dd, md] : closed) {
            if (dc + dd != nm) continue;
            if (dc == 0 || dd == 0 || rank(vstack(mc, md)) == nm) ++good;
        }
    return BigInt(good);
}

}  // namespace

BigInt enumerate_constacyclic_acp(const FieldTower& t, std::size_t n, const Elem& lambda,
                                  EnumerationMode mode, const EnumBudget& budget) {
    check_constacyclic_inputs(t, n, lambda);
    if (mode == EnumerationMode::componentwise) {
        RingDecomposition dec = decompose_ring(t, n, lambda);
        return componentwise_enumeration(t, dec, budget);
    }
    return raw_enumeration(t, n, lambda, budget);
}

}  // namespace acp
