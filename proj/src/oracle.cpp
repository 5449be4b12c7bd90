#include "acp/oracle.hpp"

#include "acp/errors.hpp"

namespace acp {

namespace {

u64 checked_pow(u64 base, std::size_t exp, u64 limit, const char* what) {
    u64 r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > limit / base) throw BudgetError(what);
        r *= base;
    }
    if (r > limit) throw BudgetError(what);
    return r;
}

}  // namespace

void enumerate_vectors(const FieldTower& t, std::size_t n, const EnumBudget& budget,
                       const std::function<void(std::span<const Elem>)>& visit) {
    const u64 qm = t.qm();
    u64 total = checked_pow(qm, n, budget.max_vectors, "vector enumeration exceeds budget");
    std::vector<Elem> v(n, t.top()->zero());
    std::vector<u64> digit(n, 0);
    visit(v);
    for (u64 step = 1; step < total; ++step) {
        std::size_t i = 0;
        while (digit[i] == qm - 1) {
            digit[i] = 0;
            v[i] = t.top()->zero();
            ++i;
        }
        ++digit[i];
        v[i] = t.top()->from_value(digit[i]);
        visit(v);
    }
}

AdditiveCode brute_dual(const FormSpec& f, const AdditiveCode& c, DualSide side, const EnumBudget& budget) {
    const FieldTower& t = c.tower();
    const std::size_t n = c.length();
    std::vector<std::vector<Elem>> members;
    enumerate_vectors(t, n, budget, [&](std::span<const Elem> v) {
        for (std::size_t j = 0; j < c.dim_fq(); ++j) {
            std::vector<Elem> g = c.basis().row(j);
            Elem val = side == DualSide::left ? eval_B(t, f, v, g) : eval_B(t, f, g, v);
            if (!val.is_zero()) return;
        }
        members.emplace_back(v.begin(), v.end());
    });
    Mat rows(t.top(), members.size(), n);
    for (std::size_t i = 0; i < members.size(); ++i) rows.set_row(i, members[i]);
    return AdditiveCode::span_fq(t, rows);
}

u64 subspace_count(u64 q, std::size_t dim) {
    // sum over v of [dim v]_q via the exact stepwise product
    // prod_{j=1}^{v} (q^{dim-v+j} - 1) / (q^j - 1); saturates at 2^63.
    const u128 cap = u128{1} << 63;
    auto qpow = [&](std::size_t e) -> u128 {
        u128 r = 1;
        for (std::size_t i = 0; i < e; ++i) {
            r *= q;
            if (r > (u128{1} << 100)) return u128{1} << 100;
        }
        return r;
    };
    u128 total = 0;
    for (std::size_t v = 0; v <= dim; ++v) {
        u128 bin = 1;
        for (std::size_t j = 1; j <= v; ++j) {
            u128 num = qpow(dim - v + j);
            if (num >= cap || bin >= cap) {
                bin = cap;
                break;
            }
            bin = bin * (num - 1) / (qpow(j) - 1);
        }
        total += bin;
        if (total >= cap) return ~u64{0};
    }
    return static_cast<u64>(total);
}

void enumerate_subspaces(const Field* field, std::size_t dim, const EnumBudget& budget,
                         const std::function<void(const Mat&)>& visit) {
    const u64 q = field->size_u64();
    u64 count = subspace_count(q, dim);
    if (count > budget.max_subspaces) throw BudgetError("subspace enumeration exceeds budget");

    for (std::size_t r = 0; r <= dim; ++r) {
        // choose pivot columns p_0 < p_1 < ... < p_{r-1}
        std::vector<std::size_t> piv(r);
        for (std::size_t i = 0; i < r; ++i) piv[i] = i;
        auto next_combination = [&]() -> bool {
            if (r == 0) return false;
            std::size_t i = r;
            while (i-- > 0) {
                if (piv[i] + (r - i) <= dim - 1) {
                    ++piv[i];
                    for (std::size_t j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        while (true) {
            // free positions: (row i, column c) with c not a pivot and c > piv[i]
            std::vector<std::pair<std::size_t, std::size_t>> free_pos;
            std::vector<bool> is_piv(dim, false);
            for (std::size_t c : piv) is_piv[c] = true;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t c = piv[i] + 1; c < dim; ++c)
                    if (!is_piv[c]) free_pos.emplace_back(i, c);
            std::vector<u64> digits(free_pos.size(), 0);
            while (true) {
                Mat m(field, r, dim);
                for (std::size_t i = 0; i < r; ++i) m.at(i, piv[i]) = field->one();
                for (std::size_t x = 0; x < free_pos.size(); ++x)
                    m.at(free_pos[x].first, free_pos[x].second) = field->from_value(digits[x]);
                visit(m);
                std::size_t i = 0;
                while (i < digits.size() && digits[i] == q - 1) digits[i++] = 0;
                if (i == digits.size()) break;
                ++digits[i];
            }
            if (!next_combination()) break;
        }
    }
}

PairVerdict brute_acp(const AdditiveCode& c, const AdditiveCode& d, const EnumBudget& budget) {
    if (c.tower() != d.tower() || c.length() != d.length())
        throw std::invalid_argument("codes live in different spaces");
    const FieldTower& t = c.tower();
    PairVerdict v;
    v.dim_c = c.dim_fq();
    v.dim_d = d.dim_fq();
    v.ambient = c.length() * t.m();
    enumerate_vectors(t, c.length(), budget, [&](std::span<const Elem> w) {
        if (v.witness) return;
        bool zero = true;
        for (const Elem& e : w)
            if (!e.is_zero()) {
                zero = false;
                break;
            }
        if (zero) return;
        if (c.member(w) && d.member(w)) v.witness = std::vector<Elem>(w.begin(), w.end());
    });
    v.complementary = !v.witness.has_value() && v.dim_c + v.dim_d == v.ambient;
    return v;
}

}  // namespace acp
