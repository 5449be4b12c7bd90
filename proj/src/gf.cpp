#include "acp/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "acp/poly.hpp"

namespace acp {

namespace {

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

u128 ipow128(u64 b, std::size_t e) {
    u128 r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        u128 next = r * b;
        if (b != 0 && next / b != r) throw std::overflow_error("field size exceeds 128 bits");
        r = next;
    }
    return r;
}

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Elem

Elem::Elem(const Field* f, std::vector<std::uint16_t> coords) : f_(f), c_(std::move(coords)) {
    if (!f_) throw std::invalid_argument("element needs a field");
    if (c_.size() != f_->prime_dim()) throw std::invalid_argument("coordinate length mismatch");
    for (auto v : c_)
        if (v >= f_->characteristic()) throw std::invalid_argument("coordinate out of range");
}

bool Elem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint16_t v) { return v == 0; });
}

bool Elem::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](std::uint16_t v) { return v == 0; });
}

u128 Elem::value() const {
    u128 v = 0;
    const u64 p = f_->characteristic();
    for (std::size_t i = c_.size(); i-- > 0;) v = v * p + c_[i];
    return v;
}

Elem Elem::operator+(const Elem& o) const { return f_->add(*this, o); }
Elem Elem::operator-(const Elem& o) const { return f_->sub(*this, o); }
Elem Elem::operator-() const { return f_->neg(*this); }
Elem Elem::operator*(const Elem& o) const { return f_->mul(*this, o); }
Elem Elem::inverse() const { return f_->inv(*this); }
Elem Elem::pow(u128 e) const { return f_->pow(*this, e); }

// ---------------------------------------------------------------------------
// Field shared machinery

Field::Field(u64 p, std::size_t dim, const Field* base, std::size_t deg)
    : p_(p), dim_(dim), size_(ipow128(p, dim)), base_(base), deg_(deg) {}

u64 Field::size_u64() const {
    if (size_ > static_cast<u128>(~static_cast<u64>(0))) throw std::overflow_error("field larger than 2^64");
    return static_cast<u64>(size_);
}

void Field::check_field(const Elem& a) const {
    if (a.field() != this) throw std::invalid_argument("element belongs to a different field");
}

void Field::check_same_field(const Elem& a, const Elem& b) const {
    check_field(a);
    check_field(b);
}

Elem Field::zero() const { return Elem(this, std::vector<std::uint16_t>(dim_, 0)); }

Elem Field::one() const {
    std::vector<std::uint16_t> c(dim_, 0);
    c[0] = 1;
    return Elem(this, std::move(c));
}

Elem Field::from_int(u64 residue) const {
    std::vector<std::uint16_t> c(dim_, 0);
    c[0] = static_cast<std::uint16_t>(residue % p_);
    return Elem(this, std::move(c));
}

Elem Field::from_value(u128 v) const {
    if (v >= size_) throw std::invalid_argument("value out of field range");
    std::vector<std::uint16_t> c(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        c[i] = static_cast<std::uint16_t>(v % p_);
        v /= p_;
    }
    return Elem(this, std::move(c));
}

Elem Field::element(std::span<const Elem> base_coeffs) const {
    if (!base_) throw std::logic_error("prime field has no base coefficients");
    if (base_coeffs.size() != deg_) throw std::invalid_argument("need exactly degree base coefficients");
    std::vector<std::uint16_t> c;
    c.reserve(dim_);
    for (const Elem& b : base_coeffs) {
        base_->check_field(b);
        c.insert(c.end(), b.coords().begin(), b.coords().end());
    }
    return Elem(this, std::move(c));
}

std::vector<Elem> Field::coeffs_over_base(const Elem& x) const {
    if (!base_) throw std::logic_error("prime field has no base coefficients");
    check_field(x);
    const std::size_t bd = base_->prime_dim();
    std::vector<Elem> out;
    out.reserve(deg_);
    for (std::size_t i = 0; i < deg_; ++i) {
        auto sp = x.coords().subspan(i * bd, bd);
        out.emplace_back(base_, std::vector<std::uint16_t>(sp.begin(), sp.end()));
    }
    return out;
}

Elem Field::embed(const Elem& b) const {
    if (!base_) throw std::logic_error("prime field embeds nothing");
    base_->check_field(b);
    std::vector<std::uint16_t> c(dim_, 0);
    std::copy(b.coords().begin(), b.coords().end(), c.begin());
    return Elem(this, std::move(c));
}

bool Field::in_base(const Elem& x) const {
    if (!base_) return false;
    check_field(x);
    const std::size_t bd = base_->prime_dim();
    return std::all_of(x.coords().begin() + bd, x.coords().end(), [](std::uint16_t v) { return v == 0; });
}

Elem Field::project_to_base(const Elem& x) const {
    if (!in_base(x)) throw std::invalid_argument("element does not lie in the base field");
    auto sp = x.coords().subspan(0, base_->prime_dim());
    return Elem(base_, std::vector<std::uint16_t>(sp.begin(), sp.end()));
}

Elem Field::add(const Elem& a, const Elem& b) const {
    check_same_field(a, b);
    std::vector<std::uint16_t> c(dim_);
    for (std::size_t i = 0; i < dim_; ++i) c[i] = static_cast<std::uint16_t>((a.c_[i] + b.c_[i]) % p_);
    return Elem(this, std::move(c));
}

Elem Field::sub(const Elem& a, const Elem& b) const {
    check_same_field(a, b);
    std::vector<std::uint16_t> c(dim_);
    for (std::size_t i = 0; i < dim_; ++i) c[i] = static_cast<std::uint16_t>((a.c_[i] + p_ - b.c_[i]) % p_);
    return Elem(this, std::move(c));
}

Elem Field::neg(const Elem& a) const {
    check_field(a);
    std::vector<std::uint16_t> c(dim_);
    for (std::size_t i = 0; i < dim_; ++i) c[i] = static_cast<std::uint16_t>((p_ - a.c_[i]) % p_);
    return Elem(this, std::move(c));
}

Elem Field::pow(const Elem& a, u128 e) const {
    check_field(a);
    if (e == 0) return one();
    Elem result = one();
    Elem sq = a;
    while (e > 0) {
        if (e & 1) result = mul(result, sq);
        e >>= 1;
        if (e > 0) sq = mul(sq, sq);
    }
    return result;
}

u64 Field::multiplicative_order(const Elem& x) const {
    check_field(x);
    if (x.is_zero()) throw std::invalid_argument("zero has no multiplicative order");
    u64 n = size_u64() - 1;
    // Peel each prime factor of the group order as far as x^(t/r) stays 1.
    u64 t = n;
    u64 rem = n;
    for (u64 r = 2; r * r <= rem; ++r) {
        if (rem % r != 0) continue;
        while (rem % r == 0) rem /= r;
        while (t % r == 0 && pow(x, t / r).is_one()) t /= r;
    }
    if (rem > 1)
        while (t % rem == 0 && pow(x, t / rem).is_one()) t /= rem;
    return t;
}

const Elem& Field::primitive_element() const {
    std::lock_guard<std::mutex> lock(registry_mutex());
    if (!prim_.valid()) {
        const u64 n = size_u64();
        for (u64 v = 1; v < n; ++v) {
            Elem cand = from_value(v);
            if (multiplicative_order(cand) == n - 1) {
                prim_ = cand;
                break;
            }
        }
    }
    return prim_;
}

std::optional<u64> Field::dlog(const Elem& x) const {
    check_field(x);
    if (x.is_zero()) return std::nullopt;
    const Elem& g = primitive_element();
    std::lock_guard<std::mutex> lock(registry_mutex());
    if (dlog_table_.empty()) {
        const u64 n = size_u64();
        dlog_table_.assign(n, 0);
        Elem cur = one();
        for (u64 e = 0; e < n - 1; ++e) {
            dlog_table_[static_cast<std::size_t>(cur.value())] = e + 1;
            cur = mul(cur, g);
        }
    }
    u64 rec = dlog_table_[static_cast<std::size_t>(x.value())];
    if (rec == 0) return std::nullopt;
    return rec - 1;
}

std::string Field::name() const {
    std::ostringstream os;
    os << "GF(" << u128_to_string(size_) << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Prime fields

namespace {

class PrimeField final : public Field {
public:
    explicit PrimeField(u64 p) : Field(p, 1, nullptr, 1) {}

    Elem mul(const Elem& a, const Elem& b) const override {
        check_same_field(a, b);
        u64 r = (static_cast<u64>(a.coords()[0]) * b.coords()[0]) % p_;
        return Elem(this, {static_cast<std::uint16_t>(r)});
    }

    Elem inv(const Elem& a) const override {
        check_field(a);
        if (a.is_zero()) throw std::invalid_argument("division by zero");
        // Extended Euclid on integers.
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), newr = a.coords()[0];
        while (newr != 0) {
            std::int64_t qq = r / newr;
            std::tie(t, newt) = std::make_pair(newt, t - qq * newt);
            std::tie(r, newr) = std::make_pair(newr, r - qq * newr);
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return Elem(this, {static_cast<std::uint16_t>(t)});
    }
};

class ExtField final : public Field {
public:
    ExtField(const Field* base, std::vector<Elem> modulus)
        : Field(base->characteristic(), base->prime_dim() * (modulus.size() - 1), base, modulus.size() - 1),
          mod_(std::move(modulus)) {
        // Reduction rows: X^{deg+j} mod modulus for j = 0 .. deg-2.
        const std::size_t d = deg_;
        std::vector<Elem> cur(d);  // X^deg mod modulus = -(lower coefficients)
        for (std::size_t i = 0; i < d; ++i) cur[i] = base_->neg(mod_[i]);
        if (d >= 1) xred_.push_back(cur);
        for (std::size_t j = 1; j + 1 < d; ++j) {
            // multiply previous row by X, reduce the overflowing coefficient
            std::vector<Elem> nxt(d, base_->zero());
            Elem top = cur[d - 1];
            for (std::size_t i = d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
            nxt[0] = base_->zero();
            if (!top.is_zero())
                for (std::size_t i = 0; i < d; ++i) nxt[i] = base_->add(nxt[i], base_->mul(top, xred_[0][i]));
            xred_.push_back(nxt);
            cur = std::move(nxt);
        }
    }

    const std::vector<Elem>& modulus_coeffs() const { return mod_; }

    Elem mul(const Elem& a, const Elem& b) const override {
        check_same_field(a, b);
        const std::size_t d = deg_;
        std::vector<Elem> ac = coeffs_over_base(a);
        std::vector<Elem> bc = coeffs_over_base(b);
        std::vector<Elem> prod(2 * d - 1, base_->zero());
        for (std::size_t i = 0; i < d; ++i) {
            if (ac[i].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (bc[j].is_zero()) continue;
                prod[i + j] = base_->add(prod[i + j], base_->mul(ac[i], bc[j]));
            }
        }
        for (std::size_t t = 2 * d - 2; t >= d && t < prod.size(); --t) {
            if (prod[t].is_zero()) continue;
            const std::vector<Elem>& row = xred_[t - d];
            for (std::size_t i = 0; i < d; ++i) prod[i] = base_->add(prod[i], base_->mul(prod[t], row[i]));
            prod[t] = base_->zero();
            if (t == d) break;
        }
        prod.resize(d);
        return element(prod);
    }

    Elem inv(const Elem& a) const override;

private:
    std::vector<Elem> mod_;                // monic, length deg+1, over base
    std::vector<std::vector<Elem>> xred_;  // X^{deg+j} mod modulus
};

struct Registry {
    std::map<u64, std::unique_ptr<Field>> primes;
    std::map<std::pair<const Field*, std::vector<std::uint16_t>>, std::unique_ptr<Field>> exts;
    std::map<std::pair<const Field*, std::size_t>, std::vector<Elem>> canonical;
};

Registry& registry() {
    static Registry r;
    return r;
}

std::vector<std::uint16_t> flatten_modulus(const std::vector<Elem>& m) {
    std::vector<std::uint16_t> key;
    for (const Elem& e : m) key.insert(key.end(), e.coords().begin(), e.coords().end());
    return key;
}

}  // namespace

Elem ExtField::inv(const Elem& a) const {
    check_field(a);
    if (a.is_zero()) throw std::invalid_argument("division by zero");
    Poly f(base_, coeffs_over_base(a));
    Poly g(base_, mod_);
    auto [gc, u, v] = poly_xgcd(f, g);
    if (gc.degree() != 0) throw std::logic_error("modulus not irreducible");
    // u*f = gc (mod g) with gc a unit constant; scale u by gc^{-1}.
    Poly r = (u * gc.coeff(0).inverse()).mod(g);
    std::vector<Elem> coeffs = r.coeffs();
    coeffs.resize(deg_, base_->zero());
    return element(coeffs);
}

const std::vector<Elem>& Field::modulus() const {
    auto* e = dynamic_cast<const ExtField*>(this);
    if (!e) throw std::logic_error("prime field has no modulus");
    return e->modulus_coeffs();
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

const Field* prime_field(u64 p) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (p >= 65536) throw std::invalid_argument("characteristic too large");
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto& slot = registry().primes[p];
    if (!slot) slot = std::make_unique<PrimeField>(p);
    return slot.get();
}

const Field* ext_field(const Field* base, const std::vector<Elem>& modulus) {
    if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
    for (const Elem& c : modulus)
        if (c.field() != base) throw std::invalid_argument("modulus coefficients must lie in the base field");
    if (!modulus.back().is_one()) throw std::invalid_argument("modulus must be monic");
    if (modulus.size() > 2 || !modulus[0].is_zero()) {  // X itself is trivially fine
        Poly f(base, modulus);
        if (!is_irreducible(f)) throw std::invalid_argument("modulus is reducible");
    }
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto key = std::make_pair(base, flatten_modulus(modulus));
    auto& slot = registry().exts[key];
    if (!slot) slot = std::make_unique<ExtField>(base, modulus);
    return slot.get();
}

std::vector<Elem> canonical_modulus(const Field* base, std::size_t degree) {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    {
        std::lock_guard<std::mutex> lock(registry_mutex());
        auto it = registry().canonical.find({base, degree});
        if (it != registry().canonical.end()) return it->second;
    }
    const u128 span = ipow128(base->size_u64(), degree);
    std::vector<Elem> found;
    for (u128 v = 0; v < span; ++v) {
        std::vector<Elem> coeffs;
        coeffs.reserve(degree + 1);
        u128 rest = v;
        const u128 bs = base->size();
        for (std::size_t i = 0; i < degree; ++i) {
            coeffs.push_back(base->from_value(rest % bs));
            rest /= bs;
        }
        coeffs.push_back(base->one());
        Poly f(base, coeffs);
        if (degree == 1 || is_irreducible(f)) {
            found = std::move(coeffs);
            break;
        }
    }
    if (found.empty()) throw std::logic_error("no irreducible polynomial found");
    std::lock_guard<std::mutex> lock(registry_mutex());
    registry().canonical.emplace(std::make_pair(base, degree), found);
    return found;
}

const Field* canonical_ext(const Field* base, std::size_t degree) {
    return ext_field(base, canonical_modulus(base, degree));
}

// ---------------------------------------------------------------------------
// FieldTower

FieldTower FieldTower::build(u64 p, std::size_t k, std::size_t m, const std::vector<u64>* mid_modulus,
                             const std::vector<u64>* top_modulus) {
    if (k < 1 || m < 1) throw std::invalid_argument("extension degrees must be >= 1");
    FieldTower t;
    t.p_ = p;
    t.k_ = k;
    t.m_ = m;
    t.prime_ = prime_field(p);
    u128 qm = ipow128(p, k * m);
    if (qm > (u128{1} << 16)) throw std::invalid_argument("tower larger than 2^16 elements");
    auto lift_digits = [](const Field* base, const std::vector<u64>& digits, std::size_t deg) {
        if (digits.size() != deg + 1) throw std::invalid_argument("modulus degree mismatch");
        std::vector<Elem> coeffs;
        coeffs.reserve(digits.size());
        for (u64 d : digits) coeffs.push_back(base->from_value(d));
        return coeffs;
    };
    t.mid_ = mid_modulus ? ext_field(t.prime_, lift_digits(t.prime_, *mid_modulus, k)) : canonical_ext(t.prime_, k);
    t.top_ = top_modulus ? ext_field(t.mid_, lift_digits(t.mid_, *top_modulus, m)) : canonical_ext(t.mid_, m);
    t.q_ = t.mid_->size_u64();
    t.qm_ = t.top_->size_u64();
    return t;
}

Elem FieldTower::alpha() const {
    if (m_ == 1) return top_->embed(mid_->neg(top_->modulus()[0]));  // X = -c mod (X + c)
    std::vector<Elem> coeffs(m_, mid_->zero());
    coeffs[1] = mid_->one();
    return top_->element(coeffs);
}

Elem FieldTower::embed_to_top(const Elem& x) const {
    if (x.field() == top_) return x;
    if (x.field() == mid_) return top_->embed(x);
    if (x.field() == prime_) return top_->embed(mid_->embed(x));
    throw std::invalid_argument("element is not in this tower");
}

Elem FieldTower::embed_to_mid(const Elem& x) const {
    if (x.field() == mid_) return x;
    if (x.field() == prime_) return mid_->embed(x);
    throw std::invalid_argument("element is not prime or mid level");
}

void FieldTower::require_top(const Elem& x) const {
    if (x.field() != top_) throw std::invalid_argument("expected a top-level element");
}

void FieldTower::require_mid(const Elem& x) const {
    if (x.field() != mid_) throw std::invalid_argument("expected a mid-level element");
}

Elem FieldTower::trace_to_mid(const Elem& x) const {
    require_top(x);
    Elem acc = top_->zero();
    Elem conj = x;
    for (std::size_t j = 0; j < m_; ++j) {
        acc = acc + conj;
        if (j + 1 < m_) conj = conj.pow(q_);
    }
    if (!top_->in_base(acc)) throw std::logic_error("trace left the mid field");
    return top_->project_to_base(acc);
}

Elem FieldTower::frobenius(unsigned j, const Elem& x) const {
    require_top(x);
    if (j >= k_ * m_) throw std::invalid_argument("automorphism exponent out of range");
    u128 e = 1;
    for (unsigned i = 0; i < j; ++i) e *= p_;
    return x.pow(e);
}

std::vector<Elem> FieldTower::top_coords(const Elem& x) const {
    require_top(x);
    return top_->coeffs_over_base(x);
}

Elem FieldTower::from_top_coords(std::span<const Elem> mid_coeffs) const {
    return top_->element(mid_coeffs);
}

Elem embed_into(const Elem& x, const Field* target) {
    if (x.field() == target) return x;
    // climb from target down its base chain looking for x's field
    std::vector<const Field*> chain;
    for (const Field* f = target; f != nullptr; f = f->base()) chain.push_back(f);
    auto it = std::find(chain.begin(), chain.end(), x.field());
    if (it == chain.end()) throw std::invalid_argument("no embedding path between fields");
    Elem cur = x;
    for (auto rit = it; rit != chain.begin();) {
        --rit;
        cur = (*rit)->embed(cur);
    }
    return cur;
}

}  // namespace acp
