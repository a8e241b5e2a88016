#include "petit/field.hpp"

#include <algorithm>
#include <cassert>

namespace petit {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t pow_u64(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// ---------- F_p polynomial helpers (for modulus construction) ----------

namespace {

void fp_trim(std::vector<fp_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

fp_t fp_inv(fp_t a, fp_t p) {
    // p is prime, a != 0
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        std::int64_t qq = r / nr;
        t -= qq * nt;
        std::swap(t, nt);
        r -= qq * nr;
        std::swap(r, nr);
    }
    t %= p;
    if (t < 0) t += p;
    return static_cast<fp_t>(t);
}

std::vector<fp_t> fp_mod(std::vector<fp_t> a, const std::vector<fp_t>& b, fp_t p) {
    fp_trim(a);
    fp_t lead_inv = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        fp_t c = static_cast<fp_t>((static_cast<std::uint64_t>(a.back()) * lead_inv) % p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t sub = (static_cast<std::uint64_t>(c) * b[i]) % p;
            a[i + shift] = static_cast<fp_t>((a[i + shift] + p - sub) % p);
        }
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

bool fp_irreducible(const std::vector<fp_t>& f, fp_t p) {
    // trial division by every monic polynomial of degree <= deg(f)/2
    std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = pow_u64(p, d);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<fp_t> g(d + 1, 0);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<fp_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (fp_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

// ---------- FieldCtx construction ----------

FieldPtr finish_ctx(std::shared_ptr<FieldCtx> c) {
    c->init_tables();
    return c;
}

static std::shared_ptr<FieldCtx> base_ctx(std::uint32_t p, std::uint32_t h, std::uint64_t bound) {
    if (!is_prime(p)) throw std::invalid_argument("p is not prime");
    if (h < 1) throw std::invalid_argument("h must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < h; ++i) {
        q *= p;
        if (q > bound) throw bound_exceeded("p^h exceeds the configured bound");
    }
    auto c = std::make_shared<FieldCtx>();
    c->p = p;
    c->h = h;
    c->q = q;
    return c;
}

FieldPtr FieldCtx::make_finite(std::uint32_t p, std::uint32_t h, std::uint64_t bound) {
    auto c = base_ctx(p, h, bound);
    c->kind = FieldKind::Finite;
    // lex-least monic irreducible: digits (c_0,...,c_{h-1}), c_0 most significant
    std::uint64_t count = pow_u64(p, h);
    for (std::uint64_t lex = 0; lex < count; ++lex) {
        std::vector<fp_t> f(h + 1, 0);
        for (std::uint32_t i = 0; i < h; ++i)
            f[i] = static_cast<fp_t>((lex / pow_u64(p, h - 1 - i)) % p);
        f[h] = 1;
        if (h == 1 || fp_irreducible(f, p)) {
            c->modulus = f;
            return finish_ctx(c);
        }
    }
    throw std::logic_error("no irreducible modulus found");
}

FieldPtr FieldCtx::make_finite_with_modulus(std::uint32_t p, std::uint32_t h,
                                            std::vector<fp_t> modulus) {
    auto c = base_ctx(p, h, std::uint64_t(1) << 20);
    c->kind = FieldKind::Finite;
    if (modulus.size() != h + 1 || modulus[h] != 1)
        throw std::invalid_argument("modulus must be monic of degree h");
    if (h > 1 && !fp_irreducible(modulus, p))
        throw std::invalid_argument("modulus is reducible");
    c->modulus = std::move(modulus);
    return finish_ctx(c);
}

FieldPtr FieldCtx::make_poly(std::uint32_t p, std::uint32_t h) {
    auto f = make_finite(p, h);
    auto c = std::make_shared<FieldCtx>(*f);
    c->kind = FieldKind::Poly;
    return c;
}

FieldPtr FieldCtx::make_rational(std::uint32_t p, std::uint32_t h) {
    auto f = make_finite(p, h);
    auto c = std::make_shared<FieldCtx>(*f);
    c->kind = FieldKind::Rational;
    return c;
}

void FieldCtx::init_tables() {
    // find the lex-least primitive element, then dlog tables when small
    std::uint64_t order_needed = q - 1;
    for (std::uint64_t lex = 0; lex < q; ++lex) {
        ff_t a = ff_at_lex(lex);
        if (a == 0) continue;
        if (ff_order(a) == order_needed) {
            prim_ = a;
            break;
        }
    }
    if (q <= (1u << 16)) {
        exp_tab_.assign(q - 1, 0);
        log_tab_.assign(q, 0);
        ff_t cur = 1;
        for (std::uint64_t e = 0; e < q - 1; ++e) {
            exp_tab_[e] = cur;
            log_tab_[cur] = static_cast<std::uint32_t>(e);
            cur = ff_mul_raw(cur, prim_);
        }
        has_log_ = true;
    }
}

// ---------- packed F_{p^h} arithmetic ----------

ff_t FieldCtx::ff_add(ff_t a, ff_t b) const {
    ff_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < h; ++i) {
        r += ((a % p + b % p) % p) * mul;
        a /= p;
        b /= p;
        mul *= p;
    }
    return r;
}

ff_t FieldCtx::ff_neg(ff_t a) const {
    ff_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < h; ++i) {
        r += ((p - a % p) % p) * mul;
        a /= p;
        mul *= p;
    }
    return r;
}

ff_t FieldCtx::ff_sub(ff_t a, ff_t b) const { return ff_add(a, ff_neg(b)); }

ff_t FieldCtx::ff_mul_raw(ff_t a, ff_t b) const {
    if (a == 0 || b == 0) return 0;
    std::vector<fp_t> da(h), db(h);
    for (std::uint32_t i = 0; i < h; ++i) {
        da[i] = a % p;
        a /= p;
        db[i] = b % p;
        b /= p;
    }
    std::vector<fp_t> r(2 * h - 1, 0);
    for (std::uint32_t i = 0; i < h; ++i)
        for (std::uint32_t j = 0; j < h; ++j)
            r[i + j] = static_cast<fp_t>((r[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
    // reduce mod modulus (monic)
    for (std::size_t k = r.size(); k-- > h;) {
        fp_t c = r[k];
        if (!c) continue;
        r[k] = 0;
        for (std::uint32_t i = 0; i < h; ++i) {
            std::uint64_t sub = (static_cast<std::uint64_t>(c) * modulus[i]) % p;
            r[k - h + i] = static_cast<fp_t>((r[k - h + i] + p - sub) % p);
        }
    }
    ff_t packed = 0, mul = 1;
    for (std::uint32_t i = 0; i < h; ++i) {
        packed += r[i] * mul;
        mul *= p;
    }
    return packed;
}

ff_t FieldCtx::ff_mul(ff_t a, ff_t b) const {
    if (a == 0 || b == 0) return 0;
    if (has_log_)
        return exp_tab_[(static_cast<std::uint64_t>(log_tab_[a]) + log_tab_[b]) % (q - 1)];
    return ff_mul_raw(a, b);
}

ff_t FieldCtx::ff_pow(ff_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (has_log_) return exp_tab_[(static_cast<std::uint64_t>(log_tab_[a]) * (e % (q - 1))) % (q - 1)];
    ff_t r = 1;
    e %= (q - 1);
    while (e) {
        if (e & 1) r = ff_mul(r, a);
        a = ff_mul(a, a);
        e >>= 1;
    }
    return r;
}

ff_t FieldCtx::ff_inv(ff_t a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    return ff_pow(a, q - 2);
}

ff_t FieldCtx::ff_frob(ff_t a, std::uint32_t r) const {
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < r % h; ++i) e = (e * p) % (q - 1 == 0 ? 1 : q - 1);
    if (q == 2) return a;  // F_2: frobenius trivial
    return ff_pow(a, e == 0 ? q - 1 : e);
}

ff_t FieldCtx::ff_from_int(std::uint64_t n) const { return static_cast<ff_t>(n % p); }

std::uint64_t FieldCtx::ff_order(ff_t a) const {
    if (a == 0) throw std::invalid_argument("order of zero");
    std::uint64_t n = q - 1, ord = n, m = n;
    // strip each prime factor of q-1 while the power stays 1
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        while (m % d == 0) m /= d;
        while (ord % d == 0 && ff_pow(a, ord / d) == 1) ord /= d;
    }
    if (m > 1)
        while (ord % m == 0 && ff_pow(a, ord / m) == 1) ord /= m;
    return ord;
}

std::uint64_t FieldCtx::ff_log(ff_t a) const {
    if (a == 0) throw std::invalid_argument("log of zero");
    if (has_log_) return log_tab_[a];
    ff_t cur = 1;
    for (std::uint64_t e = 0; e < q - 1; ++e) {
        if (cur == a) return e;
        cur = ff_mul(cur, prim_);
    }
    throw std::logic_error("dlog scan failed");
}

std::uint64_t FieldCtx::ff_lex_index(ff_t a) const {
    std::uint64_t idx = 0;
    for (std::uint32_t i = 0; i < h; ++i) {
        idx = idx * p + a % p;  // c_0 ends up most significant
        a /= p;
    }
    return idx;
}

ff_t FieldCtx::ff_at_lex(std::uint64_t idx) const {
    ff_t packed = 0;
    for (std::uint32_t i = 0; i < h; ++i) {
        std::uint64_t digit = (idx / pow_u64(p, h - 1 - i)) % p;
        packed += static_cast<ff_t>(digit * pow_u64(p, i));
    }
    return packed;
}

// ---------- polynomials in y over F_{p^h} ----------

namespace {
void ytrim(std::vector<ff_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
}  // namespace

std::vector<ff_t> FieldCtx::ypoly_add(const std::vector<ff_t>& a, const std::vector<ff_t>& b) const {
    std::vector<ff_t> r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        ff_t x = i < a.size() ? a[i] : 0;
        ff_t y = i < b.size() ? b[i] : 0;
        r[i] = ff_add(x, y);
    }
    ytrim(r);
    return r;
}

std::vector<ff_t> FieldCtx::ypoly_sub(const std::vector<ff_t>& a, const std::vector<ff_t>& b) const {
    std::vector<ff_t> r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        ff_t x = i < a.size() ? a[i] : 0;
        ff_t y = i < b.size() ? b[i] : 0;
        r[i] = ff_sub(x, y);
    }
    ytrim(r);
    return r;
}

std::vector<ff_t> FieldCtx::ypoly_mul(const std::vector<ff_t>& a, const std::vector<ff_t>& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<ff_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j]) r[i + j] = ff_add(r[i + j], ff_mul(a[i], b[j]));
    }
    ytrim(r);
    return r;
}

std::pair<std::vector<ff_t>, std::vector<ff_t>> FieldCtx::ypoly_divmod(
    const std::vector<ff_t>& a, const std::vector<ff_t>& b) const {
    if (b.empty()) throw std::invalid_argument("division by zero polynomial");
    std::vector<ff_t> rem = a, quo;
    ytrim(rem);
    if (rem.size() >= b.size()) quo.assign(rem.size() - b.size() + 1, 0);
    ff_t lead_inv = ff_inv(b.back());
    while (rem.size() >= b.size()) {
        ff_t c = ff_mul(rem.back(), lead_inv);
        std::size_t shift = rem.size() - b.size();
        quo[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[i + shift] = ff_sub(rem[i + shift], ff_mul(c, b[i]));
        ytrim(rem);
        if (rem.empty()) break;
    }
    ytrim(quo);
    return {quo, rem};
}

std::vector<ff_t> FieldCtx::ypoly_gcd(std::vector<ff_t> a, std::vector<ff_t> b) const {
    ytrim(a);
    ytrim(b);
    while (!b.empty()) {
        auto r = ypoly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        ff_t s = ff_inv(a.back());
        for (auto& c : a) c = ff_mul(c, s);
    }
    return a;
}

std::vector<ff_t> FieldCtx::ypoly_deriv(const std::vector<ff_t>& a) const {
    std::vector<ff_t> r;
    for (std::size_t i = 1; i < a.size(); ++i) {
        ff_t c = ff_mul(a[i], ff_from_int(i % p));
        r.push_back(c);
    }
    ytrim(r);
    return r;
}

Elem FieldCtx::make_fraction(std::vector<ff_t> num, std::vector<ff_t> den) const {
    ytrim(num);
    ytrim(den);
    if (den.empty()) throw std::invalid_argument("zero denominator");
    if (num.empty()) return zero();
    auto g = ypoly_gcd(num, den);
    if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
        num = ypoly_divmod(num, g).first;
        den = ypoly_divmod(den, g).first;
    }
    ff_t s = ff_inv(den.back());
    for (auto& c : num) c = ff_mul(c, s);
    for (auto& c : den) c = ff_mul(c, s);
    if (kind != FieldKind::Rational && den != std::vector<ff_t>{1u})
        throw std::invalid_argument("fraction outside the polynomial ring");
    Elem e;
    e.num = std::move(num);
    e.den = std::move(den);
    return e;
}

// ---------- Elem arithmetic ----------

Elem FieldCtx::from_int(std::int64_t n) const {
    std::int64_t m = n % static_cast<std::int64_t>(p);
    if (m < 0) m += p;
    return from_ff(static_cast<ff_t>(m));
}

Elem FieldCtx::y() const {
    if (kind == FieldKind::Finite) throw std::invalid_argument("y outside a polynomial ring");
    return Elem{{0u, 1u}, {1u}};
}

Elem FieldCtx::add(const Elem& a, const Elem& b) const {
    if (kind != FieldKind::Rational)
        return make_fraction(ypoly_add(a.num, b.num), {1u});
    auto num = ypoly_add(ypoly_mul(a.num, b.den), ypoly_mul(b.num, a.den));
    return make_fraction(std::move(num), ypoly_mul(a.den, b.den));
}

Elem FieldCtx::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem FieldCtx::neg(const Elem& a) const {
    Elem r = a;
    for (auto& c : r.num) c = ff_neg(c);
    return r;
}

Elem FieldCtx::mul(const Elem& a, const Elem& b) const {
    return make_fraction(ypoly_mul(a.num, b.num), ypoly_mul(a.den, b.den));
}

bool FieldCtx::is_unit(const Elem& a) const {
    if (is_zero(a)) return false;
    if (kind == FieldKind::Poly) return a.num.size() == 1;
    return true;
}

Elem FieldCtx::inv(const Elem& a) const {
    if (is_zero(a)) throw std::invalid_argument("inverse of zero");
    if (kind == FieldKind::Poly && a.num.size() != 1)
        throw std::invalid_argument("non-unit in the polynomial ring");
    return make_fraction(a.den, a.num);
}

Elem FieldCtx::div(const Elem& a, const Elem& b) const {
    if (is_zero(b)) throw std::invalid_argument("division by zero");
    if (kind == FieldKind::Poly) {
        auto [quo, rem] = ypoly_divmod(a.num, b.num);
        if (!rem.empty()) throw std::invalid_argument("inexact division in the polynomial ring");
        return make_fraction(std::move(quo), {1u});
    }
    return make_fraction(ypoly_mul(a.num, b.den), ypoly_mul(a.den, b.num));
}

Elem FieldCtx::pow(const Elem& a, std::uint64_t e) const {
    Elem r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

bool FieldCtx::less(const Elem& a, const Elem& b) const {
    // degree first, then coefficient tuple from the constant term up,
    // each coefficient by its own lex order; denominator breaks ties
    auto cmp_poly = [&](const std::vector<ff_t>& x, const std::vector<ff_t>& y) -> int {
        if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
        for (std::size_t i = 0; i < x.size(); ++i) {
            auto lx = ff_lex_index(x[i]), ly = ff_lex_index(y[i]);
            if (lx != ly) return lx < ly ? -1 : 1;
        }
        return 0;
    };
    int c = cmp_poly(a.num, b.num);
    if (c != 0) return c < 0;
    return cmp_poly(a.den, b.den) < 0;
}

std::uint64_t FieldCtx::size() const {
    if (kind != FieldKind::Finite) throw inapplicable_error("infinite coefficient ring");
    return q;
}

Elem FieldCtx::at(std::uint64_t idx) const {
    if (kind != FieldKind::Finite) throw inapplicable_error("infinite coefficient ring");
    return from_ff(ff_at_lex(idx));
}

std::vector<Elem> FieldCtx::bounded_elems(std::uint32_t maxdeg) const {
    std::vector<Elem> out;
    std::uint64_t count = pow_u64(q, maxdeg + 1);
    out.reserve(count);
    // lex order: degree ascending handled by the less() comparison afterwards
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<ff_t> num(maxdeg + 1, 0);
        std::uint64_t t = idx;
        for (std::uint32_t i = 0; i <= maxdeg; ++i) {
            num[i] = ff_at_lex(t % q);
            t /= q;
        }
        ytrim(num);
        Elem e;
        e.num = std::move(num);
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [&](const Elem& a, const Elem& b) { return less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t FieldCtx::elem_degy_num(const Elem& a) const {
    if (a.num.empty()) throw std::invalid_argument("deg_y of zero");
    return a.num.size() - 1;
}

std::vector<Elem> FieldCtx::spanning_set() const {
    std::vector<Elem> s;
    if (kind == FieldKind::Finite) {
        for (std::uint32_t i = 0; i < h; ++i) s.push_back(from_ff(static_cast<ff_t>(pow_u64(p, i))));
        return s;
    }
    std::uint32_t ymax = std::max<std::uint32_t>(4, p);
    for (std::uint32_t j = 0; j < ymax; ++j)
        for (std::uint32_t i = 0; i < h; ++i) {
            std::vector<ff_t> num(j + 1, 0);
            num[j] = static_cast<ff_t>(pow_u64(p, i));
            Elem e;
            e.num = std::move(num);
            s.push_back(std::move(e));
        }
    return s;
}

// ---------- endomorphisms and derivations ----------

void validate_endo(const FieldCtx& F, const EndoDesc& e) {
    switch (e.kind) {
        case EndoDesc::Kind::Identity:
            return;
        case EndoDesc::Kind::FrobeniusPower:
            if (F.kind != FieldKind::Finite)
                throw std::invalid_argument("frobenius endomorphism needs a finite field");
            if (e.r >= F.h) throw std::invalid_argument("frobenius exponent out of range");
            return;
        case EndoDesc::Kind::YSquare:
            if (F.kind == FieldKind::Finite)
                throw std::invalid_argument("y-substitution needs a polynomial ring");
            return;
        case EndoDesc::Kind::YScale:
            if (F.kind == FieldKind::Finite)
                throw std::invalid_argument("y-substitution needs a polynomial ring");
            if (e.scale.num.size() != 1 || e.scale.den != std::vector<ff_t>{1u})
                throw std::invalid_argument("y-scale factor must be a nonzero constant");
            return;
    }
}

namespace {

std::vector<ff_t> subst_ysq(const std::vector<ff_t>& a) {
    if (a.empty()) return {};
    std::vector<ff_t> r(2 * (a.size() - 1) + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[2 * i] = a[i];
    return r;
}

std::vector<ff_t> subst_yscale(const FieldCtx& F, const std::vector<ff_t>& a, ff_t q0) {
    std::vector<ff_t> r = a;
    ff_t f = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = F.ff_mul(r[i], f);
        f = F.ff_mul(f, q0);
    }
    return r;
}

}  // namespace

Elem apply_endo(const FieldCtx& F, const EndoDesc& e, const Elem& x) {
    switch (e.kind) {
        case EndoDesc::Kind::Identity:
            return x;
        case EndoDesc::Kind::FrobeniusPower: {
            Elem r = x;
            for (auto& c : r.num) c = F.ff_frob(c, e.r);
            for (auto& c : r.den) c = F.ff_frob(c, e.r);
            return r;
        }
        case EndoDesc::Kind::YSquare:
            return F.make_fraction(subst_ysq(x.num), subst_ysq(x.den));
        case EndoDesc::Kind::YScale: {
            ff_t q0 = e.scale.num[0];
            return F.make_fraction(subst_yscale(F, x.num, q0), subst_yscale(F, x.den, q0));
        }
    }
    throw std::logic_error("unreachable");
}

Elem apply_endo_pow(const FieldCtx& F, const EndoDesc& e, std::uint64_t j, const Elem& x) {
    switch (e.kind) {
        case EndoDesc::Kind::Identity:
            return x;
        case EndoDesc::Kind::FrobeniusPower:
            return apply_endo(F, EndoDesc::frobenius(static_cast<std::uint32_t>((e.r * j) % F.h)), x);
        case EndoDesc::Kind::YScale: {
            Elem qj = F.pow(e.scale, j);
            return apply_endo(F, EndoDesc::yscale(qj), x);
        }
        case EndoDesc::Kind::YSquare: {
            Elem r = x;
            for (std::uint64_t i = 0; i < j; ++i) r = apply_endo(F, e, r);
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

Elem apply_endo_inv(const FieldCtx& F, const EndoDesc& e, const Elem& x) {
    if (!e.is_automorphism()) throw std::invalid_argument("endomorphism is not invertible");
    switch (e.kind) {
        case EndoDesc::Kind::Identity:
            return x;
        case EndoDesc::Kind::FrobeniusPower:
            return apply_endo(F, EndoDesc::frobenius((F.h - e.r) % F.h), x);
        case EndoDesc::Kind::YScale:
            return apply_endo(F, EndoDesc::yscale(F.inv(e.scale)), x);
        default:
            throw std::logic_error("unreachable");
    }
}

std::uint64_t endo_order(const FieldCtx& F, const EndoDesc& e) {
    switch (e.kind) {
        case EndoDesc::Kind::Identity:
            return 1;
        case EndoDesc::Kind::FrobeniusPower:
            return e.r == 0 ? 1 : F.h / gcd_u64(e.r, F.h);
        case EndoDesc::Kind::YScale:
            return F.ff_order(e.scale.num[0]);
        case EndoDesc::Kind::YSquare:
            throw inapplicable_error("endomorphism has infinite order");
    }
    throw std::logic_error("unreachable");
}

bool endo_power_is_identity(const FieldCtx& F, const EndoDesc& e, std::uint64_t k) {
    if (k == 0 || e.kind == EndoDesc::Kind::Identity) return true;
    if (e.kind == EndoDesc::Kind::YSquare) return false;
    return k % endo_order(F, e) == 0;
}

void validate_deriv(const FieldCtx& F, const DerivDesc& d, const EndoDesc& sigma) {
    switch (d.kind) {
        case DerivDesc::Kind::Zero:
            return;
        case DerivDesc::Kind::DDY:
            if (F.kind == FieldKind::Finite)
                throw std::invalid_argument("d/dy needs a polynomial ring");
            break;
        case DerivDesc::Kind::InnerSigma:
            break;
    }
    // spot-check the sigma-derivation law on the spanning set
    auto span = F.spanning_set();
    for (const auto& a : span)
        for (const auto& b : span) {
            Elem lhs = apply_deriv(F, d, sigma, F.mul(a, b));
            Elem rhs = F.add(F.mul(apply_endo(F, sigma, a), apply_deriv(F, d, sigma, b)),
                             F.mul(apply_deriv(F, d, sigma, a), b));
            if (lhs != rhs) throw std::invalid_argument("not a sigma-derivation");
        }
}

Elem apply_deriv(const FieldCtx& F, const DerivDesc& d, const EndoDesc& sigma, const Elem& x) {
    switch (d.kind) {
        case DerivDesc::Kind::Zero:
            return F.zero();
        case DerivDesc::Kind::DDY: {
            if (x.den == std::vector<ff_t>{1u}) {
                Elem r;
                r.num = F.ypoly_deriv(x.num);
                return F.make_fraction(r.num, {1u});
            }
            // delta(r s^{-1}) = delta(r) s^{-1} - sigma(r s^{-1}) delta(s) s^{-1}
            Elem sinv = F.make_fraction({1u}, x.den);
            Elem dr = F.make_fraction(F.ypoly_deriv(x.num), {1u});
            Elem ds = F.make_fraction(F.ypoly_deriv(x.den), {1u});
            Elem first = F.mul(dr, sinv);
            Elem second = F.mul(F.mul(apply_endo(F, sigma, x), ds), sinv);
            return F.sub(first, second);
        }
        case DerivDesc::Kind::InnerSigma:
            return F.sub(F.mul(d.u, x), F.mul(apply_endo(F, sigma, x), d.u));
    }
    throw std::logic_error("unreachable");
}

Elem apply_deriv_pow(const FieldCtx& F, const DerivDesc& d, const EndoDesc& sigma,
                     std::uint64_t j, const Elem& x) {
    Elem r = x;
    for (std::uint64_t i = 0; i < j; ++i) r = apply_deriv(F, d, sigma, r);
    return r;
}

Elem norm(const FieldCtx& F, const EndoDesc& e, std::uint64_t m, const Elem& x) {
    if (!e.is_automorphism()) throw std::invalid_argument("norm needs an automorphism");
    Elem r = F.one();
    for (std::uint64_t l = 0; l < m; ++l) r = F.mul(r, apply_endo_pow(F, e, l, x));
    if (apply_endo(F, e, r) != r) throw std::logic_error("norm left the fixed subfield");
    return r;
}

FixedSubfield fixed_subfield(const FieldCtx& F, const EndoDesc& e) {
    if (F.kind != FieldKind::Finite) throw inapplicable_error("fixed subfield needs a finite field");
    if (e.kind != EndoDesc::Kind::FrobeniusPower && e.kind != EndoDesc::Kind::Identity)
        throw std::invalid_argument("fixed subfield needs a frobenius power");
    std::uint32_t r = e.kind == EndoDesc::Kind::Identity ? 0 : e.r;
    std::uint32_t d = r == 0 ? F.h : static_cast<std::uint32_t>(gcd_u64(r, F.h));
    FixedSubfield out;
    out.field = FieldCtx::make_finite(F.p, d);
    for (std::uint64_t lex = 0; lex < F.q; ++lex) {
        ff_t a = F.ff_at_lex(lex);
        if (F.ff_frob(a, r % F.h) == a) out.elements.push_back(F.from_ff(a));
    }
    if (out.elements.size() != pow_u64(F.p, d))
        throw std::logic_error("fixed subfield has the wrong size");
    // generator image: lex-least fixed element of full multiplicative order
    std::uint64_t want = pow_u64(F.p, d) - 1;
    for (const auto& el : out.elements) {
        if (F.is_zero(el)) continue;
        if (F.ff_order(el.num[0]) == want) {
            out.gen_image = el;
            break;
        }
    }
    return out;
}

std::uint64_t count_roots_of_unity(const FieldCtx& F, std::uint64_t n) {
    if (F.kind != FieldKind::Finite) throw inapplicable_error("finite field required");
    if (n == 0) throw std::invalid_argument("n must be positive");
    std::uint64_t g = gcd_u64(n, F.q - 1);
    std::uint64_t seen = 0;
    for (std::uint64_t lex = 0; lex < F.q; ++lex) {
        ff_t a = F.ff_at_lex(lex);
        if (a && F.ff_pow(a, n) == 1) ++seen;
    }
    if (seen != g) throw std::logic_error("root-of-unity count mismatch");
    return g;
}

Elem primitive_element(const FieldCtx& F) {
    if (F.kind != FieldKind::Finite) throw inapplicable_error("finite field required");
    return F.from_ff(F.ff_primitive());
}

}  // namespace petit
