#include "petit/skew.hpp"

#include <algorithm>

namespace petit {

namespace {
void trim(std::vector<Elem>& c) {
    while (!c.empty() && c.back().num.empty()) c.pop_back();
}
}  // namespace

SkewRingCtx::SkewRingCtx(FieldPtr base_, EndoDesc sigma_, DerivDesc delta_)
    : base(std::move(base_)), sigma(std::move(sigma_)), delta(std::move(delta_)) {
    validate_endo(*base, sigma);
    validate_deriv(*base, delta, sigma);
}

const Elem& SkewPoly::coeff(std::size_t i) const {
    static const Elem zero{};
    return i < c.size() ? c[i] : zero;
}

SkewPoly sp_zero() { return {}; }

SkewPoly sp_const(const FieldCtx& F, Elem a) {
    SkewPoly r;
    if (!F.is_zero(a)) r.c.push_back(std::move(a));
    return r;
}

SkewPoly sp_t(const FieldCtx& F) { return sp_monomial(F, F.one(), 1); }

SkewPoly sp_monomial(const FieldCtx& F, Elem a, std::size_t i) {
    SkewPoly r;
    if (F.is_zero(a)) return r;
    r.c.assign(i + 1, F.zero());
    r.c[i] = std::move(a);
    return r;
}

SkewPoly sp_from_coeffs(std::vector<Elem> coeffs) {
    SkewPoly r;
    r.c = std::move(coeffs);
    trim(r.c);
    return r;
}

SkewPoly sp_add(const SkewRingCtx& R, const SkewPoly& a, const SkewPoly& b) {
    SkewPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), R.F().zero());
    for (std::size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = R.F().add(a.coeff(i), b.coeff(i));
    trim(r.c);
    return r;
}

SkewPoly sp_neg(const SkewRingCtx& R, const SkewPoly& a) {
    SkewPoly r = a;
    for (auto& x : r.c) x = R.F().neg(x);
    return r;
}

SkewPoly sp_sub(const SkewRingCtx& R, const SkewPoly& a, const SkewPoly& b) {
    return sp_add(R, a, sp_neg(R, b));
}

SkewPoly sp_scale(const SkewRingCtx& R, const Elem& a, const SkewPoly& g) {
    if (R.F().is_zero(a)) return {};
    SkewPoly r = g;
    for (auto& x : r.c) x = R.F().mul(a, x);
    trim(r.c);
    return r;
}

bool sp_is_monic(const SkewRingCtx& R, const SkewPoly& f) {
    return !f.is_zero() && R.F().is_one(f.lead());
}

bool sp_less(const SkewRingCtx& R, const SkewPoly& a, const SkewPoly& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] != b.c[i]) return R.F().less(a.c[i], b.c[i]);
    }
    return false;
}

std::vector<Elem> snj_row(const SkewRingCtx& R, std::size_t n, const Elem& b) {
    // S_{0,0} = id; S_{n,j} = delta S_{n-1,j} + sigma S_{n-1,j-1}
    const auto& F = R.F();
    std::vector<Elem> row{b};
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Elem> next(i + 1, F.zero());
        for (std::size_t j = 0; j <= i; ++j) {
            Elem v = F.zero();
            if (j < i) v = R.deriv(row[j]);
            if (j > 0) v = F.add(v, R.endo(row[j - 1]));
            next[j] = std::move(v);
        }
        row = std::move(next);
    }
    return row;
}

Elem snj_map(const SkewRingCtx& R, std::size_t n, std::size_t j, const Elem& b) {
    if (j > n) throw std::invalid_argument("snj index out of range");
    return snj_row(R, n, b)[j];
}

SkewPoly skew_mul(const SkewRingCtx& R, const SkewPoly& g, const SkewPoly& h) {
    const auto& F = R.F();
    if (g.is_zero() || h.is_zero()) return {};
    SkewPoly acc;
    // t^n h computed iteratively; then acc += g_n (t^n h)
    SkewPoly tn_h = h;
    for (std::size_t n = 0; n < g.c.size(); ++n) {
        if (n > 0) {
            // multiply t once: t (sum c_i t^i) = sum (sigma(c_i) t^{i+1} + delta(c_i) t^i)
            SkewPoly next;
            next.c.assign(tn_h.c.size() + 1, F.zero());
            for (std::size_t i = 0; i < tn_h.c.size(); ++i) {
                next.c[i + 1] = F.add(next.c[i + 1], R.endo(tn_h.c[i]));
                next.c[i] = F.add(next.c[i], R.deriv(tn_h.c[i]));
            }
            trim(next.c);
            tn_h = std::move(next);
        }
        if (!F.is_zero(g.c[n])) acc = sp_add(R, acc, sp_scale(R, g.c[n], tn_h));
    }
    return acc;
}

SkewPoly skew_pow(const SkewRingCtx& R, const SkewPoly& g, std::uint64_t e) {
    SkewPoly r = sp_const(R.F(), R.F().one());
    for (std::uint64_t i = 0; i < e; ++i) r = skew_mul(R, r, g);
    return r;
}

std::pair<SkewPoly, SkewPoly> right_divmod(const SkewRingCtx& R, const SkewPoly& g,
                                           const SkewPoly& f) {
    const auto& F = R.F();
    if (f.is_zero()) throw std::invalid_argument("division by zero");
    if (!F.is_unit(f.lead()))
        throw std::invalid_argument("divisor needs a unit leading coefficient");
    const std::size_t m = *f.deg();
    Elem lead_inv = F.inv(f.lead());
    SkewPoly rem = g, quo;
    while (!rem.is_zero() && *rem.deg() >= m) {
        std::size_t l = *rem.deg();
        Elem q = F.mul(rem.lead(), R.endo_pow(l - m, lead_inv));
        SkewPoly qt = sp_monomial(F, q, l - m);
        quo = sp_add(R, quo, qt);
        rem = sp_sub(R, rem, skew_mul(R, qt, f));
        if (!rem.is_zero() && *rem.deg() >= l)
            throw std::logic_error("right division failed to reduce the degree");
    }
    return {quo, rem};
}

std::pair<SkewPoly, SkewPoly> left_divmod(const SkewRingCtx& R, const SkewPoly& g,
                                          const SkewPoly& f) {
    const auto& F = R.F();
    if (!R.sigma.is_automorphism())
        throw std::invalid_argument("left division needs an automorphism");
    if (f.is_zero()) throw std::invalid_argument("division by zero");
    if (!F.is_unit(f.lead()))
        throw std::invalid_argument("divisor needs a unit leading coefficient");
    const std::size_t m = *f.deg();
    SkewPoly rem = g, quo;
    while (!rem.is_zero() && *rem.deg() >= m) {
        std::size_t l = *rem.deg();
        // leading term of f (x t^{l-m}) is f_m sigma^m(x) t^l
        Elem x = F.mul(F.inv(f.lead()), rem.lead());
        for (std::size_t i = 0; i < m; ++i) x = R.endo_inv(x);
        SkewPoly qt = sp_monomial(F, x, l - m);
        quo = sp_add(R, quo, qt);
        rem = sp_sub(R, rem, skew_mul(R, f, qt));
        if (!rem.is_zero() && *rem.deg() >= l)
            throw std::logic_error("left division failed to reduce the degree");
    }
    return {quo, rem};
}

Elem n_map(const SkewRingCtx& R, const Elem& b, std::size_t i) {
    return n_map_prefix(R, b, i).back();
}

std::vector<Elem> n_map_prefix(const SkewRingCtx& R, const Elem& b, std::size_t upto) {
    const auto& F = R.F();
    std::vector<Elem> out{F.one()};
    for (std::size_t i = 0; i < upto; ++i)
        out.push_back(F.add(F.mul(R.endo(out.back()), b), R.deriv(out.back())));
    return out;
}

Elem m_map(const SkewRingCtx& R, const Elem& b, std::size_t i) {
    return m_map_prefix(R, b, i).back();
}

std::vector<Elem> m_map_prefix(const SkewRingCtx& R, const Elem& b, std::size_t upto) {
    const auto& F = R.F();
    if (!R.sigma.is_automorphism())
        throw std::invalid_argument("m_map needs an automorphism");
    std::vector<Elem> out{F.one()};
    for (std::size_t i = 0; i < upto; ++i) {
        Elem prev = R.endo_inv(out.back());
        out.push_back(F.sub(F.mul(b, prev), R.deriv(prev)));
    }
    return out;
}

Elem vp_map(const SkewRingCtx& R, const Elem& b, std::size_t e) {
    const auto& F = R.F();
    if (R.sigma.kind != EndoDesc::Kind::Identity)
        throw std::invalid_argument("vp_map needs sigma = id");
    if (F.p == 0) throw std::invalid_argument("characteristic zero");
    Elem v = b;
    for (std::size_t k = 0; k < e; ++k) {
        Elem dp = v;
        for (std::uint32_t i = 0; i + 1 < F.p; ++i) dp = R.deriv(dp);
        v = F.add(F.pow(v, F.p), dp);
    }
    return v;
}

SkewPoly gcrd(const SkewRingCtx& R, SkewPoly f, SkewPoly g) {
    const auto& F = R.F();
    if (F.kind == FieldKind::Poly) throw inapplicable_error("gcrd needs a field base");
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcrd(0, 0)");
    while (!g.is_zero()) {
        auto r = right_divmod(R, f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return sp_scale(R, F.inv(f.lead()), f);
}

SkewPoly lclm(const SkewRingCtx& R, const SkewPoly& f, const SkewPoly& g) {
    const auto& F = R.F();
    if (F.kind == FieldKind::Poly) throw inapplicable_error("lclm needs a field base");
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("lclm of zero");
    // extended right-Euclid: track u with f_i = u_i f + v_i g; at f_k = 0 the
    // cofactor gives lclm = u_k f
    SkewPoly r0 = f, r1 = g;
    SkewPoly u0 = sp_const(F, F.one()), u1 = sp_zero();
    while (!r1.is_zero()) {
        auto [q, r2] = right_divmod(R, r0, r1);
        SkewPoly u2 = sp_sub(R, u0, skew_mul(R, q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    SkewPoly m = skew_mul(R, u1, f);
    return sp_scale(R, F.inv(m.lead()), m);
}

std::vector<Elem> tm_reduction(const SkewRingCtx& R, const SkewPoly& f) {
    const auto& F = R.F();
    if (!sp_is_monic(R, f)) throw std::invalid_argument("monic polynomial required");
    std::size_t m = *f.deg();
    std::vector<Elem> a(m, F.zero());
    for (std::size_t i = 0; i < m; ++i) a[i] = F.neg(f.coeff(i));
    return a;
}

bool linear_right_divides(const SkewRingCtx& R, const SkewPoly& f, const Elem& b) {
    const auto& F = R.F();
    if (!sp_is_monic(R, f)) throw std::invalid_argument("monic polynomial required");
    std::size_t m = *f.deg();
    auto a = tm_reduction(R, f);
    auto N = n_map_prefix(R, b, m);
    Elem rem = N[m];
    for (std::size_t i = 0; i < m; ++i) rem = F.sub(rem, F.mul(a[i], N[i]));
    bool closed_form = F.is_zero(rem);
    SkewPoly lin = sp_from_coeffs({F.neg(b), F.one()});
    bool by_division = right_divmod(R, f, lin).second.is_zero();
    if (closed_form != by_division)
        throw std::logic_error("linear right-divisor routes disagree");
    return closed_form;
}

std::vector<Elem> right_coefficients(const SkewRingCtx& R, const SkewPoly& f) {
    // f = sum t^i a'_i: peel a'_0 = f mod_l t, then continue on the quotient
    const auto& F = R.F();
    SkewPoly t = sp_t(F);
    SkewPoly cur = f;
    std::vector<Elem> out;
    while (!cur.is_zero()) {
        auto [q, r] = left_divmod(R, cur, t);
        out.push_back(r.is_zero() ? F.zero() : r.coeff(0));
        cur = std::move(q);
    }
    return out;
}

bool linear_left_divides(const SkewRingCtx& R, const SkewPoly& f, const Elem& b) {
    const auto& F = R.F();
    if (!sp_is_monic(R, f)) throw std::invalid_argument("monic polynomial required");
    std::size_t m = *f.deg();
    auto rc = right_coefficients(R, f);  // f = t^m + sum_{i<m} t^i rc[i]
    auto M = m_map_prefix(R, b, m);
    Elem rem = M[m];
    for (std::size_t i = 0; i < m; ++i) rem = F.sub(rem, F.mul(M[i], F.neg(rc[i])));
    bool closed_form = F.is_zero(rem);
    SkewPoly lin = sp_from_coeffs({F.neg(b), F.one()});
    bool by_division = left_divmod(R, f, lin).second.is_zero();
    if (closed_form != by_division)
        throw std::logic_error("linear left-divisor routes disagree");
    return closed_form;
}

std::uint64_t monic_count(const SkewRingCtx& R, std::size_t d) {
    return pow_u64(R.F().size(), d);
}

SkewPoly monic_at(const SkewRingCtx& R, std::size_t d, std::uint64_t idx) {
    const auto& F = R.F();
    std::vector<Elem> c(d + 1, F.zero());
    // lex order: c_0 most significant
    for (std::size_t i = 0; i < d; ++i) {
        std::uint64_t digit = (idx / pow_u64(F.size(), d - 1 - i)) % F.size();
        c[i] = F.at(digit);
    }
    c[d] = F.one();
    return sp_from_coeffs(std::move(c));
}

std::uint64_t tuple_count(const SkewRingCtx& R, std::size_t m) {
    return pow_u64(R.F().size(), m);
}

SkewPoly tuple_at(const SkewRingCtx& R, std::size_t m, std::uint64_t idx) {
    const auto& F = R.F();
    std::vector<Elem> c(m, F.zero());
    for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t digit = (idx / pow_u64(F.size(), m - 1 - i)) % F.size();
        c[i] = F.at(digit);
    }
    return sp_from_coeffs(std::move(c));
}

std::uint64_t tuple_index(const SkewRingCtx& R, std::size_t m, const SkewPoly& x) {
    const auto& F = R.F();
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const Elem& e = x.coeff(i);
        ff_t packed = e.num.empty() ? 0 : e.num[0];
        idx += F.ff_lex_index(packed) * pow_u64(F.size(), m - 1 - i);
    }
    return idx;
}

FactorResult factor_search(const SkewRingCtx& R, const SkewPoly& f, const scan::Limits& lim) {
    const auto& F = R.F();
    if (F.kind != FieldKind::Finite) throw inapplicable_error("factor search needs a finite base");
    if (!sp_is_monic(R, f)) throw std::invalid_argument("monic polynomial required");
    std::size_t m = *f.deg();
    if (m == 1) return {};
    std::uint64_t work = pow_u64(F.size(), (m + 1) / 2);
    if (!lim.allows_pairs(static_cast<std::size_t>(work)))
        throw bound_exceeded("factor search exceeds the exhaustion cap");
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = monic_count(R, d);
        std::size_t hit = scan::find_first(static_cast<std::size_t>(count), [&](std::size_t idx) {
            SkewPoly g = monic_at(R, d, idx);
            return right_divmod(R, f, g).second.is_zero();
        });
        if (hit != scan::npos) {
            SkewPoly g = monic_at(R, d, hit);
            FactorResult res;
            res.irreducible = false;
            res.right = g;
            res.left = right_divmod(R, f, g).first;
            return res;
        }
    }
    return {};
}

}  // namespace petit
