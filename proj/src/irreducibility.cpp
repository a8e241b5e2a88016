#include "petit/irreducibility.hpp"

#include <algorithm>
#include <functional>

namespace petit {

namespace {

bool is_tma_shape(const SkewRingCtx& R, const SkewPoly& f) {
    const auto& F = R.F();
    auto a = tm_reduction(R, f);
    for (std::size_t i = 1; i < a.size(); ++i)
        if (!F.is_zero(a[i])) return false;
    return !F.is_zero(a[0]);
}

// least b in K failing pred, npos if none
std::size_t scan_base(const SkewRingCtx& R, const scan::Limits& lim,
                      const std::function<bool(const Elem&)>& bad) {
    const auto& F = R.F();
    auto n = static_cast<std::size_t>(F.size());
    if (!lim.allows_full(n)) throw bound_exceeded("base too large for the linear scan");
    return scan::find_first(n, [&](std::size_t i) { return bad(F.at(i)); });
}

CriterionVerdict reducible_with_right_divisor(const SkewRingCtx& R, const SkewPoly& f,
                                              const Elem& b, std::string cert) {
    const auto& F = R.F();
    SkewPoly lin = sp_from_coeffs({F.neg(b), F.one()});
    if (!right_divmod(R, f, lin).second.is_zero())
        throw std::logic_error("claimed linear right divisor fails to divide");
    return CriterionVerdict::reducible(std::move(lin), std::move(cert));
}

// witness for a left linear divisor: the complementary right factor
CriterionVerdict reducible_with_left_divisor(const SkewRingCtx& R, const SkewPoly& f,
                                             const Elem& b, std::string cert) {
    const auto& F = R.F();
    SkewPoly lin = sp_from_coeffs({F.neg(b), F.one()});
    auto [quo, rem] = left_divmod(R, f, lin);
    if (!rem.is_zero()) throw std::logic_error("claimed linear left divisor fails to divide");
    if (!right_divmod(R, f, quo).second.is_zero())
        throw std::logic_error("complementary right factor fails to divide");
    return CriterionVerdict::reducible(std::move(quo), std::move(cert));
}

}  // namespace

CriterionVerdict irreducible_deg2(const SkewRingCtx& R, const SkewPoly& f,
                                  const scan::Limits& lim) {
    const auto& F = R.F();
    if (f.deg() != std::optional<std::size_t>{2}) throw std::invalid_argument("degree 2 required");
    if (!sp_is_monic(R, f)) throw std::invalid_argument("monic polynomial required");
    if (F.kind == FieldKind::Finite) {
        std::size_t hit = scan_base(R, lim, [&](const Elem& b) {
            return linear_right_divides(R, f, b);
        });
        if (hit == scan::npos) return CriterionVerdict::irreducible("quadratic-linear-scan");
        return reducible_with_right_divisor(R, f, F.at(hit), "quadratic-linear-scan");
    }
    auto a = tm_reduction(R, f);
    if (R.sigma.kind == EndoDesc::Kind::YSquare && R.delta.is_zero_map() && F.is_zero(a[1]) &&
        !F.is_zero(a[0]) && F.elem_is_polynomial(a[0])) {
        if (F.elem_degy_num(a[0]) % 3 != 0)
            return CriterionVerdict::irreducible("ysquare-degree-argument");
        return CriterionVerdict::unknown("ysquare degree argument is silent");
    }
    auto rat = irreducible_rational(R, f);
    if (rat.decided()) return rat;
    return CriterionVerdict::unknown("no quadratic criterion applies over this base");
}

CriterionVerdict irreducible_deg3(const SkewRingCtx& R, const SkewPoly& f,
                                  const scan::Limits& lim) {
    const auto& F = R.F();
    if (f.deg() != std::optional<std::size_t>{3}) throw std::invalid_argument("degree 3 required");
    if (!sp_is_monic(R, f)) throw std::invalid_argument("monic polynomial required");
    if (!R.sigma.is_automorphism())
        return CriterionVerdict::inapplicable("cubic criterion needs an automorphism");
    if (F.kind != FieldKind::Finite) {
        auto rat = irreducible_rational(R, f);
        if (rat.decided()) return rat;
        return CriterionVerdict::unknown("no cubic criterion applies over this base");
    }
    std::size_t hit = scan_base(R, lim, [&](const Elem& b) {
        return linear_right_divides(R, f, b);
    });
    if (hit != scan::npos)
        return reducible_with_right_divisor(R, f, F.at(hit), "cubic-right-linear-scan");
    if (is_tma_shape(R, f))
        return CriterionVerdict::irreducible("cubic-tma-right-scan");  // left iff right here
    hit = scan_base(R, lim, [&](const Elem& b) { return linear_left_divides(R, f, b); });
    if (hit != scan::npos)
        return reducible_with_left_divisor(R, f, F.at(hit), "cubic-left-linear-scan");
    return CriterionVerdict::irreducible("cubic-two-sided-scan");
}

CriterionVerdict irreducible_prime_tma(const SkewRingCtx& R, const SkewPoly& f,
                                       const scan::Limits& lim) {
    const auto& F = R.F();
    if (!sp_is_monic(R, f)) throw std::invalid_argument("monic polynomial required");
    std::size_t m = *f.deg();
    if (!is_tma_shape(R, f)) return CriterionVerdict::inapplicable("not of the form t^m - a");
    if (!is_prime(m)) return CriterionVerdict::inapplicable("degree is not prime");
    if (F.kind != FieldKind::Finite)
        return CriterionVerdict::inapplicable("finite base required here");
    // m = 2 needs no hypothesis; with a derivation the one-sided scan is only
    // complete under the root-of-unity hypothesis once m > 2
    if (m > 3 || (m == 3 && !R.delta.is_zero_map())) {
        // the fixed subfield needs a primitive m-th root of unity
        FixedSubfield fix = fixed_subfield(F, R.sigma);
        if (!R.delta.is_zero_map()) {
            if (F.p == m) return CriterionVerdict::inapplicable("characteristic equals the degree");
            std::vector<Elem> constants;
            for (const auto& c : fix.elements)
                if (F.is_zero(R.deriv(c))) constants.push_back(c);
            std::uint64_t roots = 0;
            for (const auto& c : constants)
                if (!F.is_zero(c) && F.is_one(F.pow(c, m))) ++roots;
            if (roots != m)
                return CriterionVerdict::inapplicable("no primitive m-th root of unity in F");
        } else if (gcd_u64(m, fix.field->q - 1) != m) {
            return CriterionVerdict::inapplicable("no primitive m-th root of unity in F");
        }
    }
    Elem a = tm_reduction(R, f)[0];
    std::size_t hit = scan_base(R, lim, [&](const Elem& b) {
        return n_map(R, b, m) == a;
    });
    if (R.delta.is_zero_map()) {
        // cross-check against the discrete-log formulation
        std::uint64_t n = F.q - 1;
        std::uint64_t pr = R.sigma.kind == EndoDesc::Kind::FrobeniusPower
                               ? pow_u64(F.p, R.sigma.r)
                               : 1;
        std::uint64_t s = 0, acc = 1;
        for (std::size_t i = 0; i < m; ++i) {
            s += acc % n;
            acc = (acc * pr) % n;
        }
        s %= n;
        std::uint64_t u = F.ff_log(a.num.empty() ? 0 : a.num[0]);
        bool in_zs = u % gcd_u64(s == 0 ? n : s, n) == 0;
        if (in_zs != (hit != scan::npos))
            throw std::logic_error("discrete-log route disagrees with the norm scan");
    }
    if (hit == scan::npos) return CriterionVerdict::irreducible("prime-tma-norm-scan");
    return reducible_with_right_divisor(R, f, F.at(hit), "prime-tma-norm-scan");
}

CriterionVerdict irreducible_deg4(const SkewRingCtx& R, const SkewPoly& f,
                                  const scan::Limits& lim) {
    const auto& F = R.F();
    if (f.deg() != std::optional<std::size_t>{4}) throw std::invalid_argument("degree 4 required");
    if (!sp_is_monic(R, f)) throw std::invalid_argument("monic polynomial required");
    if (!R.sigma.is_automorphism())
        return CriterionVerdict::inapplicable("quartic criterion needs an automorphism");
    if (F.kind != FieldKind::Finite)
        return CriterionVerdict::inapplicable("finite base required");
    std::uint64_t qq = F.size();
    if (!lim.allows_pairs(static_cast<std::size_t>(qq * qq)))
        return CriterionVerdict::inapplicable("base too large for the quadratic double loop");
    auto a = tm_reduction(R, f);  // f = t^4 - a_3 t^3 - a_2 t^2 - a_1 t - a_0
    bool tma = F.is_zero(a[1]) && F.is_zero(a[2]) && F.is_zero(a[3]);

    auto sig = [&](std::uint64_t j, const Elem& x) { return R.endo_pow(j, x); };
    // remainder coefficients of f after right division by t^2 - c t - d
    auto quad_divides = [&](const Elem& c, const Elem& d) {
        Elem t_coeff = F.add(F.mul(sig(2, c), F.mul(sig(1, c), c)),
                             F.add(F.mul(sig(2, d), c), F.mul(sig(2, c), sig(1, d))));
        t_coeff = F.sub(t_coeff, F.mul(a[3], F.add(sig(1, d), F.mul(sig(1, c), c))));
        t_coeff = F.sub(t_coeff, F.add(F.mul(a[2], c), a[1]));
        Elem c_coeff = F.add(F.mul(sig(2, d), d), F.mul(F.mul(sig(2, c), sig(1, c)), d));
        c_coeff = F.sub(c_coeff, F.mul(F.mul(a[3], sig(1, c)), d));
        c_coeff = F.sub(c_coeff, F.add(F.mul(a[2], d), a[0]));
        bool closed = F.is_zero(t_coeff) && F.is_zero(c_coeff);
        SkewPoly g = sp_from_coeffs({F.neg(d), F.neg(c), F.one()});
        bool by_division = right_divmod(R, f, g).second.is_zero();
        if (closed != by_division)
            throw std::logic_error("quadratic divisor routes disagree");
        return closed;
    };

    if (!tma) {
        std::size_t hit = scan_base(R, lim, [&](const Elem& b) {
            return linear_right_divides(R, f, b);
        });
        if (hit != scan::npos)
            return reducible_with_right_divisor(R, f, F.at(hit), "quartic-right-linear-scan");
        hit = scan_base(R, lim, [&](const Elem& b) { return linear_left_divides(R, f, b); });
        if (hit != scan::npos)
            return reducible_with_left_divisor(R, f, F.at(hit), "quartic-left-linear-scan");
    }
    std::size_t hit2 = scan::find_first(static_cast<std::size_t>(qq * qq), [&](std::size_t k) {
        Elem c = F.at(k / qq), d = F.at(k % qq);
        return quad_divides(c, d);
    });
    if (hit2 != scan::npos) {
        Elem c = F.at(hit2 / qq), d = F.at(hit2 % qq);
        SkewPoly g = sp_from_coeffs({F.neg(d), F.neg(c), F.one()});
        return CriterionVerdict::reducible(std::move(g),
                                           tma ? "quartic-tma-quadratic-loop" : "quartic-quadratic-loop");
    }
    return CriterionVerdict::irreducible(tma ? "quartic-tma-quadratic-loop" : "quartic-full-scan");
}

CriterionVerdict irreducible_charp(const SkewRingCtx& R, const SkewPoly& f,
                                   const scan::Limits& lim) {
    const auto& F = R.F();
    if (!sp_is_monic(R, f)) throw std::invalid_argument("monic polynomial required");
    if (R.sigma.kind != EndoDesc::Kind::Identity)
        return CriterionVerdict::inapplicable("differential criteria need sigma = id");
    std::size_t m = *f.deg();
    auto a = tm_reduction(R, f);
    const std::uint32_t p = F.p;

    // t^p - t - d: a product of commuting linear factors or irreducible
    bool amitsur = m == p && F.is_one(a[1]);
    if (amitsur)
        for (std::size_t i = 2; i < m; ++i)
            if (!F.is_zero(a[i])) amitsur = false;
    // p-polynomial shape: t^{p^e} - a_1 t^{p^{e-1}} - ... - a_e t - d
    std::size_t e = 0;
    for (std::uint64_t pe = 1; pe < m; pe *= p) ++e;
    bool p_poly = pow_u64(p, e) == m;
    if (p_poly)
        for (std::size_t i = 1; i < m; ++i) {
            bool allowed = false;
            for (std::size_t k = 0; k < e; ++k)
                if (i == pow_u64(p, k)) allowed = true;
            if (!allowed && !F.is_zero(a[i])) p_poly = false;
        }
    if (!amitsur && !p_poly)
        return CriterionVerdict::inapplicable("not a p-polynomial or t^p - t - d shape");

    // right remainder via iterated V maps
    auto right_rem = [&](const Elem& b) {
        Elem rem = vp_map(R, b, e);
        for (std::size_t k = 1; k <= e; ++k) {
            const Elem& ak = a[pow_u64(p, e - k)];  // a_k multiplies t^{p^{e-k}}
            if (!F.is_zero(ak)) rem = F.sub(rem, F.mul(ak, vp_map(R, b, e - k)));
        }
        rem = F.sub(rem, a[0]);
        SkewPoly lin = sp_from_coeffs({F.neg(b), F.one()});
        bool by_division = right_divmod(R, f, lin).second.is_zero();
        if (F.is_zero(rem) != by_division)
            throw std::logic_error("char-p right divisor routes disagree");
        return F.is_zero(rem);
    };

    if (F.kind != FieldKind::Finite) {
        // report a sampled divisor test; the universal quantifier stays open
        for (const auto& b : F.spanning_set())
            if (right_rem(b)) return reducible_with_right_divisor(R, f, b, "charp-sampled-divisor");
        return CriterionVerdict::unknown("universal divisor check is open over an infinite base");
    }

    std::size_t hit = scan_base(R, lim, [&](const Elem& b) { return right_rem(b); });
    if (hit != scan::npos)
        return reducible_with_right_divisor(R, f, F.at(hit), amitsur ? "charp-amitsur" : "charp-linear-scan");
    if (amitsur) return CriterionVerdict::irreducible("charp-amitsur");
    if (p == 3 && e == 1) {
        // deg 3: also rule out left linear divisors
        std::size_t lhit = scan_base(R, lim, [&](const Elem& b) {
            return linear_left_divides(R, f, b);
        });
        if (lhit != scan::npos)
            return reducible_with_left_divisor(R, f, F.at(lhit), "charp-p3-left-scan");
        return CriterionVerdict::irreducible("charp-p3-two-sided");
    }
    return CriterionVerdict::unknown("no full criterion for this p-polynomial shape");
}

CriterionVerdict irreducible_rational(const SkewRingCtx& R, const SkewPoly& f) {
    const auto& F = R.F();
    if (!sp_is_monic(R, f)) throw std::invalid_argument("monic polynomial required");
    if (F.kind != FieldKind::Rational || R.sigma.kind != EndoDesc::Kind::YScale ||
        !R.delta.is_zero_map())
        return CriterionVerdict::inapplicable("needs F_q(y) with sigma(y) = q0 y");
    if (F.is_one(R.sigma.scale))
        return CriterionVerdict::inapplicable("needs q0 != 1");
    std::size_t m = *f.deg();
    if (!is_prime(m)) return CriterionVerdict::inapplicable("degree is not prime");
    if (!is_tma_shape(R, f)) return CriterionVerdict::inapplicable("not of the form t^m - a(y)");
    Elem a = tm_reduction(R, f)[0];
    if (!F.elem_is_polynomial(a))
        return CriterionVerdict::inapplicable("a(y) must be a polynomial in y");
    if (gcd_u64(m, pow_u64(F.p, F.h) - 1) != m)
        return CriterionVerdict::inapplicable("no primitive m-th root of unity in K");
    if (F.elem_degy_num(a) % m != 0)
        return CriterionVerdict::irreducible("rational-degree-argument");
    return CriterionVerdict::unknown("degree argument is silent");
}

CountResult count_irreducible_tma(std::uint32_t p, std::uint32_t h, std::uint32_t r,
                                  std::uint32_t m) {
    CountResult res;
    if (!is_prime(p) || h == 0 || r >= h) {
        res.note = "invalid parameters";
        return res;
    }
    std::uint32_t d = r == 0 ? h : static_cast<std::uint32_t>(gcd_u64(r, h));
    std::uint64_t n = h / d;  // order of sigma
    std::uint64_t q = pow_u64(p, d);
    if (n != m) {
        res.note = "sigma order differs from the degree";
        return res;
    }
    bool ok = (m == 2 || m == 3) || (is_prime(m) && (q - 1) % m == 0);
    if (!ok) {
        res.note = "degree is neither 2, 3, nor a prime dividing q - 1";
        return res;
    }
    res.applicable = true;
    res.count = pow_u64(p, h) - q;
    res.note = "p^h - q";
    return res;
}

ExistsResult exists_irreducible_tma(std::uint32_t p, std::uint32_t h, std::uint32_t r,
                                    std::uint32_t m) {
    ExistsResult res;
    if (!is_prime(p) || h == 0 || r >= h || m < 2) {
        res.note = "invalid parameters";
        return res;
    }
    std::uint64_t ph1 = pow_u64(p, h) - 1;
    std::uint64_t pr = pow_u64(p, r);
    std::uint64_t s = 0, acc = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        s += acc;
        acc *= pr;
    }
    res.s = s;
    res.gcd_value = gcd_u64(s, ph1);
    res.linear_free_exists = res.gcd_value > 1;
    std::uint32_t d = r == 0 ? h : static_cast<std::uint32_t>(gcd_u64(r, h));
    std::uint64_t q = pow_u64(p, d);
    bool pre = (m == 2 || m == 3) || (is_prime(m) && (q - 1) % m == 0);
    if (!pre) {
        res.note = "degree is neither 2, 3, nor a prime dividing q - 1";
        return res;
    }
    res.applicable = true;
    res.exists = res.gcd_value > 1;
    res.note = "gcd(s, p^h - 1)";
    return res;
}

CriterionVerdict decide_irreducible(const SkewRingCtx& R, const SkewPoly& f,
                                    const scan::Limits& lim) {
    const auto& F = R.F();
    if (!sp_is_monic(R, f)) throw std::invalid_argument("monic polynomial required");
    std::size_t m = *f.deg();
    if (m == 1) return CriterionVerdict::irreducible("degree-one");
    if (F.kind != FieldKind::Finite) {
        auto rat = irreducible_rational(R, f);
        if (rat.decided()) return rat;
        if (m == 2) {
            auto v = irreducible_deg2(R, f, lim);
            if (v.decided()) return v;
        }
        if (R.sigma.kind == EndoDesc::Kind::Identity) {
            auto v = irreducible_charp(R, f, lim);
            if (v.decided()) return v;
        }
        return CriterionVerdict::unknown("no criterion decides this polynomial");
    }
    if (m == 2) return irreducible_deg2(R, f, lim);
    if (m == 3 && R.sigma.is_automorphism()) return irreducible_deg3(R, f, lim);
    if (R.sigma.kind == EndoDesc::Kind::Identity) {
        auto v = irreducible_charp(R, f, lim);
        if (v.decided()) return v;
    }
    if (is_tma_shape(R, f)) {
        auto v = irreducible_prime_tma(R, f, lim);
        if (v.decided()) return v;
    }
    if (m == 4 && R.sigma.is_automorphism()) {
        auto v = irreducible_deg4(R, f, lim);
        if (v.decided()) return v;
    }
    FactorResult fr = factor_search(R, f, lim);
    if (fr.irreducible) return CriterionVerdict::irreducible("exhaustive-factor-search");
    return CriterionVerdict::reducible(fr.right, "exhaustive-factor-search");
}

}  // namespace petit
