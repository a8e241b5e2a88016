#ifndef PETIT_SKEW_HPP
#define PETIT_SKEW_HPP

#include <optional>
#include <utility>

#include "petit/field.hpp"
#include "petit/scan.hpp"

namespace petit {

/// R = S[t; sigma, delta] with the commutation rule t a = sigma(a) t + delta(a).
struct SkewRingCtx {
    FieldPtr base;
    EndoDesc sigma;
    DerivDesc delta;

    SkewRingCtx(FieldPtr base_, EndoDesc sigma_, DerivDesc delta_);

    const FieldCtx& F() const { return *base; }
    Elem endo(const Elem& x) const { return apply_endo(F(), sigma, x); }
    Elem endo_pow(std::uint64_t j, const Elem& x) const {
        return apply_endo_pow(F(), sigma, j, x);
    }
    Elem endo_inv(const Elem& x) const { return apply_endo_inv(F(), sigma, x); }
    Elem deriv(const Elem& x) const { return apply_deriv(F(), delta, sigma, x); }
};

/// Left polynomial sum a_i t^i, lowest degree first, no trailing zeros.
struct SkewPoly {
    std::vector<Elem> c;

    bool operator==(const SkewPoly& o) const { return c == o.c; }
    bool is_zero() const { return c.empty(); }
    /// deg(0) = nullopt, a distinct sentinel so degree arithmetic stays total.
    std::optional<std::size_t> deg() const {
        if (c.empty()) return std::nullopt;
        return c.size() - 1;
    }
    const Elem& coeff(std::size_t i) const;
    const Elem& lead() const { return c.back(); }
};

SkewPoly sp_zero();
SkewPoly sp_const(const FieldCtx& F, Elem a);
SkewPoly sp_t(const FieldCtx& F);                       // the monomial t
SkewPoly sp_monomial(const FieldCtx& F, Elem a, std::size_t i);  // a t^i
SkewPoly sp_from_coeffs(std::vector<Elem> coeffs);
SkewPoly sp_add(const SkewRingCtx& R, const SkewPoly& a, const SkewPoly& b);
SkewPoly sp_sub(const SkewRingCtx& R, const SkewPoly& a, const SkewPoly& b);
SkewPoly sp_neg(const SkewRingCtx& R, const SkewPoly& a);
SkewPoly sp_scale(const SkewRingCtx& R, const Elem& a, const SkewPoly& g);  // left scalar
bool sp_is_monic(const SkewRingCtx& R, const SkewPoly& f);
bool sp_less(const SkewRingCtx& R, const SkewPoly& a, const SkewPoly& b);

/// S_{n,j}(b): sum of words in sigma and delta with j sigmas and n-j deltas.
Elem snj_map(const SkewRingCtx& R, std::size_t n, std::size_t j, const Elem& b);
/// Row S_{n,0..n}(b) computed in one dynamic-programming pass.
std::vector<Elem> snj_row(const SkewRingCtx& R, std::size_t n, const Elem& b);

SkewPoly skew_mul(const SkewRingCtx& R, const SkewPoly& g, const SkewPoly& h);
SkewPoly skew_pow(const SkewRingCtx& R, const SkewPoly& g, std::uint64_t e);

/// g = q f + r with deg r < deg f; f needs a unit leading coefficient.
std::pair<SkewPoly, SkewPoly> right_divmod(const SkewRingCtx& R, const SkewPoly& g,
                                           const SkewPoly& f);
/// g = f q + r; needs sigma to be an automorphism.
std::pair<SkewPoly, SkewPoly> left_divmod(const SkewRingCtx& R, const SkewPoly& g,
                                          const SkewPoly& f);

/// N_0 = 1, N_{i+1}(b) = sigma(N_i(b)) b + delta(N_i(b)).
Elem n_map(const SkewRingCtx& R, const Elem& b, std::size_t i);
std::vector<Elem> n_map_prefix(const SkewRingCtx& R, const Elem& b, std::size_t upto);
/// M_0 = 1, M_{i+1}(b) = b sigma^{-1}(M_i(b)) - delta(sigma^{-1}(M_i(b))).
Elem m_map(const SkewRingCtx& R, const Elem& b, std::size_t i);
std::vector<Elem> m_map_prefix(const SkewRingCtx& R, const Elem& b, std::size_t upto);
/// V_{p^e}(b) with (t-b)^{p^e} = t^{p^e} - V_{p^e}(b); needs sigma = id and a
/// commutative base of characteristic p.
Elem vp_map(const SkewRingCtx& R, const Elem& b, std::size_t e);

/// Monic right gcd via the right-division Euclidean loop; base must be a field.
SkewPoly gcrd(const SkewRingCtx& R, SkewPoly f, SkewPoly g);
/// Monic least common left multiple; deg lclm + deg gcrd = deg f + deg g.
SkewPoly lclm(const SkewRingCtx& R, const SkewPoly& f, const SkewPoly& g);

/// (t - b) |_r f, via the N_i closed form, checked against right_divmod.
bool linear_right_divides(const SkewRingCtx& R, const SkewPoly& f, const Elem& b);
/// (t - b) |_l f, via the M_i closed form on right coefficients, checked
/// against left_divmod.
bool linear_left_divides(const SkewRingCtx& R, const SkewPoly& f, const Elem& b);

/// Right coefficients a'_i with f = sum t^i a'_i, extracted by repeated left
/// division by t.
std::vector<Elem> right_coefficients(const SkewRingCtx& R, const SkewPoly& f);

/// For monic f of degree m, the coefficients a_i with f = t^m - sum a_i t^i;
/// equivalently the coefficient vector of t^m reduced mod_r f.
std::vector<Elem> tm_reduction(const SkewRingCtx& R, const SkewPoly& f);

struct FactorResult {
    bool irreducible = true;
    SkewPoly left, right;  // f = left * right when reducible
};

/// Exhaustive right-factor search over a finite base: tries every monic g of
/// degree 1..m/2 in lexicographic order and returns the first split found.
FactorResult factor_search(const SkewRingCtx& R, const SkewPoly& f,
                           const scan::Limits& lim = {});

/// Enumeration of monic degree-d polynomials over a finite base in the
/// canonical lexicographic order.
std::uint64_t monic_count(const SkewRingCtx& R, std::size_t d);
SkewPoly monic_at(const SkewRingCtx& R, std::size_t d, std::uint64_t idx);

/// Enumeration of all degree-< m coefficient tuples (the elements of S_f).
std::uint64_t tuple_count(const SkewRingCtx& R, std::size_t m);
SkewPoly tuple_at(const SkewRingCtx& R, std::size_t m, std::uint64_t idx);
std::uint64_t tuple_index(const SkewRingCtx& R, std::size_t m, const SkewPoly& x);

}  // namespace petit

#endif
