#ifndef PETIT_IRREDUCIBILITY_HPP
#define PETIT_IRREDUCIBILITY_HPP

#include <string>

#include "petit/skew.hpp"

namespace petit {

struct CriterionVerdict {
    enum class Kind { Irreducible, Reducible, Inapplicable, Unknown };
    Kind kind = Kind::Unknown;
    SkewPoly witness;         // verified right divisor when Reducible
    std::string certificate;  // which criterion fired / why not

    static CriterionVerdict irreducible(std::string cert) {
        return {Kind::Irreducible, {}, std::move(cert)};
    }
    static CriterionVerdict reducible(SkewPoly w, std::string cert) {
        return {Kind::Reducible, std::move(w), std::move(cert)};
    }
    static CriterionVerdict inapplicable(std::string why) {
        return {Kind::Inapplicable, {}, std::move(why)};
    }
    static CriterionVerdict unknown(std::string why) {
        return {Kind::Unknown, {}, std::move(why)};
    }
    bool decided() const { return kind == Kind::Irreducible || kind == Kind::Reducible; }
};

/// Quadratic criterion: no b with sigma(b)b + delta(b) - a_1 b - a_0 = 0.
CriterionVerdict irreducible_deg2(const SkewRingCtx& R, const SkewPoly& f,
                                  const scan::Limits& lim = {});
/// Cubic criterion: no right and no left linear divisor; for t^3 - a the
/// right test alone decides.
CriterionVerdict irreducible_deg3(const SkewRingCtx& R, const SkewPoly& f,
                                  const scan::Limits& lim = {});
/// f = t^m - a, m prime, fixed field containing a primitive m-th root of
/// unity (or m in {2,3}): irreducible iff N_m(b) != a for all b.
CriterionVerdict irreducible_prime_tma(const SkewRingCtx& R, const SkewPoly& f,
                                       const scan::Limits& lim = {});
/// Quartic criterion: linear scans plus the quadratic-divisor double loop;
/// t^4 - a needs only the quadratic loop.
CriterionVerdict irreducible_deg4(const SkewRingCtx& R, const SkewPoly& f,
                                  const scan::Limits& lim = {});
/// Differential criteria in characteristic p (sigma = id): p-polynomial
/// linear-divisor tests, the p = 3 full criterion, and the
/// product-of-linear-factors-or-irreducible dichotomy for t^p - t - a.
CriterionVerdict irreducible_charp(const SkewRingCtx& R, const SkewPoly& f,
                                   const scan::Limits& lim = {});
/// f = t^m - a(y) over F_q(y) with sigma(y) = q0 y: irreducible when m is
/// prime, K has a primitive m-th root of unity and m does not divide deg_y a.
CriterionVerdict irreducible_rational(const SkewRingCtx& R, const SkewPoly& f);

struct CountResult {
    bool applicable = false;
    std::string note;
    std::uint64_t count = 0;
};
/// Number of irreducible t^m - a in F_{p^h}[t; x -> x^{p^r}]: p^h - p^gcd(r,h)
/// when m equals the order of sigma and m is 2, 3, or a prime dividing q - 1.
CountResult count_irreducible_tma(std::uint32_t p, std::uint32_t h, std::uint32_t r,
                                  std::uint32_t m);

struct ExistsResult {
    bool applicable = false;
    std::string note;
    bool exists = false;
    std::uint64_t s = 0;           // (p^{rm}-1)/(p^r-1)
    std::uint64_t gcd_value = 0;   // gcd(s, p^h-1)
    bool linear_free_exists = false;  // some a avoids all right linear divisors
};
/// Existence of an irreducible t^m - a, via gcd(s, p^h - 1) > 1.
ExistsResult exists_irreducible_tma(std::uint32_t p, std::uint32_t h, std::uint32_t r,
                                    std::uint32_t m);

/// Criterion dispatch, cheapest certificate first; over a finite base falls
/// back to the exhaustive factor search.
CriterionVerdict decide_irreducible(const SkewRingCtx& R, const SkewPoly& f,
                                    const scan::Limits& lim = {});

}  // namespace petit

#endif
