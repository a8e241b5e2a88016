#ifndef PETIT_FIELD_HPP
#define PETIT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace petit {

using fp_t = std::uint32_t;
// Packed element of F_{p^h}: sum c_i p^i with digits c_i in [0,p).
using ff_t = std::uint32_t;

struct inapplicable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct bound_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FieldKind { Finite, Poly, Rational };

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// An element of the coefficient ring: a fraction num/den of polynomials in y
/// over F_{p^h}. For Finite and Poly kinds den is the constant 1 and, for
/// Finite, num has at most one coefficient. Fractions are kept reduced with a
/// monic denominator.
struct Elem {
    std::vector<ff_t> num;
    std::vector<ff_t> den{1u};

    bool operator==(const Elem& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Elem& o) const { return !(*this == o); }
};

/// A concrete coefficient ring: F_{p^h} with an explicit modulus, F_{p^h}[y],
/// or F_{p^h}(y). Immutable after construction; all operations are pure.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
  public:
    FieldKind kind;
    std::uint32_t p = 0;
    std::uint32_t h = 0;
    std::vector<fp_t> modulus;  // monic of degree h over F_p, lowest degree first
    std::uint64_t q = 0;        // p^h

    static FieldPtr make_finite(std::uint32_t p, std::uint32_t h,
                                std::uint64_t bound = (1u << 20));
    static FieldPtr make_finite_with_modulus(std::uint32_t p, std::uint32_t h,
                                             std::vector<fp_t> modulus);
    static FieldPtr make_poly(std::uint32_t p, std::uint32_t h);
    static FieldPtr make_rational(std::uint32_t p, std::uint32_t h);

    // ---- packed F_{p^h} arithmetic ----
    ff_t ff_add(ff_t a, ff_t b) const;
    ff_t ff_sub(ff_t a, ff_t b) const;
    ff_t ff_neg(ff_t a) const;
    ff_t ff_mul(ff_t a, ff_t b) const;
    ff_t ff_inv(ff_t a) const;
    ff_t ff_pow(ff_t a, std::uint64_t e) const;
    ff_t ff_frob(ff_t a, std::uint32_t r) const;  // a^{p^r}
    ff_t ff_from_int(std::uint64_t n) const;      // n mod p as a constant
    ff_t ff_gen() const { return h >= 2 ? static_cast<ff_t>(p) : 0; }  // the adjoined root
    std::uint64_t ff_order(ff_t a) const;         // multiplicative order
    std::uint64_t ff_log(ff_t a) const;           // dlog base the cached primitive element
    /// Lexicographic position of a packed element, constant digit most
    /// significant. Elements enumerate in this order everywhere a scan
    /// promises a least witness.
    std::uint64_t ff_lex_index(ff_t a) const;
    ff_t ff_at_lex(std::uint64_t idx) const;
    ff_t ff_primitive() const { return prim_; }

    // ---- Elem arithmetic ----
    Elem zero() const { return Elem{{}, {1u}}; }
    Elem one() const { return Elem{{1u}, {1u}}; }
    Elem from_ff(ff_t a) const { return a ? Elem{{a}, {1u}} : zero(); }
    Elem from_int(std::int64_t n) const;
    Elem gen() const { return from_ff(ff_gen()); }  // g, only for h >= 2
    Elem y() const;                                 // only for Poly/Rational
    bool is_zero(const Elem& a) const { return a.num.empty(); }
    bool is_one(const Elem& a) const { return a == one(); }
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, std::uint64_t e) const;
    bool is_unit(const Elem& a) const;
    /// Lexicographic element order; the canonical order behind every
    /// "lexicographically least" contract.
    bool less(const Elem& a, const Elem& b) const;

    // ---- enumeration ----
    /// Number of elements (Finite kind only).
    std::uint64_t size() const;
    /// idx-th element in lexicographic order (Finite kind only).
    Elem at(std::uint64_t idx) const;
    /// Elements with numerator degree <= maxdeg and denominator 1, in
    /// lexicographic order (Poly/Rational bounded enumeration).
    std::vector<Elem> bounded_elems(std::uint32_t maxdeg) const;
    /// F_p-spanning set used by additive identity checks: the modulus-basis
    /// powers of g for Finite, {g^u y^j} with j < max(4, p) otherwise.
    std::vector<Elem> spanning_set() const;

    std::uint64_t elem_degy_num(const Elem& a) const;  // deg_y of numerator
    bool elem_is_polynomial(const Elem& a) const { return a.den == std::vector<ff_t>{1u}; }

    // internal polynomial helpers exposed for the parser/printer
    std::vector<ff_t> ypoly_mul(const std::vector<ff_t>& a, const std::vector<ff_t>& b) const;
    std::vector<ff_t> ypoly_add(const std::vector<ff_t>& a, const std::vector<ff_t>& b) const;
    std::vector<ff_t> ypoly_sub(const std::vector<ff_t>& a, const std::vector<ff_t>& b) const;
    std::vector<ff_t> ypoly_gcd(std::vector<ff_t> a, std::vector<ff_t> b) const;
    std::pair<std::vector<ff_t>, std::vector<ff_t>> ypoly_divmod(const std::vector<ff_t>& a,
                                                                 const std::vector<ff_t>& b) const;
    std::vector<ff_t> ypoly_deriv(const std::vector<ff_t>& a) const;
    Elem make_fraction(std::vector<ff_t> num, std::vector<ff_t> den) const;

  private:
    ff_t prim_ = 0;                 // lex-least primitive element
    bool has_log_ = false;          // dlog tables built when q <= 2^16
    std::vector<std::uint32_t> log_tab_, exp_tab_;

    void init_tables();
    ff_t ff_mul_raw(ff_t a, ff_t b) const;  // schoolbook, no tables
    friend FieldPtr finish_ctx(std::shared_ptr<FieldCtx> c);
};

/// Descriptor of an injective ring endomorphism of the coefficient ring.
struct EndoDesc {
    enum class Kind { Identity, FrobeniusPower, YSquare, YScale };
    Kind kind = Kind::Identity;
    std::uint32_t r = 0;  // FrobeniusPower exponent
    Elem scale;           // YScale factor q0

    static EndoDesc identity() { return {}; }
    static EndoDesc frobenius(std::uint32_t r) { return {Kind::FrobeniusPower, r, {}}; }
    static EndoDesc ysquare() { return {Kind::YSquare, 0, {}}; }
    static EndoDesc yscale(Elem q0) { return {Kind::YScale, 0, std::move(q0)}; }

    bool is_automorphism() const { return kind != Kind::YSquare; }
    bool operator==(const EndoDesc& o) const {
        return kind == o.kind && r == o.r && scale == o.scale;
    }
};

/// Descriptor of a left sigma-derivation.
struct DerivDesc {
    enum class Kind { Zero, DDY, InnerSigma };
    Kind kind = Kind::Zero;
    Elem u;  // InnerSigma parameter: delta(b) = u b - sigma(b) u

    static DerivDesc zero() { return {}; }
    static DerivDesc ddy() { return {Kind::DDY, {}}; }
    static DerivDesc inner(Elem u) { return {Kind::InnerSigma, std::move(u)}; }

    bool is_zero_map() const { return kind == Kind::Zero; }
    bool operator==(const DerivDesc& o) const { return kind == o.kind && u == o.u; }
};

void validate_endo(const FieldCtx& F, const EndoDesc& e);
void validate_deriv(const FieldCtx& F, const DerivDesc& d, const EndoDesc& sigma);

Elem apply_endo(const FieldCtx& F, const EndoDesc& e, const Elem& x);
Elem apply_endo_pow(const FieldCtx& F, const EndoDesc& e, std::uint64_t j, const Elem& x);
/// x such that sigma(x) = given value; requires e.is_automorphism().
Elem apply_endo_inv(const FieldCtx& F, const EndoDesc& e, const Elem& x);
Elem apply_deriv(const FieldCtx& F, const DerivDesc& d, const EndoDesc& sigma, const Elem& x);
Elem apply_deriv_pow(const FieldCtx& F, const DerivDesc& d, const EndoDesc& sigma,
                     std::uint64_t j, const Elem& x);

/// Order of the endomorphism as a map on F (Finite/YScale cases); throws
/// inapplicable_error when infinite or not defined.
std::uint64_t endo_order(const FieldCtx& F, const EndoDesc& e);
/// Exact test that e^k fixes every element of F.
bool endo_power_is_identity(const FieldCtx& F, const EndoDesc& e, std::uint64_t k);

/// prod_{l=0}^{m-1} sigma^l(x); asserts the result is fixed by e.
Elem norm(const FieldCtx& F, const EndoDesc& e, std::uint64_t m, const Elem& x);

struct FixedSubfield {
    FieldPtr field;                  // abstract F_{p^d}
    std::vector<Elem> elements;      // the fixed set inside the parent, lex order
    Elem gen_image;                  // image of the subfield generator in the parent
};
/// Fixed subfield of a Frobenius power on a finite field, with its embedding.
FixedSubfield fixed_subfield(const FieldCtx& F, const EndoDesc& e);

/// Number of n-th roots of unity: gcd(n, q-1), cross-checked by enumeration.
std::uint64_t count_roots_of_unity(const FieldCtx& F, std::uint64_t n);

/// Lex-least element of multiplicative order q-1.
Elem primitive_element(const FieldCtx& F);

bool is_prime(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t pow_u64(std::uint64_t b, std::uint64_t e);

}  // namespace petit

#endif
