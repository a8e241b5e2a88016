#ifndef PETIT_ALGEBRA_HPP
#define PETIT_ALGEBRA_HPP

#include <memory>

#include "petit/gfmatrix.hpp"
#include "petit/skew.hpp"

namespace petit {

class PetitAlgebraCtx;
using AlgebraPtr = std::shared_ptr<const PetitAlgebraCtx>;

/// The quotient algebra S_f: skew polynomials of degree < m with the product
/// x o y = xy mod_r f. Immutable; the invariance/associativity flags are
/// computed once at construction.
class PetitAlgebraCtx : public std::enable_shared_from_this<PetitAlgebraCtx> {
  public:
    SkewRingCtx ring;
    SkewPoly f;     // monic, deg f = m >= 2
    std::size_t m;

    static AlgebraPtr make(SkewRingCtx ring, SkewPoly f);

    const FieldCtx& F() const { return ring.F(); }
    bool right_invariant() const { return right_invariant_; }
    bool associative() const { return right_invariant_; }

    Elem mul_coeff(const Elem& a, const Elem& b) const { return F().mul(a, b); }
    SkewPoly mul(const SkewPoly& x, const SkewPoly& y) const;

    bool finite() const { return F().kind == FieldKind::Finite; }
    std::uint64_t size() const;                 // |A| = q^m (finite base)
    SkewPoly element_at(std::uint64_t idx) const;
    std::uint64_t index_of(const SkewPoly& x) const;

    /// F = Fix(sigma) ∩ Const(delta) for a finite base, as a subset of K.
    const FixedSubfield& base_field() const;
    /// [K : F_p]-digit coordinates; the F_p-linear view used by the linear
    /// algebra and the homomorphism rank checks. Length m*h.
    std::vector<std::uint32_t> fp_coords(const SkewPoly& x) const;
    SkewPoly from_fp_coords(const std::vector<std::uint32_t>& v) const;
    /// The F_p-basis elements b_u t^i of A, in coordinate order.
    std::vector<SkewPoly> fp_basis() const;

  private:
    bool right_invariant_ = false;
    FixedSubfield base_field_;  // finite base only
    bool has_base_field_ = false;
    PetitAlgebraCtx(SkewRingCtx r, SkewPoly ff);
};

SkewPoly petit_mul(const PetitAlgebraCtx& A, const SkewPoly& x, const SkewPoly& y);

bool is_right_invariant(const PetitAlgebraCtx& A);

/// F_p-basis of E(f) = { g : deg g < m, f g in Rf }, by kernel computation.
std::vector<SkewPoly> eigenring(const PetitAlgebraCtx& A);
/// All elements spanned by the eigenring basis (finite base), sorted by index.
std::vector<std::uint64_t> eigenring_span_indices(const PetitAlgebraCtx& A);

struct NucleiResult {
    std::vector<std::uint64_t> nuc_l, nuc_m, nuc_r, nuc, center, comm;  // element indices
    bool comm_closed_form_equality;  // false when t is not left invertible
};
/// Exhaustive nuclei/center/commutator computation over a finite algebra.
NucleiResult nuclei_brute(const PetitAlgebraCtx& A, const scan::Limits& lim = {});

bool is_right_semi_invariant(const PetitAlgebraCtx& A);
/// L = F_{p^d} inside a finite base field, d | h.
bool is_L_weak_semi_invariant(const PetitAlgebraCtx& A, std::uint32_t subfield_degree);

/// W_g: m x m matrix over the base with row i = coefficients of t^i o g.
std::vector<std::vector<Elem>> mult_matrix(const PetitAlgebraCtx& A, const SkewPoly& g);
/// M_f(g) = det(W_g), exact fraction-free (Bareiss) elimination.
Elem semi_mult(const PetitAlgebraCtx& A, const SkewPoly& g);

enum class DivisionKind { Division, RightNotLeftDivision, ZeroDivisors };
struct DivisionStatus {
    DivisionKind kind;
    SkewPoly witness_left, witness_right;  // witness_left o witness_right = 0
    std::string certified_by;              // "theorem", "exhaustion" or "both"
    bool bounded_scan_ran = false;         // infinite base: bounded pair scan done
};
DivisionStatus division_status(const PetitAlgebraCtx& A, const scan::Limits& lim = {});

struct LeftInvertible {
    bool invertible;
    SkewPoly witness;  // g with g o t = 1 when invertible
};
LeftInvertible t_left_invertible(const PetitAlgebraCtx& A);

/// Flattened coordinate view of a finite S_f: the product becomes a pass
/// over precomputed structure constants, so the scan kernels run without
/// allocating. Coordinates are the F_p digits used by fp_coords, and decode
/// follows the same lexicographic element order as element_at.
class DenseAlgebra {
  public:
    explicit DenseAlgebra(AlgebraPtr A);
    std::size_t dim;     // m*h
    std::uint32_t p;
    std::uint64_t size;  // |A| = p^dim

    void decode(std::uint64_t lex_index, std::uint32_t* coords) const;
    void mul(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) const;
    static bool is_zero(const std::uint32_t* x, std::size_t dim);
    SkewPoly lift(const std::uint32_t* coords) const;

  private:
    AlgebraPtr A_;
    std::vector<std::uint32_t> sc_;        // sc[(u*dim + v)*dim + w]
    std::vector<std::uint32_t> decode_tab_;  // ff digit table in lex order
};

/// Pair scan for x o y = 0 with x, y nonzero; returns the least witness pair
/// by (index_x, index_y) or false. Finite base.
bool find_zero_divisor(const PetitAlgebraCtx& A, SkewPoly& x, SkewPoly& y,
                       const scan::Limits& lim = {});
/// Serial reference used by the parity tests and the benchmark.
bool find_zero_divisor_serial(const PetitAlgebraCtx& A, SkewPoly& x, SkewPoly& y,
                              const scan::Limits& lim = {});

/// Bounded zero-divisor scan over polynomial coefficients of degree <= maxdeg
/// (infinite bases). Returns true when a zero divisor was found.
bool find_zero_divisor_bounded(const PetitAlgebraCtx& A, std::uint32_t maxdeg, SkewPoly& x,
                               SkewPoly& y);

}  // namespace petit

#endif
