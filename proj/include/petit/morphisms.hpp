#ifndef PETIT_MORPHISMS_HPP
#define PETIT_MORPHISMS_HPP

#include <optional>
#include <string>

#include "petit/algebra.hpp"

namespace petit {

/// A candidate (iso/auto)morphism between Petit algebras over the same base.
/// Closed forms keep their parameters; every candidate also carries the
/// images of the F_p-basis, which is the canonical representation used for
/// equality, composition and rank checks.
struct MorphismCandidate {
    enum class Kind { Htauk, Gc, ThetaTCD, HtauB1, Explicit };
    Kind kind = Kind::Explicit;
    std::uint32_t tau_power = 0;  // tau = sigma^j (Htauk, Gc)
    EndoDesc tau;                 // arbitrary tau (ThetaTCD, HtauB1)
    Elem k, c, d, b;              // parameters, meaning depends on kind
    AlgebraPtr src, dst;
    std::vector<SkewPoly> basis_images;  // images of src->fp_basis()

    GFMatrix matrix() const;  // F_p matrix acting on coordinates
};

/// H_{tau,k}: sum x_i t^i -> tau(x_0) + sum tau(x_i) (prod_{l<i} sigma^l(k)) t^i.
MorphismCandidate make_htauk(AlgebraPtr src, AlgebraPtr dst, std::uint32_t tau_power,
                             const Elem& k);
/// G_c = H_{id, c^{-1} sigma(c)}, the inner automorphism x -> (c^{-1} o x) o c.
MorphismCandidate make_gc(AlgebraPtr A, const Elem& c);
MorphismCandidate make_identity(AlgebraPtr A);

SkewPoly apply_morphism(const MorphismCandidate& phi, const SkewPoly& x);

/// Direct verification: F_p-linearity is built in; checks multiplicativity on
/// all pairs of the canonical basis {g^u t^i}, fixing of the base field F,
/// unitality and bijectivity (matrix rank). No structure theorem is assumed.
bool check_homomorphism(const MorphismCandidate& phi);

/// Theta_{tau,c,d} ring automorphism test: both commutation identities over a
/// spanning set of the base.
bool ring_auto_check(const SkewRingCtx& R, const EndoDesc& tau, const Elem& c, const Elem& d);

struct InducedIso {
    SkewPoly g;               // monic image polynomial
    AlgebraPtr target;        // S_g
    MorphismCandidate map;    // the restriction of Theta to degree < m
};
/// Apply Theta_{tau,c,d} to f and return the induced isomorphism S_f -> S_g.
InducedIso induced_iso(const SkewRingCtx& R, const EndoDesc& tau, const Elem& c, const Elem& d,
                       const SkewPoly& f);

/// Isomorphism test between S_f and S_g over the same finite base; searches
/// the (tau, k) candidates, falling back to a brute-force search when the
/// completeness hypotheses fail and the algebras are small.
std::optional<MorphismCandidate> iso_test(AlgebraPtr A, AlgebraPtr B,
                                          const scan::Limits& lim = {});

struct GroupStructure {
    enum class Kind { Cyclic, Dicyclic, SemidirectCyclic, KernelNorm, Unclassified };
    Kind kind = Kind::Unclassified;
    std::uint64_t order = 0;
    std::uint64_t s = 0, n = 0, l = 0;  // presentation parameters
    std::size_t gen_x = 0, gen_y = 0;   // indices into the automorphism list
    std::uint64_t cayley_hash = 0;      // Unclassified only
    std::string describe() const;
};

struct AutGroupResult {
    std::vector<MorphismCandidate> autos;  // deterministic enumeration order
    GroupStructure structure;
    bool complete = true;      // false when only a verified subgroup is known
    std::string certified_by;  // "theorem", "exhaustion" or "both"
};

/// Automorphism group of a finite S_f via the H_{sigma^j,k} enumeration; the
/// classification verifies explicit presentation relations on generators.
AutGroupResult aut_group(AlgebraPtr A, const scan::Limits& lim = {});

/// Independent oracle: enumerate all (image of g, image of t) pairs, keep the
/// pairs whose linear extension is well defined, bijective and multiplicative
/// on all basis pairs.
std::vector<MorphismCandidate> brute_force_auts(AlgebraPtr A, const scan::Limits& lim = {});
std::vector<MorphismCandidate> brute_force_auts_serial(AlgebraPtr A,
                                                       const scan::Limits& lim = {});
/// The same pair scan with a distinct target algebra.
std::vector<MorphismCandidate> brute_force_isos(AlgebraPtr A, AlgebraPtr B,
                                                const scan::Limits& lim = {});

/// The inner subgroup {G_c}: distinct maps G_c with c ranging over the base,
/// deduplicated via G_c = G_d iff c^{-1} sigma(c) = d^{-1} sigma(d).
std::vector<MorphismCandidate> inner_auts(AlgebraPtr A);

/// Orbit partition of { t^m - a : a in K } under a ~ k sigma^j(a), k in F*.
std::vector<std::vector<std::uint64_t>> iso_classes(const SkewRingCtx& R, std::size_t m);

/// Differential case f = t^p - t - d: tests tau(d) = b + d - b^p - delta^{p-1}(b)
/// and, when it holds, verifies H_{tau,-b,1} multiplicatively.
bool differential_auts(AlgebraPtr A, const EndoDesc& tau, const Elem& b);

/// Set equality of automorphism lists under the canonical matrix form.
bool same_morphism_set(const std::vector<MorphismCandidate>& lhs,
                       const std::vector<MorphismCandidate>& rhs);

MorphismCandidate compose(const MorphismCandidate& first, const MorphismCandidate& then);
bool same_map(const MorphismCandidate& a, const MorphismCandidate& b);

}  // namespace petit

#endif
