#include "petit/algebra.hpp"

#include <algorithm>
#include <string>

namespace petit {

namespace {

// exact right-invariance test; see the construction notes on each branch
bool compute_right_invariant(const SkewRingCtx& R, const SkewPoly& f) {
    const auto& F = R.F();
    std::size_t m = *f.deg();
    if (R.delta.is_zero_map()) {
        // f = t^m - sum a_i t^i right invariant iff sigma(a_i) = a_i and
        // sigma^{m-i} = id whenever a_i != 0 (commutative base)
        auto a = tm_reduction(R, f);
        for (std::size_t i = 0; i < m; ++i) {
            if (F.is_zero(a[i])) continue;
            if (apply_endo(F, R.sigma, a[i]) != a[i]) return false;
            if (!endo_power_is_identity(F, R.sigma, m - i)) return false;
        }
        return true;
    }
    // delta != 0: f d in Rf over a spanning set of the base, and f t in Rf
    for (const auto& d : F.spanning_set()) {
        SkewPoly fd = skew_mul(R, f, sp_const(F, d));
        if (!right_divmod(R, fd, f).second.is_zero()) return false;
    }
    SkewPoly ft = skew_mul(R, f, sp_t(F));
    return right_divmod(R, ft, f).second.is_zero();
}

// Fix(sigma) ∩ Const(delta) inside a finite base
FixedSubfield compute_base_field(const SkewRingCtx& R) {
    const auto& F = R.F();
    FixedSubfield fix = fixed_subfield(F, R.sigma);
    if (R.delta.is_zero_map()) return fix;
    // intersect with the delta-constants
    std::vector<Elem> kept;
    for (const auto& e : fix.elements)
        if (F.is_zero(R.deriv(e))) kept.push_back(e);
    // the intersection is again a subfield F_{p^d}
    std::uint32_t d = 0;
    for (std::uint32_t k = 1; k <= F.h; ++k)
        if (pow_u64(F.p, k) == kept.size()) d = k;
    if (d == 0) throw std::logic_error("fixed/constant intersection is not a subfield");
    FixedSubfield out;
    out.field = FieldCtx::make_finite(F.p, d);
    out.elements = std::move(kept);
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

}  // namespace

PetitAlgebraCtx::PetitAlgebraCtx(SkewRingCtx r, SkewPoly ff)
    : ring(std::move(r)), f(std::move(ff)) {
    const auto& F = ring.F();
    if (f.is_zero() || !F.is_unit(f.lead()))
        throw std::invalid_argument("f needs a unit leading coefficient");
    if (!F.is_one(f.lead())) f = sp_scale(ring, F.inv(f.lead()), f);  // S_f = S_{df}
    m = *f.deg();
    if (m < 2) throw std::invalid_argument("deg f must be at least 2");
    right_invariant_ = compute_right_invariant(ring, f);
    if (F.kind == FieldKind::Finite) {
        base_field_ = compute_base_field(ring);
        has_base_field_ = true;
    }
}

AlgebraPtr PetitAlgebraCtx::make(SkewRingCtx ring, SkewPoly f) {
    return AlgebraPtr(new PetitAlgebraCtx(std::move(ring), std::move(f)));
}

SkewPoly PetitAlgebraCtx::mul(const SkewPoly& x, const SkewPoly& y) const {
    return right_divmod(ring, skew_mul(ring, x, y), f).second;
}

std::uint64_t PetitAlgebraCtx::size() const { return tuple_count(ring, m); }

SkewPoly PetitAlgebraCtx::element_at(std::uint64_t idx) const { return tuple_at(ring, m, idx); }

std::uint64_t PetitAlgebraCtx::index_of(const SkewPoly& x) const {
    return tuple_index(ring, m, x);
}

const FixedSubfield& PetitAlgebraCtx::base_field() const {
    if (!has_base_field_) throw inapplicable_error("no finite base field data");
    return base_field_;
}

std::vector<std::uint32_t> PetitAlgebraCtx::fp_coords(const SkewPoly& x) const {
    const auto& Fc = F();
    std::vector<std::uint32_t> v(m * Fc.h, 0);
    for (std::size_t i = 0; i < m && i < x.c.size(); ++i) {
        ff_t packed = x.c[i].num.empty() ? 0 : x.c[i].num[0];
        for (std::uint32_t u = 0; u < Fc.h; ++u) {
            v[i * Fc.h + u] = packed % Fc.p;
            packed /= Fc.p;
        }
    }
    return v;
}

SkewPoly PetitAlgebraCtx::from_fp_coords(const std::vector<std::uint32_t>& v) const {
    const auto& Fc = F();
    std::vector<Elem> c(m, Fc.zero());
    for (std::size_t i = 0; i < m; ++i) {
        ff_t packed = 0;
        for (std::uint32_t u = Fc.h; u-- > 0;)
            packed = packed * Fc.p + v[i * Fc.h + u] % Fc.p;
        c[i] = Fc.from_ff(packed);
    }
    return sp_from_coeffs(std::move(c));
}

std::vector<SkewPoly> PetitAlgebraCtx::fp_basis() const {
    const auto& Fc = F();
    std::vector<SkewPoly> basis;
    for (std::size_t i = 0; i < m; ++i)
        for (std::uint32_t u = 0; u < Fc.h; ++u)
            basis.push_back(sp_monomial(Fc, Fc.from_ff(static_cast<ff_t>(pow_u64(Fc.p, u))), i));
    return basis;
}

SkewPoly petit_mul(const PetitAlgebraCtx& A, const SkewPoly& x, const SkewPoly& y) {
    return A.mul(x, y);
}

bool is_right_invariant(const PetitAlgebraCtx& A) { return A.right_invariant(); }

std::vector<SkewPoly> eigenring(const PetitAlgebraCtx& A) {
    const auto& F = A.F();
    if (!A.finite()) throw inapplicable_error("eigenring needs a finite base");
    const std::size_t n = A.m * F.h;
    auto basis = A.fp_basis();
    GFMatrix M(F.p, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        SkewPoly fg = skew_mul(A.ring, A.f, basis[j]);
        SkewPoly rem = right_divmod(A.ring, fg, A.f).second;
        auto col = A.fp_coords(rem);
        for (std::size_t i = 0; i < n; ++i) M.at(i, j) = col[i];
    }
    auto ker = gf_kernel(std::move(M));
    std::vector<SkewPoly> out;
    out.reserve(ker.size());
    for (const auto& v : ker) out.push_back(A.from_fp_coords(v));
    return out;
}

std::vector<std::uint64_t> eigenring_span_indices(const PetitAlgebraCtx& A) {
    const auto& F = A.F();
    auto basis = eigenring(A);
    std::vector<std::uint64_t> out;
    std::uint64_t count = pow_u64(F.p, basis.size());
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        SkewPoly acc;
        std::uint64_t t = idx;
        for (const auto& b : basis) {
            std::uint32_t digit = static_cast<std::uint32_t>(t % F.p);
            t /= F.p;
            if (digit) acc = sp_add(A.ring, acc, sp_scale(A.ring, F.from_int(digit), b));
        }
        out.push_back(A.index_of(acc));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

NucleiResult nuclei_brute(const PetitAlgebraCtx& A, const scan::Limits& lim) {
    const auto& F = A.F();
    if (!A.finite()) throw inapplicable_error("nuclei scan needs a finite base");
    std::uint64_t n = A.size();
    if (!lim.allows_full(static_cast<std::size_t>(n)))
        throw bound_exceeded("algebra too large for the nuclei scan");
    auto basis = A.fp_basis();
    std::vector<std::vector<SkewPoly>> bb(basis.size(), std::vector<SkewPoly>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) bb[i][j] = A.mul(basis[i], basis[j]);

    // the associator is additive in each slot, so basis pairs suffice
    auto in_left = [&](const SkewPoly& x) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (A.mul(A.mul(x, basis[i]), basis[j]) != A.mul(x, bb[i][j])) return false;
        return true;
    };
    auto in_middle = [&](const SkewPoly& x) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (A.mul(A.mul(basis[i], x), basis[j]) != A.mul(basis[i], A.mul(x, basis[j])))
                    return false;
        return true;
    };
    auto in_right = [&](const SkewPoly& x) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (A.mul(bb[i][j], x) != A.mul(basis[i], A.mul(basis[j], x))) return false;
        return true;
    };
    auto in_comm = [&](const SkewPoly& x) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (A.mul(x, basis[i]) != A.mul(basis[i], x)) return false;
        return true;
    };

    NucleiResult res;
    auto nsz = static_cast<std::size_t>(n);
    auto keep = [&](auto&& pred) {
        auto hits = scan::collect(nsz, [&](std::size_t idx) { return pred(A.element_at(idx)); });
        return std::vector<std::uint64_t>(hits.begin(), hits.end());
    };
    res.nuc_l = keep(in_left);
    res.nuc_m = keep(in_middle);
    res.nuc_r = keep(in_right);
    std::set_intersection(res.nuc_l.begin(), res.nuc_l.end(), res.nuc_m.begin(), res.nuc_m.end(),
                          std::back_inserter(res.nuc));
    std::vector<std::uint64_t> tmp;
    std::set_intersection(res.nuc.begin(), res.nuc.end(), res.nuc_r.begin(), res.nuc_r.end(),
                          std::back_inserter(tmp));
    res.nuc = std::move(tmp);
    res.comm = keep(in_comm);
    std::set_intersection(res.comm.begin(), res.comm.end(), res.nuc.begin(), res.nuc.end(),
                          std::back_inserter(res.center));
    res.comm_closed_form_equality =
        A.ring.delta.is_zero_map() && !F.is_zero(tm_reduction(A.ring, A.f)[0]);

    if (!A.associative()) {
        // cross-checks: Nuc_l = Nuc_m = K and Nuc_r = E(f)
        std::vector<std::uint64_t> base_idx;
        for (std::uint64_t k = 0; k < F.size(); ++k)
            base_idx.push_back(A.index_of(sp_const(F, F.at(k))));
        std::sort(base_idx.begin(), base_idx.end());
        if (res.nuc_l != base_idx || res.nuc_m != base_idx)
            throw std::logic_error("left/middle nucleus scan disagrees with the base ring");
        if (res.nuc_r != eigenring_span_indices(A))
            throw std::logic_error("right nucleus scan disagrees with the eigenring");
    }
    return res;
}

bool is_right_semi_invariant(const PetitAlgebraCtx& A) {
    const auto& F = A.F();
    const auto& R = A.ring;
    std::size_t m = A.m;
    bool result = true;
    if (R.delta.is_zero_map()) {
        // sigma^m(c) a_j = a_j sigma^j(c): over a commutative base this is
        // sigma^{m-j} = id wherever a_j != 0
        auto a = tm_reduction(R, A.f);
        for (std::size_t j = 0; j < m && result; ++j)
            if (!F.is_zero(a[j]) && !endo_power_is_identity(F, R.sigma, m - j)) result = false;
    } else {
        for (const auto& c : F.spanning_set()) {
            std::vector<std::vector<Elem>> srows;
            for (std::size_t i = 0; i <= m; ++i) srows.push_back(snj_row(R, i, c));
            Elem sm = apply_endo_pow(F, R.sigma, m, c);
            for (std::size_t j = 0; j < m && result; ++j) {
                Elem rhs = F.zero();
                for (std::size_t i = j; i <= m; ++i)
                    rhs = F.add(rhs, F.mul(A.f.coeff(i), srows[i][j]));
                if (F.mul(sm, A.f.coeff(j)) != rhs) result = false;
            }
            if (!result) break;
        }
    }
    if (A.finite()) {
        // base in Nuc_r(S_f) iff right semi-invariant; E(f) is an F_p-space,
        // so containment of the h basis vectors of K decides it
        auto eig = eigenring(A);
        const std::size_t n = A.m * F.h;
        GFMatrix B(F.p, n, eig.size());
        for (std::size_t j = 0; j < eig.size(); ++j) {
            auto col = A.fp_coords(eig[j]);
            for (std::size_t i = 0; i < n; ++i) B.at(i, j) = col[i];
        }
        bool contained = true;
        for (std::uint32_t u = 0; u < F.h && contained; ++u) {
            auto b = A.fp_coords(sp_const(F, F.from_ff(static_cast<ff_t>(pow_u64(F.p, u)))));
            std::vector<std::uint32_t> x;
            contained = gf_solve(B, b, x);
            if (contained) {
                // gf_solve ignores free columns; verify the candidate solution
                std::vector<std::uint32_t> check(n, 0);
                for (std::size_t j = 0; j < eig.size(); ++j)
                    for (std::size_t i = 0; i < n; ++i)
                        check[i] = (check[i] + x[j] * B.at(i, j)) % F.p;
                contained = (check == b);
            }
        }
        if (contained != result)
            throw std::logic_error("semi-invariance criterion disagrees with the eigenring");
    }
    return result;
}

bool is_L_weak_semi_invariant(const PetitAlgebraCtx& A, std::uint32_t subfield_degree) {
    const auto& F = A.F();
    const auto& R = A.ring;
    if (!A.finite()) throw inapplicable_error("subfield test needs a finite base");
    if (subfield_degree == 0 || F.h % subfield_degree != 0)
        throw std::invalid_argument("not a subfield degree");
    std::size_t m = A.m;
    auto L = fixed_subfield(F, subfield_degree == F.h ? EndoDesc::identity()
                                                      : EndoDesc::frobenius(subfield_degree));
    for (const auto& c : L.elements) {
        std::vector<std::vector<Elem>> srows;
        for (std::size_t i = 0; i <= m; ++i) srows.push_back(snj_row(R, i, c));
        Elem sm = apply_endo_pow(F, R.sigma, m, c);
        for (std::size_t j = 0; j < m; ++j) {
            Elem rhs = F.zero();
            for (std::size_t i = j; i <= m; ++i)
                rhs = F.add(rhs, F.mul(A.f.coeff(i), srows[i][j]));
            if (F.mul(sm, A.f.coeff(j)) != rhs) return false;
        }
    }
    return true;
}

std::vector<std::vector<Elem>> mult_matrix(const PetitAlgebraCtx& A, const SkewPoly& g) {
    const auto& F = A.F();
    std::vector<std::vector<Elem>> W(A.m, std::vector<Elem>(A.m, F.zero()));
    SkewPoly ti = sp_const(F, F.one());
    for (std::size_t i = 0; i < A.m; ++i) {
        if (i > 0) ti = sp_monomial(F, F.one(), i);
        SkewPoly row = A.mul(ti, g);
        for (std::size_t j = 0; j < A.m; ++j) W[i][j] = row.coeff(j);
    }
    return W;
}

namespace {

Elem det_bareiss(const FieldCtx& F, std::vector<std::vector<Elem>> a) {
    const std::size_t n = a.size();
    if (n == 0) return F.one();
    Elem prev = F.one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (F.is_zero(a[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && F.is_zero(a[swap_row][k])) ++swap_row;
            if (swap_row == n) return F.zero();
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Elem v = F.sub(F.mul(a[i][j], a[k][k]), F.mul(a[i][k], a[k][j]));
                a[i][j] = F.div(v, prev);
            }
        prev = a[k][k];
    }
    Elem det = a[n - 1][n - 1];
    return negate ? F.neg(det) : det;
}

}  // namespace

Elem semi_mult(const PetitAlgebraCtx& A, const SkewPoly& g) {
    return det_bareiss(A.F(), mult_matrix(A, g));
}

DenseAlgebra::DenseAlgebra(AlgebraPtr A) : A_(std::move(A)) {
    const auto& F = A_->F();
    if (!A_->finite()) throw inapplicable_error("dense view needs a finite base");
    dim = A_->m * F.h;
    p = F.p;
    size = A_->size();
    auto basis = A_->fp_basis();
    sc_.assign(dim * dim * dim, 0);
    for (std::size_t u = 0; u < dim; ++u)
        for (std::size_t v = 0; v < dim; ++v) {
            auto coords = A_->fp_coords(A_->mul(basis[u], basis[v]));
            for (std::size_t w = 0; w < dim; ++w) sc_[(u * dim + v) * dim + w] = coords[w];
        }
    decode_tab_.assign(F.q * F.h, 0);
    for (std::uint64_t lex = 0; lex < F.q; ++lex) {
        ff_t packed = F.ff_at_lex(lex);
        for (std::uint32_t u = 0; u < F.h; ++u) {
            decode_tab_[lex * F.h + u] = packed % p;
            packed /= p;
        }
    }
}

void DenseAlgebra::decode(std::uint64_t lex_index, std::uint32_t* coords) const {
    const auto& F = A_->F();
    const std::size_t m = A_->m;
    for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t digit = (lex_index / pow_u64(F.q, m - 1 - i)) % F.q;
        for (std::uint32_t u = 0; u < F.h; ++u) coords[i * F.h + u] = decode_tab_[digit * F.h + u];
    }
}

void DenseAlgebra::mul(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) const {
    // accumulate without reduction: dim^2 terms of size < p^2 stay inside
    // 64 bits for every supported field
    std::uint64_t acc[64] = {};
    for (std::size_t u = 0; u < dim; ++u) {
        if (!x[u]) continue;
        for (std::size_t v = 0; v < dim; ++v) {
            std::uint64_t c = (static_cast<std::uint64_t>(x[u]) * y[v]) % p;
            if (!c) continue;
            const std::uint32_t* row = &sc_[(u * dim + v) * dim];
            for (std::size_t w = 0; w < dim; ++w) acc[w] += c * row[w];
        }
    }
    for (std::size_t w = 0; w < dim; ++w) out[w] = static_cast<std::uint32_t>(acc[w] % p);
}

bool DenseAlgebra::is_zero(const std::uint32_t* x, std::size_t dim) {
    for (std::size_t w = 0; w < dim; ++w)
        if (x[w]) return false;
    return true;
}

SkewPoly DenseAlgebra::lift(const std::uint32_t* coords) const {
    std::vector<std::uint32_t> v(coords, coords + dim);
    return A_->from_fp_coords(v);
}

namespace {

template <class Finder>
bool zero_divisor_scan(const PetitAlgebraCtx& A, SkewPoly& x, SkewPoly& y,
                       const scan::Limits& lim, Finder&& finder) {
    std::uint64_t n = A.size();
    std::uint64_t total = (n - 1) * (n - 1);
    if (!lim.allows_pairs(static_cast<std::size_t>(total)))
        throw bound_exceeded("pair scan above the exhaustion cap");
    DenseAlgebra D(A.shared_from_this());
    constexpr std::size_t kMaxDim = 64;
    if (D.dim > kMaxDim) throw bound_exceeded("algebra dimension too large for the dense scan");
    std::size_t hit = finder(static_cast<std::size_t>(total), [&](std::size_t k) {
        std::uint32_t a[kMaxDim], b[kMaxDim], prod[kMaxDim];
        D.decode(1 + k / (n - 1), a);
        D.decode(1 + k % (n - 1), b);
        D.mul(a, b, prod);
        return DenseAlgebra::is_zero(prod, D.dim);
    });
    if (hit == scan::npos) return false;
    x = A.element_at(1 + hit / (n - 1));
    y = A.element_at(1 + hit % (n - 1));
    if (!A.mul(x, y).is_zero()) throw std::logic_error("dense witness fails to verify");
    return true;
}

}  // namespace

bool find_zero_divisor_serial(const PetitAlgebraCtx& A, SkewPoly& x, SkewPoly& y,
                              const scan::Limits& lim) {
    return zero_divisor_scan(A, x, y, lim, [](std::size_t n, auto&& pred) {
        return scan::find_first_serial(n, pred);
    });
}

bool find_zero_divisor(const PetitAlgebraCtx& A, SkewPoly& x, SkewPoly& y,
                       const scan::Limits& lim) {
    return zero_divisor_scan(A, x, y, lim, [](std::size_t n, auto&& pred) {
        return scan::find_first(n, pred);
    });
}

bool find_zero_divisor_bounded(const PetitAlgebraCtx& A, std::uint32_t maxdeg, SkewPoly& x,
                               SkewPoly& y) {
    const auto& F = A.F();
    auto coeffs = F.bounded_elems(maxdeg);
    std::uint64_t n = coeffs.size();
    std::uint64_t count = pow_u64(n, A.m);
    auto build = [&](std::uint64_t idx) {
        std::vector<Elem> c(A.m, F.zero());
        for (std::size_t i = 0; i < A.m; ++i) {
            c[i] = coeffs[static_cast<std::size_t>((idx / pow_u64(n, A.m - 1 - i)) % n)];
        }
        return sp_from_coeffs(std::move(c));
    };
    std::uint64_t total = (count - 1) * (count - 1);
    std::size_t hit = scan::find_first(static_cast<std::size_t>(total), [&](std::size_t k) {
        SkewPoly a = build(1 + k / (count - 1));
        SkewPoly b = build(1 + k % (count - 1));
        return A.mul(a, b).is_zero();
    });
    if (hit == scan::npos) return false;
    x = build(1 + hit / (count - 1));
    y = build(1 + hit % (count - 1));
    return true;
}

DivisionStatus division_status(const PetitAlgebraCtx& A, const scan::Limits& lim) {
    const auto& F = A.F();
    const auto& R = A.ring;
    DivisionStatus out;
    if (A.finite()) {
        FactorResult fr = factor_search(R, A.f, lim);
        if (fr.irreducible) {
            out.kind = DivisionKind::Division;
            out.certified_by = "exhaustion";
        } else {
            out.kind = DivisionKind::ZeroDivisors;
            out.witness_left = fr.left;
            out.witness_right = fr.right;
            out.certified_by = "exhaustion";
            if (!A.mul(fr.left, fr.right).is_zero())
                throw std::logic_error("factorisation witness fails to multiply to zero");
        }
        // independent pair scan when the algebra is small enough
        std::uint64_t pairs = (A.size() - 1) * (A.size() - 1);
        if (lim.force || lim.allows_pairs(static_cast<std::size_t>(pairs))) {
            SkewPoly x, y;
            bool found = find_zero_divisor(A, x, y, lim);
            if (found != (out.kind == DivisionKind::ZeroDivisors))
                throw std::logic_error("zero-divisor scan disagrees with the factor search");
            out.certified_by = "both";
        }
        return out;
    }
    // F_q(y) with sigma(y) = y^2: f = t^2 - a(y), 3 not dividing deg_y a
    auto a = tm_reduction(R, A.f);
    if (R.sigma.kind == EndoDesc::Kind::YSquare && R.delta.is_zero_map() && A.m == 2 &&
        F.is_zero(a[1]) && !F.is_zero(a[0]) && F.elem_is_polynomial(a[0])) {
        std::uint64_t d = F.elem_degy_num(a[0]);
        if (d % 3 != 0) {
            out.kind = DivisionKind::RightNotLeftDivision;
            out.certified_by = "theorem";
            SkewPoly x, y;
            if (find_zero_divisor_bounded(A, 3, x, y))
                throw std::logic_error("bounded scan found a zero divisor against the criterion");
            out.bounded_scan_ran = true;
            return out;
        }
        throw inapplicable_error("degree criterion is silent for this polynomial");
    }
    // F_q(y) with sigma(y) = q0 y: f = t^m - a(y), m prime not dividing deg_y a
    if (R.sigma.kind == EndoDesc::Kind::YScale && R.delta.is_zero_map()) {
        bool shape = is_prime(A.m) && !F.is_zero(a[0]) && F.elem_is_polynomial(a[0]);
        for (std::size_t i = 1; i < A.m; ++i)
            if (!F.is_zero(a[i])) shape = false;
        if (shape) {
            auto base = FieldCtx::make_finite(F.p, F.h);
            bool has_root = gcd_u64(A.m, base->q - 1) == A.m;
            std::uint64_t d = F.elem_degy_num(a[0]);
            if (has_root && d % A.m != 0) {
                out.kind = DivisionKind::Division;
                out.certified_by = "theorem";
                return out;
            }
        }
        throw inapplicable_error("no supported criterion applies");
    }
    throw inapplicable_error("unsupported base or endomorphism");
}

LeftInvertible t_left_invertible(const PetitAlgebraCtx& A) {
    const auto& F = A.F();
    const auto& R = A.ring;
    if (!R.delta.is_zero_map()) throw std::invalid_argument("needs delta = 0");
    auto a = tm_reduction(R, A.f);
    LeftInvertible out{false, {}};
    if (F.is_zero(a[0])) return out;
    out.invertible = true;
    Elem a0inv = F.inv(a[0]);
    std::vector<Elem> g(A.m, F.zero());
    g[A.m - 1] = a0inv;
    for (std::size_t i = 0; i + 1 < A.m; ++i) g[i] = F.neg(F.mul(a0inv, a[i + 1]));
    out.witness = sp_from_coeffs(std::move(g));
    SkewPoly check = A.mul(out.witness, sp_t(F));
    if (!(check == sp_const(F, F.one())))
        throw std::logic_error("left inverse witness fails to verify");
    return out;
}

}  // namespace petit
