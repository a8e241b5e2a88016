#include "petit/morphisms.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace petit {

namespace {

// prod_{l=lo}^{hi-1} sigma^l(k)
Elem sigma_product(const SkewRingCtx& R, const Elem& k, std::size_t lo, std::size_t hi) {
    Elem r = R.F().one();
    for (std::size_t l = lo; l < hi; ++l) r = R.F().mul(r, R.endo_pow(l, k));
    return r;
}

std::vector<SkewPoly> htauk_basis_images(const PetitAlgebraCtx& A, const PetitAlgebraCtx& B,
                                         std::uint32_t j, const Elem& k) {
    const auto& F = A.F();
    std::vector<SkewPoly> images;
    for (const auto& e : A.fp_basis()) {
        std::size_t i = *e.deg();
        Elem coeff = apply_endo_pow(F, A.ring.sigma, j, e.coeff(i));
        if (i > 0) coeff = F.mul(coeff, sigma_product(A.ring, k, 0, i));
        images.push_back(sp_monomial(F, coeff, i));
    }
    (void)B;
    return images;
}

}  // namespace

GFMatrix MorphismCandidate::matrix() const {
    const auto& A = *src;
    const std::size_t n = A.m * A.F().h;
    GFMatrix M(A.F().p, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto col = dst->fp_coords(basis_images[j]);
        for (std::size_t i = 0; i < n; ++i) M.at(i, j) = col[i];
    }
    return M;
}

MorphismCandidate make_htauk(AlgebraPtr src, AlgebraPtr dst, std::uint32_t tau_power,
                             const Elem& k) {
    MorphismCandidate phi;
    phi.kind = MorphismCandidate::Kind::Htauk;
    phi.tau_power = tau_power;
    phi.k = k;
    phi.src = src;
    phi.dst = dst;
    if (src->finite()) phi.basis_images = htauk_basis_images(*src, *dst, tau_power, k);
    return phi;
}

MorphismCandidate make_gc(AlgebraPtr A, const Elem& c) {
    const auto& F = A->F();
    Elem k = F.mul(F.inv(c), apply_endo(F, A->ring.sigma, c));
    MorphismCandidate phi = make_htauk(A, A, 0, k);
    phi.kind = MorphismCandidate::Kind::Gc;
    phi.c = c;
    return phi;
}

MorphismCandidate make_identity(AlgebraPtr A) { return make_htauk(A, A, 0, A->F().one()); }

SkewPoly apply_morphism(const MorphismCandidate& phi, const SkewPoly& x) {
    const auto& F = phi.src->F();
    switch (phi.kind) {
        case MorphismCandidate::Kind::Htauk:
        case MorphismCandidate::Kind::Gc: {
            std::vector<Elem> out(phi.src->m, F.zero());
            for (std::size_t i = 0; i < phi.src->m && i < x.c.size(); ++i) {
                Elem v = apply_endo_pow(F, phi.src->ring.sigma, phi.tau_power, x.c[i]);
                if (i > 0) v = F.mul(v, sigma_product(phi.src->ring, phi.k, 0, i));
                out[i] = std::move(v);
            }
            return sp_from_coeffs(std::move(out));
        }
        case MorphismCandidate::Kind::HtauB1: {
            // sum tau(x_i) (t - b)^i
            const auto& R = phi.src->ring;
            SkewPoly lin = sp_from_coeffs({F.neg(phi.b), F.one()});
            SkewPoly acc, power = sp_const(F, F.one());
            for (std::size_t i = 0; i < x.c.size(); ++i) {
                if (i > 0) power = skew_mul(R, power, lin);
                Elem ti = apply_endo(F, phi.tau, x.c[i]);
                acc = sp_add(R, acc, sp_scale(R, ti, power));
            }
            return acc;
        }
        case MorphismCandidate::Kind::ThetaTCD: {
            const auto& R = phi.src->ring;
            SkewPoly lin = sp_from_coeffs({phi.c, phi.d});
            SkewPoly acc, power = sp_const(F, F.one());
            for (std::size_t i = 0; i < x.c.size(); ++i) {
                if (i > 0) power = skew_mul(R, power, lin);
                Elem ti = apply_endo(F, phi.tau, x.c[i]);
                acc = sp_add(R, acc, sp_scale(R, ti, power));
            }
            return acc;
        }
        case MorphismCandidate::Kind::Explicit: {
            auto coords = phi.src->fp_coords(x);
            SkewPoly acc;
            for (std::size_t v = 0; v < coords.size(); ++v) {
                if (!coords[v]) continue;
                acc = sp_add(phi.dst->ring, acc,
                             sp_scale(phi.dst->ring, F.from_int(coords[v]), phi.basis_images[v]));
            }
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

bool check_homomorphism(const MorphismCandidate& phi) {
    const auto& A = *phi.src;
    const auto& B = *phi.dst;
    const auto& F = A.F();
    if (A.m != B.m || A.F().q != B.F().q || A.F().kind != B.F().kind)
        throw std::invalid_argument("dimension mismatch");
    if (!A.finite()) {
        // sampled check over the spanning set
        auto span = F.spanning_set();
        std::vector<SkewPoly> elems;
        for (const auto& s : span)
            for (std::size_t i = 0; i < A.m; ++i) elems.push_back(sp_monomial(F, s, i));
        for (const auto& x : elems)
            for (const auto& y : elems) {
                SkewPoly lhs = apply_morphism(phi, A.mul(x, y));
                SkewPoly rhs = B.mul(apply_morphism(phi, x), apply_morphism(phi, y));
                if (!(lhs == rhs)) return false;
            }
        return true;
    }
    // bijectivity over F_p
    if (gf_rank(phi.matrix()) != A.m * F.h) return false;
    // unital and fixing the base field F of the algebra
    SkewPoly one = sp_const(F, F.one());
    if (!(apply_morphism(phi, one) == one)) return false;
    for (const auto& lam : A.base_field().elements) {
        SkewPoly lc = sp_const(F, lam);
        if (!(apply_morphism(phi, lc) == lc)) return false;
    }
    // multiplicativity on every F_p-basis pair
    auto basis = A.fp_basis();
    std::vector<SkewPoly> images;
    for (const auto& e : basis) images.push_back(apply_morphism(phi, e));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            SkewPoly lhs = apply_morphism(phi, A.mul(basis[i], basis[j]));
            SkewPoly rhs = B.mul(images[i], images[j]);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

bool ring_auto_check(const SkewRingCtx& R, const EndoDesc& tau, const Elem& c, const Elem& d) {
    const auto& F = R.F();
    validate_endo(F, tau);
    if (!tau.is_automorphism()) throw std::invalid_argument("tau must be an automorphism");
    if (F.is_zero(d)) throw std::invalid_argument("d must be nonzero");
    for (const auto& b : F.spanning_set()) {
        Elem tb = apply_endo(F, tau, b);
        Elem lhs1 = F.add(F.mul(c, tb), F.mul(d, R.deriv(tb)));
        Elem rhs1 = F.add(F.mul(apply_endo(F, tau, R.endo(b)), c), apply_endo(F, tau, R.deriv(b)));
        if (lhs1 != rhs1) return false;
        Elem lhs2 = F.mul(d, R.endo(tb));
        Elem rhs2 = F.mul(apply_endo(F, tau, R.endo(b)), d);
        if (lhs2 != rhs2) return false;
    }
    return true;
}

InducedIso induced_iso(const SkewRingCtx& R, const EndoDesc& tau, const Elem& c, const Elem& d,
                       const SkewPoly& f) {
    const auto& F = R.F();
    if (!ring_auto_check(R, tau, c, d))
        throw std::invalid_argument("the ring automorphism identities fail");
    SkewPoly lin = sp_from_coeffs({c, d});
    auto theta = [&](const SkewPoly& x) {
        SkewPoly acc, power = sp_const(F, F.one());
        for (std::size_t i = 0; i < x.c.size(); ++i) {
            if (i > 0) power = skew_mul(R, power, lin);
            acc = sp_add(R, acc, sp_scale(R, apply_endo(F, tau, x.c[i]), power));
        }
        return acc;
    };
    SkewPoly tf = theta(f);
    if (tf.deg() != f.deg()) throw std::logic_error("theta changed the degree of f");
    SkewPoly g = sp_scale(R, F.inv(tf.lead()), tf);
    InducedIso out;
    out.g = g;
    auto Af = PetitAlgebraCtx::make(R, f);
    out.target = PetitAlgebraCtx::make(R, g);
    MorphismCandidate phi;
    phi.kind = MorphismCandidate::Kind::ThetaTCD;
    phi.tau = tau;
    phi.c = c;
    phi.d = d;
    phi.src = Af;
    phi.dst = out.target;
    if (Af->finite())
        for (const auto& e : Af->fp_basis()) phi.basis_images.push_back(theta(e));
    if (!check_homomorphism(phi))
        throw std::logic_error("induced map fails the homomorphism check");
    out.map = std::move(phi);
    return out;
}

namespace {

// Galois data for finite K: tau candidates are sigma^j, j < n
std::uint64_t galois_order(const PetitAlgebraCtx& A) {
    return endo_order(A.F(), A.ring.sigma);
}

// brute-force search of maps src -> dst determined by the images of (g, t)
std::vector<MorphismCandidate> brute_force_maps(AlgebraPtr srcp, AlgebraPtr dstp,
                                                const scan::Limits& lim, bool serial) {
    const auto& A = *srcp;
    const auto& B = *dstp;
    const auto& F = A.F();
    if (!A.finite()) throw inapplicable_error("brute force needs a finite base");
    auto n = static_cast<std::size_t>(A.size());
    if (!lim.allows_full(n)) throw bound_exceeded("algebra too large for the brute force");

    // K = F(g) with g the cached primitive element; e = [K : F]
    const auto& Fsub = A.base_field();
    const std::uint32_t d = Fsub.field->h;
    const std::uint32_t e = F.h / d;
    Elem g = primitive_element(F);

    // minimal polynomial of g over F from its Galois conjugates
    std::vector<Elem> mu{F.one()};
    for (std::uint32_t l = 0; l < e; ++l) {
        Elem conj = F.from_ff(F.ff_frob(g.num.empty() ? 0 : g.num[0],
                                        static_cast<std::uint32_t>((static_cast<std::uint64_t>(d) * l) % F.h)));
        std::vector<Elem> next(mu.size() + 1, F.zero());
        for (std::size_t i = 0; i < mu.size(); ++i) {
            next[i + 1] = F.add(next[i + 1], mu[i]);
            next[i] = F.sub(next[i], F.mul(conj, mu[i]));
        }
        mu = std::move(next);
    }
    for (const auto& coeff : mu)
        if (apply_endo(F, EndoDesc::frobenius(d % F.h), coeff) != coeff)
            throw std::logic_error("minimal polynomial has a coefficient outside F");

    // F-basis of src: gamma_v g^u t^i, with standard-coordinate matrix C
    std::vector<Elem> gammas;
    {
        // F_p-basis of F: powers of the subfield generator image
        Elem gen = Fsub.gen_image;
        Elem cur = F.one();
        for (std::uint32_t v = 0; v < d; ++v) {
            gammas.push_back(cur);
            cur = F.mul(cur, gen);
        }
    }
    std::vector<Elem> gpow{F.one()};
    for (std::uint32_t u = 1; u < e; ++u) gpow.push_back(F.mul(gpow.back(), g));

    const std::size_t dim = A.m * F.h;
    GFMatrix C(F.p, dim, dim);
    std::size_t col = 0;
    for (std::size_t i = 0; i < A.m; ++i)
        for (std::uint32_t u = 0; u < e; ++u)
            for (std::uint32_t v = 0; v < d; ++v, ++col) {
                auto coords = A.fp_coords(sp_monomial(F, F.mul(gammas[v], gpow[u]), i));
                for (std::size_t r = 0; r < dim; ++r) C.at(r, col) = coords[r];
            }

    // valid images of g: mu(G) = 0 with left-iterated powers
    auto mu_vanishes = [&](const SkewPoly& G) {
        SkewPoly acc = sp_const(F, mu[0]);
        SkewPoly X = sp_const(F, F.one());
        for (std::size_t v = 1; v < mu.size(); ++v) {
            X = B.mul(X, G);
            acc = sp_add(B.ring, acc, sp_scale(B.ring, mu[v], X));
        }
        return acc.is_zero();
    };
    std::vector<std::size_t> g_candidates;
    for (std::size_t gi = 0; gi < n; ++gi)
        if (mu_vanishes(B.element_at(gi))) g_candidates.push_back(gi);

    auto try_pair = [&](std::size_t gi, std::size_t ti, MorphismCandidate& out) {
        SkewPoly G = B.element_at(gi), T = B.element_at(ti);
        std::vector<SkewPoly> X{sp_const(F, F.one())};
        for (std::uint32_t u = 1; u < e; ++u) X.push_back(B.mul(X.back(), G));
        std::vector<SkewPoly> Y{sp_const(F, F.one())};
        for (std::size_t i = 1; i < A.m; ++i) Y.push_back(B.mul(Y.back(), T));
        // images of the F-basis, extended F-linearly
        GFMatrix img(F.p, dim, dim);
        std::size_t cc = 0;
        for (std::size_t i = 0; i < A.m; ++i)
            for (std::uint32_t u = 0; u < e; ++u) {
                SkewPoly xy = B.mul(X[u], Y[i]);
                for (std::uint32_t v = 0; v < d; ++v, ++cc) {
                    auto coords = B.fp_coords(sp_scale(B.ring, gammas[v], xy));
                    for (std::size_t r = 0; r < dim; ++r) img.at(r, cc) = coords[r];
                }
            }
        // convert to the standard basis: M = img * C^{-1}, column by column
        GFMatrix M(F.p, dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<std::uint32_t> bcol(dim);
            for (std::size_t r = 0; r < dim; ++r) bcol[r] = r == j ? 1 : 0;
            std::vector<std::uint32_t> x;
            if (!gf_solve(C, bcol, x)) return false;
            for (std::size_t r = 0; r < dim; ++r) {
                std::uint64_t acc = 0;
                for (std::size_t kk = 0; kk < dim; ++kk)
                    acc += static_cast<std::uint64_t>(img.at(r, kk)) * x[kk];
                M.at(r, j) = static_cast<std::uint32_t>(acc % F.p);
            }
        }
        MorphismCandidate phi;
        phi.kind = MorphismCandidate::Kind::Explicit;
        phi.src = srcp;
        phi.dst = dstp;
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<std::uint32_t> coords(dim);
            for (std::size_t r = 0; r < dim; ++r) coords[r] = M.at(r, j);
            phi.basis_images.push_back(B.from_fp_coords(coords));
        }
        if (!check_homomorphism(phi)) return false;
        out = std::move(phi);
        return true;
    };

    std::size_t total = g_candidates.size() * n;
    if (!lim.allows_pairs(total)) throw bound_exceeded("pair scan above the exhaustion cap");
    auto pred = [&](std::size_t idx) {
        MorphismCandidate tmp;
        return try_pair(g_candidates[idx / n], idx % n, tmp);
    };
    std::vector<std::size_t> hits =
        serial ? scan::collect_serial(total, pred) : scan::collect(total, pred);
    std::vector<MorphismCandidate> out;
    for (std::size_t idx : hits) {
        MorphismCandidate phi;
        if (!try_pair(g_candidates[idx / n], idx % n, phi))
            throw std::logic_error("pair scan hit failed to rebuild");
        out.push_back(std::move(phi));
    }
    return out;
}

}  // namespace

std::vector<MorphismCandidate> brute_force_auts(AlgebraPtr A, const scan::Limits& lim) {
    return brute_force_maps(A, A, lim, false);
}

std::vector<MorphismCandidate> brute_force_auts_serial(AlgebraPtr A, const scan::Limits& lim) {
    return brute_force_maps(A, A, lim, true);
}

std::vector<MorphismCandidate> brute_force_isos(AlgebraPtr A, AlgebraPtr B,
                                                const scan::Limits& lim) {
    return brute_force_maps(A, B, lim, false);
}

std::optional<MorphismCandidate> iso_test(AlgebraPtr A, AlgebraPtr B, const scan::Limits& lim) {
    const auto& F = A->F();
    if (A->m != B->m || A->F().q != B->F().q || !(A->ring.sigma == B->ring.sigma) ||
        !(A->ring.delta == B->ring.delta))
        throw std::invalid_argument("algebras live over different rings");
    if (!A->finite()) throw inapplicable_error("isomorphism test needs a finite base");
    std::size_t m = A->m;
    bool hyp = !A->right_invariant() && !B->right_invariant() && A->ring.delta.is_zero_map() &&
               galois_order(*A) >= m - 1;
    if (hyp) {
        auto a = tm_reduction(A->ring, A->f);
        auto b = tm_reduction(B->ring, B->f);
        std::uint64_t ngal = galois_order(*A);
        for (std::uint32_t j = 0; j < ngal; ++j) {
            for (std::uint64_t ki = 0; ki < F.q; ++ki) {
                Elem k = F.at(ki);
                if (F.is_zero(k)) continue;
                bool ok = true;
                for (std::size_t i = 0; i < m && ok; ++i) {
                    Elem lhs = apply_endo_pow(F, A->ring.sigma, j, a[i]);
                    Elem rhs = F.mul(sigma_product(A->ring, k, i, m), b[i]);
                    if (lhs != rhs) ok = false;
                }
                if (!ok) continue;
                MorphismCandidate phi = make_htauk(A, B, j, k);
                if (!check_homomorphism(phi))
                    throw std::logic_error("candidate isomorphism fails verification");
                return phi;
            }
        }
        return std::nullopt;
    }
    auto maps = brute_force_maps(A, B, lim, false);
    if (maps.empty()) return std::nullopt;
    return maps.front();
}

// ---------- group classification ----------

namespace {

struct GroupTable {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> op;  // op[i][j] = i after j
    std::size_t id = 0;

    std::size_t pow(std::size_t x, std::uint64_t e) const {
        std::size_t r = id;
        for (std::uint64_t i = 0; i < e; ++i) r = op[x][r];
        return r;
    }
    std::uint64_t order(std::size_t x) const {
        std::size_t cur = x;
        std::uint64_t o = 1;
        while (cur != id) {
            cur = op[x][cur];
            ++o;
        }
        return o;
    }
    std::size_t inverse(std::size_t x) const { return pow(x, order(x) - 1); }
    std::vector<bool> cyclic_subgroup(std::size_t x) const {
        std::vector<bool> in(n, false);
        std::size_t cur = id;
        do {
            in[cur] = true;
            cur = op[x][cur];
        } while (cur != id);
        return in;
    }
    std::size_t closure_size(std::size_t x, std::size_t y) const {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> queue{id};
        seen[id] = true;
        std::size_t count = 1;
        while (!queue.empty()) {
            std::size_t cur = queue.back();
            queue.pop_back();
            for (std::size_t gen : {x, y}) {
                std::size_t nxt = op[gen][cur];
                if (!seen[nxt]) {
                    seen[nxt] = true;
                    ++count;
                    queue.push_back(nxt);
                }
            }
        }
        return count;
    }
};

GroupTable build_table(const std::vector<MorphismCandidate>& maps) {
    GroupTable t;
    t.n = maps.size();
    std::map<std::vector<std::uint32_t>, std::size_t> lookup;
    std::vector<GFMatrix> mats;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        mats.push_back(maps[i].matrix());
        lookup[mats.back().a] = i;
    }
    const std::size_t dim = mats.empty() ? 0 : mats[0].rows;
    const std::uint32_t p = mats.empty() ? 2 : mats[0].p;
    t.op.assign(t.n, std::vector<std::size_t>(t.n, 0));
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j) {
            GFMatrix prod(p, dim, dim);
            for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t c2 = 0; c2 < dim; ++c2) {
                    std::uint64_t acc = 0;
                    for (std::size_t k = 0; k < dim; ++k)
                        acc += static_cast<std::uint64_t>(mats[i].at(r, k)) * mats[j].at(k, c2);
                    prod.at(r, c2) = static_cast<std::uint32_t>(acc % p);
                }
            auto it = lookup.find(prod.a);
            if (it == lookup.end()) throw std::logic_error("automorphism set is not closed");
            t.op[i][j] = it->second;
        }
    GFMatrix idm(p, dim, dim);
    for (std::size_t r = 0; r < dim; ++r) idm.at(r, r) = 1;
    auto it = lookup.find(idm.a);
    if (it == lookup.end()) throw std::logic_error("identity map is missing");
    t.id = it->second;
    return t;
}

std::uint64_t cayley_hash(const GroupTable& t) {
    std::uint64_t hashv = 1469598103934665603ull;
    for (const auto& row : t.op)
        for (std::size_t v : row) {
            hashv ^= v;
            hashv *= 1099511628211ull;
        }
    return hashv;
}

bool try_dicyclic(const GroupTable& t, GroupStructure& out) {
    if (t.n % 4 != 0) return false;
    std::uint64_t l = t.n / 4;
    for (std::size_t y = 0; y < t.n; ++y) {
        if (t.order(y) != 2 * l) continue;
        auto in_y = t.cyclic_subgroup(y);
        std::size_t yl = t.pow(y, l);
        std::size_t yinv = t.inverse(y);
        for (std::size_t x = 0; x < t.n; ++x) {
            if (in_y[x]) continue;
            if (t.op[x][x] != yl) continue;
            std::size_t xinv = t.inverse(x);
            if (t.op[t.op[xinv][y]][x] != yinv) continue;
            if (t.closure_size(x, y) != t.n) continue;
            out.kind = GroupStructure::Kind::Dicyclic;
            out.l = l;
            out.gen_x = x;
            out.gen_y = y;
            return true;
        }
    }
    return false;
}

bool try_semidirect(const GroupTable& t, std::uint64_t s, std::uint64_t n2,
                    std::optional<std::uint64_t> want_l, GroupStructure& out) {
    if (s < 2 || n2 < 2 || s * n2 != t.n) return false;
    for (std::size_t x = 0; x < t.n; ++x) {
        if (t.order(x) != s) continue;
        auto in_x = t.cyclic_subgroup(x);
        for (std::size_t y = 0; y < t.n; ++y) {
            if (t.order(y) != n2) continue;
            // trivial intersection of the two cyclic subgroups
            bool trivial = true;
            std::size_t cur = t.op[y][t.id];
            while (cur != t.id && trivial) {
                if (in_x[cur]) trivial = false;
                cur = t.op[y][cur];
            }
            if (!trivial) continue;
            std::size_t conj = t.op[t.op[y][x]][t.inverse(y)];
            if (!in_x[conj]) continue;
            std::uint64_t l = 0;
            std::size_t probe = t.id;
            for (std::uint64_t e = 0; e < s; ++e) {
                if (probe == conj) {
                    l = e;
                    break;
                }
                probe = t.op[x][probe];
            }
            if (want_l && l != *want_l) continue;
            if (t.closure_size(x, y) != t.n) continue;
            out.kind = GroupStructure::Kind::SemidirectCyclic;
            out.s = s;
            out.n = n2;
            out.l = l;
            out.gen_x = x;
            out.gen_y = y;
            return true;
        }
    }
    return false;
}

GroupStructure classify_group(const std::vector<MorphismCandidate>& maps,
                              std::optional<std::uint64_t> kernel_norm_order,
                              std::optional<std::array<std::uint64_t, 3>> semidirect_hint) {
    GroupTable t = build_table(maps);
    GroupStructure out;
    out.order = t.n;
    // cyclic first: lexicographically least element of maximal order
    std::uint64_t maxord = 0;
    std::size_t gen = t.id;
    for (std::size_t i = 0; i < t.n; ++i) {
        std::uint64_t o = t.order(i);
        if (o > maxord) {
            maxord = o;
            gen = i;
        }
    }
    if (maxord == t.n) {
        if (kernel_norm_order && *kernel_norm_order == t.n) {
            out.kind = GroupStructure::Kind::KernelNorm;
            out.s = t.n;
        } else {
            out.kind = GroupStructure::Kind::Cyclic;
            out.n = t.n;
        }
        out.gen_x = gen;
        out.gen_y = gen;
        return out;
    }
    if (try_dicyclic(t, out)) return out;
    if (semidirect_hint &&
        try_semidirect(t, (*semidirect_hint)[0], (*semidirect_hint)[1], (*semidirect_hint)[2], out))
        return out;
    for (std::uint64_t s = 2; s < t.n; ++s) {
        if (t.n % s != 0) continue;
        if (try_semidirect(t, s, t.n / s, std::nullopt, out)) return out;
    }
    out.kind = GroupStructure::Kind::Unclassified;
    out.cayley_hash = cayley_hash(t);
    return out;
}

}  // namespace

std::string GroupStructure::describe() const {
    switch (kind) {
        case Kind::Cyclic:
            return "cyclic of order " + std::to_string(n);
        case Kind::Dicyclic:
            return "dicyclic of order " + std::to_string(4 * l);
        case Kind::SemidirectCyclic:
            return "Z/" + std::to_string(s) + " x|_" + std::to_string(l) + " Z/" +
                   std::to_string(n);
        case Kind::KernelNorm:
            return "kernel of the norm, cyclic of order " + std::to_string(s);
        case Kind::Unclassified:
            return "unclassified of order " + std::to_string(order);
    }
    return "";
}

AutGroupResult aut_group(AlgebraPtr A, const scan::Limits& lim) {
    const auto& F = A->F();
    if (!A->finite()) throw inapplicable_error("automorphism enumeration needs a finite base");
    AutGroupResult res;
    std::size_t m = A->m;
    bool theorem_route = A->ring.delta.is_zero_map();
    bool hyp = theorem_route && !A->right_invariant() && galois_order(*A) >= m - 1;
    if (theorem_route) {
        auto a = tm_reduction(A->ring, A->f);
        std::uint64_t ngal = galois_order(*A);
        for (std::uint32_t j = 0; j < ngal; ++j)
            for (std::uint64_t ki = 0; ki < F.q; ++ki) {
                Elem k = F.at(ki);
                if (F.is_zero(k)) continue;
                bool ok = true;
                for (std::size_t i = 0; i < m && ok; ++i) {
                    Elem lhs = apply_endo_pow(F, A->ring.sigma, j, a[i]);
                    Elem rhs = F.mul(sigma_product(A->ring, k, i, m), a[i]);
                    if (lhs != rhs) ok = false;
                }
                if (!ok) continue;
                MorphismCandidate phi = make_htauk(A, A, j, k);
                if (!check_homomorphism(phi))
                    throw std::logic_error("enumerated automorphism fails verification");
                res.autos.push_back(std::move(phi));
            }
        res.certified_by = "theorem";
        res.complete = hyp;
    }
    if (!res.complete) {
        std::size_t n = static_cast<std::size_t>(A->size());
        if (lim.allows_full(n)) {
            auto brute = brute_force_auts(A, lim);
            res.autos = std::move(brute);
            res.certified_by = theorem_route ? "both" : "exhaustion";
            res.complete = true;
        }
    }
    if (res.autos.empty()) {
        res.complete = false;
        res.certified_by = "partial";
        return res;
    }
    // kernel-of-norm tag: every map extends the identity on the base
    std::optional<std::uint64_t> kernel_order;
    bool all_id = true;
    for (const auto& phi : res.autos)
        if (phi.kind != MorphismCandidate::Kind::Htauk || phi.tau_power != 0) all_id = false;
    if (all_id && theorem_route) {
        const auto& Fsub = A->base_field();
        std::uint64_t s = (F.q - 1) / (Fsub.field->q - 1);
        if (res.autos.size() == s) kernel_order = s;
        for (const auto& phi : res.autos)
            if (!F.is_one(norm(F, A->ring.sigma, galois_order(*A), phi.k)))
                throw std::logic_error("identity-extension map with nontrivial norm");
    }
    std::optional<std::array<std::uint64_t, 3>> hint;
    {
        const auto& Fsub = A->base_field();
        std::uint64_t q0 = Fsub.field->q;
        std::uint64_t s = (F.q - 1) / (q0 - 1);
        if (s % m == 0 && res.autos.size() % (s / m) == 0 && s / m >= 2)
            hint = std::array<std::uint64_t, 3>{s / m, res.autos.size() / (s / m), q0 % (s / m)};
    }
    res.structure = classify_group(res.autos, kernel_order, hint);
    return res;
}

std::vector<MorphismCandidate> inner_auts(AlgebraPtr A) {
    const auto& F = A->F();
    if (!A->finite()) throw inapplicable_error("inner enumeration needs a finite base");
    auto a = tm_reduction(A->ring, A->f);
    for (std::size_t i = 1; i < A->m; ++i)
        if (!F.is_zero(a[i])) throw std::invalid_argument("needs f = t^m - a");
    // G_c = G_d iff c^{-1} sigma(c) = d^{-1} sigma(d); keep the least c per class
    std::map<std::uint64_t, Elem> reps;  // lex index of k -> least c
    for (std::uint64_t ci = 0; ci < F.q; ++ci) {
        Elem c = F.at(ci);
        if (F.is_zero(c)) continue;
        Elem k = F.mul(F.inv(c), apply_endo(F, A->ring.sigma, c));
        std::uint64_t key = F.ff_lex_index(k.num.empty() ? 0 : k.num[0]);
        reps.emplace(key, c);
    }
    std::vector<MorphismCandidate> out;
    for (const auto& [key, c] : reps) {
        MorphismCandidate phi = make_gc(A, c);
        if (!check_homomorphism(phi)) throw std::logic_error("inner map fails verification");
        out.push_back(std::move(phi));
    }
    const auto& Fsub = A->base_field();
    std::uint64_t s = (F.q - 1) / (Fsub.field->q - 1);
    if (A->ring.delta.is_zero_map() && out.size() != s)
        throw std::logic_error("inner subgroup has unexpected order");
    return out;
}

std::vector<std::vector<std::uint64_t>> iso_classes(const SkewRingCtx& R, std::size_t m) {
    const auto& F = R.F();
    if (F.kind != FieldKind::Finite) throw inapplicable_error("finite base required");
    if (m != endo_order(F, R.sigma))
        throw inapplicable_error("the orbit relation needs deg f equal to the order of sigma");
    auto fix = fixed_subfield(F, R.sigma);
    std::uint64_t n = F.q;
    std::vector<std::uint64_t> parent(n);
    for (std::uint64_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::uint64_t(std::uint64_t)> find = [&](std::uint64_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::uint64_t x, std::uint64_t y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    };
    std::uint64_t ngal = endo_order(F, R.sigma);
    for (std::uint64_t ai = 0; ai < n; ++ai) {
        Elem a = F.at(ai);
        for (const auto& k : fix.elements) {
            if (F.is_zero(k)) continue;
            for (std::uint64_t j = 0; j < ngal; ++j) {
                Elem img = F.mul(k, apply_endo_pow(F, R.sigma, j, a));
                unite(ai, F.ff_lex_index(img.num.empty() ? 0 : img.num[0]));
            }
        }
    }
    std::map<std::uint64_t, std::vector<std::uint64_t>> classes;
    for (std::uint64_t i = 0; i < n; ++i) classes[find(i)].push_back(i);
    std::vector<std::vector<std::uint64_t>> out;
    for (auto& [root, members] : classes) out.push_back(std::move(members));
    return out;
}

bool differential_auts(AlgebraPtr A, const EndoDesc& tau, const Elem& b) {
    const auto& F = A->F();
    const auto& R = A->ring;
    if (R.sigma.kind != EndoDesc::Kind::Identity || R.delta.is_zero_map())
        throw std::invalid_argument("needs a differential ring");
    std::size_t m = A->m;
    if (m != F.p) throw std::invalid_argument("needs f = t^p - t - d");
    auto a = tm_reduction(R, A->f);
    if (!F.is_one(a[1])) throw std::invalid_argument("needs f = t^p - t - d");
    for (std::size_t i = 2; i < m; ++i)
        if (!F.is_zero(a[i])) throw std::invalid_argument("needs f = t^p - t - d");
    validate_endo(F, tau);
    if (!tau.is_automorphism()) throw std::invalid_argument("tau must be an automorphism");
    for (const auto& z : F.spanning_set()) {
        if (apply_endo(F, tau, R.deriv(z)) != R.deriv(apply_endo(F, tau, z)))
            throw std::invalid_argument("tau does not commute with delta");
    }
    Elem d = a[0];
    Elem rhs = F.add(b, d);
    rhs = F.sub(rhs, F.pow(b, F.p));
    rhs = F.sub(rhs, apply_deriv_pow(F, R.delta, R.sigma, F.p - 1, b));
    if (apply_endo(F, tau, d) != rhs) return false;
    MorphismCandidate phi;
    phi.kind = MorphismCandidate::Kind::HtauB1;
    phi.tau = tau;
    phi.b = b;
    phi.src = A;
    phi.dst = A;
    if (A->finite())
        for (const auto& e : A->fp_basis()) phi.basis_images.push_back(apply_morphism(phi, e));
    if (!check_homomorphism(phi))
        throw std::logic_error("differential automorphism fails the direct check");
    return true;
}

bool same_map(const MorphismCandidate& a, const MorphismCandidate& b) {
    if (a.src->finite()) return a.matrix().a == b.matrix().a;
    throw inapplicable_error("map comparison needs a finite base");
}

bool same_morphism_set(const std::vector<MorphismCandidate>& lhs,
                       const std::vector<MorphismCandidate>& rhs) {
    if (lhs.size() != rhs.size()) return false;
    std::vector<std::vector<std::uint32_t>> l, r;
    for (const auto& phi : lhs) l.push_back(phi.matrix().a);
    for (const auto& phi : rhs) r.push_back(phi.matrix().a);
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    return l == r;
}

MorphismCandidate compose(const MorphismCandidate& first, const MorphismCandidate& then) {
    if (first.dst.get() != then.src.get())
        throw std::invalid_argument("maps do not compose");
    MorphismCandidate out;
    out.kind = MorphismCandidate::Kind::Explicit;
    out.src = first.src;
    out.dst = then.dst;
    for (const auto& img : first.basis_images)
        out.basis_images.push_back(apply_morphism(then, img));
    return out;
}

}  // namespace petit
