#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "petit/algebra.hpp"
#include "petit/parse.hpp"

using namespace petit;

namespace {

AlgebraPtr alg(const char* field, const char* sigma, const char* delta, const char* poly) {
    auto F = parse_field_spec(field);
    SkewRingCtx R(F, parse_endo_spec(*F, sigma), parse_deriv_spec(*F, delta));
    return PetitAlgebraCtx::make(R, parse_poly(R, poly));
}

}  // namespace

TEST_CASE("quotient products") {
    auto A = alg("Fq(2,2)", "frob(1)", "zero", "t^2 + g");  // t^2 - w
    const auto& F = A->F();
    SkewPoly y = parse_poly(A->ring, "g*t + 1");
    CHECK(petit_mul(*A, sp_const(F, F.one()), y) == y);
    CHECK(petit_mul(*A, sp_t(F), sp_t(F)) == sp_const(F, F.gen()));

    auto B = alg("Fq(2,2)", "frob(1)", "zero", "t^2 + 1");
    SkewPoly zl = parse_poly(B->ring, "t + g^2");
    SkewPoly zr = parse_poly(B->ring, "t + g");
    CHECK(petit_mul(*B, zl, zr).is_zero());
}

TEST_CASE("right invariance and associativity flags") {
    CHECK(alg("Fq(2,2)", "frob(1)", "zero", "t^2 + 1")->associative());       // a = 1 in F_2
    CHECK_FALSE(alg("Fq(2,2)", "frob(1)", "zero", "t^2 + g")->associative()); // a = w
    CHECK(alg("Fq(2,2)", "frob(1)", "zero", "t^2")->right_invariant());
    CHECK_FALSE(alg("Fq(3,2)", "frob(1)", "zero", "t^2 + 2*g")->associative());
    CHECK(alg("Fq(3,2)", "frob(1)", "zero", "t^2 + 1")->associative());
}

TEST_CASE("associativity matches an exhaustive associator scan on basis triples") {
    for (const char* field : {"Fq(2,2)", "Fq(3,2)"}) {
        auto F = parse_field_spec(field);
        SkewRingCtx R(F, parse_endo_spec(*F, "frob(1)"), DerivDesc::zero());
        for (std::uint64_t c1 = 0; c1 < F->size(); ++c1)
            for (std::uint64_t c0 = 0; c0 < F->size(); ++c0) {
                SkewPoly f = sp_from_coeffs({F->at(c0), F->at(c1), F->one()});
                auto A = PetitAlgebraCtx::make(R, f);
                auto basis = A->fp_basis();
                bool assoc = true;
                for (const auto& x : basis)
                    for (const auto& y : basis)
                        for (const auto& z : basis)
                            if (!(A->mul(A->mul(x, y), z) == A->mul(x, A->mul(y, z)))) assoc = false;
                CHECK(assoc == A->associative());
            }
    }
}

TEST_CASE("eigenring dimensions") {
    auto A = alg("Fq(3,2)", "frob(1)", "zero", "t^2 + 2 + 2*g");  // t^2 - alpha
    auto basis = eigenring(*A);
    CHECK(basis.size() == 2);  // 9 elements, a copy of F_9
    CHECK(eigenring_span_indices(*A).size() == 9);

    auto assoc = alg("Fq(3,2)", "frob(1)", "zero", "t^2 + 1");
    CHECK(eigenring(*assoc).size() == 4);  // all of S_f

    // 1 always lies in E(f)
    auto span = eigenring_span_indices(*A);
    std::uint64_t one_idx = A->index_of(sp_const(A->F(), A->F().one()));
    CHECK(std::binary_search(span.begin(), span.end(), one_idx));
}

TEST_CASE("brute-force nuclei for a nonassociative cyclic algebra") {
    auto A = alg("Fq(3,2)", "frob(1)", "zero", "t^2 + 2 + 2*g");  // a = alpha = 1+g
    auto nuc = nuclei_brute(*A);
    CHECK(nuc.nuc_l.size() == 9);
    CHECK(nuc.nuc_m.size() == 9);
    CHECK(nuc.nuc_r.size() == 9);
    CHECK(nuc.nuc.size() == 9);      // Nuc(A) = K
    CHECK(nuc.comm.size() == 3);     // Comm(S_f) = F_3
    CHECK(nuc.center.size() == 3);

    auto assoc = alg("Fq(3,2)", "frob(1)", "zero", "t^2 + 1");
    auto nuca = nuclei_brute(*assoc);
    CHECK(nuca.nuc_l.size() == assoc->size());
    CHECK(nuca.nuc.size() == assoc->size());
}

TEST_CASE("right semi-invariance") {
    // t^m - a over a cyclic extension is always right semi-invariant
    CHECK(is_right_semi_invariant(*alg("Fq(3,2)", "frob(1)", "zero", "t^2 + 2 + 2*g")));
    CHECK(is_right_semi_invariant(*alg("Fq(2,2)", "frob(1)", "zero", "t^2 + g")));
    // f = t^2 - w t over F_4 fails at c = w
    CHECK_FALSE(is_right_semi_invariant(*alg("Fq(2,2)", "frob(1)", "zero", "t^2 + g*t")));
    // prime subfield is always weakly semi-invariant when sigma^m fixes F_p
    CHECK(is_L_weak_semi_invariant(*alg("Fq(2,2)", "frob(1)", "zero", "t^2 + g*t"), 1));
    CHECK(is_L_weak_semi_invariant(*alg("Fq(3,2)", "frob(1)", "zero", "t^2 + 2 + 2*g"), 1));
}

TEST_CASE("multiplication matrices") {
    auto A = alg("Fq(2,2)", "frob(1)", "zero", "t^2 + 1");
    const auto& F = A->F();
    SkewPoly one = sp_const(F, F.one());
    auto W1 = mult_matrix(*A, one);
    CHECK(W1[0][0] == F.one());
    CHECK(W1[1][1] == F.one());
    CHECK(F.is_zero(W1[0][1]));
    CHECK(semi_mult(*A, one) == F.one());

    // m = 2 closed form: rows (g0, g1), (sigma(g1) a0 + delta(g0), sigma(g0) + sigma(g1) a1 + delta(g1))
    auto B = alg("Fq(3,2)", "frob(1)", "zero", "t^2 + 2*t + 2 + 2*g");
    const auto& F9 = B->F();
    auto a = tm_reduction(B->ring, B->f);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        Elem g0 = F9.at(rng() % 9), g1 = F9.at(rng() % 9);
        SkewPoly g = sp_from_coeffs({g0, g1});
        auto W = mult_matrix(*B, g);
        CHECK(W[0][0] == g0);
        CHECK(W[0][1] == g1);
        CHECK(W[1][0] == F9.mul(B->ring.endo(g1), a[0]));
        CHECK(W[1][1] == F9.add(B->ring.endo(g0), F9.mul(B->ring.endo(g1), a[1])));
    }

    SkewPoly zd = parse_poly(A->ring, "t + g");
    CHECK(F.is_zero(semi_mult(*A, zd)));  // zero divisor
}

TEST_CASE("semi-multiplicativity of the determinant form") {
    auto A = alg("Fq(3,2)", "frob(1)", "zero", "t^2 + 2 + 2*g");
    const auto& F = A->F();
    std::mt19937 rng(37);
    for (int trial = 0; trial < 1000; ++trial) {
        Elem d = F.at(rng() % 9);
        SkewPoly g = A->element_at(rng() % A->size());
        Elem lhs = semi_mult(*A, petit_mul(*A, sp_const(F, d), g));
        Elem rhs = F.mul(semi_mult(*A, sp_const(F, d)), semi_mult(*A, g));
        CHECK(lhs == rhs);
    }
    // W_d W_g = W_{d o g} for scalars d
    for (int trial = 0; trial < 200; ++trial) {
        Elem d = F.at(rng() % 9);
        SkewPoly g = A->element_at(rng() % A->size());
        auto Wd = mult_matrix(*A, sp_const(F, d));
        auto Wg = mult_matrix(*A, g);
        auto Wdg = mult_matrix(*A, petit_mul(*A, sp_const(F, d), g));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                Elem acc = F.zero();
                for (std::size_t k = 0; k < 2; ++k) acc = F.add(acc, F.mul(Wd[i][k], Wg[k][j]));
                CHECK(acc == Wdg[i][j]);
            }
    }
}

TEST_CASE("vanishing of the form detects exactly the zero divisors over F_4") {
    auto A = alg("Fq(2,2)", "frob(1)", "zero", "t^2 + 1");
    const auto& F = A->F();
    for (std::uint64_t i = 1; i < A->size(); ++i) {
        SkewPoly g = A->element_at(i);
        bool is_zero_div = false;
        for (std::uint64_t j = 1; j < A->size(); ++j)
            if (petit_mul(*A, A->element_at(j), g).is_zero()) is_zero_div = true;
        CHECK(F.is_zero(semi_mult(*A, g)) == is_zero_div);
    }
    auto B = alg("Fq(2,2)", "frob(1)", "zero", "t^2 + g");  // division algebra
    for (std::uint64_t i = 1; i < B->size(); ++i)
        CHECK_FALSE(B->F().is_zero(semi_mult(*B, B->element_at(i))));
}

TEST_CASE("division status") {
    auto A = alg("Fq(3,2)", "frob(1)", "zero", "t^2 + 2 + 2*g");
    auto st = division_status(*A);
    CHECK(st.kind == DivisionKind::Division);
    CHECK(st.certified_by == "both");

    auto B = alg("Fq(2,2)", "frob(1)", "zero", "t^2 + 1");
    auto stb = division_status(*B);
    CHECK(stb.kind == DivisionKind::ZeroDivisors);
    CHECK(stb.witness_left == parse_poly(B->ring, "t + g^2"));
    CHECK(stb.witness_right == parse_poly(B->ring, "t + g"));

    auto C = alg("Rat(2,1)", "ysq", "zero", "t^2 + y");
    auto stc = division_status(*C);
    CHECK(stc.kind == DivisionKind::RightNotLeftDivision);
    CHECK(stc.certified_by == "theorem");
    CHECK(stc.bounded_scan_ran);

    auto D = alg("Rat(2,1)", "ysq", "zero", "t^2 + y^3");
    CHECK_THROWS_AS(division_status(*D), inapplicable_error);

    // quantum-plane side: t^3 - y over F_4(y) with sigma(y) = g y
    auto F4y = parse_field_spec("Rat(2,2)");
    SkewRingCtx Rq(F4y, EndoDesc::yscale(F4y->gen()), DerivDesc::zero());
    auto E = PetitAlgebraCtx::make(Rq, parse_poly(Rq, "t^3 + y"));
    auto ste = division_status(*E);
    CHECK(ste.kind == DivisionKind::Division);
    CHECK(ste.certified_by == "theorem");
    auto G = PetitAlgebraCtx::make(Rq, parse_poly(Rq, "t^3 + y^3"));
    CHECK_THROWS_AS(division_status(*G), inapplicable_error);
}

TEST_CASE("left invertibility of t") {
    auto A = alg("Fq(2,2)", "frob(1)", "zero", "t^2 + g");
    auto li = t_left_invertible(*A);
    CHECK(li.invertible);
    CHECK(li.witness == parse_poly(A->ring, "g^2*t"));

    auto B = alg("Fq(2,2)", "frob(1)", "zero", "t^2 + t");
    CHECK_FALSE(t_left_invertible(*B).invertible);

    auto C = alg("Fq(3,2)", "frob(1)", "zero", "t^3 + 2 + 2*g");
    CHECK(t_left_invertible(*C).invertible);
}

TEST_CASE("distributivity and bilinearity on random triples") {
    auto A = alg("Fq(3,2)", "frob(1)", "zero", "t^2 + 2 + 2*g");
    const auto& F = A->F();
    std::mt19937 rng(41);
    for (int trial = 0; trial < 10000; ++trial) {
        SkewPoly x = A->element_at(rng() % A->size());
        SkewPoly y = A->element_at(rng() % A->size());
        SkewPoly z = A->element_at(rng() % A->size());
        CHECK(petit_mul(*A, x, sp_add(A->ring, y, z)) ==
              sp_add(A->ring, petit_mul(*A, x, y), petit_mul(*A, x, z)));
        CHECK(petit_mul(*A, sp_add(A->ring, x, y), z) ==
              sp_add(A->ring, petit_mul(*A, x, z), petit_mul(*A, y, z)));
        // F-bilinearity for lambda in F_3
        Elem lam = F.from_int(static_cast<std::int64_t>(rng() % 3));
        CHECK(petit_mul(*A, sp_scale(A->ring, lam, x), y) ==
              sp_scale(A->ring, lam, petit_mul(*A, x, y)));
    }
}

TEST_CASE("powers of t associate exactly when t lies in the right nucleus") {
    for (const char* poly : {"t^3 + 2 + 2*g", "t^3 + g*t + 1", "t^3 + 2*t^2 + g", "t^3 + 1"}) {
        auto A = alg("Fq(3,2)", "frob(1)", "zero", poly);
        const auto& F = A->F();
        SkewPoly t = sp_t(F);
        SkewPoly tm = petit_mul(*A, petit_mul(*A, t, t), t);  // t^3 in S_f
        bool powers_assoc = petit_mul(*A, t, tm) == petit_mul(*A, tm, t);
        auto nuc = nuclei_brute(*A);
        bool t_in_nr = std::binary_search(nuc.nuc_r.begin(), nuc.nuc_r.end(), A->index_of(t));
        CHECK(powers_assoc == t_in_nr);
    }
}

TEST_CASE("zero-divisor pair scans agree between serial and parallel") {
    for (const char* poly : {"t^2 + 1", "t^2 + g", "t^2 + g*t + 1"}) {
        auto A = alg("Fq(2,2)", "frob(1)", "zero", poly);
        SkewPoly x1, y1, x2, y2;
        bool f1 = find_zero_divisor(*A, x1, y1);
        bool f2 = find_zero_divisor_serial(*A, x2, y2);
        CHECK(f1 == f2);
        if (f1) {
            CHECK(x1 == x2);
            CHECK(y1 == y2);
        }
    }
}

TEST_CASE("bounded nuclei over the polynomial ring match the base ring") {
    // f = t^2 - y in F_3[y][t; y -> 2y]: not associative, so the left and
    // middle nuclei restrict to F_3[y]
    auto P3 = parse_field_spec("Poly(3,1)");
    SkewRingCtx R(P3, parse_endo_spec(*P3, "yscale(2)"), DerivDesc::zero());
    auto A = PetitAlgebraCtx::make(R, parse_poly(R, "t^2 + 2*y"));
    CHECK_FALSE(A->associative());
    const auto& F = A->F();
    auto coeffs = F.bounded_elems(1);
    std::vector<SkewPoly> probes;
    for (const auto& s : F.spanning_set())
        for (std::size_t i = 0; i < 2; ++i) probes.push_back(sp_monomial(F, s, i));
    for (const auto& c0 : coeffs)
        for (const auto& c1 : coeffs) {
            SkewPoly x = sp_from_coeffs({c0, c1});
            bool in_left = true;
            for (const auto& u : probes)
                for (const auto& v : probes)
                    if (!(A->mul(A->mul(x, u), v) == A->mul(x, A->mul(u, v)))) in_left = false;
            bool in_middle = true;
            for (const auto& u : probes)
                for (const auto& v : probes)
                    if (!(A->mul(A->mul(u, x), v) == A->mul(u, A->mul(x, v)))) in_middle = false;
            bool scalar = F.is_zero(c1);
            CHECK(in_left == scalar);
            CHECK(in_middle == scalar);
        }
}
