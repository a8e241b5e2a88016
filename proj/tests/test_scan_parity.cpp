#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "petit/morphisms.hpp"
#include "petit/parse.hpp"
#include "petit/scan.hpp"

using namespace petit;

namespace {

AlgebraPtr alg(const char* field, const char* sigma, const char* poly) {
    auto F = parse_field_spec(field);
    SkewRingCtx R(F, parse_endo_spec(*F, sigma), DerivDesc::zero());
    return PetitAlgebraCtx::make(R, parse_poly(R, poly));
}

}  // namespace

TEST_CASE("generic kernels agree with the serial reference") {
    auto pred = [](std::size_t i) { return i % 1531 == 977; };
    for (std::size_t n : {0u, 1u, 100u, 20000u}) {
        CHECK(scan::find_first(n, pred) == scan::find_first_serial(n, pred));
        CHECK(scan::collect(n, pred) == scan::collect_serial(n, pred));
        CHECK(scan::all_of(n, pred) == scan::all_of_serial(n, pred));
    }
    auto never = [](std::size_t) { return false; };
    CHECK(scan::find_first(100000, never) == scan::npos);
    CHECK(scan::all_of(100000, [](std::size_t) { return true; }));
}

TEST_CASE("witnesses are thread-count independent") {
#ifdef _OPENMP
    std::vector<int> counts{1, 2, 4};
#else
    std::vector<int> counts{1};
#endif
    for (int threads : counts) {
#ifdef _OPENMP
        omp_set_num_threads(threads);
#else
        (void)threads;
#endif
        // zero-divisor witness over a reducible quadratic
        auto B = alg("Fq(3,2)", "frob(1)", "t^2 + 1");
        SkewPoly x, y, xs, ys;
        CHECK(find_zero_divisor(*B, x, y));
        CHECK(find_zero_divisor_serial(*B, xs, ys));
        CHECK(x == xs);
        CHECK(y == ys);

        // factor search returns the lex-first divisor
        auto R = B->ring;
        FactorResult fr = factor_search(R, parse_poly(R, "t^3 + 2*t^2 + 2*t + 1"));
        FactorResult fr2 = factor_search(R, parse_poly(R, "t^3 + 2*t^2 + 2*t + 1"));
        CHECK(fr.irreducible == fr2.irreducible);
        if (!fr.irreducible) {
            CHECK(fr.right == fr2.right);
            CHECK(fr.left == fr2.left);
        }

        // the automorphism oracle returns the same set in the same order
        auto D = alg("Fq(3,2)", "frob(1)", "t^2 + 2*g");
        auto par = brute_force_auts(D);
        auto ser = brute_force_auts_serial(D);
        REQUIRE(par.size() == ser.size());
        for (std::size_t i = 0; i < par.size(); ++i) CHECK(same_map(par[i], ser[i]));
    }
#ifdef _OPENMP
    omp_set_num_threads(omp_get_num_procs());
#endif
}

TEST_CASE("exhaustion caps") {
    scan::Limits lim;
    lim.full = 10;
    auto B = alg("Fq(3,2)", "frob(1)", "t^2 + 1");
    CHECK_THROWS_AS(nuclei_brute(*B, lim), bound_exceeded);
    lim.force = true;
    CHECK_NOTHROW(nuclei_brute(*B, lim));
}
