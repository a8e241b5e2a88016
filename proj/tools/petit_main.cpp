#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "petit/irreducibility.hpp"
#include "petit/morphisms.hpp"
#include "petit/parse.hpp"

using namespace petit;
using nlohmann::json;

namespace {

struct Common {
    std::string field, sigma = "id", delta = "zero";
    bool oracle = false, pretty = false, timing = false;
    int threads = 0;
};

void add_common(CLI::App* cmd, Common& c, bool needs_field = true) {
    auto* f = cmd->add_option("--field", c.field, "coefficient ring, e.g. Fq(3,2)");
    if (needs_field) f->required();
    cmd->add_option("--sigma", c.sigma, "endomorphism: id, frob(r), ysq, yscale(q)");
    cmd->add_option("--delta", c.delta, "derivation: zero, ddy, inner(u)");
    cmd->add_flag("--oracle", c.oracle, "force exhaustive cross-checks");
    cmd->add_flag("--pretty", c.pretty, "indent the JSON and print a summary table");
    cmd->add_flag("--timing", c.timing, "include wall time in the report");
    cmd->add_option("--threads", c.threads, "worker threads (default: all cores)");
}

SkewRingCtx make_ring(const Common& c) {
    auto F = parse_field_spec(c.field);
    return {F, parse_endo_spec(*F, c.sigma), parse_deriv_spec(*F, c.delta)};
}

scan::Limits make_limits(const Common& c) {
    auto lim = scan::Limits::from_env();
    lim.force = c.oracle;
    return lim;
}

json context_json(const SkewRingCtx& R) {
    const auto& F = R.F();
    return json{{"field", field_spec_string(F)},
                {"modulus", modulus_string(F)},
                {"sigma", endo_spec_string(F, R.sigma)},
                {"delta", deriv_spec_string(F, R.delta)}};
}

int emit(const Common& c, const std::string& command, json context, json result,
         const std::string& certification, double ms, int exit_code = 0) {
    json report{{"schema_version", 1},
                {"command", command},
                {"context", std::move(context)},
                {"result", std::move(result)},
                {"certification", certification}};
    if (c.timing) report["timing_ms"] = ms;
    std::cout << report.dump(c.pretty ? 2 : -1) << "\n";
    if (c.pretty) {
        std::cerr << command << ": " << certification << "\n";
        for (auto& [key, value] : report["result"].items())
            std::cerr << "  " << key << " = " << value.dump() << "\n";
    }
    return exit_code;
}

const char* verdict_name(CriterionVerdict::Kind k) {
    switch (k) {
        case CriterionVerdict::Kind::Irreducible:
            return "irreducible";
        case CriterionVerdict::Kind::Reducible:
            return "reducible";
        case CriterionVerdict::Kind::Inapplicable:
            return "inapplicable";
        case CriterionVerdict::Kind::Unknown:
            return "unknown";
    }
    return "";
}

json structure_json(const GroupStructure& st) {
    json j{{"order", st.order}, {"description", st.describe()}};
    switch (st.kind) {
        case GroupStructure::Kind::Cyclic:
            j["tag"] = "cyclic";
            j["n"] = st.n;
            break;
        case GroupStructure::Kind::Dicyclic:
            j["tag"] = "dicyclic";
            j["l"] = st.l;
            break;
        case GroupStructure::Kind::SemidirectCyclic:
            j["tag"] = "semidirect";
            j["s"] = st.s;
            j["n"] = st.n;
            j["l"] = st.l;
            break;
        case GroupStructure::Kind::KernelNorm:
            j["tag"] = "kernel_norm";
            j["s"] = st.s;
            break;
        case GroupStructure::Kind::Unclassified:
            j["tag"] = "unclassified";
            j["cayley_hash"] = st.cayley_hash;
            break;
    }
    return j;
}

json generator_json(const PetitAlgebraCtx& A, const MorphismCandidate& phi) {
    const auto& F = A.F();
    SkewPoly g = sp_const(F, F.h >= 2 ? primitive_element(F) : F.one());
    return json{{"image_of_g", poly_to_string(F, apply_morphism(phi, g))},
                {"image_of_t", poly_to_string(F, apply_morphism(phi, sp_t(F)))}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in skew polynomial rings and their quotient algebras"};
    app.require_subcommand(1);

    Common c;
    std::string poly_text, poly2_text, a_text, b_text, g_text, mod_text, side = "right";
    std::uint32_t cp = 0, ch = 0, cr = 0, cm = 0;
    std::size_t family_m = 2;
    std::uint32_t subfield_degree = 1;

    auto* irred = app.add_subcommand("irred", "irreducibility verdict with certificate");
    add_common(irred, c);
    irred->add_option("--poly", poly_text, "monic polynomial in t")->required();

    auto* count = app.add_subcommand("count-irred", "count irreducible t^m - a");
    add_common(count, c, false);
    count->add_option("prime", cp, "p")->required();
    count->add_option("extension", ch, "h")->required();
    count->add_option("frobenius", cr, "r")->required();
    count->add_option("degree", cm, "m")->required();

    auto* exists = app.add_subcommand("exists-irred", "existence of an irreducible t^m - a");
    add_common(exists, c, false);
    exists->add_option("prime", cp, "p")->required();
    exists->add_option("extension", ch, "h")->required();
    exists->add_option("frobenius", cr, "r")->required();
    exists->add_option("degree", cm, "m")->required();

    auto* mul = app.add_subcommand("mul", "skew product, optionally reduced mod_r f");
    add_common(mul, c);
    mul->add_option("--a", a_text)->required();
    mul->add_option("--b", b_text)->required();
    mul->add_option("--mod", mod_text, "reduce the product in S_f");

    auto* divmod = app.add_subcommand("divmod", "right or left division with remainder");
    add_common(divmod, c);
    divmod->add_option("--g", a_text, "dividend")->required();
    divmod->add_option("--f", b_text, "divisor")->required();
    divmod->add_option("--side", side, "right (default) or left");

    auto* nuclei = app.add_subcommand("nuclei", "exhaustive nuclei, center and commutator");
    add_common(nuclei, c);
    nuclei->add_option("--poly", poly_text)->required();

    auto* eigen = app.add_subcommand("eigenring", "F_p-basis of E(f)");
    add_common(eigen, c);
    eigen->add_option("--poly", poly_text)->required();

    auto* divst = app.add_subcommand("division-status", "division-algebra verdict");
    add_common(divst, c);
    divst->add_option("--poly", poly_text)->required();

    auto* aut = app.add_subcommand("aut", "automorphism group and classification");
    add_common(aut, c);
    aut->add_option("--poly", poly_text)->required();

    auto* iso = app.add_subcommand("iso", "isomorphism test between S_f and S_g");
    add_common(iso, c);
    iso->add_option("--poly", poly_text)->required();
    iso->add_option("--poly2", poly2_text)->required();

    auto* isocls = app.add_subcommand("iso-classes", "orbit partition of t^m - a");
    add_common(isocls, c);
    isocls->add_option("--m", family_m, "degree of the family")->required();

    auto* inner = app.add_subcommand("inner", "the inner subgroup {G_c}");
    add_common(inner, c);
    inner->add_option("--poly", poly_text)->required();

    auto* semi = app.add_subcommand("semimult", "determinant form M_f");
    add_common(semi, c);
    semi->add_option("--poly", poly_text)->required();
    semi->add_option("--g", g_text, "evaluate at one element (otherwise scan)");

    auto* semiinv = app.add_subcommand("semi-invariant", "right and L-weak semi-invariance");
    add_common(semiinv, c);
    semiinv->add_option("--poly", poly_text)->required();
    semiinv->add_option("--subfield-degree", subfield_degree, "degree of L over F_p");

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (c.threads > 0) omp_set_num_threads(c.threads);
#endif

    auto started = std::chrono::steady_clock::now();
    auto elapsed_ms = [&]() {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         started)
            .count();
    };

    try {
        auto lim_of = [&]() { return make_limits(c); };

        if (*count) {
            auto res = count_irreducible_tma(cp, ch, cr, cm);
            json result{{"applicable", res.applicable}, {"note", res.note}};
            if (res.applicable) result["count"] = res.count;
            if (c.oracle && res.applicable) {
                auto K = FieldCtx::make_finite(cp, ch);
                SkewRingCtx R(K, EndoDesc::frobenius(cr), DerivDesc::zero());
                std::uint64_t found = 0;
                for (std::uint64_t ai = 0; ai < K->q; ++ai) {
                    std::vector<Elem> cs(cm + 1, K->zero());
                    cs[0] = K->neg(K->at(ai));
                    cs[cm] = K->one();
                    if (factor_search(R, sp_from_coeffs(std::move(cs)), lim_of()).irreducible)
                        ++found;
                }
                result["oracle_count"] = found;
                result["oracle_agreement"] = found == res.count;
            }
            json ctx{{"p", cp}, {"h", ch}, {"r", cr}, {"m", cm}};
            return emit(c, "count-irred", ctx, result, c.oracle ? "both" : "theorem",
                        elapsed_ms(), res.applicable ? 0 : 2);
        }

        if (*exists) {
            auto res = exists_irreducible_tma(cp, ch, cr, cm);
            json result{{"applicable", res.applicable},
                        {"note", res.note},
                        {"s", res.s},
                        {"gcd", res.gcd_value},
                        {"linear_free_exists", res.linear_free_exists}};
            if (res.applicable) result["exists"] = res.exists;
            json ctx{{"p", cp}, {"h", ch}, {"r", cr}, {"m", cm}};
            return emit(c, "exists-irred", ctx, result, "theorem", elapsed_ms(),
                        res.applicable ? 0 : 2);
        }

        SkewRingCtx R = make_ring(c);
        const auto& F = R.F();
        json ctx = context_json(R);

        if (*irred) {
            SkewPoly f = parse_poly(R, poly_text);
            ctx["poly"] = poly_to_string(F, f);
            auto v = decide_irreducible(R, f, lim_of());
            json result{{"verdict", verdict_name(v.kind)}, {"certificate", v.certificate}};
            if (v.kind == CriterionVerdict::Kind::Reducible)
                result["witness_divisor"] = poly_to_string(F, v.witness);
            std::string cert = "theorem";
            if (v.certificate == "exhaustive-factor-search") cert = "exhaustion";
            if (c.oracle && F.kind == FieldKind::Finite) {
                bool oracle_irred = factor_search(R, f, lim_of()).irreducible;
                result["oracle_agreement"] =
                    (v.kind == CriterionVerdict::Kind::Irreducible) == oracle_irred;
                cert = "both";
            }
            return emit(c, "irred", ctx, result, cert, elapsed_ms(),
                        v.kind == CriterionVerdict::Kind::Inapplicable ? 2 : 0);
        }

        if (*mul) {
            SkewPoly x = parse_poly(R, a_text), y = parse_poly(R, b_text);
            ctx["a"] = poly_to_string(F, x);
            ctx["b"] = poly_to_string(F, y);
            json result;
            if (mod_text.empty()) {
                result["product"] = poly_to_string(F, skew_mul(R, x, y));
            } else {
                auto A = PetitAlgebraCtx::make(R, parse_poly(R, mod_text));
                ctx["poly"] = poly_to_string(F, A->f);
                result["product"] = poly_to_string(F, petit_mul(*A, x, y));
            }
            return emit(c, "mul", ctx, result, "exact", elapsed_ms());
        }

        if (*divmod) {
            SkewPoly g = parse_poly(R, a_text), f = parse_poly(R, b_text);
            ctx["g"] = poly_to_string(F, g);
            ctx["f"] = poly_to_string(F, f);
            auto [q, r] = side == "left" ? left_divmod(R, g, f) : right_divmod(R, g, f);
            json result{{"side", side},
                        {"quotient", poly_to_string(F, q)},
                        {"remainder", poly_to_string(F, r)}};
            return emit(c, "divmod", ctx, result, "exact", elapsed_ms());
        }

        if (*eigen) {
            auto A = PetitAlgebraCtx::make(R, parse_poly(R, poly_text));
            ctx["poly"] = poly_to_string(F, A->f);
            auto basis = eigenring(*A);
            json jb = json::array();
            for (const auto& e : basis) jb.push_back(poly_to_string(F, e));
            json result{{"dimension_fp", basis.size()},
                        {"size", pow_u64(F.p, basis.size())},
                        {"basis", jb},
                        {"equals_whole_algebra", basis.size() == A->m * F.h}};
            return emit(c, "eigenring", ctx, result, "exact", elapsed_ms());
        }

        if (*nuclei) {
            auto A = PetitAlgebraCtx::make(R, parse_poly(R, poly_text));
            ctx["poly"] = poly_to_string(F, A->f);
            auto res = nuclei_brute(*A, lim_of());
            json result{{"nuc_l_size", res.nuc_l.size()},
                        {"nuc_m_size", res.nuc_m.size()},
                        {"nuc_r_size", res.nuc_r.size()},
                        {"nuc_size", res.nuc.size()},
                        {"center_size", res.center.size()},
                        {"comm_size", res.comm.size()},
                        {"associative", A->associative()},
                        {"comm_closed_form_equality", res.comm_closed_form_equality}};
            return emit(c, "nuclei", ctx, result, "exhaustion", elapsed_ms());
        }

        if (*divst) {
            auto A = PetitAlgebraCtx::make(R, parse_poly(R, poly_text));
            ctx["poly"] = poly_to_string(F, A->f);
            auto st = division_status(*A, lim_of());
            json result;
            switch (st.kind) {
                case DivisionKind::Division:
                    result["status"] = "division";
                    break;
                case DivisionKind::RightNotLeftDivision:
                    result["status"] = "right_not_left_division";
                    break;
                case DivisionKind::ZeroDivisors:
                    result["status"] = "zero_divisors";
                    result["witness_left"] = poly_to_string(F, st.witness_left);
                    result["witness_right"] = poly_to_string(F, st.witness_right);
                    break;
            }
            result["bounded_scan_ran"] = st.bounded_scan_ran;
            return emit(c, "division-status", ctx, result, st.certified_by, elapsed_ms());
        }

        if (*aut) {
            auto A = PetitAlgebraCtx::make(R, parse_poly(R, poly_text));
            ctx["poly"] = poly_to_string(F, A->f);
            auto res = aut_group(A, lim_of());
            json result{{"order", res.autos.size()},
                        {"complete", res.complete},
                        {"classification", structure_json(res.structure)}};
            if (!res.autos.empty()) {
                result["generator_x"] = generator_json(*A, res.autos[res.structure.gen_x]);
                result["generator_y"] = generator_json(*A, res.autos[res.structure.gen_y]);
            }
            std::string cert = res.certified_by;
            if (c.oracle) {
                auto brute = brute_force_auts(A, lim_of());
                result["oracle_agreement"] = same_morphism_set(res.autos, brute);
                cert = "both";
            }
            return emit(c, "aut", ctx, result, cert, elapsed_ms(), res.complete ? 0 : 2);
        }

        if (*iso) {
            auto A = PetitAlgebraCtx::make(R, parse_poly(R, poly_text));
            auto B = PetitAlgebraCtx::make(R, parse_poly(R, poly2_text));
            ctx["poly"] = poly_to_string(F, A->f);
            ctx["poly2"] = poly_to_string(F, B->f);
            auto phi = iso_test(A, B, lim_of());
            json result{{"isomorphic", phi.has_value()}};
            if (phi)
                result["map"] =
                    json{{"tau_power", phi->tau_power}, {"k", elem_to_string(F, phi->k)}};
            return emit(c, "iso", ctx, result, "theorem", elapsed_ms());
        }

        if (*isocls) {
            auto classes = iso_classes(R, family_m);
            json jc = json::array();
            for (const auto& cls : classes) {
                json row = json::array();
                for (auto idx : cls) row.push_back(elem_to_string(F, F.at(idx)));
                jc.push_back(row);
            }
            ctx["m"] = family_m;
            json result{{"class_count", classes.size()}, {"classes", jc}};
            return emit(c, "iso-classes", ctx, result, "theorem", elapsed_ms());
        }

        if (*inner) {
            auto A = PetitAlgebraCtx::make(R, parse_poly(R, poly_text));
            ctx["poly"] = poly_to_string(F, A->f);
            auto maps = inner_auts(A);
            json jm = json::array();
            for (const auto& phi : maps)
                jm.push_back(
                    json{{"c", elem_to_string(F, phi.c)}, {"k", elem_to_string(F, phi.k)}});
            json result{{"order", maps.size()}, {"elements", jm}};
            return emit(c, "inner", ctx, result, "theorem", elapsed_ms());
        }

        if (*semi) {
            auto A = PetitAlgebraCtx::make(R, parse_poly(R, poly_text));
            ctx["poly"] = poly_to_string(F, A->f);
            json result;
            if (!g_text.empty()) {
                SkewPoly g = parse_poly(R, g_text);
                result["g"] = poly_to_string(F, g);
                result["value"] = elem_to_string(F, semi_mult(*A, g));
            } else {
                std::uint64_t zero_count = 0;
                json zeros = json::array();
                for (std::uint64_t i = 1; i < A->size(); ++i) {
                    SkewPoly g = A->element_at(i);
                    if (F.is_zero(semi_mult(*A, g))) {
                        ++zero_count;
                        if (zeros.size() < 16) zeros.push_back(poly_to_string(F, g));
                    }
                }
                result["nonzero_elements"] = A->size() - 1;
                result["vanishing_count"] = zero_count;
                result["vanishing_sample"] = zeros;
            }
            return emit(c, "semimult", ctx, result, "exact", elapsed_ms());
        }

        if (*semiinv) {
            auto A = PetitAlgebraCtx::make(R, parse_poly(R, poly_text));
            ctx["poly"] = poly_to_string(F, A->f);
            json result{{"right_semi_invariant", is_right_semi_invariant(*A)},
                        {"subfield_degree", subfield_degree},
                        {"L_weak_semi_invariant", is_L_weak_semi_invariant(*A, subfield_degree)}};
            return emit(c, "semi-invariant", ctx, result, "theorem", elapsed_ms());
        }
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const inapplicable_error& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return 2;
    } catch (const bound_exceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
