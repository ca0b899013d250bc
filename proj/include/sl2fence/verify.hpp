#pragma once

// Named verification suites over default parameter windows.  Each suite runs
// exhaustive exact checks and reports per-identity pass/fail; the single
// deliberate "flagged" entry records the sign-convention difference between
// the closed form for c and the g-function form on mixed (delta, eps).

#include <sl2fence/fences.hpp>
#include <sl2fence/fusion.hpp>
#include <sl2fence/modules.hpp>
#include <sl2fence/o4o3.hpp>
#include <sl2fence/report.hpp>
#include <sl2fence/translation.hpp>
#include <sl2fence/verma.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sl2fence {

struct VerifyOptions {
    int c2_max_m = 10;          // finite window for the C^2 identity
    int c3_max_m = 10;          // finite window for the C^3 identity
    int lw_lambda_max = 8;      // lowest-weight models lambda = 1..max
    int truncation = 40;        // cut for the lowest-weight models
    int fusion_max = 5;         // finite fusion window m, n <= fusion_max
    int bilinear_max = 3;       // bilinear-expansion window in the suite
    int weights_max = 20;       // weight reconstruction window
    int ktype_lambda_max = 10;  // K-type window
    int ktype_truncation = 60;
    int samples = 100;  // o4-o3 sampled points
    std::uint64_t seed = 2025;
    long grid = 6;       // o4-o3 integer grid bound
    int margin_c2 = 1;   // interior margins for the truncated models
    int margin_c3 = 2;
};

namespace detail {

inline void absorb(SuiteReport& suite, const VerificationReport& rep) {
    std::string detail = std::to_string(rep.checked) + " cases";
    if (rep.vacuous > 0) detail += ", " + std::to_string(rep.vacuous) + " vacuous";
    if (rep.skipped > 0) detail += ", " + std::to_string(rep.skipped) + " skipped";
    if (!rep.ok()) detail += "; first failure: " + rep.failures.front();
    suite.add(rep.name, rep.ok(), detail);
}

}  // namespace detail

inline SuiteReport translation_c2_suite(const VerifyOptions& opt = {}) {
    SuiteReport suite;
    suite.suite = "translation-c2";
    for (int m = 0; m <= opt.c2_max_m; ++m) {
        const WeightModule v = finite_irrep(m);
        VerificationReport rep = verify_translation_c2_batch(v, Rational(m + 1), v.weights, opt.margin_c2);
        rep.name = "c2-translation finite V_" + std::to_string(m) + ", all weights";
        detail::absorb(suite, rep);
    }
    for (int lambda = 1; lambda <= opt.lw_lambda_max; ++lambda) {
        const WeightModule l = truncated_lowest_weight(Rational(lambda), opt.truncation);
        std::vector<Rational> nus = l.weights;
        nus.push_back(Rational(lambda));  // not a weight: T = 0 branch
        VerificationReport rep = verify_translation_c2_batch(l, Rational(lambda), nus, opt.margin_c2);
        rep.name = "c2-translation lowest-weight model lambda=" + std::to_string(lambda) +
                   " cut=" + std::to_string(opt.truncation);
        detail::absorb(suite, rep);
    }
    return suite;
}

inline SuiteReport translation_c3_suite(const VerifyOptions& opt = {}) {
    SuiteReport suite;
    suite.suite = "translation-c3";
    for (int m = 0; m <= opt.c3_max_m; ++m) {
        const WeightModule v = finite_irrep(m);
        VerificationReport rep = verify_translation_c3_batch(v, Rational(m + 1), v.weights, opt.margin_c3);
        rep.name = "c3-translation finite V_" + std::to_string(m) + ", all weights";
        detail::absorb(suite, rep);
    }
    for (int lambda = 1; lambda <= opt.lw_lambda_max; ++lambda) {
        const WeightModule l = truncated_lowest_weight(Rational(lambda), opt.truncation);
        VerificationReport rep = verify_translation_c3_batch(l, Rational(lambda), l.weights, opt.margin_c3);
        rep.name = "c3-translation lowest-weight model lambda=" + std::to_string(lambda) +
                   " cut=" + std::to_string(opt.truncation);
        detail::absorb(suite, rep);
    }
    return suite;
}

inline SuiteReport fusion_suite(const VerifyOptions& opt = {}) {
    SuiteReport suite;
    suite.suite = "fusion";
    detail::absorb(suite, verify_fusion_translation(opt.fusion_max, opt.fusion_max));

    {
        VerificationReport rep;
        rep.name = "rc-operator value on z^l (x) 1 and the (+,+) scalar";
        for (int m = 0; m <= opt.fusion_max; ++m)
            for (int n = 0; n <= opt.fusion_max; ++n)
                for (int ell = 0; ell <= std::min(m, n); ++ell) {
                    const RankinCohen rc = rc_operator(m, n, ell);
                    Rational expect = Rational(factorial(n)) / (Rational(factorial(ell)) * Rational(factorial(n - ell)));
                    if (ell % 2 != 0) expect = -expect;
                    const UniPoly value = rc.apply(UniPoly::monomial(ell), UniPoly::monomial(0));
                    UniPoly want;
                    want.set(0, expect);
                    rep.record(value == want, "R(z^l (x) 1) at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                                  " l=" + std::to_string(ell));
                    const Rational scalar = c_bruteforce(m, n, ell, +1, +1);
                    const Rational want_scalar = Rational(ell + 1) * Rational(m + n - ell + 2) /
                                                 (Rational(2) * Rational(m + 1) * Rational(n + 1));
                    rep.record(scalar == want_scalar, "(+,+) scalar at m=" + std::to_string(m) +
                                                          " n=" + std::to_string(n) + " l=" + std::to_string(ell));
                }
        detail::absorb(suite, rep);
    }

    {
        VerificationReport rep;
        rep.name = "bilinear expansions vs matrix pipeline, m,n<=" + std::to_string(opt.bilinear_max);
        for (int m = 0; m <= opt.bilinear_max; ++m)
            for (int n = 0; n <= opt.bilinear_max; ++n)
                for (int a = 0; a <= m; ++a)
                    for (int b = 0; b <= n; ++b)
                        for (int delta : {+1, -1})
                            for (int eps : {+1, -1}) {
                                const UniPoly f = UniPoly::monomial(a), g = UniPoly::monomial(b);
                                const bool same = bilinear_expansion(delta, eps, f, g, m, n) ==
                                                  fusion_pairing_pipeline(m, n, f, g, delta, eps);
                                rep.record(same, "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                                     " F=z^" + std::to_string(a) + " G=w^" + std::to_string(b));
                            }
        detail::absorb(suite, rep);
    }

    detail::absorb(suite, verify_fusion_translation_lw(1, 1, 3, 30));

    {
        // The closed form evaluates to -g/(8 l' l'') on the mixed pairs; the
        // relation itself is verified as an exact identity, then surfaced as
        // a convention note rather than a failure.
        VerificationReport rep;
        rep.name = "closed form vs g-form sign structure";
        for (int m = 0; m <= opt.fusion_max; ++m)
            for (int n = 0; n <= opt.fusion_max; ++n)
                for (int ell = 0; ell <= std::min(m, n); ++ell)
                    for (int delta : {+1, -1})
                        for (int eps : {+1, -1}) {
                            const int k = m + n - 2 * ell;
                            const Rational gform =
                                g_function(m, n, k, delta, eps) / (Rational(8) * Rational(m + 1) * Rational(n + 1));
                            const GaussianRational closed =
                                c_closed_form(GaussianRational(Rational(m + 1)), GaussianRational(Rational(n + 1)),
                                              GaussianRational(Rational(k + 1)), delta, eps);
                            const Rational want = (delta == eps) ? gform : Rational(-gform);
                            rep.record(closed.im == 0 && closed.re == want,
                                       "sign structure at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                           " l=" + std::to_string(ell) + " d=" + std::to_string(delta) +
                                           " e=" + std::to_string(eps));
                        }
        detail::absorb(suite, rep);
        suite.flag("c-sign-convention",
                   "the closed form for c equals -g/(8 l' l'') on mixed (delta,eps); the matrix pipeline agrees "
                   "with the g-form, so the two published expressions differ by a sign there; reported, not failed");
    }
    return suite;
}

inline SuiteReport weights_suite(const VerifyOptions& opt = {}) {
    SuiteReport suite;
    suite.suite = "weights";
    VerificationReport rep;
    rep.name = "weight reconstruction by translation vs H-spectrum, n<=" + std::to_string(opt.weights_max);
    for (int n = 0; n <= opt.weights_max; ++n) {
        const std::vector<long> rec = reconstruct_weights(n);
        const WeightModule v = finite_irrep(n);
        std::vector<long> direct;
        for (int i = 0; i < v.dim; ++i) direct.push_back(to_long(v.weights[i]));
        std::sort(direct.rbegin(), direct.rend());
        rep.record(rec == direct, "n=" + std::to_string(n));
    }
    detail::absorb(suite, rep);
    return suite;
}

inline SuiteReport ktypes_suite(const VerifyOptions& opt = {}) {
    SuiteReport suite;
    suite.suite = "ktypes";
    {
        VerificationReport rep;
        rep.name = "K-type formula vs truncated-module weights, lambda<=" + std::to_string(opt.ktype_lambda_max) +
                   " cut=" + std::to_string(opt.ktype_truncation);
        for (long lambda = 1; lambda <= opt.ktype_lambda_max; ++lambda) {
            const auto l = std::make_shared<const WeightModule>(
                truncated_lowest_weight(Rational(lambda), opt.ktype_truncation));
            const long bound = lambda + 2L * opt.ktype_truncation - 1;
            for (long nu = -bound; nu <= bound; ++nu) {
                const Intertwiner t = weight_functional(l, Rational(nu));
                const int from_module = t.map.is_zero() ? 0 : 1;
                rep.record(from_module == ktype_multiplicity_discrete(lambda, nu),
                           "lambda=" + std::to_string(lambda) + " nu=" + std::to_string(nu));
            }
        }
        detail::absorb(suite, rep);
    }
    {
        VerificationReport rep;
        rep.name = "K-type formula is the odd-up chamber indicator on {1..30}x{-30..30}";
        for (long lambda = 1; lambda <= 30; ++lambda)
            for (long nu = -30; nu <= 30; ++nu) {
                const XiChamber c = classify_xi(GaussianRational(Rational(lambda)), GaussianRational(Rational(nu)),
                                                GaussianRational(1), GaussianRational(0));
                const int want = (c == XiChamber::OddUp) ? 1 : 0;
                rep.record(ktype_multiplicity_discrete(lambda, nu) == want,
                           "lambda=" + std::to_string(lambda) + " nu=" + std::to_string(nu));
            }
        detail::absorb(suite, rep);
    }
    return suite;
}

inline SuiteReport o4o3_suite(const VerifyOptions& opt = {}) {
    SuiteReport suite;
    suite.suite = "o4o3";
    detail::absorb(suite, verify_reformulation(opt.samples, opt.seed));
    detail::absorb(suite, verify_reformulation_grid(opt.grid));
    return suite;
}

inline std::vector<SuiteReport> run_suites(const std::string& which, const VerifyOptions& opt = {}) {
    std::vector<SuiteReport> out;
    const bool all = (which == "all");
    if (all || which == "translation-c2") out.push_back(translation_c2_suite(opt));
    if (all || which == "translation-c3") out.push_back(translation_c3_suite(opt));
    if (all || which == "fusion") out.push_back(fusion_suite(opt));
    if (all || which == "weights") out.push_back(weights_suite(opt));
    if (all || which == "ktypes") out.push_back(ktypes_suite(opt));
    if (all || which == "o4o3") out.push_back(o4o3_suite(opt));
    if (out.empty()) throw std::invalid_argument("unknown verify suite: " + which);
    return out;
}

}  // namespace sl2fence
