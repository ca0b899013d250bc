#pragma once

// The o(4)/o(3) reformulation of the fusion translation: parameter map
// (l1, l2, nu) -> (l', l'', l''') = (l1+l2, l1-l2, 2nu), the (i, kappa) to
// (delta, eps) correspondence, the closed form
//
//   C_{i,delta} = (l_i + nu + delta/2)(l_i - nu + delta/2) / (2(l1^2 - l2^2))
//
// and exact pointwise verification that C = c under the correspondence.

#include <sl2fence/fusion.hpp>
#include <sl2fence/rational.hpp>
#include <sl2fence/report.hpp>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <tuple>

namespace sl2fence {

struct InfCharO4 {
    GaussianRational l1, l2;
};

struct InfCharO3 {
    GaussianRational nu;
};

// Canonical representative of the W(D2)-orbit
// {(l1,l2), (l2,l1), (-l1,-l2), (-l2,-l1)}: lexicographically maximal on
// (re, im) pairs.
inline InfCharO4 canonical_o4(const InfCharO4& x) {
    const std::array<InfCharO4, 4> orbit = {
        InfCharO4{x.l1, x.l2},
        InfCharO4{x.l2, x.l1},
        InfCharO4{-x.l1, -x.l2},
        InfCharO4{-x.l2, -x.l1},
    };
    const InfCharO4* best = &orbit[0];
    for (const InfCharO4& cand : orbit) {
        const bool greater = lex_less(best->l1, cand.l1) ||
                             (best->l1 == cand.l1 && lex_less(best->l2, cand.l2));
        if (greater) best = &cand;
    }
    return *best;
}

// Canonical representative of the W(B1)-orbit {nu, -nu}: re >= 0, ties by
// im >= 0.
inline InfCharO3 canonical_o3(const InfCharO3& x) {
    if (sgn(x.nu.re) > 0) return x;
    if (sgn(x.nu.re) < 0) return {-x.nu};
    return (sgn(x.nu.im) >= 0) ? x : InfCharO3{-x.nu};
}

struct FusionParams {
    GaussianRational l1, l2, l3;  // l', l'', l'''
};

inline FusionParams param_map(const GaussianRational& l1, const GaussianRational& l2, const GaussianRational& nu) {
    return {l1 + l2, l1 - l2, GaussianRational(2) * nu};
}

inline std::tuple<GaussianRational, GaussianRational, GaussianRational> param_map_inverse(const FusionParams& p) {
    const GaussianRational half(Rational(1, 2));
    return {(p.l1 + p.l2) * half, (p.l1 - p.l2) * half, p.l3 * half};
}

// (i, kappa) <-> (delta, eps):  (1,+)<->(+,+), (2,+)<->(+,-), (2,-)<->(-,+),
// (1,-)<->(-,-).
inline std::pair<int, int> delta_eps_of(int i, int kappa) {
    require_sign(kappa, "kappa");
    if (i != 1 && i != 2) throw std::invalid_argument("delta_eps_of: i must be 1 or 2");
    if (i == 1) return {kappa, kappa};
    return {kappa, -kappa};
}

inline GaussianRational C_closed_form(const GaussianRational& l1, const GaussianRational& l2,
                                      const GaussianRational& nu, int i, int delta) {
    require_sign(delta, "delta");
    if (i != 1 && i != 2) throw std::invalid_argument("C_closed_form: i must be 1 or 2");
    const GaussianRational denom = GaussianRational(2) * (l1 * l1 - l2 * l2);
    if (denom.is_zero()) throw std::domain_error("C_closed_form: singular, l1 = +-l2");
    const GaussianRational& li = (i == 1) ? l1 : l2;
    const GaussianRational half_delta(Rational(delta, 2));
    return (li + nu + half_delta) * (li - nu + half_delta) / denom;
}

namespace detail {

// Deterministic small-rational generator for sampled identity checks.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    Rational next_rational() {
        const long num = static_cast<long>(next() % 41) - 20;
        const long den = static_cast<long>(next() % 8) + 1;
        return rat(num, den);
    }

    GaussianRational next_gaussian() {
        GaussianRational z(next_rational());
        if (next() % 3 == 0) z.im = next_rational();
        return z;
    }

private:
    std::uint64_t next() {
        // xorshift64*
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dULL;
    }
    std::uint64_t state_;
};

}  // namespace detail

// Samples nonsingular Gaussian-rational points and checks
// C_{i,kappa}(l1, l2; nu) = c_{delta eps}(l1+l2, l1-l2; 2nu) exactly for all
// four (i, kappa).  Singular draws (l1 = +-l2) are skipped and counted.
inline VerificationReport verify_reformulation(int samples, std::uint64_t seed = 2025) {
    VerificationReport rep;
    rep.name = "o4-o3 reformulation, " + std::to_string(samples) + " samples";
    detail::RationalSampler gen(seed);
    int done = 0;
    while (done < samples) {
        const GaussianRational l1 = gen.next_gaussian();
        const GaussianRational l2 = gen.next_gaussian();
        const GaussianRational nu = gen.next_gaussian();
        if (l1 == l2 || l1 == -l2) {
            ++rep.skipped;
            continue;
        }
        const FusionParams p = param_map(l1, l2, nu);
        bool pass = true;
        for (int i : {1, 2})
            for (int kappa : {+1, -1}) {
                const auto [delta, eps] = delta_eps_of(i, kappa);
                if (C_closed_form(l1, l2, nu, i, kappa) != c_closed_form(p.l1, p.l2, p.l3, delta, eps)) pass = false;
            }
        rep.record(pass, "sample l1=" + to_string(l1) + " l2=" + to_string(l2) + " nu=" + to_string(nu));
        ++done;
    }
    return rep;
}

// Same identity on the full integer grid |l1|, |l2|, |nu| <= bound.
inline VerificationReport verify_reformulation_grid(long bound) {
    VerificationReport rep;
    rep.name = "o4-o3 reformulation, integer grid |.|<=" + std::to_string(bound);
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b) {
            if (a == b || a == -b) {
                ++rep.skipped;
                continue;
            }
            for (long v = -bound; v <= bound; ++v) {
                const GaussianRational l1{Rational(a)}, l2{Rational(b)}, nu{Rational(v)};
                const FusionParams p = param_map(l1, l2, nu);
                bool pass = true;
                for (int i : {1, 2})
                    for (int kappa : {+1, -1}) {
                        const auto [delta, eps] = delta_eps_of(i, kappa);
                        if (C_closed_form(l1, l2, nu, i, kappa) != c_closed_form(p.l1, p.l2, p.l3, delta, eps))
                            pass = false;
                    }
                rep.record(pass, "grid point (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                     std::to_string(v) + ")");
            }
        }
    return rep;
}

}  // namespace sl2fence
