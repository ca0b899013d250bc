#pragma once

// Fences and chambers.  A fence is a hyperplane alpha l' + beta l'' + mu = 0
// in the parameter plane; the region D(xi', xi''; mu) is cut out of the
// parity lattice through the base point (xi', xi'') by the four sign
// conditions, and branching multiplicities are constant on it.  The
// five-chamber decomposition of N+^2 for a fixed third parameter and the
// sweep harness asserting per-chamber constancy live here too.

#include <sl2fence/rational.hpp>
#include <sl2fence/translation.hpp>

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl2fence {

struct FenceSpec {
    GaussianRational xi1;  // xi'
    GaussianRational xi2;  // xi''
    GaussianRational mu;
};

namespace detail {

inline void require_fence_lattice(const GaussianRational& l1, const GaussianRational& l2, const FenceSpec& spec) {
    if (spec.xi1.is_zero() || spec.xi2.is_zero()) throw std::domain_error("fence: singular xi");
    if (!ParameterLattice::of(spec.xi1).contains(l1) || !ParameterLattice::of(spec.xi2).contains(l2))
        throw std::invalid_argument("fence: point outside the parameter lattice");
    if (!is_even_integer((l1 - spec.xi1) - (l2 - spec.xi2)))
        throw std::invalid_argument("fence: point outside the parity lattice through (xi', xi'')");
}

}  // namespace detail

// Membership in D_{alpha beta}: everything when alpha xi' + beta xi'' + mu is
// not an odd integer; otherwise the sign condition
// sgn(alpha l' + beta l'' + mu) = sgn(alpha xi' + beta xi'' + mu), with sgn
// taken on the real part and sgn(0) kept as its own value, so a base point on
// a fence confines the region to that fence.
inline bool fence_membership(const GaussianRational& l1, const GaussianRational& l2, const FenceSpec& spec, int alpha,
                             int beta) {
    require_sign(alpha, "alpha");
    require_sign(beta, "beta");
    detail::require_fence_lattice(l1, l2, spec);
    const GaussianRational base =
        GaussianRational(Rational(alpha)) * spec.xi1 + GaussianRational(Rational(beta)) * spec.xi2 + spec.mu;
    if (!is_odd_integer(base)) return true;
    const GaussianRational at_point =
        GaussianRational(Rational(alpha)) * l1 + GaussianRational(Rational(beta)) * l2 + spec.mu;
    return re_sign(at_point) == re_sign(base);
}

// D(xi', xi''; mu) = intersection of the four D_{alpha beta}.
inline std::function<bool(const GaussianRational&, const GaussianRational&)> fence_region(const FenceSpec& spec) {
    return [spec](const GaussianRational& l1, const GaussianRational& l2) {
        for (int alpha : {+1, -1})
            for (int beta : {+1, -1})
                if (!fence_membership(l1, l2, spec, alpha, beta)) return false;
        return true;
    };
}

enum class FusionChamber { Even, OddUp, OddNE, OddRight, OddSW };

inline const char* to_string(FusionChamber c) {
    switch (c) {
        case FusionChamber::Even: return "even";
        case FusionChamber::OddUp: return "odd_up";
        case FusionChamber::OddNE: return "odd_ne";
        case FusionChamber::OddRight: return "odd_right";
        default: return "odd_sw";
    }
}

// The five chambers of N+^2 for fixed l''': even parity, and the four odd
// cells cut by the fences l'' - l' = l''' +- 1, l' - l'' = l''' +- 1,
// l' + l'' = l''' +- 1.  Total and disjoint: odd parity keeps every compared
// quantity away from the fence values.
inline FusionChamber fusion_chamber_of(long l1, long l2, long l3) {
    if (l1 < 1 || l2 < 1 || l3 < 1) throw std::invalid_argument("fusion_chamber_of: parameters must be >= 1");
    if ((l1 + l2 + l3) % 2 == 0) return FusionChamber::Even;
    if (l2 - l1 >= l3 + 1) return FusionChamber::OddUp;
    if (l1 - l2 >= l3 + 1) return FusionChamber::OddRight;
    if (l1 + l2 >= l3 + 1) return FusionChamber::OddNE;
    return FusionChamber::OddSW;
}

struct Window {
    long x_lo = 1, x_hi = 1;
    long y_lo = 1, y_hi = 1;
};

struct PointRecord {
    long x = 0, y = 0;
    long value = 0;
    std::string chamber;
};

struct ChamberVerdict {
    std::string chamber;
    bool constant = true;
    long value = 0;
    std::optional<std::pair<PointRecord, PointRecord>> witness;  // set when violated
};

struct MultiplicityReport {
    std::string model;
    Window window;
    std::vector<PointRecord> points;
    std::vector<ChamberVerdict> verdicts;
    std::vector<std::pair<std::string, std::string>> metadata;

    bool all_constant() const {
        for (const auto& v : verdicts)
            if (!v.constant) return false;
        return true;
    }
};

// Evaluates the multiplicity callback on every lattice point of the window,
// groups the points by chamber, and reports per chamber either the constant
// value or a witness pair of points with different values.
inline MultiplicityReport stability_sweep(const std::function<long(long, long)>& multiplicity,
                                          const std::function<std::string(long, long)>& chamber, const Window& win,
                                          std::string model) {
    MultiplicityReport rep;
    rep.model = std::move(model);
    rep.window = win;
    std::map<std::string, ChamberVerdict> verdicts;
    std::map<std::string, PointRecord> first_seen;
    for (long x = win.x_lo; x <= win.x_hi; ++x)
        for (long y = win.y_lo; y <= win.y_hi; ++y) {
            PointRecord p;
            p.x = x;
            p.y = y;
            p.value = multiplicity(x, y);
            p.chamber = chamber(x, y);
            auto [it, inserted] = verdicts.try_emplace(p.chamber);
            if (inserted) {
                it->second.chamber = p.chamber;
                it->second.value = p.value;
                first_seen[p.chamber] = p;
            } else if (it->second.constant && it->second.value != p.value) {
                it->second.constant = false;
                it->second.witness = {first_seen.at(p.chamber), p};
            }
            rep.points.push_back(std::move(p));
        }
    for (auto& [name, v] : verdicts) rep.verdicts.push_back(v);
    return rep;
}

}  // namespace sl2fence
