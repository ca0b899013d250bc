#include <sl2fence/cli.hpp>
#include <sl2fence/fences.hpp>
#include <sl2fence/verma.hpp>

#include <catch2/catch.hpp>

#include <set>

using namespace sl2fence;

namespace {
GaussianRational gr(long v) { return GaussianRational(Rational(v)); }
}  // namespace

TEST_CASE("fence membership") {
    SECTION("non-integral combinations put every lattice point inside") {
        const FenceSpec spec{GaussianRational(rat(1, 2)), GaussianRational(rat(1, 3)), GaussianRational(0)};
        for (long i = -3; i <= 3; ++i)
            for (long j = -3; j <= 3; ++j) {
                const GaussianRational l1 = spec.xi1 + gr(i), l2 = spec.xi2 + gr(j);
                if (!is_even_integer((l1 - spec.xi1) - (l2 - spec.xi2))) continue;
                for (int a : {+1, -1})
                    for (int b : {+1, -1}) REQUIRE(fence_membership(l1, l2, spec, a, b));
            }
    }
    SECTION("sign condition across the fence") {
        const FenceSpec spec{gr(3), gr(2), gr(-6)};
        REQUIRE(fence_membership(gr(3), gr(2), spec, +1, +1));        // sgn(-1) = sgn(-1)
        REQUIRE_FALSE(fence_membership(gr(5), gr(2), spec, +1, +1));  // sgn(+1) != sgn(-1)
    }
    SECTION("points off the lattice are rejected") {
        const FenceSpec spec{gr(3), gr(2), gr(-6)};
        REQUIRE_THROWS_AS(fence_membership(gr(4), gr(2), spec, +1, +1), std::invalid_argument);  // parity
        REQUIRE_THROWS_AS(fence_membership(gr(0), gr(2), spec, +1, +1), std::invalid_argument);  // not in N+
        REQUIRE_THROWS_AS(fence_membership(gr(1), gr(1), FenceSpec{gr(0), gr(1), gr(0)}, +1, +1), std::domain_error);
    }
}

TEST_CASE("fence regions") {
    SECTION("the base point always belongs") {
        for (const FenceSpec& spec : {FenceSpec{gr(1), gr(1), gr(-3)}, FenceSpec{gr(4), gr(2), gr(-1)},
                                      FenceSpec{GaussianRational(rat(1, 2)), gr(1), gr(0)}}) {
            REQUIRE(fence_region(spec)(spec.xi1, spec.xi2));
        }
    }
    SECTION("lambda3 = 3 around (1,1) carves the low chamber") {
        const FenceSpec spec{gr(1), gr(1), gr(-3)};
        const auto region = fence_region(spec);
        REQUIRE(region(gr(1), gr(1)));
        REQUIRE_FALSE(region(gr(3), gr(1)));  // crosses lambda1 + lambda2 = 3... sign flip on (+,+)
        REQUIRE_FALSE(region(gr(5), gr(1)));
    }
    SECTION("case-1-everywhere spec covers the whole lattice window") {
        const FenceSpec spec{gr(1), gr(1), GaussianRational(rat(1, 2))};
        const auto region = fence_region(spec);
        for (long i = 1; i <= 6; ++i)
            for (long j = 1; j <= 6; ++j)
                if ((i - j) % 2 == 0) REQUIRE(region(gr(i), gr(j)));
    }
    SECTION("regions never cross a live fence: the sign pattern is constant") {
        const FenceSpec spec{gr(2), gr(5), gr(-3)};
        const auto region = fence_region(spec);
        for (int a : {+1, -1})
            for (int b : {+1, -1}) {
                const GaussianRational base = GaussianRational(Rational(a)) * spec.xi1 +
                                              GaussianRational(Rational(b)) * spec.xi2 + spec.mu;
                if (!is_odd_integer(base)) continue;
                for (long i = 1; i <= 12; ++i)
                    for (long j = 1; j <= 12; ++j) {
                        if ((i - 2 - (j - 5)) % 2 != 0) continue;
                        if (!region(gr(i), gr(j))) continue;
                        const int s = re_sign(GaussianRational(Rational(a * i + b * j)) + spec.mu);
                        REQUIRE(s == re_sign(base));
                    }
            }
    }
}

TEST_CASE("fusion chambers on the stated examples") {
    REQUIRE(fusion_chamber_of(2, 6, 3) == FusionChamber::OddUp);
    REQUIRE(fusion_chamber_of(2, 3, 3) == FusionChamber::Even);
    REQUIRE(fusion_chamber_of(1, 1, 3) == FusionChamber::OddSW);
    REQUIRE(fusion_chamber_of(6, 2, 3) == FusionChamber::OddRight);
    REQUIRE(fusion_chamber_of(2, 4, 3) == FusionChamber::OddNE);
}

TEST_CASE("fusion chambers partition every window") {
    for (long l3 = 1; l3 <= 7; ++l3) {
        long counts[5] = {0, 0, 0, 0, 0};
        for (long l1 = 1; l1 <= 20; ++l1)
            for (long l2 = 1; l2 <= 20; ++l2) {
                const FusionChamber c = fusion_chamber_of(l1, l2, l3);
                ++counts[static_cast<int>(c)];
                // labels satisfy their defining inequalities
                const bool odd = (l1 + l2 + l3) % 2 != 0;
                switch (c) {
                    case FusionChamber::Even: REQUIRE_FALSE(odd); break;
                    case FusionChamber::OddUp:
                        REQUIRE(odd);
                        REQUIRE(l2 - l1 >= l3 + 1);
                        break;
                    case FusionChamber::OddRight:
                        REQUIRE(odd);
                        REQUIRE(l1 - l2 >= l3 + 1);
                        break;
                    case FusionChamber::OddNE:
                        REQUIRE(odd);
                        REQUIRE(std::labs(l1 - l2) <= l3 - 1);
                        REQUIRE(l1 + l2 >= l3 + 1);
                        break;
                    case FusionChamber::OddSW:
                        REQUIRE(odd);
                        REQUIRE(std::labs(l1 - l2) <= l3 - 1);
                        REQUIRE(l1 + l2 <= l3 - 1);
                        break;
                }
            }
        REQUIRE(counts[0] + counts[1] + counts[2] + counts[3] + counts[4] == 400);
    }
}

TEST_CASE("Pieri multiplicity is the odd-NE indicator") {
    for (long l3 = 1; l3 <= 6; ++l3)
        for (long l1 = 1; l1 <= 15; ++l1)
            for (long l2 = 1; l2 <= 15; ++l2) {
                const long mult = tensor_multiplicity(static_cast<int>(l1) - 1, static_cast<int>(l2) - 1,
                                                      static_cast<int>(l3) - 1);
                const long want = (fusion_chamber_of(l1, l2, l3) == FusionChamber::OddNE) ? 1 : 0;
                REQUIRE(mult == want);
            }
}

TEST_CASE("stability sweep on the Pieri multiplicities") {
    const MultiplicityReport rep = sweep_report("pieri", 3, 15, 40);
    REQUIRE(rep.all_constant());
    for (const auto& v : rep.verdicts) {
        if (v.chamber == "odd_ne")
            REQUIRE(v.value == 1);
        else
            REQUIRE(v.value == 0);
    }
    REQUIRE(rep.points.size() == 15 * 15);
}

TEST_CASE("stability sweep on weight multiplicities") {
    const MultiplicityReport rep = sweep_report("weights", 3, 12, 40);
    REQUIRE(rep.all_constant());
    for (const auto& v : rep.verdicts) {
        if (v.chamber == "odd_right")
            REQUIRE(v.value == 1);
        else
            REQUIRE(v.value == 0);
    }
}

TEST_CASE("stability sweep on K-type multiplicities") {
    const MultiplicityReport rep = sweep_report("ktypes", 3, 12, 40);
    REQUIRE(rep.all_constant());
    for (const auto& v : rep.verdicts) {
        if (v.chamber == "odd_up")
            REQUIRE(v.value == 1);
        else
            REQUIRE(v.value == 0);
    }
}

TEST_CASE("sweep reports cover every window point exactly once") {
    const MultiplicityReport rep = sweep_report("pieri", 3, 8, 40);
    std::set<std::pair<long, long>> seen;
    for (const auto& p : rep.points) {
        REQUIRE(seen.insert({p.x, p.y}).second);
        REQUIRE(p.x >= rep.window.x_lo);
        REQUIRE(p.x <= rep.window.x_hi);
        REQUIRE(p.y >= rep.window.y_lo);
        REQUIRE(p.y <= rep.window.y_hi);
    }
    REQUIRE(seen.size() == 64);
    // verdicts are consistent with the recorded points
    for (const auto& v : rep.verdicts)
        for (const auto& p : rep.points)
            if (p.chamber == v.chamber && v.constant) REQUIRE(p.value == v.value);
}

TEST_CASE("stability sweep reports witnesses for violated chambers") {
    const MultiplicityReport rep = stability_sweep(
        [](long x, long y) { return x + y; }, [](long, long) { return std::string("all"); }, Window{1, 3, 1, 3},
        "synthetic");
    REQUIRE_FALSE(rep.all_constant());
    REQUIRE(rep.verdicts.size() == 1);
    REQUIRE(rep.verdicts[0].witness.has_value());
    REQUIRE(rep.verdicts[0].witness->first.value != rep.verdicts[0].witness->second.value);
}
