#include <sl2fence/o4o3.hpp>

#include <catch2/catch.hpp>

using namespace sl2fence;

namespace {
GaussianRational gr(long n, long d = 1) { return GaussianRational(rat(n, d)); }
}  // namespace

TEST_CASE("parameter map and its inverse") {
    const FusionParams p = param_map(gr(3, 2), gr(1, 2), gr(1));
    REQUIRE(p.l1 == gr(2));
    REQUIRE(p.l2 == gr(1));
    REQUIRE(p.l3 == gr(2));

    const auto [a, b, c] = param_map_inverse(p);
    REQUIRE(a == gr(3, 2));
    REQUIRE(b == gr(1, 2));
    REQUIRE(c == gr(1));

    SECTION("equal parameters flag the singular line downstream") {
        const FusionParams q = param_map(gr(2), gr(2), gr(1));
        REQUIRE(q.l2.is_zero());
        REQUIRE_THROWS_AS(C_closed_form(gr(2), gr(2), gr(1), 1, +1), std::domain_error);
    }
}

TEST_CASE("the (i, kappa) correspondence table") {
    REQUIRE(delta_eps_of(1, +1) == std::make_pair(1, 1));
    REQUIRE(delta_eps_of(2, +1) == std::make_pair(1, -1));
    REQUIRE(delta_eps_of(2, -1) == std::make_pair(-1, 1));
    REQUIRE(delta_eps_of(1, -1) == std::make_pair(-1, -1));
    REQUIRE_THROWS_AS(delta_eps_of(3, +1), std::invalid_argument);
}

TEST_CASE("closed form C on the stated examples") {
    REQUIRE(C_closed_form(gr(3, 2), gr(1, 2), gr(1), 1, +1) == gr(3, 4));
    REQUIRE(C_closed_form(gr(3, 2), gr(1, 2), gr(1), 2, +1).is_zero());  // l2 - nu + 1/2 = 0
    // nu = +-(l_i + delta/2) kills the numerator
    REQUIRE(C_closed_form(gr(5, 2), gr(1, 3), gr(3), 1, +1).is_zero());
}

TEST_CASE("C equals c under the parameter map") {
    const VerificationReport rep = verify_reformulation(100, 99);
    INFO((rep.ok() ? std::string() : rep.failures.front()));
    REQUIRE(rep.ok());
    REQUIRE(rep.checked == 100);

    const VerificationReport grid = verify_reformulation_grid(4);
    REQUIRE(grid.ok());
    REQUIRE(grid.skipped > 0);  // singular lines skipped and counted

    SECTION("l2 = 0 is still nonsingular when l1 != 0") {
        const GaussianRational l1 = gr(3), l2 = gr(0), nu = gr(2);
        const FusionParams p = param_map(l1, l2, nu);
        for (int i : {1, 2})
            for (int kappa : {+1, -1}) {
                const auto [delta, eps] = delta_eps_of(i, kappa);
                REQUIRE(C_closed_form(l1, l2, nu, i, kappa) == c_closed_form(p.l1, p.l2, p.l3, delta, eps));
            }
    }
}

TEST_CASE("canonical Weyl-orbit representatives") {
    const InfCharO4 x{gr(-2), gr(5)};
    const InfCharO4 c = canonical_o4(x);
    SECTION("idempotent") {
        const InfCharO4 cc = canonical_o4(c);
        REQUIRE(cc.l1 == c.l1);
        REQUIRE(cc.l2 == c.l2);
    }
    SECTION("every orbit member maps to the same representative") {
        for (const InfCharO4& o : {InfCharO4{gr(5), gr(-2)}, InfCharO4{gr(2), gr(-5)}, InfCharO4{gr(-5), gr(2)}}) {
            const InfCharO4 co = canonical_o4(o);
            REQUIRE(co.l1 == c.l1);
            REQUIRE(co.l2 == c.l2);
        }
    }
    SECTION("o3 representative has nonnegative real part") {
        REQUIRE(canonical_o3({gr(-3, 2)}).nu == gr(3, 2));
        REQUIRE(canonical_o3({gr(3, 2)}).nu == gr(3, 2));
        REQUIRE(canonical_o3({GaussianRational(Rational(0), Rational(-1))}).nu ==
                GaussianRational(Rational(0), Rational(1)));
    }
}
