#include <sl2fence/modules.hpp>
#include <sl2fence/polynomial.hpp>

#include <catch2/catch.hpp>

using namespace sl2fence;

namespace {

Rational casimir_scalar_of(const WeightModule& m) {
    const Mat omega = casimir(m);
    const Rational v = omega.at(0, 0);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            REQUIRE(omega.at(i, j) == ((i == j) ? v : Rational(0)));
    return v;
}

// (m+1 - z d/dz)F and friends for the explicit projection checks
UniPoly scaled_minus_euler(int m, const UniPoly& f) {
    UniPoly zdz;
    for (const auto& [d, c] : f.terms()) zdz.set(d, c * d);
    return f * Rational(m + 1) - zdz;
}

}  // namespace

TEST_CASE("finite irreducibles") {
    SECTION("m = 0 is the trivial module") {
        const WeightModule v = finite_irrep(0);
        REQUIRE(v.dim == 1);
        REQUIRE(v.H.is_zero());
        REQUIRE(v.X.is_zero());
        REQUIRE(v.Y.is_zero());
    }
    SECTION("m = 1 has Casimir scalar 3") { REQUIRE(casimir_scalar_of(finite_irrep(1)) == 3); }
    SECTION("m = 2 has weights {2, 0, -2} and Casimir scalar 8") {
        const WeightModule v = finite_irrep(2);
        REQUIRE(v.weights == std::vector<Rational>{Rational(2), Rational(0), Rational(-2)});
        REQUIRE(casimir_scalar_of(v) == 8);
    }
    SECTION("negative highest weight rejected") { REQUIRE_THROWS_AS(finite_irrep(-1), std::invalid_argument); }
}

TEST_CASE("natural 2-dimensional module") {
    const WeightModule c2 = natural_c2();
    REQUIRE(c2.H.at(0, 0) == 1);
    REQUIRE(c2.H.at(1, 1) == -1);
    REQUIRE(c2.H.at(0, 1) == 0);
    REQUIRE(casimir_scalar_of(c2) == 3);

    // f+ -> 1, f- -> -z lands equivariantly in the polynomial model
    const WeightModule v1 = finite_irrep(1);
    Mat t(2, 2);
    t.at(0, 0) = 1;   // f+ -> z^0
    t.at(1, 1) = -1;  // f- -> -z
    REQUIRE(is_equivariant(c2, v1, t));
}

TEST_CASE("adjoint 3-dimensional module") {
    const WeightModule c3 = adjoint_c3();
    REQUIRE(c3.weights == std::vector<Rational>{Rational(2), Rational(0), Rational(-2)});
    REQUIRE(c3.H.column_is_zero(kAdjointZeroWeightIndex));  // ad(H)H = 0
    // ad(X)Y = H
    REQUIRE(c3.X.at(kAdjointZeroWeightIndex, 2) == 1);
    REQUIRE(casimir_scalar_of(c3) == 8);
}

TEST_CASE("truncated lowest-weight model") {
    const Rational lambda(3);
    const WeightModule l = truncated_lowest_weight(lambda, 12);
    SECTION("Casimir scalar lambda^2 - 1 on the interior") {
        const Mat omega = casimir(l);
        for (int j = 0; j < l.dim; ++j) {
            if (l.headroom[j] < 1) continue;
            for (int i = 0; i < l.dim; ++i)
                REQUIRE(omega.at(i, j) == ((i == j) ? lambda * lambda - 1 : Rational(0)));
        }
    }
    SECTION("weights are lambda+1, lambda+3, ...") {
        for (int j = 0; j < l.dim; ++j) REQUIRE(l.weights[j] == lambda + 1 + 2 * j);
    }
    SECTION("Y v_1 = -(lambda+1) v_0") { REQUIRE(l.Y.at(0, 1) == -(lambda + 1)); }
    SECTION("cut too small rejected") { REQUIRE_THROWS_AS(truncated_lowest_weight(lambda, 3), std::invalid_argument); }
}

TEST_CASE("truncated highest-weight model") {
    const Rational mu(5);
    const WeightModule m = truncated_highest_weight(mu, 12);
    SECTION("X kills the highest weight vector") { REQUIRE(m.X.column_is_zero(0)); }
    SECTION("X(Yv) = mu v") { REQUIRE(m.X.at(0, 1) == mu); }
    SECTION("integral mu carries the finite-dimensional weights up front") {
        const WeightModule v = finite_irrep(5);
        for (int p = 0; p <= 5; ++p) REQUIRE(m.weights[p] == v.weights[p]);
    }
    SECTION("Casimir scalar (mu+1)^2 - 1 on the interior") {
        const Mat omega = casimir(m);
        for (int j = 0; j < m.dim; ++j) {
            if (m.headroom[j] < 1) continue;
            REQUIRE(omega.at(j, j) == (mu + 1) * (mu + 1) - 1);
        }
    }
}

TEST_CASE("tensor products") {
    const WeightModule v1 = finite_irrep(1);
    const WeightModule c2 = natural_c2();
    SECTION("V_1 (x) C^2 has Casimir eigenvalues {8 x3, 0 x1}") {
        const auto mults = casimir_eigenvalue_multiplicities(tensor(v1, c2), {Rational(8), Rational(0)});
        REQUIRE(mults.at(Rational(8)) == 3);
        REQUIRE(mults.at(Rational(0)) == 1);
    }
    SECTION("V_0 (x) B acts like B") {
        const WeightModule b = finite_irrep(3);
        const WeightModule t = tensor(finite_irrep(0), b);
        REQUIRE(t.H == b.H);
        REQUIRE(t.X == b.X);
        REQUIRE(t.Y == b.Y);
    }
    SECTION("weights add") {
        const WeightModule t = tensor(v1, c2);
        for (int i = 0; i < v1.dim; ++i)
            for (int j = 0; j < c2.dim; ++j) REQUIRE(t.weights[i * 2 + j] == v1.weights[i] + c2.weights[j]);
    }
}

TEST_CASE("Casimir commutes with the action") {
    for (const WeightModule& m :
         {finite_irrep(4), tensor(finite_irrep(2), natural_c2()), truncated_lowest_weight(Rational(2), 10)}) {
        const Mat omega = casimir(m);
        for (const Mat* z : {&m.H, &m.X, &m.Y}) {
            const Mat d = omega * (*z) - (*z) * omega;
            for (int j = 0; j < m.dim; ++j) {
                if (m.headroom[j] < 2) continue;
                for (int i = 0; i < m.dim; ++i) REQUIRE(d.at(i, j) == 0);
            }
        }
    }
}

TEST_CASE("Casimir eigenvalue multiset of V_m (x) C^2") {
    for (int m = 1; m <= 12; ++m) {
        const WeightModule t = tensor(finite_irrep(m), natural_c2());
        const Rational up = Rational(m + 2) * Rational(m + 2) - 1;
        const Rational down = Rational(m) * Rational(m) - 1;
        const auto mults = casimir_eigenvalue_multiplicities(t, {up, down});
        REQUIRE(mults.at(up) == m + 2);
        REQUIRE(mults.at(down) == m);
    }
}

TEST_CASE("diagonal Casimir action on V_m (x) C^2") {
    // From Omega(u (x) f) = Omega u (x) f + u (x) Omega f
    //                      + 2(Hu (x) Hf + 2Xu (x) Yf + 2Yu (x) Xf):
    // (Omega - lambda^2 - 2)(u+ (x) f+ + u- (x) f-) =
    //   2(H u+ + 2Y u-) (x) f+ + 2(2X u+ - H u-) (x) f-
    for (int m = 0; m <= 12; ++m) {
        const WeightModule v = finite_irrep(m);
        const WeightModule t = tensor(v, natural_c2());
        const Rational lambda(m + 1);
        const Mat lhs = casimir(t) - Mat::identity(t.dim) * (lambda * lambda + 2);
        for (int u = 0; u < v.dim; ++u)
            for (int s = 0; s < 2; ++s) {
                // column of u (x) f_s
                std::vector<Rational> expect(t.dim, Rational(0));
                for (int i = 0; i < v.dim; ++i) {
                    if (s == 0) {
                        expect[2 * i + 0] += 2 * v.H.at(i, u);  // 2 H u+ (x) f+
                        expect[2 * i + 1] += 4 * v.X.at(i, u);  // 4 X u+ (x) f-
                    } else {
                        expect[2 * i + 0] += 4 * v.Y.at(i, u);   // 4 Y u- (x) f+
                        expect[2 * i + 1] -= 2 * v.H.at(i, u);   // -2 H u- (x) f-
                    }
                }
                for (int r = 0; r < t.dim; ++r) REQUIRE(lhs.at(r, 2 * u + s) == expect[r]);
            }
    }
}

TEST_CASE("primary projections") {
    const WeightModule t = tensor(finite_irrep(1), natural_c2());
    const std::vector<Rational> spectrum = {Rational(8), Rational(0)};

    SECTION("projection onto the 8-eigenspace has rank 3") {
        const Intertwiner p = primary_projection(t, spectrum, Rational(8));
        REQUIRE(rank(p.map) == 3);
        REQUIRE(p.equivariant);
    }
    SECTION("singleton spectrum gives the identity") {
        const WeightModule v = finite_irrep(2);
        const Intertwiner p = primary_projection(v, {Rational(8)}, Rational(8));
        REQUIRE(p.map == Mat::identity(3));
    }
    SECTION("1 (x) f+ is fixed by the upward projection") {
        const Intertwiner p = primary_projection(t, spectrum, Rational(8));
        for (int r = 0; r < t.dim; ++r) REQUIRE(p.map.at(r, 0) == ((r == 0) ? Rational(1) : Rational(0)));
    }
    SECTION("idempotent, orthogonal, and summing to the identity") {
        const Mat p8 = primary_projection(t, spectrum, Rational(8)).map;
        const Mat p0 = primary_projection(t, spectrum, Rational(0)).map;
        REQUIRE(p8 * p8 == p8);
        REQUIRE(p0 * p0 == p0);
        REQUIRE((p8 * p0).is_zero());
        REQUIRE(p8 + p0 == Mat::identity(t.dim));
    }
    SECTION("repeated or missing targets are rejected") {
        REQUIRE_THROWS_AS(primary_projection(t, {Rational(8), Rational(8)}, Rational(8)), std::invalid_argument);
        REQUIRE_THROWS_AS(primary_projection(t, {Rational(8), Rational(0)}, Rational(5)), std::invalid_argument);
        REQUIRE_THROWS_AS(primary_projection(t, {Rational(8), Rational(5)}, Rational(5)), std::invalid_argument);
    }
}

TEST_CASE("explicit decomposition of (F, 0) in V_m (x) C^2") {
    // (m+1)(F, 0) = ((m+1 - z d/dz)F, F') + (z F', -F'), with the summands in
    // the (m+2)^2-1 and m^2-1 eigenspaces.  The columns are coordinates in
    // the polynomial realization Pol_1[z] of C^2; translating through the
    // basis map f+ -> 1, f- -> -z flips the sign of the second coordinate.
    for (int m = 1; m <= 12; ++m) {
        const WeightModule v = finite_irrep(m);
        const WeightModule t = tensor(v, natural_c2());
        const Rational up = Rational(m + 2) * Rational(m + 2) - 1;
        const Rational down = Rational(m) * Rational(m) - 1;
        const Mat p_up = primary_projection(t, {up, down}, up).map;
        const Mat omega = casimir(t);
        for (int deg = 0; deg <= m; ++deg) {
            const UniPoly f = UniPoly::monomial(deg);
            const UniPoly a_top = scaled_minus_euler(m, f);
            const UniPoly a_bot = f.derivative();
            std::vector<Rational> fvec(t.dim, Rational(0)), avec(t.dim, Rational(0));
            fvec[2 * deg] = 1;
            for (const auto& [d, c] : a_top.terms()) avec[2 * d] = c;
            for (const auto& [d, c] : a_bot.terms()) avec[2 * d + 1] = -c;  // f- coordinate of F'

            const auto proj = p_up.apply(fvec);
            for (int r = 0; r < t.dim; ++r) REQUIRE(proj[r] * Rational(m + 1) == avec[r]);

            // the complementary summand lies in the m^2-1 eigenspace
            std::vector<Rational> bvec(t.dim, Rational(0));
            for (int r = 0; r < t.dim; ++r) bvec[r] = fvec[r] * Rational(m + 1) - avec[r];
            const auto omega_b = omega.apply(bvec);
            for (int r = 0; r < t.dim; ++r) REQUIRE(omega_b[r] == down * bvec[r]);
        }
    }
}

TEST_CASE("weight functionals") {
    SECTION("V_2 has a weight-0 functional and no weight-1 functional") {
        const WeightModule v = finite_irrep(2);
        REQUIRE_FALSE(weight_functional(v, Rational(0)).map.is_zero());
        REQUIRE(weight_functional(v, Rational(1)).map.is_zero());
    }
    SECTION("V_0 supports exactly the zero weight") {
        const WeightModule v = finite_irrep(0);
        REQUIRE(weight_functional(v, Rational(0)).map.at(0, 0) == 1);
    }
    SECTION("ambiguous weight spaces are rejected") {
        const WeightModule t = tensor(finite_irrep(1), finite_irrep(1));  // weight 0 twice
        REQUIRE_THROWS_AS(weight_functional(t, Rational(0)), std::invalid_argument);
    }
    SECTION("functional is Cartan-equivariant") {
        const WeightModule v = finite_irrep(4);
        REQUIRE(weight_functional(v, Rational(2)).equivariant);
    }
}

TEST_CASE("weight-block multiplicity equals the full-matrix eigenspace dimension") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            const WeightModule t = tensor(finite_irrep(m), finite_irrep(n));
            const Mat omega = casimir(t);
            for (int k = 0; k <= m + n; ++k) {
                const Rational sigma = Rational(k + 1) * Rational(k + 1) - 1;
                // the full eigenspace is the whole V_k-isotypic component
                const int full = t.dim - rank(omega - Mat::identity(t.dim) * sigma);
                REQUIRE(tensor_multiplicity(m, n, k) * (k + 1) == full);
            }
        }
}

TEST_CASE("tensor multiplicity through the Casimir matches Pieri on samples") {
    REQUIRE(tensor_multiplicity(0, 5, 5) == 1);
    REQUIRE(tensor_multiplicity(0, 5, 3) == 0);
    REQUIRE(tensor_multiplicity(3, 3, 0) == 1);
    REQUIRE(tensor_multiplicity(3, 3, 7) == 0);
    REQUIRE(tensor_multiplicity(4, 2, 2) == 1);
}
