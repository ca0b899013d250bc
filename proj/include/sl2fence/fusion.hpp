#pragma once

// Fusion translation machinery for (sl2 + sl2) restricted to the diagonal:
// finite-dimensional Rankin-Cohen operators R_{m,n}^k, the H-embedding into
// the antisymmetric line of C^2 (x) C^2, the four projections pr_{delta eps},
// the universal constants c_{delta eps} computed three ways (matrix pipeline,
// g-functions, closed form), and the four bilinear expansions.

#include <sl2fence/matrix.hpp>
#include <sl2fence/modules.hpp>
#include <sl2fence/polynomial.hpp>
#include <sl2fence/rational.hpp>
#include <sl2fence/report.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl2fence {

inline Rational g_function(long m, long n, long k, int delta, int eps) {
    require_sign(delta, "delta");
    require_sign(eps, "eps");
    if (delta == 1 && eps == 1) return Rational(m + n - k + 2) * Rational(m + n + k + 4);
    if (delta == 1 && eps == -1) return Rational(n - m + k) * Rational(m - n + k + 2);
    if (delta == -1 && eps == 1) return Rational(m - n + k) * Rational(n - m + k + 2);
    return Rational(m + n - k) * Rational(m + n + k + 2);
}

// (delta l' + eps l'' + 1 + l''')(delta l' + eps l'' + 1 - l''') / (8 l' l'')
inline GaussianRational c_closed_form(const GaussianRational& l1, const GaussianRational& l2,
                                      const GaussianRational& l3, int delta, int eps) {
    require_sign(delta, "delta");
    require_sign(eps, "eps");
    if (l1.is_zero() || l2.is_zero()) throw std::domain_error("c_closed_form: singular lambda' or lambda''");
    const GaussianRational base =
        GaussianRational(Rational(delta)) * l1 + GaussianRational(Rational(eps)) * l2 + GaussianRational(1);
    return (base + l3) * (base - l3) / (GaussianRational(8) * l1 * l2);
}

// Coefficient of d^ell / dz^{ell-j} dw^j for j = 0..ell, with the Gamma
// ratios read as finite rising-factorial products, so the list is defined for
// every rational pair (lambda', lambda'').  At lambda' = m+1, lambda'' = n+1
// this reproduces the factorial coefficients of the finite-dimensional
// operator.
inline std::vector<Rational> gamma_form_coefficients(const Rational& l1, const Rational& l2, int ell) {
    if (ell < 0) throw std::invalid_argument("gamma_form_coefficients: negative order");
    std::vector<Rational> out;
    out.reserve(ell + 1);
    for (int j = 0; j <= ell; ++j) {
        Rational c = rising_factorial(l1 - ell, j) * rising_factorial(l2 - ell, ell - j);
        c /= Rational(factorial(j)) * Rational(factorial(ell - j));
        if ((ell - j) % 2 != 0) c = -c;
        out.push_back(c);
    }
    return out;
}

struct RankinCohen {
    int m = 0, n = 0, ell = 0, k = 0;
    Mat matrix;  // (k+1) x (m+1)(n+1), columns indexed by z^i (x) w^j at i*(n+1)+j

    std::vector<Rational> coefficients;  // of d^ell/dz^{ell-j} dw^j, j = 0..ell

    UniPoly apply(const UniPoly& f, const UniPoly& g) const {
        std::vector<Rational> in((m + 1) * (n + 1), Rational(0));
        for (const auto& [df, cf] : f.terms()) {
            if (df > m) throw std::invalid_argument("rc apply: deg F exceeds m");
            for (const auto& [dg, cg] : g.terms()) {
                if (dg > n) throw std::invalid_argument("rc apply: deg G exceeds n");
                in[df * (n + 1) + dg] = cf * cg;
            }
        }
        std::vector<Rational> out = matrix.apply(in);
        UniPoly r;
        for (int d = 0; d <= k; ++d) r.set(d, out[d]);
        return r;
    }
};

// The bidifferential operator
//   Rest_{z=w} sum_j (-1)^{ell-j} (m+j-ell)!(n-j)! / (j!(m-ell)!(ell-j)!(n-ell)!)
//              d^ell / dz^{ell-j} dw^j,
// scaled by 1/ell! so that the stored operator takes the value
// (-1)^ell n!/(ell!(n-ell)!) on z^ell (x) 1.  Equivariance is checked at
// construction; the scale does not affect any scalar extracted downstream.
inline RankinCohen rc_operator(int m, int n, int ell) {
    if (m < 0 || n < 0) throw std::invalid_argument("rc_operator: negative parameter");
    if (ell < 0 || ell > std::min(m, n)) throw std::invalid_argument("rc_operator: ell out of range");
    RankinCohen rc;
    rc.m = m;
    rc.n = n;
    rc.ell = ell;
    rc.k = m + n - 2 * ell;
    rc.matrix = Mat(rc.k + 1, (m + 1) * (n + 1));

    BivarPoly escaped;  // degrees above k must cancel; tracked to fail loudly
    const Rational scale = Rational(1) / Rational(factorial(ell));
    for (int j = 0; j <= ell; ++j) {
        Rational c = Rational(factorial(m + j - ell)) * Rational(factorial(n - j));
        c /= Rational(factorial(j)) * Rational(factorial(m - ell)) * Rational(factorial(ell - j)) *
             Rational(factorial(n - ell));
        if ((ell - j) % 2 != 0) c = -c;
        rc.coefficients.push_back(c);
        c *= scale;

        // contribution to the matrix: d^{ell-j}_z d^j_w (z^i w^v) |_{w=z}
        for (int i = 0; i <= m; ++i) {
            if (i < ell - j) continue;
            Rational dz = Rational(factorial(i)) / Rational(factorial(i - ell + j));
            for (int v = 0; v <= n; ++v) {
                if (v < j) continue;
                Rational dw = Rational(factorial(v)) / Rational(factorial(v - j));
                const int row = i + v - ell;
                if (row > rc.k) {
                    escaped.set(row, i * (n + 1) + v, escaped.coefficient(row, i * (n + 1) + v) + c * dz * dw);
                    continue;
                }
                rc.matrix.at(row, i * (n + 1) + v) += c * dz * dw;
            }
        }
    }
    if (!escaped.is_zero()) throw std::logic_error("rc_operator: image escapes Pol_k");

    const WeightModule source = tensor(finite_irrep(m), finite_irrep(n));
    const WeightModule target = finite_irrep(rc.k);
    if (!is_equivariant(source, target, rc.matrix))
        throw std::logic_error("rc_operator: constructed operator is not equivariant");
    return rc;
}

// Basis order of C^2 (x) C^2 below: e+f+, e+f-, e-f+, e-f-.
inline Mat antisym_projection_matrix() {
    Mat p(4, 4);
    p.at(1, 1) = Rational(1, 2);
    p.at(2, 1) = Rational(-1, 2);
    p.at(1, 2) = Rational(-1, 2);
    p.at(2, 2) = Rational(1, 2);
    return p;
}

// Rank-one idempotent onto the line C(e+ (x) f- - e- (x) f+):
// (a e+ + b e-) (x) (c f+ + d f-) |-> (ad - bc)/2 (e+ (x) f- - e- (x) f+).
inline Intertwiner antisym_projection() {
    const WeightModule ff = tensor(natural_c2(), natural_c2());
    Intertwiner t;
    t.source = t.target = std::make_shared<WeightModule>(ff);
    t.map = antisym_projection_matrix();
    t.equivariant = is_equivariant(ff, ff, t.map);
    return t;
}

// H(u, v) = (u (x) e+) (x) (v (x) f-) - (u (x) e-) (x) (v (x) f+), as a vector
// in (Pi' (x) C^2) (x) (Pi'' (x) C^2) with index ((i*2+s)*dimB*2) + (j*2+t).
inline std::vector<Rational> h_embed(const std::vector<Rational>& u, const std::vector<Rational>& v) {
    const int da = static_cast<int>(u.size()), db = static_cast<int>(v.size());
    std::vector<Rational> out(static_cast<size_t>(4) * da * db, Rational(0));
    for (int i = 0; i < da; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < db; ++j) {
            if (v[j] == 0) continue;
            out[(static_cast<size_t>(i * 2 + 0) * db + j) * 2 + 1] = u[i] * v[j];
            out[(static_cast<size_t>(i * 2 + 1) * db + j) * 2 + 0] = -u[i] * v[j];
        }
    }
    return out;
}

// Index permutation (Pi' (x) C^2) (x) (Pi'' (x) C^2) -> (Pi' (x) Pi'') (x) (C^2 (x) C^2);
// perm[source] = destination.  The reordering used silently by the fusion
// composition is kept explicit here.
inline std::vector<int> interleave_map(int dim_a, int dim_b) {
    std::vector<int> perm(static_cast<size_t>(4) * dim_a * dim_b);
    for (int i = 0; i < dim_a; ++i)
        for (int s = 0; s < 2; ++s)
            for (int j = 0; j < dim_b; ++j)
                for (int t = 0; t < 2; ++t)
                    perm[((i * 2 + s) * dim_b + j) * 2 + t] = ((i * dim_b + j) * 2 + s) * 2 + t;
    return perm;
}

// Factor-wise primary projection P_delta (x) P_eps on
// (M' (x) C^2) (x) (M'' (x) C^2).
inline Intertwiner pr_delta_eps(const WeightModule& m1, const WeightModule& m2, const Rational& l1,
                                const Rational& l2, int delta, int eps) {
    require_sign(delta, "delta");
    require_sign(eps, "eps");
    if (l1 == 0 || l2 == 0) throw std::domain_error("pr_delta_eps: singular infinitesimal character");
    const WeightModule a = tensor(m1, natural_c2());
    const WeightModule b = tensor(m2, natural_c2());
    const std::vector<Rational> spec_a = {(l1 + 1) * (l1 + 1) - 1, (l1 - 1) * (l1 - 1) - 1};
    const std::vector<Rational> spec_b = {(l2 + 1) * (l2 + 1) - 1, (l2 - 1) * (l2 - 1) - 1};
    const Mat pa = primary_projection(a, spec_a, (l1 + delta) * (l1 + delta) - 1).map;
    const Mat pb = primary_projection(b, spec_b, (l2 + eps) * (l2 + eps) - 1).map;

    const WeightModule big = tensor(a, b);
    Intertwiner t;
    t.source = t.target = std::make_shared<WeightModule>(big);
    t.map = Mat::kron(pa, pb);
    t.equivariant = is_equivariant(big, big, t.map, 4);
    return t;
}

namespace detail {

// Given the factor projections P (on M' (x) C^2) and Q (on M'' (x) C^2) and a
// combination of inputs (u (x) e_su) (x) (v (x) f_sv) with coefficients, returns
// the matrix W[i][j] = (id (x) pr_{F->F'}) applied to (P (x) Q)(input), i.e. the
// coefficient of z^i (x) w^j in the antisymmetric-line component.
struct FusionTerm {
    int u, su, v, sv;
    Rational coeff;
};

inline Mat fusion_extract(const Mat& p, const Mat& q, int dim_m, int dim_n, const std::vector<FusionTerm>& terms) {
    Mat w(dim_m, dim_n);
    const Rational half(1, 2);
    for (const FusionTerm& t : terms) {
        if (t.coeff == 0) continue;
        const int pc = 2 * t.u + t.su, qc = 2 * t.v + t.sv;
        for (int i = 0; i < dim_m; ++i) {
            const Rational& p0 = p.at(2 * i, pc);
            const Rational& p1 = p.at(2 * i + 1, pc);
            if (p0 == 0 && p1 == 0) continue;
            for (int j = 0; j < dim_n; ++j) {
                const Rational& q0 = q.at(2 * j, qc);
                const Rational& q1 = q.at(2 * j + 1, qc);
                if (q0 == 0 && q1 == 0) continue;
                w.at(i, j) += t.coeff * half * (p0 * q1 - p1 * q0);
            }
        }
    }
    return w;
}

struct FactorProjections {
    Mat p_plus, p_minus;  // on M (x) C^2, onto (lambda+-1)^2 - 1
};

inline FactorProjections factor_projections(const WeightModule& m, const Rational& lambda) {
    const WeightModule a = tensor(m, natural_c2());
    const std::vector<Rational> spectrum = {(lambda + 1) * (lambda + 1) - 1, (lambda - 1) * (lambda - 1) - 1};
    FactorProjections f;
    f.p_plus = primary_projection(a, spectrum, (lambda + 1) * (lambda + 1) - 1).map;
    f.p_minus = primary_projection(a, spectrum, (lambda - 1) * (lambda - 1) - 1).map;
    return f;
}

}  // namespace detail

// 2(m+1)(n+1) (id (x) pr_{F->F'}) o pr_{delta eps} (H(F, G)), computed through
// the explicit matrices, as a polynomial in (z, w).
inline BivarPoly fusion_pairing_pipeline(int m, int n, const UniPoly& f, const UniPoly& g, int delta, int eps) {
    require_sign(delta, "delta");
    require_sign(eps, "eps");
    if (f.degree() > m || g.degree() > n) throw std::invalid_argument("fusion_pairing_pipeline: degree violation");
    const detail::FactorProjections fp = detail::factor_projections(finite_irrep(m), Rational(m + 1));
    const detail::FactorProjections gq = detail::factor_projections(finite_irrep(n), Rational(n + 1));
    const Mat& p = (delta == 1) ? fp.p_plus : fp.p_minus;
    const Mat& q = (eps == 1) ? gq.p_plus : gq.p_minus;

    std::vector<detail::FusionTerm> terms;
    for (const auto& [du, cu] : f.terms())
        for (const auto& [dv, cv] : g.terms()) {
            terms.push_back({du, 0, dv, 1, cu * cv});
            terms.push_back({du, 1, dv, 0, -(cu * cv)});
        }
    const Mat w = detail::fusion_extract(p, q, m + 1, n + 1, terms);

    BivarPoly out;
    const Rational scale = Rational(2) * Rational(m + 1) * Rational(n + 1);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j)
            if (w.at(i, j) != 0) out.set(i, j, w.at(i, j) * scale);
    return out;
}

// The four closed-form expansions of
// 2(m+1)(n+1) (id (x) pr_{F->F'}) o pr_{delta eps}(H(F, G)).
inline BivarPoly bilinear_expansion(int delta, int eps, const UniPoly& f, const UniPoly& g, int m, int n) {
    require_sign(delta, "delta");
    require_sign(eps, "eps");
    if (f.degree() > m || g.degree() > n) throw std::invalid_argument("bilinear_expansion: degree violation");
    const BivarPoly fz = BivarPoly::from_z(f);
    const BivarPoly gw = BivarPoly::from_w(g);
    const BivarPoly dfz = BivarPoly::from_z(f.derivative());
    const BivarPoly dgw = BivarPoly::from_w(g.derivative());
    const BivarPoly zw = BivarPoly::monomial(1, 0) - BivarPoly::monomial(0, 1);  // z - w
    const BivarPoly zw2 = zw * zw;

    const BivarPoly fgp = fz * dgw;  // F G'
    const BivarPoly fpg = dfz * gw;  // F' G
    const BivarPoly fg = fz * gw;
    const BivarPoly fpgp = dfz * dgw;

    if (delta == 1 && eps == 1)
        return zw2 * fpgp + zw * (fgp * Rational(-m) + fpg * Rational(n)) + fg * Rational(m + n + 2);
    if (delta == 1 && eps == -1)
        return zw2 * fpgp * Rational(-1) + zw * (fgp * Rational(m) - fpg * Rational(n)) + fg * (Rational(m + 1) * n);
    if (delta == -1 && eps == 1)
        return zw2 * fpgp * Rational(-1) + zw * (fgp * Rational(m) - fpg * Rational(n)) + fg * (Rational(n + 1) * m);
    return zw2 * fpgp + zw * (fpg * Rational(n) - fgp * Rational(m));  // (w-z)^2 F'G' + (w-z)(-n F'G + m FG')
}

// Scalar of the full pipeline (T (x) pr_{F->F'}) o pr_{delta eps} o H with
// T = R_{m,n}^k, normalized by T(z^ell (x) 1).  Every monomial probe (u, v)
// with T(u (x) v) != 0 must yield the same scalar; probes with T(u (x) v) = 0
// must map to zero.
inline Rational c_bruteforce(int m, int n, int ell, int delta, int eps) {
    const RankinCohen rc = rc_operator(m, n, ell);
    const detail::FactorProjections fp = detail::factor_projections(finite_irrep(m), Rational(m + 1));
    const detail::FactorProjections gq = detail::factor_projections(finite_irrep(n), Rational(n + 1));
    const Mat& p = (delta == 1) ? fp.p_plus : fp.p_minus;
    const Mat& q = (eps == 1) ? gq.p_plus : gq.p_minus;

    bool have = false;
    Rational c;
    for (int a = 0; a <= m; ++a)
        for (int b = 0; b <= n; ++b) {
            const Mat w = detail::fusion_extract(
                p, q, m + 1, n + 1, {{a, 0, b, 1, Rational(1)}, {a, 1, b, 0, Rational(-1)}});
            std::vector<Rational> win((m + 1) * (n + 1));
            for (int i = 0; i <= m; ++i)
                for (int j = 0; j <= n; ++j) win[i * (n + 1) + j] = w.at(i, j);
            const std::vector<Rational> result = rc.matrix.apply(win);
            const std::vector<Rational> tcol = rc.matrix.column(a * (n + 1) + b);

            int pivot = -1;
            for (int r = 0; r <= rc.k; ++r)
                if (tcol[r] != 0) pivot = r;
            if (pivot < 0) {
                for (int r = 0; r <= rc.k; ++r)
                    if (result[r] != 0)
                        throw std::logic_error("c_bruteforce: nonzero pairing on a probe annihilated by T");
                continue;
            }
            const Rational probe_c = result[pivot] / tcol[pivot];
            for (int r = 0; r <= rc.k; ++r)
                if (result[r] != probe_c * tcol[r])
                    throw std::logic_error("c_bruteforce: pairing is not a multiple of T on probe");
            if (!have) {
                c = probe_c;
                have = true;
            } else if (c != probe_c) {
                throw std::logic_error("c_bruteforce: scalar depends on the probe (u, v)");
            }
        }
    if (!have) throw std::logic_error("c_bruteforce: no probe with T(u (x) v) != 0");
    return c;
}

struct FusionScalars {
    Rational pipeline;          // c_bruteforce
    Rational g_form;            // g_{delta eps}(m,n;k) / (8 (m+1)(n+1))
    GaussianRational closed;    // c closed form at (m+1, n+1; k+1)
};

inline FusionScalars fusion_scalars(int m, int n, int ell, int delta, int eps) {
    const int k = m + n - 2 * ell;
    FusionScalars s;
    s.pipeline = c_bruteforce(m, n, ell, delta, eps);
    s.g_form = g_function(m, n, k, delta, eps) / (Rational(8) * Rational(m + 1) * Rational(n + 1));
    s.closed = c_closed_form(GaussianRational(Rational(m + 1)), GaussianRational(Rational(n + 1)),
                             GaussianRational(Rational(k + 1)), delta, eps);
    return s;
}

// Sweep of the fusion identity on finite models: pipeline = g-form exactly,
// |pipeline| = |closed form| with sign agreement for (+,+) and (-,-).  The
// mixed-sign relation between the closed form and the g-form is reported by
// the caller as a flagged convention note, not a failure.
inline VerificationReport verify_fusion_translation(int max_m, int max_n) {
    VerificationReport rep;
    rep.name = "fusion-translation finite window m<=" + std::to_string(max_m) + " n<=" + std::to_string(max_n);
    for (int m = 0; m <= max_m; ++m)
        for (int n = 0; n <= max_n; ++n)
            for (int ell = 0; ell <= std::min(m, n); ++ell)
                for (int delta : {+1, -1})
                    for (int eps : {+1, -1}) {
                        const FusionScalars s = fusion_scalars(m, n, ell, delta, eps);
                        const std::string ctx = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                                " l=" + std::to_string(ell) + " d=" + std::to_string(delta) +
                                                " e=" + std::to_string(eps);
                        rep.record(s.pipeline == s.g_form, ctx + " pipeline=" + to_string(s.pipeline) +
                                                               " g-form=" + to_string(s.g_form));
                        const bool mixed = (delta != eps);
                        const Rational closed_re = s.closed.re;
                        const bool sign_ok = s.closed.im == 0 &&
                                             (mixed ? (abs(closed_re) == abs(s.pipeline))
                                                    : (closed_re == s.pipeline));
                        rep.record(sign_ok, ctx + " closed=" + to_string(closed_re) +
                                                " pipeline=" + to_string(s.pipeline));
                    }
    return rep;
}

// Symmetry breaking operator L(l1) (x) L(l2) -> L(l3) on truncated
// lowest-weight models, built weight space by weight space: the kernel of Y
// on the bottom weight space provides the singular vector, and each row is
// the coordinate along X^q w0 of the Casimir eigenspace for l3^2 - 1 inside
// its weight space.
inline Mat lowest_weight_sbo(long l1, long l2, long l3, int n_cut, int q_max) {
    if ((l3 - l1 - l2 - 1) % 2 != 0 || l3 < l1 + l2 + 1)
        throw std::invalid_argument("lowest_weight_sbo: no nonzero intertwiner for this triple");
    const long d = (l3 - l1 - l2 - 1) / 2;
    const WeightModule a = truncated_lowest_weight(Rational(l1), n_cut);
    const WeightModule b = truncated_lowest_weight(Rational(l2), n_cut);
    const int db = b.dim;

    // weight space of weight l3 + 1 + 2q: pairs (i, j), i + j = d + q
    auto space = [&](long q) {
        std::vector<std::pair<int, int>> basis;
        for (int i = 0; i <= static_cast<int>(d + q); ++i) {
            const int j = static_cast<int>(d + q) - i;
            if (i < a.dim && j < b.dim) basis.push_back({i, j});
        }
        return basis;
    };

    // singular vector: kernel of Y on the bottom weight space
    const auto bottom = space(0);
    std::vector<std::pair<int, int>> below;
    std::map<std::pair<int, int>, int> below_index;
    for (const auto& [i, j] : bottom) {
        for (auto key : {std::make_pair(i - 1, j), std::make_pair(i, j - 1)})
            if (key.first >= 0 && key.second >= 0 && !below_index.count(key)) {
                below_index[key] = static_cast<int>(below.size());
                below.push_back(key);
            }
    }
    Mat ymat(static_cast<int>(below.size()), static_cast<int>(bottom.size()));
    for (int col = 0; col < static_cast<int>(bottom.size()); ++col) {
        const auto [i, j] = bottom[col];
        if (i > 0) ymat.at(below_index.at({i - 1, j}), col) += Rational(-(l1 + i)) * i;
        if (j > 0) ymat.at(below_index.at({i, j - 1}), col) += Rational(-(l2 + j)) * j;
    }
    const auto ker = kernel_basis(ymat);
    if (ker.size() != 1) throw std::logic_error("lowest_weight_sbo: singular vector is not unique");

    // w as sparse vector over (i, j)
    std::map<std::pair<int, int>, Rational> sing;
    for (size_t t = 0; t < bottom.size(); ++t)
        if (ker[0][t] != 0) sing[bottom[t]] = ker[0][t];

    Mat t_out(q_max + 1, a.dim * db);
    std::map<std::pair<int, int>, Rational> xq = sing;
    for (long q = 0; q <= q_max; ++q) {
        const auto basis = space(q);
        std::map<std::pair<int, int>, int> index;
        for (size_t t = 0; t < basis.size(); ++t) index[basis[t]] = static_cast<int>(t);
        const int dimw = static_cast<int>(basis.size());

        // Casimir block on this weight space
        Mat block(dimw, dimw);
        for (int col = 0; col < dimw; ++col) {
            std::map<std::pair<int, int>, Rational> e{{basis[col], Rational(1)}};
            auto apply = [&](const Mat& za, const Mat& zb, const std::map<std::pair<int, int>, Rational>& vin) {
                std::map<std::pair<int, int>, Rational> r;
                for (const auto& [key, c] : vin) {
                    for (int row = 0; row < a.dim; ++row)
                        if (za.at(row, key.first) != 0) r[{row, key.second}] += za.at(row, key.first) * c;
                    for (int row = 0; row < db; ++row)
                        if (zb.at(row, key.second) != 0) r[{key.first, row}] += zb.at(row, key.second) * c;
                }
                return r;
            };
            auto acc = [&](std::map<std::pair<int, int>, Rational>& dst,
                           const std::map<std::pair<int, int>, Rational>& src, long mult) {
                for (const auto& [key, c] : src) dst[key] += c * mult;
            };
            std::map<std::pair<int, int>, Rational> om;
            acc(om, apply(a.H, b.H, apply(a.H, b.H, e)), 1);
            acc(om, apply(a.X, b.X, apply(a.Y, b.Y, e)), 2);
            acc(om, apply(a.Y, b.Y, apply(a.X, b.X, e)), 2);
            for (const auto& [key, c] : om) {
                if (c == 0) continue;
                auto it = index.find(key);
                if (it == index.end()) throw std::logic_error("lowest_weight_sbo: Casimir left the weight space");
                block.at(it->second, col) += c;
            }
        }

        // Lagrange row extraction: project onto the l3^2-1 eigenspace, then
        // read the coordinate along X^q w0.
        const Rational target = Rational(l3) * Rational(l3) - 1;
        Mat proj = Mat::identity(dimw);
        for (long s = 0; s <= d + q; ++s) {
            const Rational sigma = Rational(l1 + l2 + 1 + 2 * s) * Rational(l1 + l2 + 1 + 2 * s) - 1;
            if (sigma == target) continue;
            proj = proj * ((block - Mat::identity(dimw) * sigma) * (Rational(1) / (target - sigma)));
        }
        int anchor = -1;
        for (int t = 0; t < dimw; ++t)
            if (xq.count(basis[t]) && xq.at(basis[t]) != 0) anchor = t;
        if (anchor < 0) throw std::logic_error("lowest_weight_sbo: X^q singular vector vanished");
        const Rational norm = xq.at(basis[anchor]);
        for (int col = 0; col < dimw; ++col) {
            const auto [i, j] = basis[col];
            t_out.at(static_cast<int>(q), i * db + j) = proj.at(anchor, col) / norm;
        }

        // advance X^q w0 -> X^{q+1} w0 (diagonal X = X (x) 1 + 1 (x) X)
        std::map<std::pair<int, int>, Rational> next;
        for (const auto& [key, c] : xq) {
            if (key.first + 1 < a.dim) next[{key.first + 1, key.second}] += c;
            if (key.second + 1 < db) next[{key.first, key.second + 1}] += c;
        }
        xq = std::move(next);
    }
    return t_out;
}

// Runs the pipeline on a truncated lowest-weight triple with the
// kernel-oracle intertwiner and compares against the g-form (under
// m = l1 - 1, n = l2 - 1, k = l3 - 1) and the closed form.
inline VerificationReport verify_fusion_translation_lw(long l1, long l2, long l3, int n_cut) {
    VerificationReport rep;
    rep.name = "fusion-translation lowest-weight (" + std::to_string(l1) + "," + std::to_string(l2) + "," +
               std::to_string(l3) + ") cut=" + std::to_string(n_cut);
    const WeightModule ma = truncated_lowest_weight(Rational(l1), n_cut);
    const WeightModule mb = truncated_lowest_weight(Rational(l2), n_cut);
    const detail::FactorProjections fa = detail::factor_projections(ma, Rational(l1));
    const detail::FactorProjections fb = detail::factor_projections(mb, Rational(l2));
    const int probe_max = 3, q_guard = 8;
    const Mat t = lowest_weight_sbo(l1, l2, l3, n_cut, static_cast<int>((l3 - l1 - l2 - 1) / 2) + 2 * probe_max + q_guard);

    for (int delta : {+1, -1})
        for (int eps : {+1, -1}) {
            const Mat& p = (delta == 1) ? fa.p_plus : fa.p_minus;
            const Mat& q = (eps == 1) ? fb.p_plus : fb.p_minus;
            const Rational expected_g =
                g_function(l1 - 1, l2 - 1, l3 - 1, delta, eps) / (Rational(8) * Rational(l1) * Rational(l2));
            const GaussianRational closed =
                c_closed_form(GaussianRational(Rational(l1)), GaussianRational(Rational(l2)),
                              GaussianRational(Rational(l3)), delta, eps);
            for (int a = 0; a <= probe_max; ++a)
                for (int b = 0; b <= probe_max; ++b) {
                    const Mat w = detail::fusion_extract(
                        p, q, ma.dim, mb.dim, {{a, 0, b, 1, Rational(1)}, {a, 1, b, 0, Rational(-1)}});
                    std::vector<Rational> win(static_cast<size_t>(ma.dim) * mb.dim);
                    for (int i = 0; i < ma.dim; ++i)
                        for (int j = 0; j < mb.dim; ++j) win[static_cast<size_t>(i) * mb.dim + j] = w.at(i, j);
                    const std::vector<Rational> result = t.apply(win);
                    const std::vector<Rational> tcol = t.column(a * mb.dim + b);
                    const std::string ctx = "d=" + std::to_string(delta) + " e=" + std::to_string(eps) +
                                            " u=v_" + std::to_string(a) + " v=v_" + std::to_string(b);
                    bool pass = true;
                    for (size_t r = 0; r < result.size(); ++r)
                        if (result[r] != expected_g * tcol[r]) pass = false;
                    rep.record(pass, ctx + " pipeline component mismatch vs g-form");
                    const bool mixed = (delta != eps);
                    const bool closed_ok =
                        closed.im == 0 && (mixed ? abs(closed.re) == abs(expected_g) : closed.re == expected_g);
                    rep.record(closed_ok, ctx + " closed-form magnitude mismatch");
                }
        }
    return rep;
}

}  // namespace sl2fence
