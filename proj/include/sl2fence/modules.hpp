#pragma once

// Explicit weight modules for the sl2-triple {H, X, Y} with
//
//   [H, X] = 2X,  [H, Y] = -2Y,  [X, Y] = H,
//
// the Casimir element  Omega = H^2 + 2(XY + YX)  (so a module with
// infinitesimal character lambda carries Omega as the scalar lambda^2 - 1),
// spectral projections onto primary components, and weight-coordinate
// functionals.
//
// Truncated models of infinite-dimensional lowest/highest weight modules drop
// one basis vector at the cut.  Every identity involving p applications of
// the Casimir is exact on columns whose "headroom" (distance to the cut) is
// at least p; checks below take that required headroom as a parameter.

#include <sl2fence/matrix.hpp>
#include <sl2fence/rational.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2fence {

enum class ModuleKind {
    FiniteIrrep,
    NaturalC2,
    AdjointC3,
    TruncatedLowest,
    TruncatedHighest,
    TensorProduct,
    Gl1Character,
};

constexpr int kExactHeadroom = 1 << 20;

inline void require_sign(int s, const char* what) {
    if (s != 1 && s != -1) throw std::invalid_argument(std::string(what) + " must be +1 or -1");
}

struct WeightModule {
    ModuleKind kind = ModuleKind::FiniteIrrep;
    std::string label;
    int dim = 0;
    Mat H, X, Y;
    std::vector<Rational> weights;  // diagonal of H in the stored basis
    std::vector<int> headroom;      // per-column; kExactHeadroom when untruncated

    bool truncated() const { return kind == ModuleKind::TruncatedLowest || kind == ModuleKind::TruncatedHighest; }
};

// [H,X]-2X, [H,Y]+2Y, [X,Y]-H all vanish on columns with headroom >= required.
inline bool brackets_hold(const WeightModule& m, int required = 1) {
    if (m.kind == ModuleKind::Gl1Character) return true;
    const Mat hx = m.H * m.X - m.X * m.H - m.X * Rational(2);
    const Mat hy = m.H * m.Y - m.Y * m.H + m.Y * Rational(2);
    const Mat xy = m.X * m.Y - m.Y * m.X - m.H;
    for (int j = 0; j < m.dim; ++j) {
        if (m.headroom[j] < required) continue;
        for (int i = 0; i < m.dim; ++i)
            if (hx.at(i, j) != 0 || hy.at(i, j) != 0 || xy.at(i, j) != 0) return false;
    }
    return true;
}

namespace detail {

inline void finalize(WeightModule& m) {
    m.weights.resize(m.dim);
    for (int i = 0; i < m.dim; ++i) m.weights[i] = m.H.at(i, i);
    if (m.headroom.empty()) m.headroom.assign(m.dim, kExactHeadroom);
    if (!brackets_hold(m)) throw std::logic_error("module construction violates bracket relations: " + m.label);
}

}  // namespace detail

// (m+1)-dimensional irreducible on the basis {z^i}: H = m - 2 z d/dz,
// X = -d/dz, Y = -m z + z^2 d/dz.  Weight of z^i is m - 2i.
inline WeightModule finite_irrep(int m) {
    if (m < 0) throw std::invalid_argument("finite_irrep: negative highest weight");
    WeightModule v;
    v.kind = ModuleKind::FiniteIrrep;
    v.label = "V_" + std::to_string(m);
    v.dim = m + 1;
    v.H = Mat(v.dim, v.dim);
    v.X = Mat(v.dim, v.dim);
    v.Y = Mat(v.dim, v.dim);
    for (int i = 0; i <= m; ++i) {
        v.H.at(i, i) = m - 2 * i;
        if (i > 0) v.X.at(i - 1, i) = -i;
        if (i < m) v.Y.at(i + 1, i) = i - m;
    }
    detail::finalize(v);
    return v;
}

// The standard 2-dimensional module on the abstract basis {f+, f-}:
// H f± = ±f±, X f+ = Y f- = 0, X f- = f+, Y f+ = f-.
inline WeightModule natural_c2() {
    WeightModule v;
    v.kind = ModuleKind::NaturalC2;
    v.label = "C2";
    v.dim = 2;
    v.H = Mat(2, 2);
    v.X = Mat(2, 2);
    v.Y = Mat(2, 2);
    v.H.at(0, 0) = 1;
    v.H.at(1, 1) = -1;
    v.X.at(0, 1) = 1;
    v.Y.at(1, 0) = 1;
    detail::finalize(v);
    return v;
}

// Adjoint module on the ordered basis {X, H, Y}; the zero-weight line C·H is
// basis index 1.
inline WeightModule adjoint_c3() {
    WeightModule v;
    v.kind = ModuleKind::AdjointC3;
    v.label = "C3";
    v.dim = 3;
    v.H = Mat(3, 3);
    v.X = Mat(3, 3);
    v.Y = Mat(3, 3);
    v.H.at(0, 0) = 2;
    v.H.at(2, 2) = -2;
    v.X.at(0, 1) = -2;  // ad(X)H = -2X
    v.X.at(1, 2) = 1;   // ad(X)Y = H
    v.Y.at(1, 0) = -1;  // ad(Y)X = -H
    v.Y.at(2, 1) = 2;   // ad(Y)H = 2Y
    detail::finalize(v);
    return v;
}

constexpr int kAdjointZeroWeightIndex = 1;

// Truncated model of the lowest-weight module with infinitesimal character
// lambda (lowest weight lambda+1): basis v_0..v_N, X v_j = v_{j+1} with
// v_{N+1} dropped, Y v_j = -j(lambda+j) v_{j-1}.
inline WeightModule truncated_lowest_weight(const Rational& lambda, int n_cut) {
    if (n_cut < 4) throw std::invalid_argument("truncated_lowest_weight: cut too small");
    WeightModule v;
    v.kind = ModuleKind::TruncatedLowest;
    v.label = "L(" + to_string(lambda) + ")|" + std::to_string(n_cut);
    v.dim = n_cut + 1;
    v.H = Mat(v.dim, v.dim);
    v.X = Mat(v.dim, v.dim);
    v.Y = Mat(v.dim, v.dim);
    v.headroom.resize(v.dim);
    for (int j = 0; j <= n_cut; ++j) {
        v.H.at(j, j) = lambda + 1 + 2 * j;
        if (j < n_cut) v.X.at(j + 1, j) = 1;
        if (j > 0) v.Y.at(j - 1, j) = -(lambda + j) * j;
        v.headroom[j] = n_cut - j;
    }
    detail::finalize(v);
    return v;
}

// Truncated Verma module with highest weight mu (infinitesimal character
// mu+1): basis Y^p v, X(Y^p v) = p(mu-p+1) Y^{p-1} v from the bracket
// relations, Y^{N+1} v dropped.
inline WeightModule truncated_highest_weight(const Rational& mu, int n_cut) {
    if (n_cut < 4) throw std::invalid_argument("truncated_highest_weight: cut too small");
    WeightModule v;
    v.kind = ModuleKind::TruncatedHighest;
    v.label = "M(" + to_string(mu) + ")|" + std::to_string(n_cut);
    v.dim = n_cut + 1;
    v.H = Mat(v.dim, v.dim);
    v.X = Mat(v.dim, v.dim);
    v.Y = Mat(v.dim, v.dim);
    v.headroom.resize(v.dim);
    for (int p = 0; p <= n_cut; ++p) {
        v.H.at(p, p) = mu - 2 * p;
        if (p < n_cut) v.Y.at(p + 1, p) = 1;
        if (p > 0) v.X.at(p - 1, p) = (mu - p + 1) * p;
        v.headroom[p] = n_cut - p;
    }
    detail::finalize(v);
    return v;
}

// One-dimensional gl1-character C_nu (H acts by nu, X = Y = 0).  Not an sl2
// module for nu != 0; used only as the target of weight functionals.
inline WeightModule gl1_character(const Rational& nu) {
    WeightModule v;
    v.kind = ModuleKind::Gl1Character;
    v.label = "C_" + to_string(nu);
    v.dim = 1;
    v.H = Mat(1, 1);
    v.X = Mat(1, 1);
    v.Y = Mat(1, 1);
    v.H.at(0, 0) = nu;
    v.weights = {nu};
    v.headroom = {kExactHeadroom};
    return v;
}

// Diagonal action Z (x) 1 + 1 (x) Z on the basis e_i (x) e_j at index
// i*dim(B) + j.  Headroom is the min over the factors.
inline WeightModule tensor(const WeightModule& a, const WeightModule& b) {
    WeightModule v;
    v.kind = ModuleKind::TensorProduct;
    v.label = a.label + "(x)" + b.label;
    v.dim = a.dim * b.dim;
    const Mat ia = Mat::identity(a.dim), ib = Mat::identity(b.dim);
    v.H = Mat::kron(a.H, ib) + Mat::kron(ia, b.H);
    v.X = Mat::kron(a.X, ib) + Mat::kron(ia, b.X);
    v.Y = Mat::kron(a.Y, ib) + Mat::kron(ia, b.Y);
    v.headroom.resize(v.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j) v.headroom[i * b.dim + j] = std::min(a.headroom[i], b.headroom[j]);
    detail::finalize(v);
    return v;
}

inline Mat casimir(const WeightModule& m) { return m.H * m.H + (m.X * m.Y + m.Y * m.X) * Rational(2); }

struct Intertwiner {
    std::shared_ptr<const WeightModule> source;
    std::shared_ptr<const WeightModule> target;
    Mat map;
    bool equivariant = false;
};

// T ρ_src(Z) = ρ_tgt(Z) T for Z in {H, X, Y}, on source columns with
// headroom >= required.
inline bool is_equivariant(const WeightModule& src, const WeightModule& tgt, const Mat& t, int required = 1) {
    const Mat diffs[3] = {t * src.H - tgt.H * t, t * src.X - tgt.X * t, t * src.Y - tgt.Y * t};
    for (const Mat& d : diffs)
        for (int j = 0; j < src.dim; ++j) {
            if (src.headroom[j] < required) continue;
            for (int i = 0; i < d.rows(); ++i)
                if (d.at(i, j) != 0) return false;
        }
    return true;
}

// Lagrange spectral polynomial  prod_{s != target} (Omega - s)/(target - s).
// The spectrum must be duplicate-free, contain the target, and cover every
// Casimir eigenvalue of the module (verified on interior columns).
inline Intertwiner primary_projection(const WeightModule& m, const std::vector<Rational>& spectrum,
                                      const Rational& target) {
    for (size_t i = 0; i < spectrum.size(); ++i)
        for (size_t j = i + 1; j < spectrum.size(); ++j)
            if (spectrum[i] == spectrum[j]) throw std::invalid_argument("primary_projection: repeated spectrum value");
    if (std::find(spectrum.begin(), spectrum.end(), target) == spectrum.end())
        throw std::invalid_argument("primary_projection: target not in spectrum");

    const Mat omega = casimir(m);
    const int s = static_cast<int>(spectrum.size());

    Mat annihilator = Mat::identity(m.dim);
    for (const Rational& sigma : spectrum) annihilator = annihilator * (omega - Mat::identity(m.dim) * sigma);
    for (int j = 0; j < m.dim; ++j) {
        if (m.headroom[j] < s) continue;
        for (int i = 0; i < m.dim; ++i)
            if (annihilator.at(i, j) != 0)
                throw std::invalid_argument("primary_projection: spectrum does not cover the Casimir eigenvalues");
    }

    Mat p = Mat::identity(m.dim);
    for (const Rational& sigma : spectrum) {
        if (sigma == target) continue;
        p = p * ((omega - Mat::identity(m.dim) * sigma) * (Rational(1) / (target - sigma)));
    }

    Intertwiner t;
    t.source = t.target = std::make_shared<WeightModule>(m);
    t.map = std::move(p);
    t.equivariant = is_equivariant(m, m, t.map, s + 1);
    return t;
}

inline int weight_space_dim(const WeightModule& m, const Rational& nu) {
    int n = 0;
    for (int i = 0; i < m.dim; ++i)
        if (m.weights[i] == nu) ++n;
    return n;
}

// Weight-coordinate functional T : M -> C_nu.  Zero map when the nu-weight
// space is empty; rejected when it has dimension >= 2 (the functional would
// not be canonical).  Equivariance is with respect to the Cartan line C·H.
inline Intertwiner weight_functional(std::shared_ptr<const WeightModule> m, const Rational& nu) {
    std::vector<int> hits;
    for (int i = 0; i < m->dim; ++i)
        if (m->weights[i] == nu) hits.push_back(i);
    if (hits.size() >= 2)
        throw std::invalid_argument("weight_functional: weight " + to_string(nu) + " has multiplicity " +
                                    std::to_string(hits.size()) + " in " + m->label);
    Intertwiner t;
    t.source = m;
    t.target = std::make_shared<WeightModule>(gl1_character(nu));
    t.map = Mat(1, m->dim);
    if (!hits.empty()) t.map.at(0, hits[0]) = 1;
    t.equivariant = (t.map * m->H - t.target->H * t.map).is_zero();
    return t;
}

inline Intertwiner weight_functional(const WeightModule& m, const Rational& nu) {
    return weight_functional(std::make_shared<const WeightModule>(m), nu);
}

// Multiplicity [V_m (x) V_n : V_k] through the Casimir: the weight-k block of
// V_m (x) V_n is Omega-invariant, and V_k contributes exactly the eigenvalue
// (k+1)^2 - 1 there.  Higher summands V_{k'} (k' > k) meet the block with
// distinct eigenvalues, so the multiplicity is the eigenspace dimension.
inline int tensor_multiplicity(int m, int n, int k) {
    if (m < 0 || n < 0) throw std::invalid_argument("tensor_multiplicity: negative parameter");
    if (k < 0 || k > m + n || (m + n - k) % 2 != 0) return 0;

    using Key = std::pair<int, int>;
    std::vector<Key> basis;
    std::map<Key, int> index;
    const int elltot = (m + n - k) / 2;
    for (int i = 0; i <= m; ++i) {
        int j = elltot - i;
        if (j < 0 || j > n) continue;
        index[{i, j}] = static_cast<int>(basis.size());
        basis.push_back({i, j});
    }
    if (basis.empty()) return 0;

    using Vec = std::map<Key, Rational>;
    auto add = [](Vec& v, Key key, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = v.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) v.erase(it);
        }
    };
    auto apply_h = [&](const Vec& v) {
        Vec r;
        for (const auto& [key, c] : v) add(r, key, c * Rational((m - 2 * key.first) + (n - 2 * key.second)));
        return r;
    };
    auto apply_x = [&](const Vec& v) {
        Vec r;
        for (const auto& [key, c] : v) {
            if (key.first > 0) add(r, {key.first - 1, key.second}, c * Rational(-key.first));
            if (key.second > 0) add(r, {key.first, key.second - 1}, c * Rational(-key.second));
        }
        return r;
    };
    auto apply_y = [&](const Vec& v) {
        Vec r;
        for (const auto& [key, c] : v) {
            if (key.first < m) add(r, {key.first + 1, key.second}, c * Rational(key.first - m));
            if (key.second < n) add(r, {key.first, key.second + 1}, c * Rational(key.second - n));
        }
        return r;
    };

    const int d = static_cast<int>(basis.size());
    const Rational sigma = Rational(k + 1) * Rational(k + 1) - 1;
    Mat block(d, d);
    for (int col = 0; col < d; ++col) {
        Vec e{{basis[col], Rational(1)}};
        Vec omega_e = apply_h(apply_h(e));
        for (const auto& [key, c] : apply_x(apply_y(e))) add(omega_e, key, c * 2);
        for (const auto& [key, c] : apply_y(apply_x(e))) add(omega_e, key, c * 2);
        for (const auto& [key, c] : omega_e) block.at(index.at(key), col) = c;
        block.at(col, col) -= sigma;
    }
    return d - rank(block);
}

// Eigenspace dimension per candidate eigenvalue, full-matrix route.
inline std::map<Rational, int> casimir_eigenvalue_multiplicities(const WeightModule& m,
                                                                 const std::vector<Rational>& candidates) {
    const Mat omega = casimir(m);
    std::map<Rational, int> out;
    for (const Rational& sigma : candidates)
        out[sigma] = m.dim - rank(omega - Mat::identity(m.dim) * sigma);
    return out;
}

}  // namespace sl2fence
