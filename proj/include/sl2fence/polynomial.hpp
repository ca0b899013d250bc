#pragma once

// Formal polynomials in one and two variables over exact rationals.  These
// carry the F(z), G(w) operands of the bidifferential operators; no stored
// zero coefficients, so equality is plain map equality.

#include <sl2fence/rational.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace sl2fence {

class UniPoly {
public:
    UniPoly() = default;

    static UniPoly monomial(int deg, Rational c = Rational(1)) {
        UniPoly p;
        p.set(deg, std::move(c));
        return p;
    }

    void set(int deg, Rational c) {
        if (deg < 0) throw std::invalid_argument("negative degree");
        if (c == 0)
            coef_.erase(deg);
        else
            coef_[deg] = std::move(c);
    }

    Rational coefficient(int deg) const {
        auto it = coef_.find(deg);
        return it == coef_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return coef_.empty(); }
    int degree() const { return coef_.empty() ? -1 : coef_.rbegin()->first; }
    const std::map<int, Rational>& terms() const { return coef_; }

    UniPoly operator+(const UniPoly& o) const {
        UniPoly r = *this;
        for (const auto& [d, c] : o.coef_) r.set(d, r.coefficient(d) + c);
        return r;
    }
    UniPoly operator-(const UniPoly& o) const {
        UniPoly r = *this;
        for (const auto& [d, c] : o.coef_) r.set(d, r.coefficient(d) - c);
        return r;
    }
    UniPoly operator*(const UniPoly& o) const {
        UniPoly r;
        for (const auto& [d1, c1] : coef_)
            for (const auto& [d2, c2] : o.coef_) r.set(d1 + d2, r.coefficient(d1 + d2) + c1 * c2);
        return r;
    }
    UniPoly operator*(const Rational& s) const {
        UniPoly r;
        if (s == 0) return r;
        for (const auto& [d, c] : coef_) r.coef_[d] = c * s;
        return r;
    }

    UniPoly derivative() const {
        UniPoly r;
        for (const auto& [d, c] : coef_)
            if (d > 0) r.set(d - 1, c * d);
        return r;
    }

    bool operator==(const UniPoly& o) const { return coef_ == o.coef_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

private:
    std::map<int, Rational> coef_;
};

enum class Var { z, w };

class BivarPoly {
public:
    BivarPoly() = default;

    static BivarPoly monomial(int dz, int dw, Rational c = Rational(1)) {
        BivarPoly p;
        p.set(dz, dw, std::move(c));
        return p;
    }

    static BivarPoly from_z(const UniPoly& f) {
        BivarPoly p;
        for (const auto& [d, c] : f.terms()) p.set(d, 0, c);
        return p;
    }

    static BivarPoly from_w(const UniPoly& g) {
        BivarPoly p;
        for (const auto& [d, c] : g.terms()) p.set(0, d, c);
        return p;
    }

    void set(int dz, int dw, Rational c) {
        if (dz < 0 || dw < 0) throw std::invalid_argument("negative degree");
        auto key = std::make_pair(dz, dw);
        if (c == 0)
            coef_.erase(key);
        else
            coef_[key] = std::move(c);
    }

    Rational coefficient(int dz, int dw) const {
        auto it = coef_.find({dz, dw});
        return it == coef_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return coef_.empty(); }
    const std::map<std::pair<int, int>, Rational>& terms() const { return coef_; }

    BivarPoly operator+(const BivarPoly& o) const {
        BivarPoly r = *this;
        for (const auto& [k, c] : o.coef_) r.set(k.first, k.second, r.coefficient(k.first, k.second) + c);
        return r;
    }
    BivarPoly operator-(const BivarPoly& o) const {
        BivarPoly r = *this;
        for (const auto& [k, c] : o.coef_) r.set(k.first, k.second, r.coefficient(k.first, k.second) - c);
        return r;
    }
    BivarPoly operator*(const BivarPoly& o) const {
        BivarPoly r;
        for (const auto& [k1, c1] : coef_)
            for (const auto& [k2, c2] : o.coef_) {
                int dz = k1.first + k2.first, dw = k1.second + k2.second;
                r.set(dz, dw, r.coefficient(dz, dw) + c1 * c2);
            }
        return r;
    }
    BivarPoly operator*(const Rational& s) const {
        BivarPoly r;
        if (s == 0) return r;
        for (const auto& [k, c] : coef_) r.coef_[k] = c * s;
        return r;
    }

    bool operator==(const BivarPoly& o) const { return coef_ == o.coef_; }
    bool operator!=(const BivarPoly& o) const { return !(*this == o); }

private:
    std::map<std::pair<int, int>, Rational> coef_;
};

inline BivarPoly partial_derivative(const BivarPoly& p, Var v) {
    BivarPoly r;
    for (const auto& [k, c] : p.terms()) {
        if (v == Var::z) {
            if (k.first > 0) r.set(k.first - 1, k.second, c * k.first);
        } else {
            if (k.second > 0) r.set(k.first, k.second - 1, c * k.second);
        }
    }
    return r;
}

// Substitutes w := z.
inline UniPoly restrict_diagonal(const BivarPoly& p) {
    UniPoly r;
    for (const auto& [k, c] : p.terms()) {
        int d = k.first + k.second;
        r.set(d, r.coefficient(d) + c);
    }
    return r;
}

}  // namespace sl2fence
