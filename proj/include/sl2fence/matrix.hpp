#pragma once

// Dense exact-rational matrices with the linear algebra the weight-module
// machinery needs: products, Kronecker products, rank and kernel via
// fraction-free (Bareiss) elimination on integer-scaled rows.

#include <sl2fence/rational.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace sl2fence {

class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }
    Mat operator*(const Rational& s) const {
        Mat r = *this;
        for (auto& x : r.a_) x *= s;
        return r;
    }

    // Zero entries are skipped in the inner loop, so products of the sparse
    // generator/Casimir matrices cost close to their nonzero count.
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int k = 0; k < cols_; ++k) {
                const Rational& aik = at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Rational& bkj = o.at(k, j);
                    if (bkj == 0) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        }
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
        std::vector<Rational> r(rows_, Rational(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const Rational& aij = at(i, j);
                if (aij != 0 && v[j] != 0) r[i] += aij * v[j];
            }
        return r;
    }

    std::vector<Rational> column(int c) const {
        std::vector<Rational> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
        return v;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    bool column_is_zero(int c) const {
        for (int i = 0; i < rows_; ++i)
            if (at(i, c) != 0) return false;
        return true;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    static Mat kron(const Mat& a, const Mat& b) {
        Mat r(a.rows() * b.rows(), a.cols() * b.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) {
                if (a.at(i, j) == 0) continue;
                for (int p = 0; p < b.rows(); ++p)
                    for (int q = 0; q < b.cols(); ++q) {
                        if (b.at(p, q) == 0) continue;
                        r.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
                    }
            }
        return r;
    }

private:
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<Rational> a_;
};

namespace detail {

struct Echelon {
    std::vector<std::vector<Integer>> rows;
    std::vector<int> pivot_cols;  // ascending; one per nonzero echelon row
};

// Fraction-free Gaussian elimination (one-step Bareiss).  Rows are first
// scaled to integers; every intermediate entry is a minor of the scaled
// matrix, so the division by the previous pivot is exact.
inline Echelon echelon_form(const Mat& m) {
    const int R = m.rows(), C = m.cols();
    std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C, Integer(0)));
    for (int i = 0; i < R; ++i) {
        Integer l = 1;
        for (int j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < C; ++j) a[i][j] = m.at(i, j).get_num() * (l / m.at(i, j).get_den());
    }
    Echelon e;
    Integer prev = 1;
    int prow = 0;
    for (int col = 0; col < C && prow < R; ++col) {
        int sel = -1;
        for (int i = prow; i < R; ++i)
            if (a[i][col] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(a[sel], a[prow]);
        for (int i = prow + 1; i < R; ++i) {
            for (int j = col + 1; j < C; ++j) {
                // (pivot*0 - a[i][col]*0)/prev == 0, so the all-zero case can skip
                if (a[i][j] == 0 && a[prow][j] == 0) continue;
                Integer t = a[prow][col] * a[i][j] - a[i][col] * a[prow][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[prow][col];
        e.pivot_cols.push_back(col);
        ++prow;
    }
    e.rows = std::move(a);
    return e;
}

}  // namespace detail

inline int rank(const Mat& m) { return static_cast<int>(detail::echelon_form(m).pivot_cols.size()); }

// Exact basis of {v : Mv = 0}; one vector per free column, normalized so the
// first nonzero entry is 1.  Size is always cols - rank.
inline std::vector<std::vector<Rational>> kernel_basis(const Mat& m) {
    const int C = m.cols();
    detail::Echelon e = detail::echelon_form(m);
    std::vector<bool> is_pivot(C, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(C, Rational(0));
        x[f] = 1;
        for (int r = static_cast<int>(e.pivot_cols.size()) - 1; r >= 0; --r) {
            const int pc = e.pivot_cols[r];
            Rational s = 0;
            for (int j = pc + 1; j < C; ++j)
                if (e.rows[r][j] != 0 && x[j] != 0) s += Rational(e.rows[r][j]) * x[j];
            x[pc] = -s / Rational(e.rows[r][pc]);
        }
        for (int j = 0; j < C; ++j)
            if (x[j] != 0) {
                Rational lead = x[j];
                for (int t = j; t < C; ++t) x[t] /= lead;
                break;
            }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace sl2fence
