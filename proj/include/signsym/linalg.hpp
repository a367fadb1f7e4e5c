#ifndef SIGNSYM_LINALG_HPP
#define SIGNSYM_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "signsym/rational.hpp"

namespace signsym {

// Integer coordinate vector (roots are stored globally scaled so that all
// entries are integers; the scale factor lives in the owning root system).
using IntVec = std::vector<long long>;

inline IntVec operator+(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline IntVec operator-(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline IntVec operator-(const IntVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}
inline long long dot(const IntVec& a, const IntVec& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
inline bool is_zero(const IntVec& a) {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

// Dense matrix of exact rationals, row-major.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c) {}

    static QMatrix identity(size_t n) {
        QMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend QMatrix operator*(const QMatrix& x, const QMatrix& y) {
        QMatrix r(x.rows_, y.cols_);
        for (size_t i = 0; i < x.rows_; ++i)
            for (size_t k = 0; k < x.cols_; ++k) {
                const Rational& xv = x(i, k);
                if (xv.is_zero()) continue;
                for (size_t j = 0; j < y.cols_; ++j) {
                    const Rational& yv = y(k, j);
                    if (!yv.is_zero()) r(i, j) += xv * yv;
                }
            }
        return r;
    }

    friend bool operator==(const QMatrix& x, const QMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const QMatrix& x, const QMatrix& y) { return !(x == y); }

    QMatrix transpose() const {
        QMatrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // Matrix applied to an integer vector; throws if the image is not integral.
    IntVec apply_int(const IntVec& v) const {
        IntVec out(rows_);
        for (size_t i = 0; i < rows_; ++i) {
            Rational s;
            for (size_t j = 0; j < cols_; ++j) {
                if (!(*this)(i, j).is_zero()) s += (*this)(i, j) * Rational(v[j]);
            }
            out[i] = s.as_integer();
        }
        return out;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        std::vector<Rational> out(rows_);
        for (size_t i = 0; i < rows_; ++i) {
            Rational s;
            for (size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
            out[i] = s;
        }
        return out;
    }

    std::string key() const {
        std::string s;
        s.reserve(a_.size() * 3);
        for (const auto& x : a_) { s += x.str(); s += ','; }
        return s;
    }

private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Reduced row echelon form in place; returns the rank.
inline size_t rref(QMatrix& m) {
    size_t rank = 0;
    for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        size_t piv = rank;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != rank)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
        Rational inv = Rational(1) / m(rank, col);
        for (size_t j = 0; j < m.cols(); ++j) m(rank, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, col).is_zero()) continue;
            Rational f = m(i, col);
            for (size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Basis of the (right) null space of m, as primitive integer vectors.
inline std::vector<IntVec> kernel_basis(QMatrix m) {
    size_t n = m.cols();
    size_t rank = rref(m);
    // after rref, the pivot of row r is its leading (first nonzero) column
    std::vector<long long> pivot_of_col(n, -1);
    for (size_t r = 0; r < rank; ++r) {
        for (size_t col = 0; col < n; ++col) {
            if (!m(r, col).is_zero()) {
                pivot_of_col[col] = static_cast<long long>(r);
                break;
            }
        }
    }
    std::vector<IntVec> basis;
    for (size_t freec = 0; freec < n; ++freec) {
        if (pivot_of_col[freec] >= 0) continue;
        std::vector<Rational> v(n);
        v[freec] = 1;
        for (size_t col = 0; col < n; ++col) {
            long long pr = pivot_of_col[col];
            if (pr >= 0) v[col] = -m(static_cast<size_t>(pr), freec);
        }
        // clear denominators, divide by content
        long long lcm = 1;
        for (auto& x : v) lcm = std::lcm(lcm, x.den());
        IntVec iv(n);
        for (size_t i = 0; i < n; ++i) iv[i] = (v[i] * Rational(lcm)).as_integer();
        long long g = 0;
        for (auto x : iv) g = std::gcd(g, std::abs(x));
        if (g > 1) for (auto& x : iv) x /= g;
        basis.push_back(iv);
    }
    return basis;
}

inline Rational determinant(QMatrix m) {
    if (m.rows() != m.cols()) throw std::logic_error("determinant: not square");
    Rational det = 1;
    size_t n = m.rows();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m(piv, col).is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        Rational inv = Rational(1) / m(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            Rational f = m(i, col) * inv;
            for (size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

// Characteristic polynomial coefficients c_0..c_n of det(xI - m),
// via the Faddeev-LeVerrier recursion (exact over the rationals;
// integral for integer matrices).
inline std::vector<Rational> char_poly(const QMatrix& m) {
    size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    QMatrix mk = QMatrix::identity(n);
    for (size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Rational tr;
        for (size_t i = 0; i < n; ++i) tr += mk(i, i);
        Rational ck = -tr / Rational(static_cast<long long>(k));
        c[n - k] = ck;
        for (size_t i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return c;
}

} // namespace signsym

#endif
