#pragma once

// Dense integer matrices with exact characteristic polynomial
// (Faddeev-LeVerrier; the trace divisions are exact over Z), Bareiss
// determinant, and fraction-free rank.

#include <stdexcept>
#include <vector>

#include "cremona/numbers.hpp"
#include "cremona/quadext.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
        check_same(x, y);
        IntMatrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }

    friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
        check_same(x, y);
        IntMatrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
        IntMatrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const Int& v = x(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += v * y(k, j);
            }
        return r;
    }

    friend IntMatrix operator*(const IntMatrix& x, const Int& s) {
        IntMatrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] * s;
        return r;
    }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    IntMatrix pow(unsigned long e) const {
        if (rows_ != cols_) throw std::invalid_argument("IntMatrix::pow: square only");
        IntMatrix acc = identity(rows_), b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: size mismatch");
        std::vector<Int> r(rows_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    std::vector<QuadExt> apply(const std::vector<QuadExt>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: size mismatch");
        std::vector<QuadExt> r(rows_, QuadExt(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) r[i] += Rat((*this)(i, j)) * v[j];
        return r;
    }

    Int trace() const {
        if (rows_ != cols_) throw std::invalid_argument("IntMatrix::trace: square only");
        Int t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    // Bareiss fraction-free elimination; exact integer determinant.
    Int det() const {
        if (rows_ != cols_) throw std::invalid_argument("IntMatrix::det: square only");
        std::size_t n = rows_;
        if (n == 0) return 1;
        std::vector<Int> m(a_);
        auto at = [&](std::size_t i, std::size_t j) -> Int& { return m[i * n + j]; };
        Int prev(1);
        int sign_flips = 0;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (at(k, k) == 0) {
                std::size_t piv = k + 1;
                while (piv < n && at(piv, k) == 0) ++piv;
                if (piv == n) return 0;
                for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
                ++sign_flips;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            prev = at(k, k);
        }
        Int d = at(n - 1, n - 1);
        return sign_flips % 2 == 0 ? d : Int(-d);
    }

    // Rank by fraction-free elimination over Q.
    std::size_t rank() const {
        std::vector<Rat> m(a_.size());
        for (std::size_t i = 0; i < a_.size(); ++i) m[i] = Rat(a_[i]);
        auto at = [&](std::size_t i, std::size_t j) -> Rat& { return m[i * cols_ + j]; };
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && at(piv, c) == 0) ++piv;
            if (piv == rows_) continue;
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(piv, j));
            for (std::size_t i = r + 1; i < rows_; ++i) {
                if (at(i, c) == 0) continue;
                Rat f = at(i, c) / at(r, c);
                for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
            }
            ++r;
        }
        return r;
    }

private:
    static void check_same(const IntMatrix& x, const IntMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("IntMatrix: dimension mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

// Monic characteristic polynomial det(xI - A) with exact integer
// coefficients (Faddeev-LeVerrier recurrence).
inline UniPoly<Int> charpoly(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("charpoly: square only");
    std::size_t n = a.rows();
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    if (n == 0) return UniPoly<Int>(std::move(c));
    IntMatrix m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            IntMatrix shifted = m;
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
            m = a * shifted;
        }
        Int t = m.trace();
        if (t % static_cast<long>(k) != 0)
            throw std::logic_error("charpoly: non-exact trace division");
        c[n - k] = -t / static_cast<long>(k);
    }
    return UniPoly<Int>(std::move(c));
}

// p(A) by Horner; used for Cayley-Hamilton checks.
inline IntMatrix eval_poly_at(const UniPoly<Int>& p, const IntMatrix& a) {
    std::size_t n = a.rows();
    IntMatrix acc(n, n);
    for (long i = p.degree(); i >= 0; --i) {
        acc = acc * a;
        const Int& coef = p[static_cast<std::size_t>(i)];
        for (std::size_t d = 0; d < n; ++d) acc(d, d) += coef;
    }
    return acc;
}

inline IntMatrix companion_matrix(const UniPoly<Int>& p) {
    if (p.degree() < 1 || p.leading() != 1)
        throw std::invalid_argument("companion_matrix: monic nonconstant input required");
    std::size_t n = static_cast<std::size_t>(p.degree());
    IntMatrix m(n, n);
    for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -p[i];
    return m;
}

}  // namespace cremona
