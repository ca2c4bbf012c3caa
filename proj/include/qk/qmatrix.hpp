#pragma once

#include <cassert>
#include <vector>

#include "qk/rational.hpp"

namespace qk {

// Dense matrix over Rat. Sizes here are tiny (worked examples from small
// algebras), so row reduction with explicit pivot search is plenty.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int r, int c) : rows_(r), cols_(c), a_(size_t(r) * c) {}

    static QMat identity(int n) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend QMat operator*(const QMat& x, const QMat& y) {
        assert(x.cols_ == y.rows_);
        QMat z(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j)
                    z.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return z;
    }
    friend QMat operator+(const QMat& x, const QMat& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        QMat z = x;
        for (size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
        return z;
    }
    friend QMat operator-(const QMat& x, const QMat& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        QMat z = x;
        for (size_t i = 0; i < z.a_.size(); ++i) z.a_[i] -= y.a_[i];
        return z;
    }
    QMat operator*(const Rat& c) const {
        QMat z = *this;
        for (auto& x : z.a_) x *= c;
        return z;
    }
    friend bool operator==(const QMat& x, const QMat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    QMat transposed() const {
        QMat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if (!at(i, c).is_zero()) { p = i; break; }
            if (p < 0) continue;
            swap_rows(p, r);
            Rat inv = Rat(1) / at(r, c);
            for (int j = c; j < cols_; ++j) at(r, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                Rat f = at(i, c);
                for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        QMat t = *this;
        return int(t.rref().size());
    }

    // Basis of the right kernel {x : A x = 0}, one column vector per row of
    // the returned matrix (rows = kernel dim, cols = this->cols()).
    QMat kernel() const {
        QMat t = *this;
        std::vector<int> piv = t.rref();
        std::vector<bool> is_piv(cols_, false);
        for (int c : piv) is_piv[c] = true;
        QMat k(cols_ - int(piv.size()), cols_);
        int kr = 0;
        for (int c = 0; c < cols_; ++c) {
            if (is_piv[c]) continue;
            k.at(kr, c) = Rat(1);
            for (size_t pr = 0; pr < piv.size(); ++pr) k.at(kr, piv[pr]) = -t.at(int(pr), c);
            ++kr;
        }
        return k;
    }

    // Solve A x = b; returns false if inconsistent.
    bool solve(const std::vector<Rat>& b, std::vector<Rat>& x) const {
        assert(int(b.size()) == rows_);
        QMat aug(rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        std::vector<int> piv = aug.rref();
        for (int c : piv)
            if (c == cols_) return false;
        x.assign(cols_, Rat(0));
        for (size_t pr = 0; pr < piv.size(); ++pr) x[piv[pr]] = aug.at(int(pr), cols_);
        return true;
    }

    // Inverse; throws on singular input.
    QMat inverse() const {
        assert(rows_ == cols_);
        QMat aug(rows_, 2 * cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = Rat(1);
        }
        std::vector<int> piv = aug.rref();
        if (int(piv.size()) != rows_ || piv.back() >= cols_ || int(piv.size()) != cols_)
            throw std::domain_error("QMat: singular matrix");
        QMat inv(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
        return inv;
    }

private:
    int rows_, cols_;
    std::vector<Rat> a_;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
};

} // namespace qk
