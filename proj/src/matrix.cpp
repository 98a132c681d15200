#include "mpls/matrix.hpp"

#include <utility>

namespace mpls {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::diag(const std::vector<Q>& d) {
    const int n = static_cast<int>(d.size());
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[i];
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Q>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw DomainError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (c_ != o.r_) throw DomainError("matrix shape mismatch in product");
    QMatrix m(r_, o.c_);
    Q t;
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Q& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.c_; ++j) {
                if (o(k, j) == 0) continue;
                t = x * o(k, j);
                m(i, j) += t;
            }
        }
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw DomainError("matrix shape mismatch in sum");
    QMatrix m(*this);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const { return *this + (-o); }

QMatrix QMatrix::operator-() const {
    QMatrix m(*this);
    for (auto& x : m.a_) x = -x;
    return m;
}

QMatrix QMatrix::scaled(const Q& s) const {
    QMatrix m(*this);
    for (auto& x : m.a_) x *= s;
    return m;
}

bool QMatrix::operator==(const QMatrix& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

QMatrix QMatrix::transpose() const {
    QMatrix m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

QMatrix QMatrix::block(int r0, int c0, int nr, int nc) const {
    QMatrix m(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void QMatrix::set_block(int r0, int c0, const QMatrix& b) {
    for (int i = 0; i < b.r_; ++i)
        for (int j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool QMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool QMatrix::is_symmetric() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = i + 1; j < c_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& m) {
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        Q inv = 1 / m(row, col);
        for (int j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Q f = m(i, col);
            for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

}  // namespace

int QMatrix::rank() const {
    QMatrix m(*this);
    return static_cast<int>(rref(m).size());
}

Q QMatrix::det() const {
    if (r_ != c_) throw DomainError("determinant of a non-square matrix");
    QMatrix m(*this);
    Q d = 1;
    for (int col = 0; col < r_; ++col) {
        int p = -1;
        for (int i = col; i < r_; ++i)
            if (m(i, col) != 0) { p = i; break; }
        if (p < 0) return 0;
        if (p != col) {
            for (int j = 0; j < c_; ++j) std::swap(m(p, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        for (int i = col + 1; i < r_; ++i) {
            if (m(i, col) == 0) continue;
            Q f = m(i, col) / m(col, col);
            for (int j = col; j < c_; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

QMatrix QMatrix::inverse() const {
    if (r_ != c_) throw DomainError("inverse of a non-square matrix");
    const int n = r_;
    QMatrix aug(n, 2 * n);
    aug.set_block(0, 0, *this);
    aug.set_block(0, n, identity(n));
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw DomainError("singular matrix");
    return aug.block(0, n, n, n);
}

QMatrix QMatrix::left_kernel() const {
    QMatrix t = transpose();
    auto piv = rref(t);
    const int n = t.cols();
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    QMatrix k(static_cast<int>(free_cols.size()), n);
    for (size_t f = 0; f < free_cols.size(); ++f) {
        const int fc = free_cols[f];
        k(static_cast<int>(f), fc) = 1;
        for (size_t r = 0; r < piv.size(); ++r) k(static_cast<int>(f), piv[r]) = -t(static_cast<int>(r), fc);
    }
    return k;
}

QMatrix blocks(const QMatrix& a, const QMatrix& b, const QMatrix& c, const QMatrix& d) {
    const int n = a.rows();
    QMatrix m(2 * n, 2 * n);
    m.set_block(0, 0, a);
    m.set_block(0, n, b);
    m.set_block(n, 0, c);
    m.set_block(n, n, d);
    return m;
}

}  // namespace mpls
