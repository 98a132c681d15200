#pragma once

#include "mpls/rational.hpp"

#include <vector>

namespace mpls {

// Dense exact rational matrix, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static QMatrix identity(int n);
    static QMatrix diag(const std::vector<Q>& d);
    static QMatrix from_rows(const std::vector<std::vector<Q>>& rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Q& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Q& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator-() const;
    QMatrix scaled(const Q& s) const;
    bool operator==(const QMatrix& o) const;
    bool operator!=(const QMatrix& o) const { return !(*this == o); }

    QMatrix transpose() const;
    QMatrix block(int r0, int c0, int nr, int nc) const;
    void set_block(int r0, int c0, const QMatrix& b);

    bool is_zero() const;
    bool is_symmetric() const;
    int rank() const;
    Q det() const;
    // Throws DomainError when singular.
    QMatrix inverse() const;
    // Basis of the left kernel {x : x * M = 0}, one vector per row.
    QMatrix left_kernel() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Q> a_;
};

// Block matrix [[a, b], [c, d]] with square n x n blocks.
QMatrix blocks(const QMatrix& a, const QMatrix& b, const QMatrix& c, const QMatrix& d);

}  // namespace mpls
