#pragma once

#include <cstdint>
#include <vector>

#include "supergrass/rational.hpp"

namespace sgr {

/// Sparse row: sorted (column, coefficient) pairs, coefficient != 0.
using SparseRow = std::vector<std::pair<int, Rat>>;

/// Exact rank by fraction-free elimination over Z (denominators cleared per
/// row, rows reduced by content gcd), pivoting on sparsity.
long exact_rank(std::vector<SparseRow> rows);

/// Rank over F_p; sanity cross-check for exact_rank.
long modular_rank(const std::vector<SparseRow>& rows, std::uint64_t p);

/// Dense exact rational matrix.
class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, Rat(0)) {}
    static QMat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rat& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    QMat operator*(const QMat& o) const;
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    bool operator==(const QMat& o) const = default;

    bool is_zero() const;
    QMat transpose() const;
    long rank() const;
    long nullity() const { return c_ - rank(); }
    QMat pow(int k) const;

    /// Basis of the kernel, as columns of a cols x nullity matrix.
    QMat kernel_basis() const;
    /// Basis of the column space, as columns.
    QMat column_space_basis() const;
    /// Inverse; throws if singular.
    QMat inverse() const;
    /// Solve A x = b column-wise; throws if inconsistent or underdetermined
    /// columns are required (A must have full column rank).
    QMat solve(const QMat& b) const;

    /// Characteristic polynomial, ascending coefficients (degree = rows).
    std::vector<Rat> charpoly() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref_in_place(QMat& m);

} // namespace sgr
