#pragma once

#include <vector>

#include "kato/series.hpp"

namespace kato {

// Minimal dense exact linear algebra over a field K: enough for the small
// systems this project solves (intersection matrices, per-degree conjugacy
// systems, the 5x5 appendix determinant).
template <Field K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), v_(size_t(rows) * cols, K::zero()) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    K& at(int r, int c) { return v_[size_t(r) * cols_ + c]; }
    const K& at(int r, int c) const { return v_[size_t(r) * cols_ + c]; }

private:
    int rows_, cols_;
    std::vector<K> v_;
};

template <Field K>
K determinant(Matrix<K> m) {
    if (m.rows() != m.cols()) throw MathError("determinant of a non-square matrix");
    int n = m.rows();
    K det = K::one();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).isZero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return K::zero();
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            det = -det;
        }
        det = det * m.at(col, col);
        K inv = m.at(col, col).inverse();
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col).isZero()) continue;
            K f = m.at(r, col) * inv;
            for (int c = col; c < n; ++c) m.at(r, c) = m.at(r, c) - f * m.at(col, c);
        }
    }
    return det;
}

template <Field K>
struct LinearSolve {
    bool consistent = false;
    std::vector<K> particular;               // free variables set to zero
    std::vector<std::vector<K>> kernelBasis; // basis of the homogeneous solutions
    int kernelDim = 0;
    int inconsistentRow = -1;                // a row index witnessing inconsistency
};

// Row-reduces [A | b] and reads off one particular solution plus the kernel.
template <Field K>
LinearSolve<K> solve_linear(Matrix<K> a, std::vector<K> b) {
    const int rows = a.rows();
    const int cols = a.cols();
    if (int(b.size()) != rows) throw MathError("solve_linear: dimension mismatch");

    std::vector<int> pivotCol(rows, -1);
    std::vector<int> rowOrigin(rows);
    for (int r = 0; r < rows; ++r) rowOrigin[r] = r;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!a.at(r, col).isZero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = 0; c < cols; ++c) std::swap(a.at(pivot, c), a.at(rank, c));
            std::swap(b[pivot], b[rank]);
            std::swap(rowOrigin[pivot], rowOrigin[rank]);
        }
        K inv = a.at(rank, col).inverse();
        for (int c = col; c < cols; ++c) a.at(rank, c) = a.at(rank, c) * inv;
        b[rank] = b[rank] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a.at(r, col).isZero()) continue;
            K f = a.at(r, col);
            for (int c = col; c < cols; ++c) a.at(r, c) = a.at(r, c) - f * a.at(rank, c);
            b[r] = b[r] - f * b[rank];
        }
        pivotCol[rank] = col;
        ++rank;
    }

    LinearSolve<K> out;
    for (int r = rank; r < rows; ++r)
        if (!b[r].isZero()) {
            out.consistent = false;
            out.inconsistentRow = rowOrigin[r];
            return out;
        }
    out.consistent = true;
    out.particular.assign(cols, K::zero());
    std::vector<bool> isPivot(cols, false);
    for (int r = 0; r < rank; ++r) {
        out.particular[pivotCol[r]] = b[r];
        isPivot[pivotCol[r]] = true;
    }
    for (int col = 0; col < cols; ++col) {
        if (isPivot[col]) continue;
        std::vector<K> v(cols, K::zero());
        v[col] = K::one();
        for (int r = 0; r < rank; ++r) v[pivotCol[r]] = -a.at(r, col);
        out.kernelBasis.push_back(std::move(v));
    }
    out.kernelDim = int(out.kernelBasis.size());
    return out;
}

}  // namespace kato
