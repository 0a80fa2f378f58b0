/*
   Copyright 2026 the logconn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LOGCONN_MATRIX_HPP
#define LOGCONN_MATRIX_HPP

#include <logconn/scalar.hpp>

#include <algorithm>
#include <utility>
#include <vector>

namespace logconn {

/// Dense matrix over any exact coefficient type (Scalar, Poly, OneForm).
/// Indices are 0-based in code; reports render them 1-based.
template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return d_[idx(i, j)]; }
    const T& operator()(int i, int j) const { return d_[idx(i, j)]; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < r.d_.size(); ++i) r.d_[i] = a.d_[i] + b.d_[i];
        return r;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < r.d_.size(); ++i) r.d_[i] = a.d_[i] - b.d_[i];
        return r;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k)
                for (int j = 0; j < b.cols_; ++j)
                    r(i, j) = r(i, j) + a(i, k) * b(k, j);
        return r;
    }

    friend Mat operator*(const Scalar& s, const Mat& m) {
        Mat r = m;
        for (auto& x : r.d_) x = s * x;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        T acc{};
        for (int i = 0; i < rows_; ++i) acc = acc + (*this)(i, i);
        return acc;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> d_;
};

inline Mat<Scalar> scalar_identity(int n) {
    Mat<Scalar> m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

template <typename T>
Mat<T> commutator(const Mat<T>& a, const Mat<T>& b) {
    return a * b - b * a;
}

/// Outcome of an exact linear solve A x = b.
struct LinearSolution {
    bool feasible = false;
    std::vector<Scalar> particular;              // free variables set to 0
    std::vector<std::vector<Scalar>> nullspace;  // basis of the homogeneous solutions
};

/// Gauss-Jordan elimination with first-nonzero pivoting. Everything is exact;
/// no tolerance appears anywhere.
inline LinearSolution solve_linear_system(const Mat<Scalar>& a, const std::vector<Scalar>& b) {
    const int rows = a.rows();
    const int cols = a.cols();
    Mat<Scalar> m(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m(i, j) = a(i, j);
        m(i, cols) = b[static_cast<std::size_t>(i)];
    }

    std::vector<int> pivot_row_of_col(static_cast<std::size_t>(cols), -1);
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int r = row; r < rows; ++r) {
            if (m(r, col) != 0) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j <= cols; ++j) std::swap(m(row, j), m(pr, j));
        const Scalar inv = Scalar(1) / m(row, col);
        for (int j = col; j <= cols; ++j) m(row, j) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Scalar f = m(r, col);
            for (int j = col; j <= cols; ++j) m(r, j) -= f * m(row, j);
        }
        pivot_row_of_col[static_cast<std::size_t>(col)] = row;
        ++row;
    }

    LinearSolution sol;
    for (int r = row; r < rows; ++r)
        if (m(r, cols) != 0) return sol;  // inconsistent
    sol.feasible = true;
    sol.particular.assign(static_cast<std::size_t>(cols), Scalar(0));
    for (int c = 0; c < cols; ++c) {
        const int pr = pivot_row_of_col[static_cast<std::size_t>(c)];
        if (pr >= 0) sol.particular[static_cast<std::size_t>(c)] = m(pr, cols);
    }
    for (int f = 0; f < cols; ++f) {
        if (pivot_row_of_col[static_cast<std::size_t>(f)] >= 0) continue;
        std::vector<Scalar> v(static_cast<std::size_t>(cols), Scalar(0));
        v[static_cast<std::size_t>(f)] = 1;
        for (int c = 0; c < cols; ++c) {
            const int pr = pivot_row_of_col[static_cast<std::size_t>(c)];
            if (pr >= 0) v[static_cast<std::size_t>(c)] = -m(pr, f);
        }
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

/// Indices of a maximal linearly independent subset, scanned in order.
inline std::vector<int> independent_subset(const std::vector<std::vector<Scalar>>& vecs) {
    struct PivotRow {
        std::size_t pivot;
        std::vector<Scalar> row;
    };
    std::vector<PivotRow> rows;
    std::vector<int> kept;
    for (std::size_t k = 0; k < vecs.size(); ++k) {
        std::vector<Scalar> v = vecs[k];
        for (const PivotRow& pr : rows) {
            const Scalar f = v[pr.pivot];
            if (f == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * pr.row[j];
        }
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        if (p == v.size()) continue;
        const Scalar inv = Scalar(1) / v[p];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] *= inv;
        rows.push_back(PivotRow{p, std::move(v)});
        kept.push_back(static_cast<int>(k));
    }
    return kept;
}

/// Reduced row echelon form of the span (zero rows dropped); two vector sets
/// span the same subspace iff this agrees.
inline std::vector<std::vector<Scalar>> row_space_rref(const std::vector<std::vector<Scalar>>& vecs) {
    std::vector<std::vector<Scalar>> rows;
    for (const auto& src : vecs) {
        std::vector<Scalar> v = src;
        for (const auto& r : rows) {
            std::size_t p = 0;
            while (r[p] == 0) ++p;
            const Scalar f = v[p];
            if (f == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * r[j];
        }
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        if (p == v.size()) continue;
        const Scalar inv = Scalar(1) / v[p];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] *= inv;
        rows.push_back(std::move(v));
    }
    // back-substitute and sort by pivot for a canonical answer
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t p = 0;
        while (rows[i][p] == 0) ++p;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == i || rows[k][p] == 0) continue;
            const Scalar f = rows[k][p];
            for (std::size_t j = 0; j < rows[k].size(); ++j) rows[k][j] -= f * rows[i][j];
        }
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        std::size_t pa = 0, pb = 0;
        while (pa < a.size() && a[pa] == 0) ++pa;
        while (pb < b.size() && b[pb] == 0) ++pb;
        return pa < pb;
    });
    return rows;
}

} // namespace logconn

#endif
