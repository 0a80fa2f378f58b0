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

#ifndef LOGCONN_BUNDLE_HPP
#define LOGCONN_BUNDLE_HPP

#include <logconn/errors.hpp>
#include <logconn/matrix.hpp>
#include <logconn/poly.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace logconn {

/// The splitting type of a vector bundle on the projective line: a
/// non-increasing list of line-bundle degrees a_1 >= ... >= a_r. The
/// descending order fixes the splitting basis once and for all; every matrix
/// in the library (residues, endomorphisms, connection forms) is written in
/// that basis.
class SplittingType {
public:
    explicit SplittingType(std::vector<int> degrees) : a_(std::move(degrees)) {
        if (a_.empty()) throw dimension_mismatch_error("splitting type must have rank >= 1");
        std::stable_sort(a_.begin(), a_.end(), std::greater<int>());
    }

    int rank() const { return static_cast<int>(a_.size()); }
    const std::vector<int>& degrees() const { return a_; }

    int degree() const { return std::accumulate(a_.begin(), a_.end(), 0); }

    friend bool operator==(const SplittingType& x, const SplittingType& y) { return x.a_ == y.a_; }
    friend bool operator!=(const SplittingType& x, const SplittingType& y) { return !(x == y); }

private:
    std::vector<int> a_;
};

/// diag(z^{a_1}, ..., z^{a_r}) on the chart overlap. Sections over the
/// standard chart are column vectors of polynomials, the i-th entry of
/// degree at most a_i.
struct TransitionMatrix {
    std::vector<int> exponents;

    std::string to_string() const {
        std::string s = "diag(";
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (i > 0) s += ", ";
            if (exponents[i] == 0)
                s += "1";
            else if (exponents[i] == 1)
                s += "z";
            else
                s += "z^" + std::to_string(exponents[i]);
        }
        return s + ")";
    }
};

inline TransitionMatrix transition(const SplittingType& st) { return TransitionMatrix{st.degrees()}; }

/// The finite singular set, as distinct affine coordinates. The point at
/// infinity is excluded by construction; move it away with a Moebius change
/// of coordinate before building an instance.
class MarkedPoints {
public:
    MarkedPoints() = default;

    explicit MarkedPoints(std::vector<Scalar> points) : pts_(std::move(points)) {
        for (std::size_t i = 0; i < pts_.size(); ++i)
            for (std::size_t j = i + 1; j < pts_.size(); ++j)
                if (pts_[i] == pts_[j])
                    throw duplicate_point_error("duplicate marked point " + scalar_to_string(pts_[i]));
    }

    const std::vector<Scalar>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }

    bool contains(const Scalar& x) const {
        for (const Scalar& p : pts_)
            if (p == x) return true;
        return false;
    }

private:
    std::vector<Scalar> pts_;
};

/// The prescription: one residue endomorphism per marked point, as an r x r
/// matrix in the splitting basis.
class ResidueData {
public:
    ResidueData() = default;

    void set(const Scalar& point, Mat<Scalar> a) { m_[point] = std::move(a); }

    bool contains(const Scalar& point) const { return m_.find(point) != m_.end(); }

    const Mat<Scalar>& at(const Scalar& point) const {
        auto it = m_.find(point);
        if (it == m_.end())
            throw dimension_mismatch_error("no residue prescribed at point " + scalar_to_string(point));
        return it->second;
    }

    std::size_t size() const { return m_.size(); }

    const std::map<Scalar, Mat<Scalar>, ScalarLess>& entries() const { return m_; }

private:
    std::map<Scalar, Mat<Scalar>, ScalarLess> m_;
};

/// A validated problem instance: bundle, singular set, prescribed residues.
struct Instance {
    SplittingType splitting;
    MarkedPoints points;
    ResidueData residues;
};

/// Checks dimensions and the point/residue association; normalizes an
/// arbitrary degree order to the canonical descending one, conjugating every
/// residue matrix by the same permutation so the instance keeps its meaning.
inline Instance validate_instance(const std::vector<int>& degrees, const MarkedPoints& points,
                                  const ResidueData& residues) {
    if (degrees.empty()) throw dimension_mismatch_error("splitting type must have rank >= 1");
    const int r = static_cast<int>(degrees.size());

    std::vector<int> perm(degrees.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int i, int j) { return degrees[static_cast<std::size_t>(i)] > degrees[static_cast<std::size_t>(j)]; });
    const bool sorted = std::is_sorted(perm.begin(), perm.end());

    if (residues.size() != points.size())
        throw dimension_mismatch_error("expected " + std::to_string(points.size()) +
                                       " residue matrices, got " + std::to_string(residues.size()));
    ResidueData normalized;
    for (const Scalar& x : points.points()) {
        if (!residues.contains(x))
            throw dimension_mismatch_error("no residue prescribed at point " + scalar_to_string(x));
        const Mat<Scalar>& a = residues.at(x);
        if (a.rows() != r || a.cols() != r)
            throw dimension_mismatch_error("residue at " + scalar_to_string(x) + " is " +
                                           std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                           ", expected " + std::to_string(r) + "x" + std::to_string(r));
        if (sorted) {
            normalized.set(x, a);
        } else {
            Mat<Scalar> b(r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    b(i, j) = a(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
            normalized.set(x, std::move(b));
        }
    }
    return Instance{SplittingType(degrees), points, std::move(normalized)};
}

inline Instance validate_instance(const SplittingType& st, const MarkedPoints& points,
                                  const ResidueData& residues) {
    return validate_instance(st.degrees(), points, residues);
}

} // namespace logconn

#endif
