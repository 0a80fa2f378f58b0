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

#ifndef LOGCONN_ENDALG_HPP
#define LOGCONN_ENDALG_HPP

#include <logconn/bundle.hpp>

#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace logconn {

/// Endomorphism of a single fiber: an r x r rational matrix in the splitting
/// basis.
using FiberEndo = Mat<Scalar>;

/// A global holomorphic endomorphism of E = O(a_1) + ... + O(a_r), written on
/// the standard chart. Entry (i,j) maps summand j into summand i and is a
/// polynomial of degree at most a_i - a_j; it is the zero polynomial when
/// a_i < a_j, which is exactly the condition for the entry to extend over the
/// opposite chart after conjugating by the transition matrix.
struct EndoSection {
    Mat<Poly> entries;
    std::string label;  // stable identifier for basis elements, empty otherwise
};

namespace detail {

inline std::string basis_label(int i, int j, int power) {
    std::string s = "E" + std::to_string(i + 1) + std::to_string(j + 1);
    if (power == 1) s += "*z";
    if (power > 1) s += "*z^" + std::to_string(power);
    return s;
}

inline std::vector<EndoSection> compute_global_end_basis(const SplittingType& st) {
    const auto& a = st.degrees();
    const int r = st.rank();
    std::vector<EndoSection> basis;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            const int bound = a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(j)];
            for (int t = 0; t <= bound; ++t) {
                EndoSection sec{Mat<Poly>(r, r), basis_label(i, j, t)};
                sec.entries(i, j) = Poly::monomial(t);
                basis.push_back(std::move(sec));
            }
        }
    }
    return basis;
}

} // namespace detail

/// Basis of the global endomorphism algebra, in a fixed deterministic order
/// (row, column, ascending power). Memoized per splitting type; the cache is
/// mutex-guarded so concurrent instances can share it.
inline std::vector<EndoSection> global_end_basis(const SplittingType& st) {
    static std::mutex mu;
    static std::map<std::vector<int>, std::vector<EndoSection>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(st.degrees());
    if (it == cache.end()) it = cache.emplace(st.degrees(), detail::compute_global_end_basis(st)).first;
    return it->second;
}

inline FiberEndo evaluate_section(const EndoSection& sec, const Scalar& x) {
    const int r = sec.entries.rows();
    FiberEndo m(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m(i, j) = sec.entries(i, j)(x);
    return m;
}

/// True when the polynomial matrix is a valid global endomorphism for st:
/// zero where a_i < a_j and within the degree bound elsewhere.
inline bool is_global_section(const SplittingType& st, const Mat<Poly>& m) {
    const auto& a = st.degrees();
    const int r = st.rank();
    if (m.rows() != r || m.cols() != r) return false;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const Poly& p = m(i, j);
            if (p.is_zero()) continue;
            if (p.degree() > a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(j)]) return false;
        }
    return true;
}

/// The endomorphism rewritten on the opposite chart: entry (i,j) becomes
/// w^{a_i - a_j} * p(1/w). Returns nothing when some entry fails to extend
/// (i.e. the matrix is not a global section).
inline std::optional<Mat<Poly>> endo_infinity_chart(const SplittingType& st, const Mat<Poly>& m) {
    const auto& a = st.degrees();
    const int r = st.rank();
    Mat<Poly> out(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const Poly& p = m(i, j);
            if (p.is_zero()) continue;
            const int e = a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(j)] - p.degree();
            if (e < 0) return std::nullopt;
            out(i, j) = p.reversed(p.degree()) * Poly::monomial(e);
        }
    return out;
}

/// Spanning set of the fiber image algebra I(x) = { v(x) : v global }:
/// evaluations of the global basis, reduced to a linearly independent list by
/// exact elimination.
inline std::vector<FiberEndo> fiber_image_algebra(const SplittingType& st, const Scalar& x) {
    const int r = st.rank();
    std::vector<FiberEndo> evals;
    std::vector<std::vector<Scalar>> flat;
    for (const EndoSection& sec : global_end_basis(st)) {
        FiberEndo m = evaluate_section(sec, x);
        std::vector<Scalar> v;
        v.reserve(static_cast<std::size_t>(r) * static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) v.push_back(m(i, j));
        evals.push_back(std::move(m));
        flat.push_back(std::move(v));
    }
    std::vector<FiberEndo> out;
    for (int k : independent_subset(flat)) out.push_back(evals[static_cast<std::size_t>(k)]);
    return out;
}

/// A fiber endomorphism is rigid when it commutes with the evaluation at x of
/// every global endomorphism, i.e. with all of I(x).
inline bool is_rigid(const SplittingType& st, const Scalar& x, const FiberEndo& a_x) {
    if (a_x.rows() != st.rank() || a_x.cols() != st.rank())
        throw dimension_mismatch_error("rigidity test: matrix size does not match rank");
    const FiberEndo zero(st.rank(), st.rank());
    for (const FiberEndo& m : fiber_image_algebra(st, x))
        if (commutator(a_x, m) != zero) return false;
    return true;
}

} // namespace logconn

#endif
