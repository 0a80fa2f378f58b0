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

#ifndef LOGCONN_OBSTRUCTION_HPP
#define LOGCONN_OBSTRUCTION_HPP

#include <logconn/endalg.hpp>

#include <string>
#include <vector>

namespace logconn {

// Existence of a logarithmic connection with the prescribed residues is
// governed by one linear functional on the global endomorphism algebra: the
// value against beta is
//
//     atiyah_pair(beta) + sum over x in S of trace(A(x) . beta(x))
//
// and a connection exists iff the functional vanishes on a basis. The duality
// normalization is pinned by atiyah_pair(Id) = degree(E), which makes the
// value against the identity section equal degree(E) + sum of traces — the
// classical necessary condition, with sign +.

/// Duality pairing of a fiber endomorphism against an evaluated section.
inline Scalar gamma_pair(const FiberEndo& alpha, const FiberEndo& beta_at_x) {
    if (alpha.rows() != beta_at_x.rows() || alpha.cols() != beta_at_x.cols())
        throw dimension_mismatch_error("gamma_pair: dimension mismatch");
    return (alpha * beta_at_x).trace();
}

/// Pairing of the Atiyah class of O(a_1) + ... + O(a_r) against a global
/// section: sum of a_i times the (constant) diagonal entries. Calibrated so
/// the identity section pairs to degree(E).
inline Scalar atiyah_pair(const SplittingType& st, const EndoSection& beta) {
    const auto& a = st.degrees();
    Scalar acc(0);
    for (int i = 0; i < st.rank(); ++i)
        acc += Scalar(a[static_cast<std::size_t>(i)]) * beta.entries(i, i).coeff(0);
    return acc;
}

/// Value of the obstruction functional against one section.
inline Scalar obstruction_value(const Instance& inst, const EndoSection& beta) {
    Scalar acc = atiyah_pair(inst.splitting, beta);
    for (const Scalar& x : inst.points.points())
        acc += gamma_pair(inst.residues.at(x), evaluate_section(beta, x));
    return acc;
}

struct ObstructionReport {
    struct Entry {
        std::string basis;
        Scalar value;
    };
    std::vector<Entry> values;
    bool exists = false;  // true iff every value is exactly 0
};

inline ObstructionReport obstruction_values(const Instance& inst) {
    ObstructionReport rep;
    rep.exists = true;
    for (const EndoSection& beta : global_end_basis(inst.splitting)) {
        Scalar v = obstruction_value(inst, beta);
        if (v != 0) rep.exists = false;
        rep.values.push_back({beta.label, std::move(v)});
    }
    return rep;
}

/// Does a logarithmic connection with the prescribed residues exist?
/// Complete for arbitrary residues, rigid or not.
inline bool decide_existence(const Instance& inst) { return obstruction_values(inst).exists; }

} // namespace logconn

#endif
