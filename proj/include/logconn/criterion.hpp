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

#ifndef LOGCONN_CRITERION_HPP
#define LOGCONN_CRITERION_HPP

#include <logconn/endalg.hpp>

#include <vector>

namespace logconn {

/// The universal necessary condition: degree(E) plus the sum of all residue
/// traces must vanish exactly.
inline bool trace_necessity(const Instance& inst) {
    Scalar acc(inst.splitting.degree());
    for (const Scalar& x : inst.points.points()) acc += inst.residues.at(x).trace();
    return acc == 0;
}

/// Per-summand conditions a_i + sum_x A(x)_ii for the canonical line-bundle
/// summands. Valid only when every residue is rigid; rigid residues preserve
/// each summand, which on the projective line means they are diagonal — that
/// is asserted, not assumed.
inline std::vector<Scalar> summand_conditions(const Instance& inst) {
    const int r = inst.splitting.rank();
    for (const Scalar& x : inst.points.points()) {
        if (!is_rigid(inst.splitting, x, inst.residues.at(x)))
            throw not_rigid_error("residue at point " + scalar_to_string(x) + " is not rigid");
    }
    for (const Scalar& x : inst.points.points()) {
        const FiberEndo& a = inst.residues.at(x);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (i != j && a(i, j) != 0)
                    throw summand_not_preserved_error(
                        "rigid residue at " + scalar_to_string(x) + " does not preserve the summands");
    }
    std::vector<Scalar> cond;
    cond.reserve(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        Scalar c(inst.splitting.degrees()[static_cast<std::size_t>(i)]);
        for (const Scalar& x : inst.points.points()) c += inst.residues.at(x)(i, i);
        cond.push_back(std::move(c));
    }
    return cond;
}

/// Blockwise criterion for rigid residues: a connection exists iff every
/// per-summand condition vanishes. Throws not_rigid_error when the
/// hypothesis fails; the obstruction functional is the complete tool there.
inline bool rigid_criterion(const Instance& inst) {
    for (const Scalar& c : summand_conditions(inst))
        if (c != 0) return false;
    return true;
}

} // namespace logconn

#endif
