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

#ifndef LOGCONN_SYNTH_HPP
#define LOGCONN_SYNTH_HPP

#include <logconn/obstruction.hpp>
#include <logconn/oneform.hpp>

#include <optional>
#include <string>
#include <vector>

namespace logconn {

/// A candidate logarithmic connection D = d + omega0, presented by its
/// connection form on the standard chart. This is the certificate object:
/// verify() accepts arbitrary claimed presentations and re-checks everything
/// from scratch.
struct ConnectionPresentation {
    SplittingType splitting;
    MarkedPoints points;
    Mat<OneForm> omega0;
};

/// Connection form on the opposite chart, written in w = 1/z: conjugation by
/// the transition matrix g = diag(z^{a_i}) multiplies entry (i,j) by
/// z^{a_j - a_i} and adds the logarithmic derivative a_i dz/z on the
/// diagonal; the result is then rewritten in w. The sign and conjugation
/// direction are pinned by the rank-1 calibration case (omega0 = dz/z on a
/// degree -1 line bundle must become holomorphic at w = 0) and by the
/// orientation of global endomorphism entries.
inline Mat<OneForm> infinity_chart_form(const SplittingType& st, const Mat<OneForm>& omega0) {
    const auto& a = st.degrees();
    const int r = st.rank();
    Mat<OneForm> out(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            OneForm f = omega0(i, j).mul_monomial(a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(i)]);
            if (i == j) f = f + OneForm::dlog_monomial(a[static_cast<std::size_t>(i)]);
            out(i, j) = f.to_infinity_chart();
        }
    return out;
}

inline Mat<OneForm> infinity_chart_form(const ConnectionPresentation& conn) {
    return infinity_chart_form(conn.splitting, conn.omega0);
}

/// Entrywise residues of the presented form at a finite point.
inline Mat<Scalar> residue_matrix(const ConnectionPresentation& conn, const Scalar& x) {
    const int r = conn.splitting.rank();
    Mat<Scalar> m(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m(i, j) = conn.omega0(i, j).residue_at(x);
    return m;
}

/// Explicit connection on the line bundle of degree n with residue lambda_x
/// at each marked point: omega0 = sum of lambda_x dz/(z - x). Exists iff
/// n + sum(lambda) = 0; returns nothing otherwise.
inline std::optional<ConnectionPresentation> line_bundle_connection(int n, const MarkedPoints& s,
                                                                    const std::vector<Scalar>& lambdas) {
    if (lambdas.size() != s.size())
        throw dimension_mismatch_error("expected " + std::to_string(s.size()) + " residues, got " +
                                       std::to_string(lambdas.size()));
    Scalar total(n);
    for (const Scalar& l : lambdas) total += l;
    if (total != 0) return std::nullopt;
    OneForm f;
    for (std::size_t k = 0; k < lambdas.size(); ++k)
        if (lambdas[k] != 0) f = f + OneForm::simple_pole(s.points()[k], lambdas[k]);
    Mat<OneForm> omega0(1, 1);
    omega0(0, 0) = f;
    return ConnectionPresentation{SplittingType({n}), s, std::move(omega0)};
}

namespace detail {

/// The synthesis ansatz: entry (i,j) of omega0 is the forced residue part
/// sum_x A(x)_ij dz/(z-x) plus a free polynomial correction p_ij(z) dz of
/// degree at most a_i - a_j - 2 (no term otherwise) — exactly the entries of
/// a global section of End(E) tensored with the canonical bundle, so the
/// ansatz reaches every connection with the prescribed residues.
struct SynthesisSystem {
    struct Unknown {
        int i, j, t;
    };
    std::vector<Unknown> unknowns;
    Mat<OneForm> base;       // residue part of omega0
    Mat<Scalar> lhs;         // holomorphy-at-w=0 constraints, one row each
    std::vector<Scalar> rhs;
};

inline SynthesisSystem build_synthesis_system(const Instance& inst) {
    const auto& a = inst.splitting.degrees();
    const int r = inst.splitting.rank();
    SynthesisSystem sys;

    sys.base = Mat<OneForm>(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            OneForm f;
            for (const Scalar& x : inst.points.points()) {
                const Scalar& c = inst.residues.at(x)(i, j);
                if (c != 0) f = f + OneForm::simple_pole(x, c);
            }
            sys.base(i, j) = std::move(f);
        }

    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const int bound = a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(j)] - 2;
            for (int t = 0; t <= bound; ++t) sys.unknowns.push_back({i, j, t});
        }

    // Chart-1 images: the constraint is holomorphy at w = 0 of every entry of
    // the opposite-chart form. The dependence on the unknowns is linear, so
    // the principal parts of the base image and of each unknown's image
    // assemble into an exact linear system.
    const Mat<OneForm> base_w = infinity_chart_form(inst.splitting, sys.base);
    const ProjectivePoint w0 = ProjectivePoint::finite(Scalar(0));

    std::vector<OneForm> col_w(sys.unknowns.size());
    for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
        const auto& un = sys.unknowns[u];
        const OneForm mono(Poly::monomial(un.t), Poly(Scalar(1)));
        col_w[u] = mono.mul_monomial(a[static_cast<std::size_t>(un.j)] - a[static_cast<std::size_t>(un.i)])
                       .to_infinity_chart();
    }

    struct Row {
        int i, j, s;
    };
    std::vector<Row> rows;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            int depth = base_w(i, j).pole_order_at(w0);
            for (std::size_t u = 0; u < sys.unknowns.size(); ++u)
                if (sys.unknowns[u].i == i && sys.unknowns[u].j == j)
                    depth = std::max(depth, col_w[u].pole_order_at(w0));
            for (int s = 1; s <= depth; ++s) rows.push_back({i, j, s});
        }

    sys.lhs = Mat<Scalar>(static_cast<int>(rows.size()), static_cast<int>(sys.unknowns.size()));
    sys.rhs.assign(rows.size(), Scalar(0));
    const Scalar zero(0);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const Row& row = rows[k];
        for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
            if (sys.unknowns[u].i != row.i || sys.unknowns[u].j != row.j) continue;
            sys.lhs(static_cast<int>(k), static_cast<int>(u)) = col_w[u].laurent_coefficient_at(zero, row.s);
        }
        sys.rhs[k] = -base_w(row.i, row.j).laurent_coefficient_at(zero, row.s);
    }
    return sys;
}

} // namespace detail

/// Solves for a logarithmic connection with the prescribed residues, exactly.
/// Returns nothing when the linear system is infeasible — which happens iff
/// the obstruction functional is nonzero.
inline std::optional<ConnectionPresentation> synthesize(const Instance& inst) {
    detail::SynthesisSystem sys = detail::build_synthesis_system(inst);
    const LinearSolution sol = solve_linear_system(sys.lhs, sys.rhs);
    if (!sol.feasible) return std::nullopt;
    Mat<OneForm> omega0 = sys.base;
    for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
        const Scalar& c = sol.particular[u];
        if (c == 0) continue;
        const auto& un = sys.unknowns[u];
        omega0(un.i, un.j) = omega0(un.i, un.j) + OneForm(Poly::monomial(un.t, c), Poly(Scalar(1)));
    }
    return ConnectionPresentation{inst.splitting, inst.points, std::move(omega0)};
}

/// Affine dimension of the space of connections, when nonempty: the kernel
/// dimension of the synthesis system. The kernel depends only on the matrix,
/// not on the prescribed residues, so the probe uses zero residue data and a
/// homogeneous right-hand side.
inline int solution_space_dim(const SplittingType& st, const MarkedPoints& s) {
    ResidueData zero;
    const int r = st.rank();
    for (const Scalar& x : s.points()) zero.set(x, Mat<Scalar>(r, r));
    const Instance inst = validate_instance(st, s, zero);
    detail::SynthesisSystem sys = detail::build_synthesis_system(inst);
    const std::vector<Scalar> homogeneous(sys.rhs.size(), Scalar(0));
    const LinearSolution sol = solve_linear_system(sys.lhs, homogeneous);
    return static_cast<int>(sol.nullspace.size());
}

struct VerifyFailure {
    std::string check;   // "PoleDiscipline" | "ResidueMatch" | "ChartHolomorphy"
    int row = 0, col = 0;  // 1-based entry, 0 when not entry-specific
    std::string point;     // offending point, empty when not point-specific
    std::string detail;
};

struct VerifyReport {
    bool pole_discipline = true;
    bool residue_match = true;
    bool chart_holomorphy = true;
    std::vector<VerifyFailure> failures;

    bool pass() const { return pole_discipline && residue_match && chart_holomorphy; }
};

/// Independent certificate check; never throws on bad certificates, it
/// reports. Three checks:
///   1. PoleDiscipline: every entry of omega0 is holomorphic away from the
///      marked points and has at most simple poles there (the monic
///      denominator must divide prod (z - x)).
///   2. ResidueMatch: the entrywise residues at each marked point equal the
///      prescribed matrices.
///   3. ChartHolomorphy: the opposite-chart form is holomorphic at w = 0 and
///      has poles only at images 1/x of marked points.
inline VerifyReport verify(const ConnectionPresentation& conn, const ResidueData& prescribed) {
    VerifyReport rep;
    const int r = conn.splitting.rank();

    const Poly pole_product = Poly::from_roots(conn.points.points());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const OneForm& f = conn.omega0(i, j);
            if (!Poly::divmod(pole_product, f.denom()).second.is_zero()) {
                rep.pole_discipline = false;
                rep.failures.push_back({"PoleDiscipline", i + 1, j + 1, "",
                                        "pole outside the marked points or of order > 1"});
            }
        }

    for (const auto& [x, a] : prescribed.entries()) {
        if (!conn.points.contains(x)) {
            rep.residue_match = false;
            rep.failures.push_back({"ResidueMatch", 0, 0, scalar_to_string(x),
                                    "prescribed point is not among the certificate's marked points"});
            continue;
        }
        if (a.rows() != r || a.cols() != r) {
            rep.residue_match = false;
            rep.failures.push_back({"ResidueMatch", 0, 0, scalar_to_string(x),
                                    "prescribed residue has wrong dimensions"});
            continue;
        }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                const Scalar found = conn.omega0(i, j).residue_at(x);
                if (found != a(i, j)) {
                    rep.residue_match = false;
                    rep.failures.push_back({"ResidueMatch", i + 1, j + 1, scalar_to_string(x),
                                            "expected " + scalar_to_string(a(i, j)) + ", found " +
                                                scalar_to_string(found)});
                }
            }
    }

    const Mat<OneForm> w_form = infinity_chart_form(conn);
    const ProjectivePoint w0 = ProjectivePoint::finite(Scalar(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const OneForm& f = w_form(i, j);
            const int k0 = f.pole_order_at(w0);
            if (k0 > 0) {
                rep.chart_holomorphy = false;
                rep.failures.push_back({"ChartHolomorphy", i + 1, j + 1, "",
                                        "pole of order " + std::to_string(k0) + " at w = 0"});
            }
            Poly leftover = f.denom();
            strip_root(leftover, Scalar(0));
            for (const Scalar& x : conn.points.points())
                if (x != 0) strip_root(leftover, Scalar(1) / x);
            if (leftover.degree() > 0) {
                rep.chart_holomorphy = false;
                rep.failures.push_back({"ChartHolomorphy", i + 1, j + 1, "",
                                        "pole away from the images of the marked points"});
            }
        }
    return rep;
}

} // namespace logconn

#endif
