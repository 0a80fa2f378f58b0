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

#include "test_support.hpp"

#include <catch2/catch.hpp>

using namespace logconn;

namespace {

Instance worked_instance(const Scalar& a1_11) {
    Mat<Scalar> a0(2, 2), a1(2, 2);
    a0(0, 0) = -2;
    a0(0, 1) = 5;
    a0(1, 1) = 3;
    a1(0, 0) = a1_11;
    a1(0, 1) = 7;
    a1(1, 1) = -2;
    ResidueData res;
    res.set(Scalar(0), a0);
    res.set(Scalar(1), a1);
    return validate_instance({1, -1}, MarkedPoints(std::vector<Scalar>{Scalar(0), Scalar(1)}), res);
}

ResidueData rank1_residues(const std::vector<Scalar>& points, const std::vector<Scalar>& lambdas) {
    ResidueData res;
    for (std::size_t k = 0; k < points.size(); ++k) {
        Mat<Scalar> m(1, 1);
        m(0, 0) = lambdas[k];
        res.set(points[k], m);
    }
    return res;
}

} // namespace

// Pins the sign of the chart rule; everything else in the suite depends on
// this convention, so it comes first.
TEST_CASE("calibration: dz/z on the degree -1 line bundle") {
    const MarkedPoints s(std::vector<Scalar>{Scalar(0)});
    const auto conn = line_bundle_connection(-1, s, {Scalar(1)});
    REQUIRE(conn.has_value());
    CHECK(conn->omega0(0, 0) == OneForm(Poly(Scalar(1)), Poly::variable()));  // exactly dz/z

    const VerifyReport rep = verify(*conn, rank1_residues({Scalar(0)}, {Scalar(1)}));
    CHECK(rep.pole_discipline);
    CHECK(rep.residue_match);
    CHECK(rep.chart_holomorphy);
    // the opposite-chart form is identically zero here
    CHECK(infinity_chart_form(*conn)(0, 0) == OneForm());
}

TEST_CASE("line bundle connections") {
    SECTION("n = -2, S = {0,1}, lambdas (1,1)") {
        const MarkedPoints s(std::vector<Scalar>{Scalar(0), Scalar(1)});
        const auto conn = line_bundle_connection(-2, s, {Scalar(1), Scalar(1)});
        REQUIRE(conn.has_value());
        const OneForm expected = OneForm::simple_pole(Scalar(0), Scalar(1)) +
                                 OneForm::simple_pole(Scalar(1), Scalar(1));
        CHECK(conn->omega0(0, 0) == expected);
        // residue at infinity equals the degree, cancelled by the chart term
        CHECK(conn->omega0(0, 0).residue_at(ProjectivePoint::infinity()) == -2);
        CHECK(verify(*conn, rank1_residues(s.points(), {Scalar(1), Scalar(1)})).pass());
    }
    SECTION("n = 0, S = {0}, lambda = 1 is infeasible") {
        CHECK_FALSE(line_bundle_connection(0, MarkedPoints(std::vector<Scalar>{Scalar(0)}), {Scalar(1)})
                        .has_value());
    }
    SECTION("lambda count must match the points") {
        CHECK_THROWS_AS(line_bundle_connection(0, MarkedPoints(std::vector<Scalar>{Scalar(0)}), {}),
                        dimension_mismatch_error);
    }
}

TEST_CASE("worked instance synthesis") {
    const Instance inst = worked_instance(Scalar(1));
    const auto conn = synthesize(inst);
    REQUIRE(conn.has_value());

    // the solver sets the free polynomial coefficient to zero, so the
    // certificate is exactly the sum of the residue terms
    CHECK(conn->omega0(0, 0) == OneForm::simple_pole(Scalar(0), Scalar(-2)) +
                                    OneForm::simple_pole(Scalar(1), Scalar(1)));
    CHECK(conn->omega0(0, 1) == OneForm::simple_pole(Scalar(0), Scalar(5)) +
                                    OneForm::simple_pole(Scalar(1), Scalar(7)));
    CHECK(conn->omega0(1, 0) == OneForm());
    CHECK(conn->omega0(1, 1) == OneForm::simple_pole(Scalar(0), Scalar(3)) +
                                    OneForm::simple_pole(Scalar(1), Scalar(-2)));

    const VerifyReport rep = verify(*conn, inst.residues);
    CHECK(rep.pass());
    CHECK(residue_matrix(*conn, Scalar(0)) == inst.residues.at(Scalar(0)));
    CHECK(residue_matrix(*conn, Scalar(1)) == inst.residues.at(Scalar(1)));

    // one-dimensional affine solution space
    CHECK(solution_space_dim(inst.splitting, inst.points) == 1);

    // flipping A(1)_11 makes it infeasible
    CHECK_FALSE(synthesize(worked_instance(Scalar(2))).has_value());
    CHECK_FALSE(decide_existence(worked_instance(Scalar(2))));
}

TEST_CASE("blockwise scalar instance synthesizes diagonally") {
    const Instance inst = testsupport::scalar_instance(SplittingType({0, 0}), {Scalar(0), Scalar(1)},
                                                       {Scalar(2), Scalar(-2)});
    const auto conn = synthesize(inst);
    REQUIRE(conn.has_value());
    const OneForm diag = OneForm::simple_pole(Scalar(0), Scalar(2)) +
                         OneForm::simple_pole(Scalar(1), Scalar(-2));
    CHECK(conn->omega0(0, 0) == diag);
    CHECK(conn->omega0(1, 1) == diag);
    CHECK(conn->omega0(0, 1) == OneForm());
    CHECK(conn->omega0(1, 0) == OneForm());
    CHECK(verify(*conn, inst.residues).pass());
}

TEST_CASE("scalar residues on an unbalanced bundle are infeasible") {
    testsupport::Rng rng(59);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<Scalar> lambdas{testsupport::random_scalar(rng), testsupport::random_scalar(rng)};
        const Instance inst =
            testsupport::scalar_instance(SplittingType({1, 0}), {Scalar(0), Scalar(1)}, lambdas);
        CHECK_FALSE(synthesize(inst).has_value());
        CHECK_FALSE(decide_existence(inst));
        CHECK_FALSE(rigid_criterion(inst));
    }
}

TEST_CASE("solution space dimension") {
    const MarkedPoints s(std::vector<Scalar>{Scalar(0), Scalar(1)});
    CHECK(solution_space_dim(SplittingType({1, -1}), s) == 1);
    CHECK(solution_space_dim(SplittingType({0, 0}), s) == 0);
    CHECK(solution_space_dim(SplittingType({2, -2}), s) == 3);

    // kernel rank agrees with the closed-form count on random types
    testsupport::Rng rng(61);
    for (int iter = 0; iter < 25; ++iter) {
        const SplittingType st = testsupport::random_splitting(rng, 4, 3);
        const MarkedPoints pts(testsupport::random_distinct_points(rng, testsupport::random_int(rng, 0, 3)));
        int formula = 0;
        for (int ai : st.degrees())
            for (int aj : st.degrees()) formula += std::max(0, ai - aj - 1);
        CHECK(solution_space_dim(st, pts) == formula);
    }
}

TEST_CASE("verification flags tampering") {
    const Instance inst = worked_instance(Scalar(1));
    const auto conn = synthesize(inst);
    REQUIRE(conn.has_value());

    SECTION("perturbed residue: ResidueMatch fails, with the point named") {
        Mat<Scalar> tampered = inst.residues.at(Scalar(1));
        tampered(0, 1) += 1;
        ResidueData res;
        res.set(Scalar(0), inst.residues.at(Scalar(0)));
        res.set(Scalar(1), tampered);
        const VerifyReport rep = verify(*conn, res);
        CHECK(rep.pole_discipline);
        CHECK_FALSE(rep.residue_match);
        CHECK(rep.chart_holomorphy);
        REQUIRE(rep.failures.size() == 1);
        CHECK(rep.failures[0].check == "ResidueMatch");
        CHECK(rep.failures[0].row == 1);
        CHECK(rep.failures[0].col == 2);
        CHECK(rep.failures[0].point == "1");
    }

    SECTION("extra pole outside S: PoleDiscipline fails") {
        ConnectionPresentation bad = *conn;
        bad.omega0(0, 0) = bad.omega0(0, 0) + OneForm::simple_pole(Scalar(5), Scalar(1));
        const VerifyReport rep = verify(bad, inst.residues);
        CHECK_FALSE(rep.pole_discipline);
        bool seen = false;
        for (const auto& f : rep.failures)
            seen = seen || (f.check == "PoleDiscipline" && f.row == 1 && f.col == 1);
        CHECK(seen);
    }

    SECTION("double pole at a marked point: PoleDiscipline fails") {
        ConnectionPresentation bad = *conn;
        bad.omega0(0, 0) =
            bad.omega0(0, 0) + OneForm(Poly(Scalar(1)), Poly::variable() * Poly::variable());
        const VerifyReport rep = verify(bad, inst.residues);
        CHECK_FALSE(rep.pole_discipline);
    }

    SECTION("chart defect only: ChartHolomorphy fails alone") {
        // hand-build the certificate for residues failing the diagonal
        // condition: poles and residues check out, the opposite chart does not
        const Instance bad_inst = worked_instance(Scalar(2));
        detail::SynthesisSystem sys = detail::build_synthesis_system(bad_inst);
        const ConnectionPresentation claimed{bad_inst.splitting, bad_inst.points, sys.base};
        const VerifyReport rep = verify(claimed, bad_inst.residues);
        CHECK(rep.pole_discipline);
        CHECK(rep.residue_match);
        CHECK_FALSE(rep.chart_holomorphy);
        REQUIRE_FALSE(rep.failures.empty());
        CHECK(rep.failures[0].check == "ChartHolomorphy");
        CHECK(rep.failures[0].row == 1);
        CHECK(rep.failures[0].col == 1);
    }
}

TEST_CASE("certificates satisfy the residue-sum identity") {
    testsupport::Rng rng(67);
    int verified = 0;
    for (int iter = 0; iter < 60; ++iter) {
        const Instance inst = testsupport::random_instance(rng, iter % 2 == 0, true);
        const auto conn = synthesize(inst);
        if (!conn) continue;
        REQUIRE(verify(*conn, inst.residues).pass());
        Scalar total(conn->splitting.degree());
        for (const Scalar& x : conn->points.points()) total += residue_matrix(*conn, x).trace();
        CHECK(total == 0);
        ++verified;
    }
    CHECK(verified > 20);
}

TEST_CASE("synthesis feasibility matches the obstruction verdict") {
    testsupport::Rng rng(71);
    for (int iter = 0; iter < 80; ++iter) {
        const Instance inst = testsupport::random_instance(rng, iter % 3 == 0, iter % 2 == 0);
        const auto conn = synthesize(inst);
        CHECK(conn.has_value() == decide_existence(inst));
        if (conn) {
            CHECK(verify(*conn, inst.residues).pass());
            const auto sys = detail::build_synthesis_system(inst);
            CHECK(static_cast<int>(solve_linear_system(sys.lhs, sys.rhs).nullspace.size()) ==
                  solution_space_dim(inst.splitting, inst.points));
        }
    }
}
