// Copyright 2026 The cpanchor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpanchor/qubit.h"

#include <gtest/gtest.h>

#include "cpanchor/channel.h"
#include "cpanchor/fixedpoint.h"
#include "support/oracles.h"

namespace cpanchor {
namespace {

using testing::diag_matrix;
using testing::naive_apply;

Channel phase_damping() {
    // s = 3/4 solves 2s - 1 = 1/2.
    return Channel({std::sqrt(0.75) * CMatrix::Identity(2, 2), std::sqrt(0.25) * testing::pauli_z()});
}

Channel completely_depolarizing() {
    return Channel({0.5 * CMatrix::Identity(2, 2), 0.5 * testing::pauli_x(), 0.5 * testing::pauli_y(),
                    0.5 * testing::pauli_z()});
}

TEST(PauliForm, KnownChannels) {
    const qubit::PauliForm id = qubit::pauli_form(Channel::identity(2));
    EXPECT_LT((id.T - Eigen::Matrix3d::Identity()).norm(), 1e-12);
    ASSERT_TRUE(id.diagonal_lambdas.has_value());
    const qubit::PauliForm dep = qubit::pauli_form(completely_depolarizing());
    EXPECT_LT(dep.T.norm(), 1e-12);
    const qubit::PauliForm z = qubit::pauli_form(Channel::unitary(testing::pauli_z()));
    ASSERT_TRUE(z.diagonal_lambdas.has_value());
    // sigma_z sigma_x sigma_z = -sigma_x, likewise for sigma_y.
    EXPECT_LT((*z.diagonal_lambdas - Eigen::Vector3d(-1.0, -1.0, 1.0)).norm(), 1e-12);
    const CMatrix image = naive_apply({testing::pauli_z()}, testing::pauli_x());
    EXPECT_LT((image + testing::pauli_x()).norm(), 1e-14);
}

TEST(Classify, ThreeCases) {
    const qubit::QubitClass full = qubit::classify(Channel::identity(2));
    EXPECT_EQ(full.kind, qubit::QubitCase::FullAlgebra);
    EXPECT_EQ(full.fixed_dim, 4);
    const qubit::QubitClass scalars = qubit::classify(completely_depolarizing());
    EXPECT_EQ(scalars.kind, qubit::QubitCase::ScalarsOnly);
    EXPECT_EQ(scalars.fixed_dim, 1);
    const qubit::QubitClass pd = qubit::classify(phase_damping());
    EXPECT_EQ(pd.kind, qubit::QubitCase::TwoDiagonal);
    EXPECT_EQ(pd.fixed_dim, 2);
    ASSERT_EQ(pd.basis_projections.size(), 2u);
    EXPECT_LT((pd.basis_projections[0] - diag_matrix({1.0, 0.0})).norm(), 1e-10);
    EXPECT_LT((pd.basis_projections[1] - diag_matrix({0.0, 1.0})).norm(), 1e-10);
}

TEST(Classify, RejectsWrongInput) {
    try {
        qubit::classify(Channel::identity(3));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotQubit);
    }
    const Channel amplitude_damping({diag_matrix({1.0, std::sqrt(0.5)}), std::sqrt(0.5) * matrix_unit(2, 0, 1)});
    try {
        qubit::classify(amplitude_damping);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotUnitalChannel);
    }
}

TEST(Classify, LambdaRouteMatchesFixedSpaceRoute) {
    const double grid[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    int checked = 0;
    for (double a : grid) {
        for (double b : grid) {
            for (double c : grid) {
                const Eigen::Vector3d l(a, b, c);
                const Superoperator s = qubit::pauli_diagonal_map(l);
                if (!map_properties(s).cp) continue;
                const Channel ch = superoperator_to_channel(s);
                const qubit::QubitClass by_space = qubit::classify_by_fixed_space(ch);
                const qubit::QubitClass by_lambda = qubit::classify_by_lambdas(l);
                EXPECT_EQ(by_space.kind, by_lambda.kind) << a << " " << b << " " << c;
                EXPECT_EQ(by_space.fixed_dim, fixed_point_space(ch).size());
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(FixedProjectionSolutions, Cases) {
    const qubit::FixedProjectionFamily all = qubit::fixed_projection_solutions({1.0, 1.0, 1.0});
    EXPECT_EQ(all.free_count, 3);
    EXPECT_TRUE(all.nontrivial);
    const qubit::FixedProjectionFamily none = qubit::fixed_projection_solutions({0.0, 0.0, 0.0});
    EXPECT_FALSE(none.nontrivial);
    // lambda = (1, 0.3, 0.3): a = +-1/2, b = c = 0.
    const qubit::FixedProjectionFamily two = qubit::fixed_projection_solutions({1.0, 0.3, 0.3});
    EXPECT_EQ(two.free_count, 1);
    ASSERT_EQ(two.isolated_points.size(), 2u);
    for (const Eigen::Vector3d &abc : two.isolated_points) {
        EXPECT_NEAR(std::abs(abc(0)), 0.5, 1e-12);
        EXPECT_NEAR(abc(1), 0.0, 1e-12);
        EXPECT_NEAR(abc(2), 0.0, 1e-12);
        const CMatrix p = qubit::bloch_projection(abc);
        EXPECT_LT((p * p - p).norm(), 1e-12);
    }
    EXPECT_THROW(qubit::fixed_projection_solutions({1.5, 0.0, 0.0}), Error);
}

}  // namespace
}  // namespace cpanchor
