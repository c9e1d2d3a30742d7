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

#ifndef CPANCHOR_MATCORE_H
#define CPANCHOR_MATCORE_H

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "cpanchor/errors.h"

namespace cpanchor {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Numerical thresholds shared by every routine in the library.
///
/// `rel_eps` is the single knob for subspace decisions: singular values below
/// `rel_eps * sigma_max` are treated as zero. `psd_slack` bounds how negative an
/// eigenvalue may be (relative to the operator norm) before a matrix stops being
/// positive semidefinite. `abs_eps` is used for convergence of iterations and
/// for trace/rank rounding.
struct Tolerance {
    double abs_eps = 1e-10;
    double rel_eps = 1e-9;
    double psd_slack = 1e-9;

    /// Throws InvalidArgument unless all three thresholds are strictly positive.
    void validate() const;
};

/// An orthogonal projection together with its rank. Construction validates
/// idempotence and self-adjointness.
class Projection {
  public:
    static Projection from_matrix(const CMatrix &matrix, const Tolerance &tol = {});
    /// Projection onto the span of orthonormal columns (Q Q^*). Not re-validated.
    static Projection onto_columns(const CMatrix &orthonormal_columns);
    static Projection zero(Eigen::Index dim);
    static Projection identity(Eigen::Index dim);

    const CMatrix &matrix() const noexcept { return matrix_; }
    Eigen::Index rank() const noexcept { return rank_; }
    Eigen::Index dim() const noexcept { return matrix_.rows(); }
    Projection complement() const;

  private:
    Projection(CMatrix matrix, Eigen::Index rank) : matrix_(std::move(matrix)), rank_(rank) {}

    CMatrix matrix_;
    Eigen::Index rank_;
};

struct HermitianEigen {
    RVector values;   // ascending
    CMatrix vectors;  // unitary, columns are eigenvectors
};

/// ||M - M^*||_F.
double hermitian_residual(const CMatrix &m);

/// Eigen-decomposition of a Hermitian matrix with eigenvalues in ascending
/// order. Throws NonSquare or NotHermitian.
HermitianEigen hermitian_eig(const CMatrix &m, const Tolerance &tol = {});

/// Smallest eigenvalue of the Hermitian part; throws like hermitian_eig.
double min_eigenvalue(const CMatrix &m, const Tolerance &tol = {});

/// True iff the smallest eigenvalue is >= -psd_slack * max(1, ||M||_2).
bool is_psd(const CMatrix &m, const Tolerance &tol = {});

/// Projection onto the eigenvectors whose eigenvalue lies within
/// rel_eps * max(1, |lambda|) of `lambda`. The result may have rank 0.
Projection eigenspace_projection(const CMatrix &m, double lambda, const Tolerance &tol = {});

/// Orthonormal basis (as columns) of the span of the given columns. The
/// number of output columns is the numerical rank of the input.
CMatrix orthonormalize(const CMatrix &columns, const Tolerance &tol = {});
CMatrix orthonormalize(const std::vector<CVector> &vectors, Eigen::Index dim, const Tolerance &tol = {});

/// Orthonormal basis (as columns) of the numerical null space of `a`.
CMatrix null_space(const CMatrix &a, const Tolerance &tol = {});

/// Sine of the largest principal angle between two subspaces given by
/// orthonormal columns. Returns 1 when the dimensions differ.
double subspace_sine(const CMatrix &q1, const CMatrix &q2);

/// ||(I - Q2 Q2^*) Q1||_2: zero iff span(Q1) is contained in span(Q2).
double containment_sine(const CMatrix &q_sub, const CMatrix &q_super);

double spectral_norm(const CMatrix &m);

/// Column-stacking vectorization: vec(X)[i + d*j] = X(i, j).
CVector vec(const CMatrix &x);
CMatrix unvec(const CVector &v, Eigen::Index rows);

CMatrix kron(const CMatrix &a, const CMatrix &b);

/// Matrix unit E_{ij} in M_d.
CMatrix matrix_unit(Eigen::Index d, Eigen::Index i, Eigen::Index j);

/// Orthonormal basis of Ran(P) obtained by Gram-Schmidt over the columns of P
/// in index order. Deterministic: a diagonal projection yields standard basis
/// vectors.
CMatrix canonical_range_basis(const CMatrix &p, const Tolerance &tol = {});

/// Index of the first diagonal entry of P above abs_eps, or dim if none.
Eigen::Index first_support_index(const CMatrix &p, const Tolerance &tol = {});

/// Seedable generator used by every randomized routine. Wraps mt19937_64 so
/// that a seed fully determines every draw.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    double normal();
    double uniform();
    std::uint64_t next_seed();

    /// Entries i.i.d. standard complex Gaussian (real and imaginary N(0, 1/2)).
    CMatrix ginibre(Eigen::Index rows, Eigen::Index cols);
    CVector random_vector(Eigen::Index dim);
    CMatrix haar_unitary(Eigen::Index dim);
    CMatrix random_hermitian(Eigen::Index dim);
    /// Uniform on the probability simplex.
    RVector probability_vector(Eigen::Index n);

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace cpanchor

#endif  // CPANCHOR_MATCORE_H
