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

#ifndef CPANCHOR_CHANNEL_H
#define CPANCHOR_CHANNEL_H

#include <optional>
#include <utility>
#include <vector>

#include "cpanchor/matcore.h"

namespace cpanchor {

struct ChannelFlags {
    std::optional<bool> unital;
    std::optional<bool> trace_preserving;
};

/// A completely positive map X -> sum_i A_i X A_i^* given by its Kraus list.
class Channel {
  public:
    /// Throws InvalidArgument for an empty list, NonSquare or
    /// DimensionMismatch for malformed operators.
    explicit Channel(std::vector<CMatrix> kraus, ChannelFlags flags = {});

    static Channel identity(Eigen::Index dim);
    static Channel unitary(const CMatrix &u);

    Eigen::Index dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return kraus_.size(); }
    const std::vector<CMatrix> &kraus() const noexcept { return kraus_; }
    const CMatrix &operator[](std::size_t i) const { return kraus_[i]; }
    const ChannelFlags &flags() const noexcept { return flags_; }

    /// The adjoint tuple (A_1^*, ..., A_n^*).
    std::vector<CMatrix> adjoint_kraus() const;

  private:
    Eigen::Index dim_;
    std::vector<CMatrix> kraus_;
    ChannelFlags flags_;
};

enum class BasisKind { MatrixUnitsRowMajor, MatrixUnitsCustomOrder, Pauli };

/// Ordered basis of M_d. Coordinates are taken with respect to the dual basis
/// under the trace pairing <X, Y> = tr(X^* Y), so non-orthonormal bases work
/// through the same code path.
class OperatorBasis {
  public:
    using LabelPair = std::pair<int, int>;

    static OperatorBasis matrix_units_row_major(Eigen::Index dim);
    /// `order` lists d^2 (row_label, col_label) pairs. `labels` fixes which
    /// label belongs to index 0, 1, ...; when empty the distinct labels are
    /// ordered by absolute value (so {0, -1, -2} and {0, 1, 2} both map in
    /// the natural way).
    static OperatorBasis matrix_units_custom(std::vector<LabelPair> order, std::vector<int> labels = {});
    /// (I, sigma_x, sigma_y, sigma_z) for d = 2.
    static OperatorBasis pauli();

    BasisKind kind() const noexcept { return kind_; }
    Eigen::Index dim() const noexcept { return dim_; }
    const std::vector<CMatrix> &elements() const noexcept { return elements_; }
    const std::vector<LabelPair> &order() const noexcept { return order_; }
    const std::vector<int> &labels() const noexcept { return labels_; }
    /// Index of a label in the underlying C^d, used to read custom-order files.
    Eigen::Index label_index(int label) const;

    /// Coordinates c with X = sum_j c_j b_j.
    CVector coordinates(const CMatrix &x) const;
    CMatrix compose(const CVector &coords) const;

  private:
    OperatorBasis(BasisKind kind, Eigen::Index dim, std::vector<CMatrix> elements);

    BasisKind kind_;
    Eigen::Index dim_;
    std::vector<CMatrix> elements_;
    std::vector<LabelPair> order_;
    std::vector<int> labels_;
    CMatrix gram_inverse_;
};

/// [Phi]_B with the column convention Phi(b_j) = sum_i matrix(i, j) b_i.
struct Superoperator {
    OperatorBasis basis;
    CMatrix matrix;

    Eigen::Index dim() const noexcept { return basis.dim(); }
    CMatrix apply(const CMatrix &x) const;
};

/// C = sum_{k,l} E_kl (x) Phi(E_kl); block (k, l) is Phi(E_kl).
struct ChoiMatrix {
    Eigen::Index dim = 0;
    CMatrix matrix;
};

CMatrix apply(const Channel &ch, const CMatrix &x);
CMatrix dual_apply(const Channel &ch, const CMatrix &x);

/// ||sum A_i A_i^* - I||_F.
double unitality_defect(const Channel &ch);
/// ||sum A_i^* A_i - I||_F.
double trace_preservation_defect(const Channel &ch);
bool is_unital(const Channel &ch, const Tolerance &tol = {});
bool is_trace_preserving(const Channel &ch, const Tolerance &tol = {});

ChoiMatrix to_choi(const Channel &ch);
ChoiMatrix to_choi(const Superoperator &s);

/// Canonical Kraus list from the eigen-decomposition of a Choi matrix:
/// A_k = sqrt(lambda_k) unvec(v_k), descending eigenvalues, each v_k
/// phase-normalized so its first nonzero entry is real positive.
Channel choi_to_kraus(const ChoiMatrix &choi, const Tolerance &tol = {});

Superoperator to_superoperator(const Channel &ch, const OperatorBasis &basis);
Channel superoperator_to_channel(const Superoperator &s, const Tolerance &tol = {});

/// The d^2 x d^2 matrix of Phi on column-stacked vectors: sum_i conj(A_i) (x) A_i.
CMatrix liouville(const Channel &ch);

/// Property report for a linear map given only by its superoperator.
struct MapProperties {
    bool hermiticity_preserving = false;
    bool cp = false;
    bool unital = false;
    bool trace_preserving = false;
    double hermiticity_residual = 0.0;
    double choi_min_eigenvalue = 0.0;
    double unitality_defect = 0.0;
    double trace_preservation_defect = 0.0;
};

MapProperties map_properties(const Superoperator &s, const Tolerance &tol = {});
MapProperties map_properties(const Channel &ch, const Tolerance &tol = {});

enum class RandomChannelKind { UnitalCP, TracePreservingCP, UnitalTracePreserving };

/// Property-test generator. UnitalCP slices a Haar co-isometry, TracePreservingCP
/// slices a Haar isometry, UnitalTracePreserving is a random mixed-unitary map.
Channel random_channel(Eigen::Index dim, std::size_t n, RandomChannelKind kind, std::uint64_t seed = 0);

}  // namespace cpanchor

#endif  // CPANCHOR_CHANNEL_H
