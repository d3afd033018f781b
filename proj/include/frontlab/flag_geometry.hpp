#pragma once

#include <vector>

#include "frontlab/matrix_kernels.hpp"

namespace frontlab {

/// Signature (p, q_1 < ... < q_d < p) of a flag of nested subspaces of R^p.
class Signature {
public:
    Signature(int ambient, std::vector<int> dims);

    int ambient() const { return ambient_; }
    int levels() const { return static_cast<int>(dims_.size()); }
    /// Dimension q_k of the k-th subspace, k in 1..levels().
    int dim(int k) const;
    int top_dim() const { return dims_.back(); }
    const std::vector<int>& dims() const { return dims_; }

    /// First column (0-based) of representative block k, k in 1..levels().
    int block_begin(int k) const;
    int block_size(int k) const;

    bool operator==(const Signature& other) const {
        return ambient_ == other.ambient_ && dims_ == other.dims_;
    }
    bool operator!=(const Signature& other) const { return !(*this == other); }

private:
    int ambient_;
    std::vector<int> dims_;
};

/// Orthonormal basis of a single r-dimensional subspace of R^p.
struct SubspaceBasis {
    SubspaceBasis(int ambient_dim, Matrix basis);

    int ambient;
    Matrix B; ///< p x r, orthonormal columns

    int rank() const { return static_cast<int>(B.cols()); }
};

/// A point on Flag(p, q_1:d), stored as an orthonormal Stiefel representative
/// whose first q_k columns span the k-th nested subspace.
///
/// Construction re-orthonormalizes the representative (thin QR, positive
/// R diagonal) whenever ||Y^T Y - I||_F exceeds 1e-8, so the orthonormality
/// invariant survives long chains of geodesic steps.
class FlagPoint {
public:
    FlagPoint(Signature sig, Matrix representative);

    const Signature& sig() const { return sig_; }
    const Matrix& rep() const { return Y_; }

    /// ||Y^T Y - I||_F of the stored representative.
    double orthonormality_error() const;

private:
    Signature sig_;
    Matrix Y_;
};

/// Tangent vector at a flag point: p x q_d matrix D with Y^T D skew-symmetric
/// and vanishing diagonal blocks.
struct FlagTangent {
    FlagTangent(FlagPoint base, Matrix direction);

    FlagPoint at;
    Matrix D;

    double norm() const { return D.norm(); }
};

/// Flag whose representative is the identity pattern I_{p x q_d}.
FlagPoint canonical_point(const Signature& sig);

/// First q_k columns of the representative: basis of the k-th subspace.
SubspaceBasis prefix_basis(const FlagPoint& X, int k);

/// Orthogonal (Frobenius) projection of an ambient p x q_d matrix onto the
/// tangent space at X:  D = (I - Y Y^T) G + Y * Omega, where Omega is the
/// skew part of Y^T G with its diagonal blocks zeroed.
FlagTangent project_tangent(const FlagPoint& X, const Matrix& G);

/// Exponential map: geodesic from X with initial velocity t * V.
///
/// With A = Y^T (tD) and thin QR (I - Y Y^T)(tD) = Qe * Re, the new
/// representative is the first q_d columns of
///   [Y Qe] * expm([[A, -Re^T], [Re, 0]]).
FlagPoint exp_map(const FlagPoint& X, const FlagTangent& V, double t);

/// Unit-Frobenius-norm random tangent at X (projected Gaussian).
FlagTangent random_tangent(const FlagPoint& X, RngStream& rng);

/// Chordal distance sqrt(sum_i sin^2 theta_i) over the min(m, n) principal
/// angles between two subspaces of the same ambient space.
double chordal_distance(const SubspaceBasis& A, const SubspaceBasis& B);

} // namespace frontlab
