#include "frontlab/flag_geometry.hpp"

#include <cmath>
#include <utility>

#include "frontlab/errors.hpp"

namespace frontlab {

namespace {

constexpr double kReorthThreshold = 1e-8;
constexpr double kDegenerateTangentNorm = 1e-14;

double orth_error(const Matrix& Y) {
    return (Y.transpose() * Y - Matrix::Identity(Y.cols(), Y.cols())).norm();
}

} // namespace

Signature::Signature(int ambient, std::vector<int> dims)
    : ambient_(ambient), dims_(std::move(dims)) {
    if (ambient_ < 2 || dims_.empty()) {
        throw InvalidSignature("Signature: need p >= 2 and at least one level");
    }
    int prev = 0;
    for (int q : dims_) {
        if (q <= prev) {
            throw InvalidSignature("Signature: dimensions must be strictly increasing and positive");
        }
        prev = q;
    }
    if (dims_.back() >= ambient_) {
        throw InvalidSignature("Signature: q_d must be smaller than the ambient dimension");
    }
}

int Signature::dim(int k) const {
    if (k < 1 || k > levels()) {
        throw InvalidIndex("Signature::dim: level out of range");
    }
    return dims_[static_cast<std::size_t>(k - 1)];
}

int Signature::block_begin(int k) const {
    if (k < 1 || k > levels()) {
        throw InvalidIndex("Signature::block_begin: level out of range");
    }
    return k == 1 ? 0 : dims_[static_cast<std::size_t>(k - 2)];
}

int Signature::block_size(int k) const {
    return dim(k) - block_begin(k);
}

SubspaceBasis::SubspaceBasis(int ambient_dim, Matrix basis)
    : ambient(ambient_dim), B(std::move(basis)) {
    if (B.rows() != ambient || B.cols() < 1 || B.cols() > B.rows()) {
        throw InvalidInput("SubspaceBasis: bad shape");
    }
    if (!all_finite(B)) {
        throw InvalidInput("SubspaceBasis: non-finite entries");
    }
    if (orth_error(B) > 1e-8) {
        throw InvalidInput("SubspaceBasis: columns are not orthonormal");
    }
}

FlagPoint::FlagPoint(Signature sig, Matrix representative)
    : sig_(std::move(sig)), Y_(std::move(representative)) {
    if (Y_.rows() != sig_.ambient() || Y_.cols() != sig_.top_dim()) {
        throw InvalidInput("FlagPoint: representative shape does not match signature");
    }
    if (!all_finite(Y_)) {
        throw InvalidInput("FlagPoint: non-finite representative");
    }
    if (orth_error(Y_) > kReorthThreshold) {
        Y_ = orthonormalize(Y_);
    }
}

double FlagPoint::orthonormality_error() const {
    return orth_error(Y_);
}

FlagTangent::FlagTangent(FlagPoint base, Matrix direction)
    : at(std::move(base)), D(std::move(direction)) {
    if (D.rows() != at.sig().ambient() || D.cols() != at.sig().top_dim()) {
        throw InvalidInput("FlagTangent: direction shape does not match base point");
    }
    if (!all_finite(D)) {
        throw InvalidInput("FlagTangent: non-finite direction");
    }
}

FlagPoint canonical_point(const Signature& sig) {
    Matrix Y = Matrix::Identity(sig.ambient(), sig.top_dim());
    return FlagPoint(sig, std::move(Y));
}

SubspaceBasis prefix_basis(const FlagPoint& X, int k) {
    if (k < 1 || k > X.sig().levels()) {
        throw InvalidIndex("prefix_basis: level out of range");
    }
    return SubspaceBasis(X.sig().ambient(), X.rep().leftCols(X.sig().dim(k)));
}

FlagTangent project_tangent(const FlagPoint& X, const Matrix& G) {
    const Matrix& Y = X.rep();
    if (G.rows() != Y.rows() || G.cols() != Y.cols()) {
        throw InvalidInput("project_tangent: shape mismatch");
    }
    if (!all_finite(G)) {
        throw InvalidInput("project_tangent: non-finite input");
    }
    const Matrix YtG = Y.transpose() * G;
    Matrix omega = 0.5 * (YtG - YtG.transpose());
    for (int k = 1; k <= X.sig().levels(); ++k) {
        const int b = X.sig().block_begin(k);
        const int s = X.sig().block_size(k);
        omega.block(b, b, s, s).setZero();
    }
    Matrix D = G - Y * YtG + Y * omega;
    return FlagTangent(X, std::move(D));
}

FlagPoint exp_map(const FlagPoint& X, const FlagTangent& V, double t) {
    if (V.at.sig() != X.sig()) {
        throw InvalidInput("exp_map: tangent signature does not match base point");
    }
    const Matrix& Y = X.rep();
    const int q = X.sig().top_dim();

    const Matrix step = t * V.D;
    Matrix A = Y.transpose() * step;
    A = 0.5 * (A - A.transpose()); // exactly skew against rounding drift
    const Matrix horizontal = step - Y * (Y.transpose() * step);

    Eigen::HouseholderQR<Matrix> qr(horizontal);
    const Matrix Qe = qr.householderQ() * Matrix::Identity(Y.rows(), q);
    const Matrix Re = qr.matrixQR().topRows(q).triangularView<Eigen::Upper>();

    Matrix M(2 * q, 2 * q);
    M.topLeftCorner(q, q) = A;
    M.topRightCorner(q, q) = -Re.transpose();
    M.bottomLeftCorner(q, q) = Re;
    M.bottomRightCorner(q, q).setZero();

    const Matrix rotation = expm_skew(M);
    Matrix stacked(Y.rows(), 2 * q);
    stacked.leftCols(q) = Y;
    stacked.rightCols(q) = Qe;
    Matrix Ynew = stacked * rotation.leftCols(q);
    return FlagPoint(X.sig(), std::move(Ynew));
}

FlagTangent random_tangent(const FlagPoint& X, RngStream& rng) {
    const int p = X.sig().ambient();
    const int q = X.sig().top_dim();
    for (;;) {
        const Matrix G = gaussian_matrix(rng, p, q, 1.0);
        FlagTangent tangent = project_tangent(X, G);
        const double norm = tangent.norm();
        if (norm > kDegenerateTangentNorm) {
            tangent.D /= norm;
            return tangent;
        }
        // zero-measure degenerate draw: resample
    }
}

double chordal_distance(const SubspaceBasis& A, const SubspaceBasis& B) {
    if (A.ambient != B.ambient) {
        throw InvalidInput("chordal_distance: ambient dimensions differ");
    }
    // sqrt(min(m,n) - ||A^T B||_F^2) evaluated through the complement
    // residual of the smaller basis; algebraically identical but keeps
    // full precision for nearly equal subspaces.
    const SubspaceBasis& small = (A.rank() <= B.rank()) ? A : B;
    const SubspaceBasis& large = (A.rank() <= B.rank()) ? B : A;
    const Matrix residual = small.B - large.B * (large.B.transpose() * small.B);
    return residual.norm();
}

} // namespace frontlab
