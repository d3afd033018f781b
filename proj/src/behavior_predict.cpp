#include "frontlab/behavior_predict.hpp"

#include <algorithm>

#include "frontlab/errors.hpp"

namespace frontlab {

Matrix HankelPartition::stacked() const {
    Matrix H(layout.ambient(), cols());
    H.topRows(layout.u_past_rows()) = Up;
    H.middleRows(layout.u_past_rows(), layout.u_future_rows()) = Uf;
    H.middleRows(layout.u_past_rows() + layout.u_future_rows(), layout.y_past_rows()) = Yp;
    H.bottomRows(layout.y_future_rows()) = Yf;
    return H;
}

Matrix HankelPartition::regressor() const {
    Matrix Z(layout.regressor_rows(), cols());
    Z.topRows(layout.u_past_rows()) = Up;
    Z.middleRows(layout.u_past_rows(), layout.u_future_rows()) = Uf;
    Z.bottomRows(layout.y_past_rows()) = Yp;
    return Z;
}

Vector PredictorContext::stacked() const {
    Vector z(u_past.size() + u_future.size() + y_past.size());
    z << u_past, u_future, y_past;
    return z;
}

HankelPartition build_hankel_partition(const TrajectoryData& data, int T_ini,
                                       int T_f) {
    if (T_ini < 1 || T_f < 1) {
        throw InvalidInput("build_hankel_partition: T_ini and T_f must be positive");
    }
    if (data.u.cols() != data.y.cols()) {
        throw InvalidInput("build_hankel_partition: input/output lengths differ");
    }
    if (!all_finite(data.u) || !all_finite(data.y)) {
        throw InvalidInput("build_hankel_partition: non-finite data");
    }
    const int m = static_cast<int>(data.u.rows());
    const int n = static_cast<int>(data.y.rows());
    const int T_d = data.length();
    const int L = T_ini + T_f;
    if (T_d < L) {
        throw InsufficientData("build_hankel_partition: record shorter than Hankel depth");
    }
    const int N = T_d - L + 1;

    PredictorLayout layout{m, n, T_ini, T_f};
    HankelPartition part;
    part.layout = layout;
    part.Up.resize(layout.u_past_rows(), N);
    part.Uf.resize(layout.u_future_rows(), N);
    part.Yp.resize(layout.y_past_rows(), N);
    part.Yf.resize(layout.y_future_rows(), N);

    for (int j = 0; j < N; ++j) {
        for (int s = 0; s < T_ini; ++s) {
            part.Up.block(s * m, j, m, 1) = data.u.col(j + s);
            part.Yp.block(s * n, j, n, 1) = data.y.col(j + s);
        }
        for (int s = 0; s < T_f; ++s) {
            part.Uf.block(s * m, j, m, 1) = data.u.col(j + T_ini + s);
            part.Yf.block(s * n, j, n, 1) = data.y.col(j + T_ini + s);
        }
    }
    return part;
}

FlagPoint init_flag_from_svd(const HankelPartition& part, const Signature& sig) {
    if (sig.ambient() != part.layout.ambient()) {
        throw InvalidSignature("init_flag_from_svd: ambient dimension does not match layout");
    }
    if (sig.top_dim() > std::min(part.layout.ambient(), part.cols())) {
        throw InvalidSignature("init_flag_from_svd: q_d exceeds the Hankel rank budget");
    }
    const ThinSvd svd = thin_svd(part.stacked());
    return FlagPoint(sig, svd.U.leftCols(sig.top_dim()));
}

namespace {

void check_context(const PredictorContext& ctx, const PredictorLayout& layout) {
    if (ctx.u_past.size() != layout.u_past_rows() ||
        ctx.u_future.size() != layout.u_future_rows() ||
        ctx.y_past.size() != layout.y_past_rows()) {
        throw InvalidInput("predictor context does not match row layout");
    }
    if (!ctx.u_past.allFinite() || !ctx.u_future.allFinite() || !ctx.y_past.allFinite()) {
        throw InvalidInput("predictor context has non-finite entries");
    }
}

} // namespace

Vector offline_predict(const HankelPartition& part, const PredictorContext& ctx) {
    check_context(ctx, part.layout);
    return part.Yf * (pinv(part.regressor()) * ctx.stacked());
}

RankPrediction basis_predict(const SubspaceBasis& basis,
                             const PredictorContext& ctx,
                             const PredictorLayout& layout) {
    if (basis.ambient != layout.ambient()) {
        throw InvalidInput("basis_predict: basis ambient dimension does not match layout");
    }
    check_context(ctx, layout);
    const Matrix regressor_rows = basis.B.topRows(layout.regressor_rows());
    const Matrix future_rows = basis.B.bottomRows(layout.y_future_rows());
    RankPrediction pred;
    pred.full = future_rows * (pinv(regressor_rows) * ctx.stacked());
    pred.first = pred.full.head(layout.n);
    return pred;
}

RankPrediction flag_predict(const FlagPoint& X, int k,
                            const PredictorContext& ctx,
                            const PredictorLayout& layout) {
    return basis_predict(prefix_basis(X, k), ctx, layout);
}

Vector ensemble_predict(const FlagPoint& X, const EnsembleSpec& spec,
                        const PredictorContext& ctx,
                        const PredictorLayout& layout) {
    if (spec.ranks.empty()) {
        throw InvalidInput("ensemble_predict: empty ensemble");
    }
    Vector mean = Vector::Zero(layout.n);
    for (int rank : spec.ranks) {
        const auto& dims = X.sig().dims();
        const auto it = std::find(dims.begin(), dims.end(), rank);
        if (it == dims.end()) {
            throw InvalidInput("ensemble_predict: rank not present in the signature");
        }
        const int k = static_cast<int>(it - dims.begin()) + 1;
        mean += flag_predict(X, k, ctx, layout).first;
    }
    return mean / static_cast<double>(spec.ranks.size());
}

double cumulative_error(const Matrix& y_true, const Matrix& y_hat) {
    if (y_true.rows() != y_hat.rows() || y_true.cols() != y_hat.cols()) {
        throw InvalidInput("cumulative_error: sequence shapes differ");
    }
    return (y_true - y_hat).squaredNorm();
}

} // namespace frontlab
