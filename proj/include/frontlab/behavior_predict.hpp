#pragma once

#include <vector>

#include "frontlab/flag_geometry.hpp"

namespace frontlab {

/// Offline input-output record; columns are time steps.
struct TrajectoryData {
    Matrix u; ///< m x T_d
    Matrix y; ///< n x T_d (already carries measurement noise when noisy)

    int length() const { return static_cast<int>(u.cols()); }
};

/// Row layout shared by the Hankel partition, the tracked bases, and the
/// streaming samples: (past inputs, future inputs, past outputs, future
/// outputs), each block stacked step-major.
struct PredictorLayout {
    int m = 1;
    int n = 1;
    int T_ini = 1;
    int T_f = 1;

    int depth() const { return T_ini + T_f; }          // L
    int ambient() const { return (m + n) * depth(); }  // (m+n)L
    int u_past_rows() const { return m * T_ini; }
    int u_future_rows() const { return m * T_f; }
    int y_past_rows() const { return n * T_ini; }
    int y_future_rows() const { return n * T_f; }
    int regressor_rows() const { return u_past_rows() + u_future_rows() + y_past_rows(); }
};

/// Row blocks of the depth-L Hankel matrix of offline data. Column j holds
/// the length-L trajectory window starting at time j.
struct HankelPartition {
    PredictorLayout layout;
    Matrix Up; ///< mT_ini x N
    Matrix Uf; ///< mT_f  x N
    Matrix Yp; ///< nT_ini x N
    Matrix Yf; ///< nT_f  x N

    int cols() const { return static_cast<int>(Up.cols()); }
    /// Full stacked matrix [Up; Uf; Yp; Yf] ((m+n)L x N).
    Matrix stacked() const;
    /// Regressor block [Up; Uf; Yp].
    Matrix regressor() const;
};

/// Regressor data for one prediction: past inputs, future inputs, and the
/// (noisy) past outputs.
struct PredictorContext {
    Vector u_past;   ///< mT_ini
    Vector u_future; ///< mT_f
    Vector y_past;   ///< nT_ini

    Vector stacked() const;
};

/// Ranks (values q_k of the signature) averaged by the ensemble predictor.
struct EnsembleSpec {
    std::vector<int> ranks;
};

/// The full and first-step parts of one rank's prediction.
struct RankPrediction {
    Vector full;  ///< nT_f
    Vector first; ///< n
};

/// Sort offline data into the depth-(T_ini + T_f) Hankel matrix and split
/// it into past/future input/output row blocks.
/// Throws InsufficientData when the record is shorter than the depth.
HankelPartition build_hankel_partition(const TrajectoryData& data, int T_ini,
                                       int T_f);

/// Flag spanned by the top-q_d left singular vectors of the stacked Hankel
/// matrix; prefix k spans the top q_k principal directions.
FlagPoint init_flag_from_svd(const HankelPartition& part, const Signature& sig);

/// Offline subspace predictor:  Yf * pinv([Up; Uf; Yp]) * context.
Vector offline_predict(const HankelPartition& part, const PredictorContext& ctx);

/// Prediction through an arbitrary orthonormal basis of the trajectory
/// space, partitioned by the shared row layout.
RankPrediction basis_predict(const SubspaceBasis& basis,
                             const PredictorContext& ctx,
                             const PredictorLayout& layout);

/// Prediction through the k-th nested subspace of a tracked flag.
RankPrediction flag_predict(const FlagPoint& X, int k,
                            const PredictorContext& ctx,
                            const PredictorLayout& layout);

/// Arithmetic mean of the first-step predictions over the spec's ranks.
Vector ensemble_predict(const FlagPoint& X, const EnsembleSpec& spec,
                        const PredictorContext& ctx,
                        const PredictorLayout& layout);

/// Sum of squared prediction errors; columns of both matrices are steps.
double cumulative_error(const Matrix& y_true, const Matrix& y_hat);

} // namespace frontlab
