#pragma once

#include <cstdint>
#include <random>

namespace frontlab {

/// Deterministic random stream keyed by (seed, stream-id).
///
/// The same key always reproduces the same sequence, independent of platform
/// and thread scheduling: the engine is the fully specified std::mt19937_64
/// and normal deviates are produced by an explicit Box-Muller transform
/// instead of the implementation-defined std::normal_distribution.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    /// Uniform draw in [0, 1).
    double uniform();

    /// Standard normal draw.
    double gaussian();

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace frontlab
