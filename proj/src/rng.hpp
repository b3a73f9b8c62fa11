#pragma once

#include <complex>
#include <cstdint>

namespace avgfid {

/// Counter-based pseudo-random stream. Draw i of stream `key` is
/// mix(key + (i+1)*GAMMA) with mix the splitmix64 finalizer, so a stream is a
/// pure function of (key, counter). Sub-streams are derived with
/// derive_stream(key, index); all Monte Carlo code gives sample i its own
/// sub-stream, which makes results independent of evaluation order or
/// partitioning.
std::uint64_t derive_stream(std::uint64_t key, std::uint64_t index);

class RngStream {
public:
    explicit RngStream(std::uint64_t key) : key_(key) {}

    RngStream substream(std::uint64_t index) const { return RngStream(derive_stream(key_, index)); }
    std::uint64_t key() const { return key_; }

    std::uint64_t next_u64();

    /// Uniform on [0, 1) with 53 random bits.
    double next_uniform();

    /// Standard complex Gaussian (real and imaginary parts independent
    /// N(0,1)) via one Box-Muller pair: u1 in (0,1], u2 in [0,1),
    /// r = sqrt(-2 ln u1), angle = 2 pi u2, value = r (cos + i sin)(angle).
    std::complex<double> next_complex_gaussian();

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace avgfid
