#include "rng.hpp"

#include <cmath>
#include <numbers>

namespace avgfid {

namespace {

constexpr std::uint64_t kDrawGamma = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kStreamGamma = 0xD1B54A32D192ED03ull;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_stream(std::uint64_t key, std::uint64_t index) {
    return mix64(mix64(key + (index + 1) * kStreamGamma));
}

std::uint64_t RngStream::next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * kDrawGamma);
}

double RngStream::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::complex<double> RngStream::next_complex_gaussian() {
    const double u1 = 1.0 - next_uniform();  // (0, 1]
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(angle), r * std::sin(angle)};
}

}  // namespace avgfid
