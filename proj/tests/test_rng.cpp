#include <cmath>

#include "doctest.h"
#include "rng.hpp"

using namespace avgfid;

TEST_CASE("streams are deterministic and substreams independent of draw order") {
    RngStream a(42);
    RngStream b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    // Substream derivation depends only on (key, index), not on draws made
    // from the parent.
    RngStream parent(7);
    const RngStream before = parent.substream(3);
    parent.next_u64();
    parent.next_u64();
    RngStream after = parent.substream(3);
    CHECK(before.key() == after.key());
    CHECK(derive_stream(7, 3) == after.key());

    CHECK(derive_stream(7, 3) != derive_stream(7, 4));
    CHECK(derive_stream(7, 3) != derive_stream(8, 3));
}

TEST_CASE("uniform draws live in [0,1) with plausible moments") {
    RngStream rng(1);
    const int n = 200000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.next_uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
        sum_sq += u * u;
    }
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    // 5 sigma bands around 1/2 and 1/12.
    CHECK(std::abs(mean - 0.5) < 5.0 * std::sqrt(1.0 / 12.0 / n));
    CHECK(std::abs(var - 1.0 / 12.0) < 5.0 * std::sqrt(1.0 / 180.0 / n));
}

TEST_CASE("complex gaussians have unit-variance components") {
    RngStream rng(2);
    const int n = 100000;
    double sum_re = 0.0, sum_im = 0.0, sum_re2 = 0.0, sum_im2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto z = rng.next_complex_gaussian();
        sum_re += z.real();
        sum_im += z.imag();
        sum_re2 += z.real() * z.real();
        sum_im2 += z.imag() * z.imag();
    }
    const double se_mean = 5.0 / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(sum_re / n) < se_mean);
    CHECK(std::abs(sum_im / n) < se_mean);
    // Var of X^2 for standard normal is 2.
    const double se_var = 5.0 * std::sqrt(2.0 / n);
    CHECK(std::abs(sum_re2 / n - 1.0) < se_var);
    CHECK(std::abs(sum_im2 / n - 1.0) < se_var);
}
