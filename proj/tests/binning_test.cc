#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "stabsse/binning.h"
#include "stabsse/errors.h"

using stabsse::estimate_error;

TEST(Binning, constant_series_has_zero_error) {
    std::vector<double> x(1000, 3.25);
    EXPECT_EQ(estimate_error(x, 50), 0.0);
}

TEST(Binning, iid_normal_matches_sigma_over_sqrt_m) {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> g(0.0, 2.0);
    const std::size_t m = 4000;
    double sum = 0.0;
    const int reps = 100;
    for (int r = 0; r < reps; ++r) {
        std::vector<double> x(m);
        for (double& v : x) v = g(rng);
        sum += estimate_error(x, 50);
    }
    double expected = 2.0 / std::sqrt(static_cast<double>(m));
    EXPECT_NEAR(sum / reps, expected, 0.2 * expected);
}

TEST(Binning, remainder_is_dropped) {
    std::vector<double> x{1, 3, 1, 3, 100};
    // bins {1,3},{1,3}: identical means
    EXPECT_EQ(estimate_error(x, 2), 0.0);
}

TEST(Binning, rejects_too_few_bins_or_samples) {
    std::vector<double> x(10, 1.0);
    EXPECT_THROW(estimate_error(x, 1), stabsse::EstimationError);
    EXPECT_THROW(estimate_error(x, 6), stabsse::EstimationError);
}
