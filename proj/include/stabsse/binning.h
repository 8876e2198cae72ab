#pragma once

#include <cstddef>
#include <span>

namespace stabsse {

/// Standard error of the mean from a binning analysis: the series is cut
/// into bin_count bins of equal size (trailing samples that do not fill a
/// bin are dropped), and the result is the sample standard deviation of the
/// bin means divided by sqrt(bin_count).
///
/// Throws EstimationError if bin_count < 2 or there are fewer than
/// 2 * bin_count samples.
double estimate_error(std::span<const double> samples, std::size_t bin_count);

}  // namespace stabsse
