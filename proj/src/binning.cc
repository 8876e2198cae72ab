#include "stabsse/binning.h"

#include <cmath>
#include <string>
#include <vector>

#include "stabsse/errors.h"

namespace stabsse {

double estimate_error(std::span<const double> samples, std::size_t bin_count) {
    if (bin_count < 2) throw EstimationError("binning needs at least 2 bins");
    if (samples.size() < 2 * bin_count) {
        throw EstimationError("binning with " + std::to_string(bin_count) + " bins needs at least " +
                              std::to_string(2 * bin_count) + " samples, got " + std::to_string(samples.size()));
    }
    const std::size_t bin_size = samples.size() / bin_count;
    std::vector<double> means(bin_count, 0.0);
    for (std::size_t b = 0; b < bin_count; ++b) {
        double acc = 0.0;
        for (std::size_t i = 0; i < bin_size; ++i) acc += samples[b * bin_size + i];
        means[b] = acc / static_cast<double>(bin_size);
    }
    double mean = 0.0;
    for (double m : means) mean += m;
    mean /= static_cast<double>(bin_count);
    double var = 0.0;
    for (double m : means) var += (m - mean) * (m - mean);
    var /= static_cast<double>(bin_count - 1);
    return std::sqrt(var / static_cast<double>(bin_count));
}

}  // namespace stabsse
