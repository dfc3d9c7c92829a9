#pragma once

#include "plwzw/lie.hpp"

#include <vector>

namespace plwzw::detail {

/// samples[s] = sum_m coeff[m - lo] exp(i m 2 pi s / N), modes folded mod N.
std::vector<Mat> modes_to_grid(const std::vector<Mat>& coeff, int lo, int n, int N);

/// coeff[m - lo] = (1/N) sum_s samples[s] exp(-i m 2 pi s / N) for m in [lo, hi].
std::vector<Mat> grid_to_modes(const std::vector<Mat>& samples, int lo, int hi);

} // namespace plwzw::detail
