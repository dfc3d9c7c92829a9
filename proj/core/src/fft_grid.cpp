#include "fft_grid.hpp"

#include "plwzw/errors.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace plwzw::detail {

namespace {

struct Buffer {
  explicit Buffer(int N) : data(fftw_alloc_complex(static_cast<size_t>(N))) {}
  ~Buffer() { fftw_free(data); }
  Buffer(const Buffer&) = delete;
  Buffer& operator=(const Buffer&) = delete;
  fftw_complex* data;
};

// FFTW planning is not thread safe; execution of a finished plan on fresh
// (equally aligned) buffers is.
class PlanCache {
public:
  fftw_plan get(int N, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(N, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    Buffer in(N), out(N);
    fftw_plan p = fftw_plan_dft_1d(N, in.data, out.data, sign, FFTW_ESTIMATE);
    if (p == nullptr) throw Error("FFTW failed to create a plan of size " + std::to_string(N));
    plans_.emplace(key, p);
    return p;
  }

  ~PlanCache() {
    for (auto& [k, p] : plans_) fftw_destroy_plan(p);
  }

private:
  std::mutex mu_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

int wrap(int m, int N) {
  const int r = m % N;
  return r < 0 ? r + N : r;
}

} // namespace

std::vector<Mat> modes_to_grid(const std::vector<Mat>& coeff, int lo, int n, int N) {
  if (N < 1) throw InvalidArgument("modes_to_grid: grid size must be positive");
  std::vector<Mat> out(static_cast<size_t>(N), Mat::Zero(n, n));
  fftw_plan plan = cache().get(N, FFTW_BACKWARD);
  Buffer in(N), res(N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int s = 0; s < N; ++s) in.data[s][0] = in.data[s][1] = 0.0;
      for (size_t k = 0; k < coeff.size(); ++k) {
        const int idx = wrap(lo + static_cast<int>(k), N);
        in.data[idx][0] += coeff[k](i, j).real();
        in.data[idx][1] += coeff[k](i, j).imag();
      }
      fftw_execute_dft(plan, in.data, res.data);
      for (int s = 0; s < N; ++s) out[static_cast<size_t>(s)](i, j) = cplx(res.data[s][0], res.data[s][1]);
    }
  return out;
}

std::vector<Mat> grid_to_modes(const std::vector<Mat>& samples, int lo, int hi) {
  const int N = static_cast<int>(samples.size());
  if (N == 0) throw InvalidArgument("grid_to_modes: empty grid");
  if (hi < lo) throw InvalidArgument("grid_to_modes: empty mode window");
  const int n = static_cast<int>(samples[0].rows());
  std::vector<Mat> out(static_cast<size_t>(hi - lo + 1), Mat::Zero(n, n));
  fftw_plan plan = cache().get(N, FFTW_FORWARD);
  Buffer in(N), res(N);
  const double scale = 1.0 / N;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int s = 0; s < N; ++s) {
        in.data[s][0] = samples[static_cast<size_t>(s)](i, j).real();
        in.data[s][1] = samples[static_cast<size_t>(s)](i, j).imag();
      }
      fftw_execute_dft(plan, in.data, res.data);
      for (int m = lo; m <= hi; ++m) {
        const int idx = wrap(m, N);
        out[static_cast<size_t>(m - lo)](i, j) = scale * cplx(res.data[idx][0], res.data[idx][1]);
      }
    }
  return out;
}

} // namespace plwzw::detail
