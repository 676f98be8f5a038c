#pragma once

// Thin RAII layer over FFTW for the in-place complex transforms used by the
// smoothing operators. Transforms are unnormalized in both directions.

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "oscillometer/error.hpp"

namespace oscillometer::fourier {

enum class Direction { forward, backward };

namespace detail {

inline std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};
using Plan = std::unique_ptr<fftw_plan_s, PlanDeleter>;

inline fftw_complex* as_fftw(std::vector<std::complex<double>>& data) {
  return reinterpret_cast<fftw_complex*>(data.data());
}

inline int sign(Direction d) { return d == Direction::forward ? FFTW_FORWARD : FFTW_BACKWARD; }

}  // namespace detail

/// In-place 1-D DFT of `data`.
inline void transform(std::vector<std::complex<double>>& data, Direction dir) {
  if (data.empty()) return;
  detail::Plan plan;
  {
    std::lock_guard lock(detail::planner_mutex());
    plan.reset(fftw_plan_dft_1d(static_cast<int>(data.size()), detail::as_fftw(data),
                                detail::as_fftw(data), detail::sign(dir), FFTW_ESTIMATE));
  }
  if (!plan) throw NumericalError("FFT planning failed");
  fftw_execute(plan.get());
}

/// In-place 2-D DFT of a row-major rows x cols array.
inline void transform_2d(std::vector<std::complex<double>>& data, std::size_t rows,
                         std::size_t cols, Direction dir) {
  if (data.size() != rows * cols) throw ConfigError("2-D transform shape mismatch");
  if (data.empty()) return;
  detail::Plan plan;
  {
    std::lock_guard lock(detail::planner_mutex());
    plan.reset(fftw_plan_dft_2d(static_cast<int>(rows), static_cast<int>(cols),
                                detail::as_fftw(data), detail::as_fftw(data), detail::sign(dir),
                                FFTW_ESTIMATE));
  }
  if (!plan) throw NumericalError("FFT planning failed");
  fftw_execute(plan.get());
}

/// Signed frequency of DFT bin k for length n (bins above n/2 wrap negative;
/// the Nyquist bin n/2 is reported as +n/2).
inline long signed_frequency(std::size_t k, std::size_t n) {
  return k <= n / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
}

}  // namespace oscillometer::fourier
