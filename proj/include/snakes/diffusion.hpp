#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "snakes/grid.hpp"

namespace snakes {

// Single-channel H x W real-valued image; the grid representation while it
// carries noise.
struct RealImage {
  int height = 0;
  int width = 0;
  std::vector<double> values;

  RealImage() = default;
  RealImage(int h, int w, double fill = 0.0)
      : height(h), width(w), values(static_cast<std::size_t>(h) * w, fill) {}

  static RealImage from_grid(const Grid& grid);

  double& at(int r, int c) { return values[static_cast<std::size_t>(r) * width + c]; }
  double at(int r, int c) const { return values[static_cast<std::size_t>(r) * width + c]; }
  std::size_t size() const { return values.size(); }
  bool same_shape(const RealImage& other) const {
    return height == other.height && width == other.width;
  }
  bool all_finite() const;
};

// beta[t-1] holds beta_t for t in 1..T; alpha_bar[t] holds the running
// product with alpha_bar[0] = 1.
struct NoiseSchedule {
  int T = 0;
  std::vector<double> beta;
  std::vector<double> alpha;
  std::vector<double> alpha_bar;

  double beta_at(int t) const { return beta[t - 1]; }
  double alpha_at(int t) const { return alpha[t - 1]; }
  double alpha_bar_at(int t) const { return alpha_bar[t]; }
};

inline constexpr int kDefaultTimesteps = 1000;
inline constexpr double kDefaultBetaStart = 1e-4;
inline constexpr double kDefaultBetaEnd = 0.02;

// Linear beta schedule from beta_start to beta_end inclusive.
NoiseSchedule build_schedule(int T = kDefaultTimesteps, double beta_start = kDefaultBetaStart,
                             double beta_end = kDefaultBetaEnd);

// Coarser schedule over `steps` timesteps whose alpha_bar values follow a
// strided subsequence of the full schedule, endpoint included. Used to run
// inference with fewer steps than the schedule was built with.
NoiseSchedule strided_schedule(const NoiseSchedule& full, int steps);

// x_t = sqrt(alpha_bar_t) * x0 + sqrt(1 - alpha_bar_t) * eps
RealImage forward_diffuse(const RealImage& x0, int t, const RealImage& eps,
                          const NoiseSchedule& schedule);

// x_{t-1} = (x_t - beta_t / sqrt(1 - alpha_bar_t) * eps_pred) / sqrt(alpha_t)
//           + sqrt((1 - alpha_bar_{t-1}) / (1 - alpha_bar_t) * beta_t) * eps_inject
// The injected noise is forced to zero at t = 1 so the final step lands on
// the deterministic mean.
RealImage backward_step(const RealImage& x_t, int t, const RealImage& eps_pred,
                        const RealImage& eps_inject, const NoiseSchedule& schedule);

// Clamp to [0, 1], then cell = 1 iff value >= 0.5.
Grid binarize(const RealImage& x);

using PredictFn = std::function<RealImage(const RealImage&, int)>;

struct SampleOptions {
  bool keep_trajectory = false;
};

struct SampleResult {
  Grid grid;
  // True when every value of the final x_0 was finite before binarization.
  bool values_finite = true;
  // When requested: T + 1 images from x_T down to x_0.
  std::vector<RealImage> trajectory;

  SampleResult() : grid(1, 1) {}
};

// Full backward loop from seeded pure noise to a binarized grid.
// Deterministic for a fixed seed and predictor.
SampleResult sample(const PredictFn& predict, int height, int width,
                    const NoiseSchedule& schedule, std::uint64_t seed,
                    const SampleOptions& options = {});

// Real-valued frame text format: header "H W", then H rows of W decimals.
std::string serialize_real_image(const RealImage& image);
RealImage parse_real_image(const std::string& text);

}  // namespace snakes
