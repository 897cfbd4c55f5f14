#include "snakes/diffusion.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "snakes/error.hpp"
#include "snakes/rng.hpp"

namespace snakes {

RealImage RealImage::from_grid(const Grid& grid) {
  RealImage image(grid.height(), grid.width());
  for (int r = 0; r < grid.height(); ++r) {
    for (int c = 0; c < grid.width(); ++c) {
      image.at(r, c) = grid.alive(r, c) ? 1.0 : 0.0;
    }
  }
  return image;
}

bool RealImage::all_finite() const {
  for (double v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

NoiseSchedule build_schedule(int T, double beta_start, double beta_end) {
  if (T < 1) {
    throw Error(ErrorCode::Config, "schedule needs at least one timestep");
  }
  if (!(beta_start > 0.0) || !(beta_start <= beta_end) || !(beta_end < 1.0)) {
    throw Error(ErrorCode::Config, "betas must satisfy 0 < beta_start <= beta_end < 1");
  }
  NoiseSchedule schedule;
  schedule.T = T;
  schedule.beta.resize(T);
  schedule.alpha.resize(T);
  schedule.alpha_bar.resize(T + 1);
  schedule.alpha_bar[0] = 1.0;
  for (int t = 1; t <= T; ++t) {
    double frac = T == 1 ? 0.0 : static_cast<double>(t - 1) / (T - 1);
    double beta = beta_start + (beta_end - beta_start) * frac;
    schedule.beta[t - 1] = beta;
    schedule.alpha[t - 1] = 1.0 - beta;
    schedule.alpha_bar[t] = schedule.alpha_bar[t - 1] * schedule.alpha[t - 1];
  }
  return schedule;
}

NoiseSchedule strided_schedule(const NoiseSchedule& full, int steps) {
  if (steps < 1 || steps > full.T) {
    throw Error(ErrorCode::Config, "strided step count must be in 1..T");
  }
  if (steps == full.T) return full;
  NoiseSchedule out;
  out.T = steps;
  out.beta.resize(steps);
  out.alpha.resize(steps);
  out.alpha_bar.resize(steps + 1);
  out.alpha_bar[0] = 1.0;
  int prev = 0;
  for (int k = 1; k <= steps; ++k) {
    // Evenly spaced timesteps of the full schedule, ending exactly at T.
    int t = static_cast<int>(std::llround(static_cast<double>(k) * full.T / steps));
    if (t <= prev) t = prev + 1;
    double alpha = full.alpha_bar[t] / full.alpha_bar[prev];
    out.alpha[k - 1] = alpha;
    out.beta[k - 1] = 1.0 - alpha;
    out.alpha_bar[k] = full.alpha_bar[t];
    prev = t;
  }
  return out;
}

namespace {

void require_same_shape(const RealImage& a, const RealImage& b, const char* what) {
  if (!a.same_shape(b)) {
    throw Error(ErrorCode::Shape, std::string(what) + ": image dimensions differ");
  }
}

}  // namespace

RealImage forward_diffuse(const RealImage& x0, int t, const RealImage& eps,
                          const NoiseSchedule& schedule) {
  if (t < 0 || t > schedule.T) {
    throw Error(ErrorCode::Step, "forward_diffuse: t must be in 0..T");
  }
  require_same_shape(x0, eps, "forward_diffuse");
  double ab = schedule.alpha_bar_at(t);
  double signal = std::sqrt(ab);
  double noise = std::sqrt(1.0 - ab);
  RealImage out(x0.height, x0.width);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.values[i] = signal * x0.values[i] + noise * eps.values[i];
  }
  return out;
}

RealImage backward_step(const RealImage& x_t, int t, const RealImage& eps_pred,
                        const RealImage& eps_inject, const NoiseSchedule& schedule) {
  if (t < 1 || t > schedule.T) {
    throw Error(ErrorCode::Step, "backward_step: t must be in 1..T");
  }
  require_same_shape(x_t, eps_pred, "backward_step");
  require_same_shape(x_t, eps_inject, "backward_step");
  double alpha = schedule.alpha_at(t);
  double beta = schedule.beta_at(t);
  double ab_t = schedule.alpha_bar_at(t);
  double ab_prev = schedule.alpha_bar_at(t - 1);
  double mean_scale = 1.0 / std::sqrt(alpha);
  double pred_scale = beta / std::sqrt(1.0 - ab_t);
  double sigma = t == 1 ? 0.0 : std::sqrt((1.0 - ab_prev) / (1.0 - ab_t) * beta);
  RealImage out(x_t.height, x_t.width);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.values[i] = mean_scale * (x_t.values[i] - pred_scale * eps_pred.values[i]) +
                    sigma * eps_inject.values[i];
  }
  return out;
}

Grid binarize(const RealImage& x) {
  Grid grid(x.height, x.width);
  for (int r = 0; r < x.height; ++r) {
    for (int c = 0; c < x.width; ++c) {
      double v = x.at(r, c);
      if (!(v >= 0.0)) v = 0.0;  // NaN clamps to 0
      if (v > 1.0) v = 1.0;
      if (v >= 0.5) grid.set(r, c, true);
    }
  }
  return grid;
}

SampleResult sample(const PredictFn& predict, int height, int width,
                    const NoiseSchedule& schedule, std::uint64_t seed,
                    const SampleOptions& options) {
  if (height < 1 || width < 1) {
    throw Error(ErrorCode::Config, "sample: dimensions must be at least 1x1");
  }
  Rng rng(seed);
  RealImage x(height, width);
  for (auto& v : x.values) v = rng.gaussian();

  SampleResult result;
  if (options.keep_trajectory) result.trajectory.push_back(x);

  RealImage inject(height, width);
  for (int t = schedule.T; t >= 1; --t) {
    RealImage eps_pred = predict(x, t);
    if (!eps_pred.same_shape(x)) {
      throw Error(ErrorCode::Shape, "sample: predictor returned mismatched dimensions");
    }
    if (t > 1) {
      for (auto& v : inject.values) v = rng.gaussian();
    } else {
      for (auto& v : inject.values) v = 0.0;
    }
    x = backward_step(x, t, eps_pred, inject, schedule);
    if (options.keep_trajectory) result.trajectory.push_back(x);
  }
  result.values_finite = x.all_finite();
  result.grid = binarize(x);
  return result;
}

std::string serialize_real_image(const RealImage& image) {
  std::string out = std::to_string(image.height) + " " + std::to_string(image.width);
  char buf[40];
  for (int r = 0; r < image.height; ++r) {
    out += '\n';
    for (int c = 0; c < image.width; ++c) {
      if (c > 0) out += ' ';
      std::snprintf(buf, sizeof(buf), "%.17g", image.at(r, c));
      out += buf;
    }
  }
  out += '\n';
  return out;
}

RealImage parse_real_image(const std::string& text) {
  std::istringstream in(text);
  int h = 0, w = 0;
  if (!(in >> h >> w) || h < 1 || w < 1) {
    throw Error(ErrorCode::Parse, "real image: bad header");
  }
  RealImage image(h, w);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (!(in >> image.values[i])) {
      throw Error(ErrorCode::Parse, "real image: expected " + std::to_string(image.size()) +
                                        " values, got " + std::to_string(i));
    }
  }
  return image;
}

}  // namespace snakes
