#include "snakes/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <string>
#include <unordered_set>

#include "snakes/error.hpp"

namespace snakes {

namespace {

int env_limit(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) {
    throw Error(ErrorCode::Config, std::string(name) + " must be a positive integer");
  }
  return static_cast<int>(value);
}

// Symmetries of an H x W rectangle as cell-index permutations. perm[i] is the
// source index whose value lands at index i of the transformed grid.
std::vector<std::vector<int>> symmetry_perms(int h, int w) {
  auto idx = [w](int r, int c) { return r * w + c; };
  std::vector<std::vector<int>> perms;
  auto make = [&](auto src_of) {
    std::vector<int> p(static_cast<std::size_t>(h) * w);
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        p[idx(r, c)] = src_of(r, c);
      }
    }
    perms.push_back(std::move(p));
  };
  make([&](int r, int c) { return idx(r, c); });
  make([&](int r, int c) { return idx(r, w - 1 - c); });
  make([&](int r, int c) { return idx(h - 1 - r, c); });
  make([&](int r, int c) { return idx(h - 1 - r, w - 1 - c); });
  if (h == w) {
    make([&](int r, int c) { return idx(c, r); });
    make([&](int r, int c) { return idx(h - 1 - c, r); });
    make([&](int r, int c) { return idx(c, w - 1 - r); });
    make([&](int r, int c) { return idx(w - 1 - c, h - 1 - r); });
  }
  return perms;
}

std::uint64_t apply_perm(std::uint64_t mask, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (mask >> perm[i] & 1ull) out |= 1ull << i;
  }
  return out;
}

// Reverses the first n bits so that integer order matches lexicographic order
// of the row-major cell string.
std::uint64_t lex_key(std::uint64_t mask, int n) {
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1ull) out |= 1ull << (n - 1 - i);
  }
  return out;
}

std::uint64_t canonical_mask(std::uint64_t mask, const std::vector<std::vector<int>>& perms,
                             int n) {
  std::uint64_t best = mask;
  std::uint64_t best_key = lex_key(mask, n);
  for (const auto& perm : perms) {
    std::uint64_t image = apply_perm(mask, perm);
    std::uint64_t key = lex_key(image, n);
    if (key < best_key) {
      best_key = key;
      best = image;
    }
  }
  return best;
}

Grid grid_from_mask(std::uint64_t mask, int h, int w) {
  Grid grid(h, w);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (mask >> (r * w + c) & 1ull) grid.set(r, c, true);
    }
  }
  return grid;
}

std::uint64_t mask_from_grid(const Grid& grid) {
  std::uint64_t mask = 0;
  for (int r = 0; r < grid.height(); ++r) {
    for (int c = 0; c < grid.width(); ++c) {
      if (grid.alive(r, c)) mask |= 1ull << (r * grid.width() + c);
    }
  }
  return mask;
}

struct SnakeSearch {
  int n = 0;
  std::vector<std::uint64_t> neighbor;
  std::vector<std::vector<int>> perms;
  bool use_symmetry = false;
  bool collect = true;
  int best = 0;
  std::unordered_set<std::uint64_t> at_best;
  unsigned long long explored = 0;
  // When positive, stop as soon as this many snakes of target_length are
  // collected; used by the capped maximal enumeration.
  int stop_after = 0;
  int target_length = 0;
  bool stopped = false;

  std::uint64_t key_of(std::uint64_t occ) const {
    return use_symmetry ? canonical_mask(occ, perms, n) : occ;
  }

  void record(std::uint64_t occ, int len) {
    if (len > best) {
      best = len;
      at_best.clear();
    }
    if (collect && len == best) {
      at_best.insert(key_of(occ));
      if (stop_after > 0 && best == target_length &&
          static_cast<int>(at_best.size()) >= stop_after) {
        stopped = true;
      }
    }
  }

  // occ: living cells. head: index of the unique extendable end.
  // body_adj: cells 4-adjacent to occ minus the head; such cells can never
  // join the path, which gives the branch and bound estimate.
  void extend(std::uint64_t occ, int head, std::uint64_t body_adj, int len) {
    ++explored;
    record(occ, len);
    if (stopped) return;
    std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
    std::uint64_t reachable = full & ~occ & ~body_adj;
    if (len + std::popcount(reachable) < best) return;
    std::uint64_t candidates = neighbor[head] & ~occ;
    while (candidates) {
      int cell = std::countr_zero(candidates);
      candidates &= candidates - 1;
      // The new cell must touch only the current head.
      if ((neighbor[cell] & occ) != (1ull << head)) continue;
      extend(occ | (1ull << cell), cell, body_adj | neighbor[head], len + 1);
      if (stopped) return;
    }
  }

  void run(const std::vector<int>& starts) {
    for (int s : starts) {
      extend(1ull << s, s, 0, 1);
      if (stopped) return;
    }
  }
};

SnakeSearch make_search(int h, int w, bool use_symmetry) {
  SnakeSearch search;
  search.n = h * w;
  search.use_symmetry = use_symmetry;
  search.perms = symmetry_perms(h, w);
  search.neighbor.assign(search.n, 0);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      int i = r * w + c;
      if (r > 0) search.neighbor[i] |= 1ull << (i - w);
      if (r + 1 < h) search.neighbor[i] |= 1ull << (i + w);
      if (c > 0) search.neighbor[i] |= 1ull << (i - 1);
      if (c + 1 < w) search.neighbor[i] |= 1ull << (i + 1);
    }
  }
  return search;
}

std::vector<int> start_cells(int h, int w, bool use_symmetry,
                             const std::vector<std::vector<int>>& perms) {
  int n = h * w;
  std::vector<int> starts;
  if (!use_symmetry) {
    starts.resize(n);
    for (int i = 0; i < n; ++i) starts[i] = i;
    return starts;
  }
  // One representative per cell orbit. Every snake has a symmetric image
  // whose endpoint lies on a representative, so nothing is missed.
  std::vector<std::uint8_t> covered(n, 0);
  for (int i = 0; i < n; ++i) {
    if (covered[i]) continue;
    starts.push_back(i);
    for (const auto& perm : perms) {
      for (int j = 0; j < n; ++j) {
        if (perm[j] == i) covered[j] = 1;
      }
    }
  }
  return starts;
}

void check_feasible(int h, int w, int limit, const char* what) {
  if (h < 1 || w < 1) {
    throw Error(ErrorCode::Config, "grid dimensions must be at least 1x1");
  }
  long long n = 1ll * h * w;
  if (n > limit) {
    throw Error(ErrorCode::Refusal,
                std::string(what) + ": " + std::to_string(h) + "x" + std::to_string(w) + " has " +
                    std::to_string(n) + " cells, above the limit of " + std::to_string(limit) +
                    "; use bounds or the serpentine construction instead");
  }
}

std::vector<Grid> sorted_grids_from_masks(const std::unordered_set<std::uint64_t>& masks, int h,
                                          int w) {
  std::vector<std::uint64_t> ordered(masks.begin(), masks.end());
  std::sort(ordered.begin(), ordered.end(), [&](std::uint64_t a, std::uint64_t b) {
    return lex_key(a, h * w) < lex_key(b, h * w);
  });
  std::vector<Grid> grids;
  grids.reserve(ordered.size());
  for (auto mask : ordered) grids.push_back(grid_from_mask(mask, h, w));
  return grids;
}

}  // namespace

int dfs_cell_limit() { return env_limit("SNAKES_DFS_CELL_LIMIT", 36); }

int oracle_cell_limit() { return env_limit("SNAKES_ORACLE_CELL_LIMIT", 20); }

EnumerationResult max_snake_length(int height, int width, const EnumerationOptions& options) {
  int limit = options.cell_limit.value_or(dfs_cell_limit());
  limit = std::min(limit, 64);
  check_feasible(height, width, limit, "max_snake_length");

  SnakeSearch search = make_search(height, width, options.use_symmetry);
  search.run(start_cells(height, width, options.use_symmetry, search.perms));

  EnumerationResult result;
  result.max_length = search.best;
  result.count_at_max = static_cast<long long>(search.at_best.size());
  result.explored_states = search.explored;
  result.witnesses = sorted_grids_from_masks(search.at_best, height, width);
  if (options.cap_witnesses > 0 &&
      static_cast<int>(result.witnesses.size()) > options.cap_witnesses) {
    result.witnesses.resize(options.cap_witnesses);
    result.witnesses_truncated = true;
  }
  return result;
}

int subset_oracle_max(int height, int width, std::optional<int> cell_limit) {
  int limit = std::min(cell_limit.value_or(oracle_cell_limit()), 30);
  check_feasible(height, width, limit, "subset_oracle_max");
  int n = height * width;
  int best = 0;
  for (std::uint64_t mask = 0, end = 1ull << n; mask < end; ++mask) {
    int living = std::popcount(mask);
    if (living <= best) continue;
    Grid grid = grid_from_mask(mask, height, width);
    StructureReport report = classify(grid);
    if (report.kind == StructureKind::ValidSnake) best = living;
  }
  return best;
}

MaximalSnakeList enumerate_maximal_snakes(int height, int width, int cap,
                                          std::optional<int> cell_limit) {
  int limit = std::min(cell_limit.value_or(dfs_cell_limit()), 64);
  check_feasible(height, width, limit, "enumerate_maximal_snakes");

  auto starts = start_cells(height, width, true, symmetry_perms(height, width));
  SnakeSearch search = make_search(height, width, true);
  if (cap > 0) {
    // Probe pass establishes the maximal length, then the collection pass
    // aborts once enough symmetry classes have been gathered. Each class
    // expands to at least one exact cell set, so the cap stays satisfiable.
    SnakeSearch probe = make_search(height, width, true);
    probe.collect = false;
    probe.run(starts);
    search.stop_after = cap;
    search.target_length = probe.best;
  }
  search.run(starts);

  std::set<std::string> seen;
  std::vector<Grid> all;
  for (auto mask : search.at_best) {
    Grid canon = grid_from_mask(mask, height, width);
    for (auto& image : symmetry_orbit(canon)) {
      if (seen.insert(image.cell_string()).second) {
        all.push_back(std::move(image));
      }
    }
  }
  std::sort(all.begin(), all.end(),
            [](const Grid& a, const Grid& b) { return a.cell_string() < b.cell_string(); });

  MaximalSnakeList out;
  if (cap > 0 && static_cast<int>(all.size()) > cap) {
    out.grids.assign(all.begin(), all.begin() + cap);
    out.truncated = true;
  } else {
    out.grids = std::move(all);
    out.truncated = search.stopped;
  }
  return out;
}

int serpentine_length(int height, int width) {
  return (height + 1) / 2 * width + height / 2;
}

Grid construct_serpentine(int height, int width) {
  if (height < 1 || width < 1) {
    throw Error(ErrorCode::Config, "grid dimensions must be at least 1x1");
  }
  Grid grid(height, width);
  bool connector_right = true;
  for (int r = 0; r < height; ++r) {
    if (r % 2 == 0) {
      for (int c = 0; c < width; ++c) grid.set(r, c, true);
    } else {
      grid.set(r, connector_right ? width - 1 : 0, true);
      connector_right = !connector_right;
    }
  }
  return grid;
}

BoundReport bound_report(int height, int width, std::optional<int> known_max) {
  if (height < 1 || width < 1) {
    throw Error(ErrorCode::Config, "grid dimensions must be at least 1x1");
  }
  BoundReport report;
  report.trivial_upper = 1ll * height * width;
  report.serpentine_lower = serpentine_length(height, width);
  report.density_from_known_max = known_max.has_value();
  int numerator = known_max.value_or(report.serpentine_lower);
  report.length_density = static_cast<double>(numerator) / report.trivial_upper;
  return report;
}

Grid canonical_form(const Grid& grid) {
  auto perms = symmetry_perms(grid.height(), grid.width());
  int n = grid.height() * grid.width();
  if (n <= 64) {
    std::uint64_t mask = canonical_mask(mask_from_grid(grid), perms, n);
    return grid_from_mask(mask, grid.height(), grid.width());
  }
  // Large grids fall back to string comparison over permuted images.
  std::string src = grid.cell_string();
  std::string best = src;
  for (const auto& perm : perms) {
    std::string image(src.size(), '0');
    for (std::size_t i = 0; i < perm.size(); ++i) image[i] = src[perm[i]];
    if (image < best) best = image;
  }
  std::vector<std::uint8_t> cells(best.size());
  for (std::size_t i = 0; i < best.size(); ++i) cells[i] = best[i] == '1';
  return Grid(grid.height(), grid.width(), cells);
}

std::vector<Grid> symmetry_orbit(const Grid& grid) {
  auto perms = symmetry_perms(grid.height(), grid.width());
  std::string src = grid.cell_string();
  std::set<std::string> images;
  for (const auto& perm : perms) {
    std::string image(src.size(), '0');
    for (std::size_t i = 0; i < perm.size(); ++i) image[i] = src[perm[i]];
    images.insert(std::move(image));
  }
  std::vector<Grid> out;
  for (const auto& image : images) {
    std::vector<std::uint8_t> cells(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) cells[i] = image[i] == '1';
    out.emplace_back(grid.height(), grid.width(), cells);
  }
  return out;
}

}  // namespace snakes
