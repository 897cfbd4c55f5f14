#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "snakes/grid.hpp"

namespace snakes {

struct EnumerationOptions {
  // Non-positive cap keeps every witness.
  int cap_witnesses = 0;
  bool use_symmetry = true;
  // Upper bound on H*W for the exhaustive search. Defaults from the
  // SNAKES_DFS_CELL_LIMIT environment variable, else 36. Hard ceiling 64
  // (the search state is a 64-bit occupancy mask).
  std::optional<int> cell_limit;
};

struct EnumerationResult {
  int max_length = 0;
  std::vector<Grid> witnesses;
  // Distinct maximal snakes by exact cell set, or distinct symmetry classes
  // when use_symmetry is on.
  long long count_at_max = 0;
  unsigned long long explored_states = 0;
  bool witnesses_truncated = false;
};

struct BoundReport {
  long long trivial_upper = 0;     // H*W
  int serpentine_lower = 0;        // length of the constructive snake
  double length_density = 0.0;     // max length (known or lower bound) / (H*W)
  bool density_from_known_max = false;
};

struct MaximalSnakeList {
  std::vector<Grid> grids;
  bool truncated = false;
};

int dfs_cell_limit();     // SNAKES_DFS_CELL_LIMIT, default 36
int oracle_cell_limit();  // SNAKES_ORACLE_CELL_LIMIT, default 20

// Exact maximal snake length via depth-first extension of induced paths:
// a cell may be appended only when it is 4-adjacent to the current head and
// to no other living cell. Branch and bound prunes states that cannot reach
// the best length found so far.
EnumerationResult max_snake_length(int height, int width,
                                   const EnumerationOptions& options = {});

// Independent oracle: iterates every cell subset and classifies it.
// Shares nothing with the DFS above except the classifier.
int subset_oracle_max(int height, int width, std::optional<int> cell_limit = std::nullopt);

// Every maximal snake as an exact cell set, sorted, truncated at cap
// (non-positive cap = no limit).
MaximalSnakeList enumerate_maximal_snakes(int height, int width, int cap = 0,
                                          std::optional<int> cell_limit = std::nullopt);

// Alternating full rows joined by single connector cells. Always a valid
// snake of length ceil(H/2)*W + floor(H/2).
Grid construct_serpentine(int height, int width);
int serpentine_length(int height, int width);

BoundReport bound_report(int height, int width, std::optional<int> known_max = std::nullopt);

// Lexicographically smallest row-major image of the grid under the
// rectangle's symmetry group (8 elements when square, 4 otherwise).
Grid canonical_form(const Grid& grid);

// All distinct images of the grid under the applicable symmetry group,
// sorted by cell string.
std::vector<Grid> symmetry_orbit(const Grid& grid);

}  // namespace snakes
