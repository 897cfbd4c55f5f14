#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace snakes {

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

// H x W binary cell matrix under 4-connexity. Value 1 is a living (black)
// cell, 0 a dead (white) one. Immutable in spirit: operations on grids
// return new values.
class Grid {
 public:
  Grid(int height, int width);
  Grid(int height, int width, const std::vector<std::uint8_t>& cells);

  int height() const { return height_; }
  int width() const { return width_; }
  long long area() const { return 1ll * height_ * width_; }

  bool in_bounds(int row, int col) const {
    return row >= 0 && row < height_ && col >= 0 && col < width_;
  }
  bool alive(int row, int col) const {
    return cells_[static_cast<std::size_t>(row) * width_ + col] != 0;
  }
  void set(int row, int col, bool value);

  int living_count() const;
  std::vector<Cell> living_cells() const;

  // Row-major '0'/'1' string, used for ordering and deduplication.
  std::string cell_string() const;

  Grid cropped(int height, int width) const;

  bool operator==(const Grid& other) const = default;
  bool operator<(const Grid& other) const;

 private:
  int height_;
  int width_;
  std::vector<std::uint8_t> cells_;
};

enum class StructureKind { Empty, ValidSnake, Malformed };

struct MalformationFlags {
  bool branching = false;
  bool cycle = false;
  bool multiple_components = false;

  bool any() const { return branching || cycle || multiple_components; }
  bool operator==(const MalformationFlags&) const = default;
};

struct StructureReport {
  StructureKind kind = StructureKind::Empty;
  MalformationFlags flags;
  int length = 0;
  int component_count = 0;
  std::vector<Cell> endpoints;  // living cells of degree <= 1, row-major order
  int max_degree = 0;
};

struct DensityProfile {
  double overall = 0.0;
  double border = 0.0;
  double interior = 0.0;
  bool has_interior = false;
  // Integer counts behind the ratios, kept so the accounting identity
  // living_total == living_border + living_interior is exact.
  long long living_total = 0;
  long long living_border = 0;
  long long living_interior = 0;
  long long border_cells = 0;
  long long interior_cells = 0;
};

enum class Motif { StairStep, DeadTriangle };

// Number of living 4-neighbors of a living cell. Throws a bounds error for
// out-of-range coordinates and a domain error for dead cells.
int degree(const Grid& grid, Cell cell);

// Maximal 4-connected sets of living cells, each sorted row-major, the list
// ordered by each component's minimal coordinate.
std::vector<std::vector<Cell>> components(const Grid& grid);

StructureReport classify(const Grid& grid);

DensityProfile density_profile(const Grid& grid);

int count_motifs(const Grid& grid, Motif motif);

// Text format: header "H W" then H rows of W characters from {0,1}.
Grid parse_grid(const std::string& text);
std::string serialize_grid(const Grid& grid);

// Multi-grid text: blocks separated by one or more blank lines.
std::vector<Grid> parse_grids(const std::string& text);
std::string serialize_grids(const std::vector<Grid>& grids);

// Plain PBM (P1), one image pixel per cell, living = 1 (black).
std::string render_pbm(const Grid& grid);

const char* structure_kind_name(StructureKind kind);

}  // namespace snakes
