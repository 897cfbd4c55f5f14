#include "snakes/grid.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "snakes/error.hpp"

namespace snakes {

namespace {

constexpr std::array<Cell, 4> kNeighborOffsets{{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}};

}  // namespace

Grid::Grid(int height, int width) : height_(height), width_(width) {
  if (height < 1 || width < 1) {
    throw Error(ErrorCode::Config, "grid dimensions must be at least 1x1");
  }
  cells_.assign(static_cast<std::size_t>(height) * width, 0);
}

Grid::Grid(int height, int width, const std::vector<std::uint8_t>& cells)
    : Grid(height, width) {
  if (cells.size() != cells_.size()) {
    throw Error(ErrorCode::Shape, "cell vector does not match grid dimensions");
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] > 1) {
      throw Error(ErrorCode::Domain, "cell values must be 0 or 1");
    }
    cells_[i] = cells[i];
  }
}

void Grid::set(int row, int col, bool value) {
  if (!in_bounds(row, col)) {
    throw Error(ErrorCode::Bounds, "cell coordinate out of bounds");
  }
  cells_[static_cast<std::size_t>(row) * width_ + col] = value ? 1 : 0;
}

int Grid::living_count() const {
  int n = 0;
  for (auto c : cells_) n += c;
  return n;
}

std::vector<Cell> Grid::living_cells() const {
  std::vector<Cell> out;
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      if (alive(r, c)) out.push_back({r, c});
    }
  }
  return out;
}

std::string Grid::cell_string() const {
  std::string s(cells_.size(), '0');
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i]) s[i] = '1';
  }
  return s;
}

Grid Grid::cropped(int height, int width) const {
  if (height < 1 || width < 1 || height > height_ || width > width_) {
    throw Error(ErrorCode::Bounds, "crop dimensions out of range");
  }
  Grid out(height, width);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (alive(r, c)) out.set(r, c, true);
    }
  }
  return out;
}

bool Grid::operator<(const Grid& other) const {
  if (height_ != other.height_) return height_ < other.height_;
  if (width_ != other.width_) return width_ < other.width_;
  return cells_ < other.cells_;
}

int degree(const Grid& grid, Cell cell) {
  if (!grid.in_bounds(cell.row, cell.col)) {
    throw Error(ErrorCode::Bounds, "degree: cell coordinate out of bounds");
  }
  if (!grid.alive(cell.row, cell.col)) {
    throw Error(ErrorCode::Domain, "degree: cell is dead");
  }
  int d = 0;
  for (auto off : kNeighborOffsets) {
    int r = cell.row + off.row;
    int c = cell.col + off.col;
    if (grid.in_bounds(r, c) && grid.alive(r, c)) ++d;
  }
  return d;
}

std::vector<std::vector<Cell>> components(const Grid& grid) {
  const int h = grid.height();
  const int w = grid.width();
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(h) * w, 0);
  std::vector<std::vector<Cell>> out;
  std::vector<Cell> stack;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (!grid.alive(r, c) || seen[static_cast<std::size_t>(r) * w + c]) continue;
      std::vector<Cell> comp;
      stack.clear();
      stack.push_back({r, c});
      seen[static_cast<std::size_t>(r) * w + c] = 1;
      while (!stack.empty()) {
        Cell cur = stack.back();
        stack.pop_back();
        comp.push_back(cur);
        for (auto off : kNeighborOffsets) {
          int nr = cur.row + off.row;
          int nc = cur.col + off.col;
          if (!grid.in_bounds(nr, nc) || !grid.alive(nr, nc)) continue;
          std::size_t idx = static_cast<std::size_t>(nr) * w + nc;
          if (!seen[idx]) {
            seen[idx] = 1;
            stack.push_back({nr, nc});
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  }
  // Scan order already yields components sorted by minimal coordinate.
  return out;
}

StructureReport classify(const Grid& grid) {
  StructureReport report;
  auto comps = components(grid);
  report.component_count = static_cast<int>(comps.size());
  report.length = grid.living_count();
  if (report.length == 0) {
    report.kind = StructureKind::Empty;
    return report;
  }

  for (auto cell : grid.living_cells()) {
    int d = degree(grid, cell);
    report.max_degree = std::max(report.max_degree, d);
    if (d <= 1) report.endpoints.push_back(cell);
  }
  if (report.max_degree >= 3) report.flags.branching = true;
  if (report.component_count >= 2) report.flags.multiple_components = true;

  // A connected component with as many adjacent pairs as cells contains a
  // cycle. Each adjacency is counted once via the degree sum.
  for (const auto& comp : comps) {
    long long degree_sum = 0;
    for (auto cell : comp) degree_sum += degree(grid, cell);
    long long edges = degree_sum / 2;
    if (edges >= static_cast<long long>(comp.size())) {
      report.flags.cycle = true;
      break;
    }
  }

  report.kind = report.flags.any() ? StructureKind::Malformed : StructureKind::ValidSnake;
  return report;
}

DensityProfile density_profile(const Grid& grid) {
  DensityProfile profile;
  const int h = grid.height();
  const int w = grid.width();
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      bool border = r == 0 || r == h - 1 || c == 0 || c == w - 1;
      bool living = grid.alive(r, c);
      if (border) {
        ++profile.border_cells;
        if (living) ++profile.living_border;
      } else {
        ++profile.interior_cells;
        if (living) ++profile.living_interior;
      }
    }
  }
  profile.living_total = profile.living_border + profile.living_interior;
  profile.overall = static_cast<double>(profile.living_total) / grid.area();
  profile.border = profile.border_cells > 0
                       ? static_cast<double>(profile.living_border) / profile.border_cells
                       : 0.0;
  profile.has_interior = profile.interior_cells > 0;
  profile.interior = profile.has_interior
                         ? static_cast<double>(profile.living_interior) / profile.interior_cells
                         : 0.0;
  return profile;
}

int count_motifs(const Grid& grid, Motif motif) {
  const int h = grid.height();
  const int w = grid.width();
  int count = 0;
  if (motif == Motif::StairStep) {
    // 2x2 windows whose living pattern is an L-tromino.
    for (int r = 0; r + 1 < h; ++r) {
      for (int c = 0; c + 1 < w; ++c) {
        int living = grid.alive(r, c) + grid.alive(r, c + 1) + grid.alive(r + 1, c) +
                     grid.alive(r + 1, c + 1);
        if (living == 3) ++count;
      }
    }
    return count;
  }
  // Right triangle of six dead cells: rows of 3, 2, 1 in one of the four
  // axis-aligned orientations, placed fully inside the grid.
  static const std::array<std::array<Cell, 6>, 4> kTriangles{{
      {{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}}},  // right angle at NW
      {{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}},  // NE
      {{{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}}},  // SW
      {{{0, 2}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}}},  // SE
  }};
  for (int r = 0; r + 2 < h; ++r) {
    for (int c = 0; c + 2 < w; ++c) {
      for (const auto& tri : kTriangles) {
        bool all_dead = true;
        for (auto off : tri) {
          if (grid.alive(r + off.row, c + off.col)) {
            all_dead = false;
            break;
          }
        }
        if (all_dead) ++count;
      }
    }
  }
  return count;
}

Grid parse_grid(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::Parse, "line 1: missing header");
  }
  std::istringstream header(line);
  long long h = 0, w = 0;
  std::string extra;
  if (!(header >> h >> w) || (header >> extra) || h < 1 || w < 1) {
    throw Error(ErrorCode::Parse, "line 1: header must be \"H W\" with positive integers");
  }
  if (h > 4096 || w > 4096) {
    throw Error(ErrorCode::Parse, "line 1: grid dimensions too large");
  }
  Grid grid(static_cast<int>(h), static_cast<int>(w));
  for (int r = 0; r < h; ++r) {
    int line_no = r + 2;
    if (!std::getline(in, line)) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": missing row");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (static_cast<long long>(line.size()) != w) {
      throw Error(ErrorCode::Parse,
                  "line " + std::to_string(line_no) + ": expected " + std::to_string(w) +
                      " characters, got " + std::to_string(line.size()));
    }
    for (int c = 0; c < w; ++c) {
      if (line[c] == '1') {
        grid.set(r, c, true);
      } else if (line[c] != '0') {
        throw Error(ErrorCode::Parse,
                    "line " + std::to_string(line_no) + ": invalid character '" +
                        std::string(1, line[c]) + "'");
      }
    }
  }
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) {
      throw Error(ErrorCode::Parse, "unexpected trailing content after grid rows");
    }
  }
  return grid;
}

std::string serialize_grid(const Grid& grid) {
  std::string out = std::to_string(grid.height()) + " " + std::to_string(grid.width());
  for (int r = 0; r < grid.height(); ++r) {
    out += '\n';
    for (int c = 0; c < grid.width(); ++c) {
      out += grid.alive(r, c) ? '1' : '0';
    }
  }
  return out;
}

std::vector<Grid> parse_grids(const std::string& text) {
  std::vector<Grid> grids;
  std::istringstream in(text);
  std::string line;
  std::string block;
  int block_start_line = 1;
  int line_no = 0;
  auto flush = [&]() {
    if (block.empty()) return;
    try {
      grids.push_back(parse_grid(block));
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse,
                  "grid " + std::to_string(grids.size()) + " (starting at line " +
                      std::to_string(block_start_line) + "): " + e.what());
    }
    block.clear();
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
    } else {
      if (block.empty()) block_start_line = line_no;
      block += line;
      block += '\n';
    }
  }
  flush();
  return grids;
}

std::string serialize_grids(const std::vector<Grid>& grids) {
  std::string out;
  for (std::size_t i = 0; i < grids.size(); ++i) {
    if (i > 0) out += "\n\n";
    out += serialize_grid(grids[i]);
  }
  if (!grids.empty()) out += '\n';
  return out;
}

std::string render_pbm(const Grid& grid) {
  std::string out = "P1\n" + std::to_string(grid.width()) + " " + std::to_string(grid.height()) + "\n";
  for (int r = 0; r < grid.height(); ++r) {
    for (int c = 0; c < grid.width(); ++c) {
      if (c > 0) out += ' ';
      out += grid.alive(r, c) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

const char* structure_kind_name(StructureKind kind) {
  switch (kind) {
    case StructureKind::Empty: return "EMPTY";
    case StructureKind::ValidSnake: return "VALID_SNAKE";
    case StructureKind::Malformed: return "MALFORMED";
  }
  return "UNKNOWN";
}

}  // namespace snakes
