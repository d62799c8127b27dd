#include "render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "arith.hpp"
#include "green.hpp"
#include "structure.hpp"

namespace orthomon {

EggboxGrid eggbox_grid(const Params& p, std::uint64_t rows,
                       std::uint64_t cols) {
  if (rows < 2 || cols < 2)
    raise(ErrorCode::Domain, "eggbox grid needs rows, cols >= 2");

  EggboxGrid grid;
  grid.params = p;

  std::uint64_t desired_above = (rows - 1) / 2;
  std::uint64_t avail_above =
      p.mu.is_infinite() ? desired_above : p.mu.value() - 1;
  std::uint64_t above = std::min(desired_above, avail_above);
  std::uint64_t below = rows - 1 - above;
  for (std::uint64_t m = above + 1; m >= 2; --m)
    grid.row_labels.emplace_back(ReducedWord{1, m, 0, 0});  // a b^m
  grid.row_labels.emplace_back(std::nullopt);               // center
  for (std::uint64_t m = 1; m <= below; ++m)
    grid.row_labels.emplace_back(ReducedWord{0, m, 0, 0});  // b^m

  std::uint64_t desired_left = (cols - 1) / 2;
  std::uint64_t avail_left =
      p.nu.is_infinite() ? desired_left : p.nu.value() - 1;
  std::uint64_t left = std::min(desired_left, avail_left);
  std::uint64_t right = cols - 1 - left;
  for (std::uint64_t n = left + 1; n >= 2; --n)
    grid.col_labels.push_back(ReducedWord{0, 0, n, 1});  // a^n b
  grid.center_col = grid.col_labels.size();
  grid.col_labels.push_back(kIdemAB);
  for (std::uint64_t n = 1; n <= right; ++n)
    grid.col_labels.push_back(ReducedWord{0, 0, n, 0});  // a^n

  for (const auto& row : grid.row_labels) {
    ReducedWord row_elem = row ? *row : kIdemAB;
    std::vector<ReducedWord> cells;
    cells.reserve(grid.col_labels.size());
    for (const ReducedWord& col : grid.col_labels)
      cells.push_back(multiply(row_elem, col, p));
    grid.cells.push_back(std::move(cells));
  }
  return grid;
}

std::string eggbox_tsv(const EggboxGrid& grid) {
  std::string out;
  for (std::size_t c = 0; c < grid.col_labels.size(); ++c) {
    out += '\t';
    out += grid.col_header(c);
  }
  out += '\n';
  for (std::size_t r = 0; r < grid.cells.size(); ++r) {
    out += grid.row_header(r);
    for (const ReducedWord& cell : grid.cells[r]) {
      out += '\t';
      out += display(cell);
    }
    out += '\n';
  }
  return out;
}

std::string eggbox_ascii(const EggboxGrid& grid) {
  std::size_t ncols = grid.col_labels.size();
  std::vector<std::size_t> width(ncols + 1, 0);
  for (std::size_t r = 0; r < grid.cells.size(); ++r)
    width[0] = std::max(width[0], grid.row_header(r).size());
  for (std::size_t c = 0; c < ncols; ++c) {
    width[c + 1] = grid.col_header(c).size();
    for (std::size_t r = 0; r < grid.cells.size(); ++r)
      width[c + 1] = std::max(width[c + 1], display(grid.cells[r][c]).size());
  }

  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  std::ostringstream out;
  out << pad("", width[0]) << " |";
  for (std::size_t c = 0; c < ncols; ++c)
    out << ' ' << pad(grid.col_header(c), width[c + 1]);
  out << '\n';
  std::size_t total = width[0] + 2;
  for (std::size_t c = 0; c < ncols; ++c) total += width[c + 1] + 1;
  out << std::string(total, '-') << '\n';
  for (std::size_t r = 0; r < grid.cells.size(); ++r) {
    out << pad(grid.row_header(r), width[0]) << " |";
    for (std::size_t c = 0; c < ncols; ++c)
      out << ' ' << pad(display(grid.cells[r][c]), width[c + 1]);
    out << '\n';
  }
  return out.str();
}

BandDiagram band_hasse(const Params& p, std::uint64_t depth) {
  if (depth < 2) raise(ErrorCode::Domain, "band diagram needs depth >= 2");
  BandDiagram diagram;
  diagram.params = p;
  diagram.depth = depth;
  for (const ReducedWord& x : window_elements(p, depth))
    if (is_idempotent(x, p)) diagram.nodes.push_back(x);

  std::size_t n = diagram.nodes.size();
  auto lt = [&](std::size_t e, std::size_t f) {
    return e != f && natural_le(diagram.nodes[e], diagram.nodes[f], p);
  };
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t f = 0; f < n; ++f) {
      if (!lt(e, f)) continue;
      bool covered = true;
      for (std::size_t g = 0; g < n && covered; ++g)
        if (g != e && g != f && lt(e, g) && lt(g, f)) covered = false;
      if (covered) diagram.bold_edges.emplace_back(e, f);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (r_related(diagram.nodes[x], diagram.nodes[y]))
        diagram.thin_edges.push_back({x, y, 'R'});
      if (l_related(diagram.nodes[x], diagram.nodes[y]))
        diagram.thin_edges.push_back({x, y, 'L'});
    }
  }
  diagram.boundary.resize(n);
  for (std::size_t x = 0; x < n; ++x)
    diagram.boundary[x] =
        std::max(diagram.nodes[x].m, diagram.nodes[x].n) + 1 >= depth;
  return diagram;
}

std::string band_dot(const BandDiagram& diagram) {
  std::ostringstream out;
  out << "graph band {\n";
  out << "  // nu=" << diagram.params.nu.str()
      << " mu=" << diagram.params.mu.str() << " depth=" << diagram.depth
      << "\n";
  out << "  node [shape=box];\n";

  // one cluster per band D-class, ordered by minimal member
  std::map<ReducedWord, std::vector<std::size_t>> clusters;
  for (std::size_t idx = 0; idx < diagram.nodes.size(); ++idx) {
    BandDClass cls = idempotent_dclass(diagram.nodes[idx], diagram.params);
    clusters[cls.members.front()].push_back(idx);
  }
  std::size_t cluster_id = 0;
  for (const auto& [min_member, members] : clusters) {
    out << "  subgraph cluster_" << cluster_id++ << " {\n";
    for (std::size_t idx : members) {
      out << "    \"" << display(diagram.nodes[idx]) << "\"";
      if (diagram.boundary[idx]) out << " [boundary=\"yes\"]";
      out << ";\n";
    }
    out << "  }\n";
  }

  for (const auto& [lower, upper] : diagram.bold_edges)
    out << "  \"" << display(diagram.nodes[upper]) << "\" -- \""
        << display(diagram.nodes[lower]) << "\" [style=bold];\n";
  for (const BandDiagram::ThinEdge& edge : diagram.thin_edges)
    out << "  \"" << display(diagram.nodes[edge.x]) << "\" -- \""
        << display(diagram.nodes[edge.y]) << "\" [label=\"" << edge.rel
        << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace orthomon
