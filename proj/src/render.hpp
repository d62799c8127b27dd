#pragma once

// Eggbox grids and band diagrams.
//
// Grid rows are R-classes and columns are L-classes. The row labels run
// a b^m (m descending to 2), then the empty prefix (the center R_ab row),
// then b, b^2, ...; the column labels run a^n b (n descending to 2), then
// ab (the center L_ab column), then a, a^2, .... Rows with i = 1 truncate
// at mu, columns with j = 1 truncate at nu. A cell is the product of its
// row label and column label, the empty prefix acting as identity.
//
// The band diagram's nodes are all idempotents in the exponent window; bold
// edges are covering pairs of the natural order, thin edges join distinct
// idempotents sharing an R- or L-class.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace orthomon {

struct EggboxGrid {
  Params params;
  // nullopt marks the center row (empty prefix)
  std::vector<std::optional<ReducedWord>> row_labels;
  std::vector<ReducedWord> col_labels;  // the center column label is ab
  std::size_t center_col = 0;
  std::vector<std::vector<ReducedWord>> cells;

  std::string row_header(std::size_t r) const {
    return row_labels[r] ? display(*row_labels[r]) : "";
  }
  std::string col_header(std::size_t c) const { return display(col_labels[c]); }
};

EggboxGrid eggbox_grid(const Params& p, std::uint64_t rows,
                       std::uint64_t cols);

// Canonical machine-readable form: header row of column labels, then one
// row per grid row (header first), tab-separated, newline-terminated.
std::string eggbox_tsv(const EggboxGrid& grid);

// Human-aligned rendering of the same data.
std::string eggbox_ascii(const EggboxGrid& grid);

struct BandDiagram {
  Params params;
  std::uint64_t depth = 0;
  std::vector<ReducedWord> nodes;  // sorted by (i,m,n,j)
  // (lower, upper): natural-order covering pairs, indices into nodes
  std::vector<std::pair<std::size_t, std::size_t>> bold_edges;
  struct ThinEdge {
    std::size_t x, y;  // x < y
    char rel;          // 'R' or 'L'
  };
  std::vector<ThinEdge> thin_edges;
  // within distance 1 of the exponent boundary; covers there may be
  // window artifacts
  std::vector<bool> boundary;
};

BandDiagram band_hasse(const Params& p, std::uint64_t depth);

// One graph; a cluster per band D-class; covering edges upper -- lower with
// style=bold; thin edges labeled "R" or "L"; boundary nodes annotated.
std::string band_dot(const BandDiagram& diagram);

}  // namespace orthomon
