#pragma once

// Green's relations via structural keys. Rows of the eggbox picture are
// R-classes, columns are L-classes:
//
//   RKey: the center row R_ab for type II words (proper and improper),
//         otherwise the type I prefix (i, m).
//   LKey: the center column L_ab for type I words and the improper word ab,
//         otherwise the type II suffix (n, j).
//
// D is universal (the semigroups are bisimple); H is key-pair equality and
// is trivial (combinatorial), which the property tests confirm.

#include <cstdint>
#include <string>
#include <utility>

#include "core.hpp"

namespace orthomon {

struct RKey {
  bool center = false;  // the R_ab row
  std::uint32_t i = 0;
  std::uint64_t m = 0;

  friend bool operator==(const RKey&, const RKey&) = default;

  std::string str() const {
    return center ? "R_ab"
                  : "row(" + std::to_string(i) + "," + std::to_string(m) + ")";
  }
};

struct LKey {
  bool center = false;  // the L_ab column
  std::uint64_t n = 0;
  std::uint32_t j = 0;

  friend bool operator==(const LKey&, const LKey&) = default;

  std::string str() const {
    return center ? "L_ab"
                  : "col(" + std::to_string(n) + "," + std::to_string(j) + ")";
  }
};

std::pair<RKey, LKey> green_keys(const ReducedWord& x);

bool r_related(const ReducedWord& x, const ReducedWord& y);
bool l_related(const ReducedWord& x, const ReducedWord& y);
bool h_related(const ReducedWord& x, const ReducedWord& y);
bool d_related(const ReducedWord& x, const ReducedWord& y);

inline bool in_R_class(const ReducedWord& x, const ReducedWord& base) {
  return r_related(x, base);
}
inline bool in_L_class(const ReducedWord& x, const ReducedWord& base) {
  return l_related(x, base);
}

}  // namespace orthomon
