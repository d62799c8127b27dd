#include "green.hpp"

namespace orthomon {

std::pair<RKey, LKey> green_keys(const ReducedWord& x) {
  WordType t = classify(x);
  RKey r;
  LKey l;
  switch (t) {
    case WordType::I:
      r = RKey{false, x.i, x.m};
      l = LKey{true, 0, 0};
      break;
    case WordType::IIImproper:
      r = RKey{true, 0, 0};
      l = LKey{true, 0, 0};
      break;
    case WordType::IIProper:
      r = RKey{true, 0, 0};
      l = LKey{false, x.n, x.j};
      break;
    case WordType::III:
      r = RKey{false, x.i, x.m};
      l = LKey{false, x.n, x.j};
      break;
  }
  return {r, l};
}

bool r_related(const ReducedWord& x, const ReducedWord& y) {
  return green_keys(x).first == green_keys(y).first;
}

bool l_related(const ReducedWord& x, const ReducedWord& y) {
  return green_keys(x).second == green_keys(y).second;
}

bool h_related(const ReducedWord& x, const ReducedWord& y) {
  auto kx = green_keys(x);
  auto ky = green_keys(y);
  return kx.first == ky.first && kx.second == ky.second;
}

bool d_related(const ReducedWord&, const ReducedWord&) {
  return true;  // bisimple: one D-class
}

}  // namespace orthomon
