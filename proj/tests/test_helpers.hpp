#pragma once

#include <string>

#include "arith.hpp"
#include "core.hpp"

namespace orthomon::test {

inline Params params(const char* nu, const char* mu) {
  return Params{ExtNat::parse(nu), ExtNat::parse(mu)};
}

inline ReducedWord of(const std::string& text, const Params& p) {
  return reduce_word(parse_word(text), p);
}

// Independent evaluator for the bicyclic case (nu = mu = 1): fold the
// one-relation presentation ab = 1 directly over the letters, tracking the
// normal form b^m a^n. Used as a test oracle against reduce_word.
inline ReducedWord bicyclic_eval(const std::string& letters) {
  std::uint64_t m = 0, n = 0;
  for (char c : letters) {
    if (c == 'a') {
      ++n;
    } else if (n > 0) {
      --n;
    } else {
      ++m;
    }
  }
  if (m == 0 && n == 0) return kIdemAB;
  return ReducedWord{0, m, n, 0};
}

}  // namespace orthomon::test
