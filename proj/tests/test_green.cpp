#include "doctest.h"

#include "green.hpp"
#include "test_helpers.hpp"

using namespace orthomon;
using test::of;
using test::params;

TEST_SUITE_BEGIN("green");

TEST_CASE("structural keys") {
  Params p = params("inf", "inf");
  auto [rb, lb] = green_keys(kGenB);
  CHECK(rb == RKey{false, 0, 1});
  CHECK(lb.center);

  auto [ra2b, la2b] = green_keys(of("a^2b", p));
  CHECK(ra2b.center);
  CHECK(la2b == LKey{false, 2, 1});

  auto [rab2a, lab2a] = green_keys(of("ab^2a", p));
  CHECK(rab2a == RKey{false, 1, 2});
  CHECK(lab2a == LKey{false, 1, 0});
}

TEST_CASE("relations agree with the eggbox layout") {
  Params p = params("inf", "inf");
  CHECK(r_related(kGenB, of("ba^2b", p)));
  CHECK(l_related(kGenA, of("ba", p)));
  CHECK_FALSE(h_related(kIdemAB, kGenB));
  CHECK(d_related(kGenA, of("b^3a^2b", p)));

  CHECK(in_R_class(of("b^2a^3b", p), of("b^2", p)));
  CHECK(in_L_class(of("ab^2a^2", p), of("a^2", p)));
  CHECK_FALSE(in_R_class(kGenA, kGenB));
}

TEST_CASE("type tags coincide with the principal classes of ab") {
  for (const Params& p :
       {params("inf", "inf"), params("2", "2"), params("3", "1"),
        params("1", "2"), params("1", "1")}) {
    for (const ReducedWord& x : window_elements(p, 6)) {
      WordType t = classify(x);
      bool in_L = l_related(x, kIdemAB);
      bool in_R = r_related(x, kIdemAB);
      CHECK((t == WordType::I) == (in_L && x != kIdemAB));
      CHECK((t == WordType::IIProper || t == WordType::IIImproper) == in_R);
      CHECK((t == WordType::III) == (!in_L && !in_R));
    }
  }
}

TEST_CASE("R- and L-witnesses exist inside the window") {
  Params p = params("2", "2");
  auto small = window_elements(p, 3);
  auto search = window_elements(p, 8);
  auto witness = [&](const ReducedWord& from, const ReducedWord& to,
                     bool right) {
    for (const ReducedWord& u : search)
      if ((right ? multiply(from, u, p) : multiply(u, from, p)) == to)
        return true;
    return false;
  };
  for (const ReducedWord& x : small)
    for (const ReducedWord& y : small) {
      if (r_related(x, y)) {
        CHECK(witness(x, y, true));
        CHECK(witness(y, x, true));
      }
      if (l_related(x, y)) {
        CHECK(witness(x, y, false));
        CHECK(witness(y, x, false));
      }
    }
}

TEST_CASE("every realized row meets every realized column") {
  for (const Params& p : {params("inf", "inf"), params("2", "3")}) {
    auto window = window_elements(p, 5);
    for (const ReducedWord& x : window)
      for (const ReducedWord& y : window) {
        // some element carries (row of x, column of y)
        auto [rk, lk] = std::pair{green_keys(x).first, green_keys(y).second};
        ReducedWord cell;
        if (rk.center && lk.center)
          cell = kIdemAB;
        else if (rk.center)
          cell = ReducedWord{0, 0, lk.n, lk.j};
        else if (lk.center)
          cell = ReducedWord{rk.i, rk.m, 0, 0};
        else
          cell = ReducedWord{rk.i, rk.m, lk.n, lk.j};
        CHECK(is_valid_quadruple(cell.i, cell.m, cell.n, cell.j, p));
        CHECK(green_keys(cell).first == rk);
        CHECK(green_keys(cell).second == lk);
      }
  }
}

TEST_SUITE_END();
