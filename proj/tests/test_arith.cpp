#include "doctest.h"

#include <random>
#include <set>

#include "arith.hpp"
#include "green.hpp"
#include "test_helpers.hpp"

using namespace orthomon;
using test::bicyclic_eval;
using test::of;
using test::params;

TEST_SUITE_BEGIN("arith");

TEST_CASE("reduce_word agrees with the direct bicyclic evaluator at (1,1)") {
  Params p = params("1", "1");
  // exhaustive over all words of length 1..10
  for (int len = 1; len <= 10; ++len) {
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      std::string letters;
      for (int k = len - 1; k >= 0; --k)
        letters += (bits >> k) & 1 ? 'b' : 'a';
      CAPTURE(letters);
      CHECK(reduce_word(parse_word(letters), p) == bicyclic_eval(letters));
    }
  }
}

TEST_CASE("products of type I words") {
  Params p = params("inf", "inf");
  CHECK(multiply(of("b^2", p), of("ab^3", p), p) == of("b^4", p));
  CHECK(display(multiply(of("ab^2", p), of("ab^2", p), p)) == "ab^3");
}

TEST_CASE("products of type II words") {
  Params p = params("inf", "inf");
  CHECK(multiply(of("a^2b", p), of("a^3b", p), p) == of("a^4b", p));
  CHECK(multiply(kIdemAB, kIdemAB, p) == kIdemAB);
}

TEST_CASE("mixed products with rewrites") {
  CHECK(multiply(kIdemAB, kGenB, params("3", "1")) == kGenB);  // ab * b = b
  Params p22 = params("2", "2");
  // cross-checked against the congruence oracle in the oracle tests
  CHECK(multiply(of("a^2", p22), of("b^3", p22), p22) == of("ab^2", p22));
  Params pinf = params("inf", "inf");
  CHECK(multiply(of("a^2b", pinf), of("ab^3", pinf), pinf) ==
        of("ab^2", pinf));
  CHECK(multiply(of("ba^2b", p22), of("ba", p22), p22) == of("ba", p22));
}

TEST_CASE("reduce_word on defining relations") {
  Params p = params("inf", "inf");
  CHECK(of("aba", p) == kGenA);
  CHECK(of("bab", p) == kGenB);
  CHECK(of("aabb", p) == kIdemAB);
  CHECK(of("a^3b", params("2", "5")) == of("a^2", params("2", "5")));
  CHECK(of("ab^3", params("5", "2")) == of("b^2", params("5", "2")));
}

TEST_CASE("powers") {
  Params p = params("inf", "inf");
  CHECK(power(kGenA, 3, p) == of("a^3", p));
  CHECK(power(kIdemAB, 7, p) == kIdemAB);
  CHECK(power(of("ab^2", p), 2, p) == of("ab^3", p));
  CHECK_THROWS_AS((void)power(kGenA, 0, p), Error);
  // binary powering agrees with iterated multiplication
  for (const Params& q : {params("2", "3"), params("1", "1")}) {
    for (const ReducedWord& x : window_elements(q, 3)) {
      ReducedWord acc = x;
      for (std::uint64_t k = 2; k <= 9; ++k) {
        acc = multiply(acc, x, q);
        CHECK(power(x, k, q) == acc);
      }
    }
  }
}

TEST_CASE("idempotents") {
  CHECK(is_idempotent(kIdemAB, params("inf", "inf")));
  CHECK(is_idempotent(of("b^2a^2", params("2", "2")), params("2", "2")));
  CHECK_FALSE(is_idempotent(kGenA, params("inf", "inf")));
  CHECK(is_idempotent(of("ba", params("2", "2")), params("2", "2")));
}

TEST_CASE("natural order on idempotents") {
  Params p = params("inf", "inf");
  CHECK(natural_le(of("ab^2a^2b", p), kIdemAB, p));
  CHECK(natural_le(kIdemAB, kIdemAB, p));
  CHECK_FALSE(natural_le(kIdemAB, of("ab^2a^2b", p), p));

  Params p22 = params("2", "2");
  CHECK_FALSE(natural_le(of("ba", p22), kIdemAB, p22));
  CHECK_FALSE(natural_le(kIdemAB, of("ba", p22), p22));

  CHECK_THROWS_AS((void)natural_le(kGenA, kIdemAB, p), Error);
}

TEST_CASE("inverse pairs") {
  Params p = params("inf", "inf");
  CHECK(is_inverse_pair(kGenA, kGenB, p));
  CHECK(is_inverse_pair(of("a^2b", p), of("ab^2", p), p));
  CHECK_FALSE(is_inverse_pair(kGenA, kGenA, p));

  SUBCASE("inverse search") {
    auto inv_a = inverses_within(kGenA, p, 3);
    CHECK(std::count(inv_a.begin(), inv_a.end(), kGenB) == 1);
    auto inv_ba2 = inverses_within(of("ba^2", p), p, 4);
    CHECK(std::count(inv_ba2.begin(), inv_ba2.end(), of("b^2a", p)) == 1);
    auto inv_ab = inverses_within(kIdemAB, p, 2);
    CHECK(std::count(inv_ab.begin(), inv_ab.end(), kIdemAB) == 1);
    CHECK(std::is_sorted(inv_a.begin(), inv_a.end()));
  }
}

TEST_CASE("element order") {
  Params p = params("inf", "inf");
  CHECK(order_of(kIdemAB, p) == ExtNat::finite(1));
  CHECK(order_of(kGenA, p).is_infinite());
  CHECK(order_of(of("ba", params("2", "2")), params("2", "2")) ==
        ExtNat::finite(1));
}

TEST_CASE("associativity fuzz across the parameter matrix") {
  std::mt19937_64 rng(12345);
  for (const char* nu : {"inf", "2", "1"})
    for (const char* mu : {"inf", "3", "1"}) {
      Params p = params(nu, mu);
      auto pool = window_elements(p, 12);
      std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
      for (int t = 0; t < 20000; ++t) {
        const ReducedWord& x = pool[dist(rng)];
        const ReducedWord& y = pool[dist(rng)];
        const ReducedWord& z = pool[dist(rng)];
        CHECK(multiply(multiply(x, y, p), z, p) ==
              multiply(x, multiply(y, z, p), p));
      }
    }
}

TEST_CASE("powers of non-idempotents are pairwise distinct") {
  for (const Params& p : {params("inf", "inf"), params("2", "2"),
                          params("1", "1")}) {
    for (const ReducedWord& x : window_elements(p, 3)) {
      if (is_idempotent(x, p)) continue;
      std::set<ReducedWord> seen;
      for (std::uint64_t k = 1; k <= 50; ++k) CHECK(seen.insert(power(x, k, p)).second);
    }
  }
}

TEST_CASE("band closure and normality at window scale") {
  for (const Params& p : {params("inf", "inf"), params("2", "2"),
                          params("2", "1"), params("1", "1")}) {
    std::vector<ReducedWord> idems;
    for (const ReducedWord& x : window_elements(p, 5))
      if (is_idempotent(x, p)) idems.push_back(x);
    for (const ReducedWord& e : idems)
      for (const ReducedWord& f : idems) {
        CHECK(is_idempotent(multiply(e, f, p), p));
        for (const ReducedWord& g : idems) {
          ReducedWord efge = multiply(multiply(multiply(e, f, p), g, p), e, p);
          ReducedWord egfe = multiply(multiply(multiply(e, g, p), f, p), e, p);
          CHECK(efge == egfe);
        }
      }
  }
}

TEST_CASE("natural order is a partial order on window idempotents") {
  Params p = params("3", "2");
  std::vector<ReducedWord> idems;
  for (const ReducedWord& x : window_elements(p, 5))
    if (is_idempotent(x, p)) idems.push_back(x);
  for (const ReducedWord& e : idems) {
    CHECK(natural_le(e, e, p));
    for (const ReducedWord& f : idems) {
      if (natural_le(e, f, p) && natural_le(f, e, p)) CHECK(e == f);
      for (const ReducedWord& g : idems)
        if (natural_le(e, f, p) && natural_le(f, g, p))
          CHECK(natural_le(e, g, p));
    }
  }
}

TEST_CASE("inverse symmetry and powers of inverse pairs") {
  Params p = params("2", "2");
  auto window = window_elements(p, 4);
  for (const ReducedWord& x : window)
    for (const ReducedWord& y : window) {
      bool xy = is_inverse_pair(x, y, p);
      CHECK(xy == is_inverse_pair(y, x, p));
      if (xy)
        for (std::uint64_t n = 2; n <= 6; ++n)
          CHECK(is_inverse_pair(power(x, n, p), power(y, n, p), p));
    }
}

TEST_CASE("every window element has an inverse within a small cap") {
  for (const Params& p : {params("inf", "inf"), params("2", "3"),
                          params("1", "2")}) {
    for (const ReducedWord& x : window_elements(p, 4)) {
      std::uint64_t cap = std::max(x.m, x.n) + 2;
      CHECK_FALSE(inverses_within(x, p, cap).empty());
    }
  }
}

TEST_CASE("H-triviality: same row and column forces equality") {
  for (const Params& p : {params("inf", "inf"), params("2", "2"),
                          params("1", "1")}) {
    auto window = window_elements(p, 6);
    for (const ReducedWord& x : window)
      for (const ReducedWord& y : window)
        if (r_related(x, y) && l_related(x, y)) CHECK(x == y);
  }
}

TEST_SUITE_END();
