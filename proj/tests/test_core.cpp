#include "doctest.h"

#include "core.hpp"
#include "arith.hpp"
#include "test_helpers.hpp"

using namespace orthomon;
using test::of;
using test::params;

namespace {

// plain restatement of the shape/bound rules, kept independent of
// element_from_quadruple
bool brute_valid(std::uint64_t i, std::uint64_t m, std::uint64_t n,
                 std::uint64_t j, const Params& p) {
  if (i > 1 || j > 1) return false;
  bool type_one = m > i && n == 0 && j == 0;
  bool type_two = i == 0 && m == 0 && n >= 1 && n >= j;
  bool type_three = m > i && n > j;
  if (!(type_one || type_two || type_three)) return false;
  if (i == 1 && p.mu.is_finite() && m > p.mu.value()) return false;
  if (j == 1 && p.nu.is_finite() && n > p.nu.value()) return false;
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("extended naturals order and parse") {
  CHECK(ExtNat::finite(3) < ExtNat::infinity());
  CHECK(ExtNat::finite(2) < ExtNat::finite(5));
  CHECK(ExtNat::parse("inf").is_infinite());
  CHECK(ExtNat::parse("7") == ExtNat::finite(7));
  CHECK_THROWS_AS(ExtNat::finite(0), Error);
  CHECK_THROWS_AS(ExtNat::parse("x2"), Error);
}

TEST_CASE("make_params accepts the declared domain") {
  CHECK(params("inf", "inf").nu.is_infinite());
  Params bicyclic = params("1", "1");
  CHECK(bicyclic.nu == ExtNat::finite(1));
  CHECK_THROWS_AS(params("0", "2"), Error);
}

TEST_CASE("parse_word expands caret notation") {
  CHECK(parse_word("ab^2a^2b") == parse_word("abbaab"));
  CHECK(parse_word(" a b^2 a^2 b ") == parse_word("abbaab"));
  CHECK(parse_word("abbaab").letters() == "abbaab");
  CHECK_THROWS_AS(parse_word("ac"), Error);
  CHECK_THROWS_AS(parse_word(""), Error);
  CHECK_THROWS_AS(parse_word("a^0"), Error);
  CHECK_THROWS_AS(parse_word("a^"), Error);
}

TEST_CASE("element_from_quadruple enforces shape and bounds") {
  Params inf = params("inf", "inf");
  ReducedWord x = element_from_quadruple(1, 2, 2, 1, inf);
  CHECK(classify(x) == WordType::III);
  CHECK(display(x) == "ab^2a^2b");

  CHECK_THROWS_WITH_AS(
      (void)element_from_quadruple(1, 3, 0, 0, params("2", "2")),
      doctest::Contains("bound m <= mu"), Error);
  CHECK(element_from_quadruple(0, 0, 1, 1, params("1", "1")) == kIdemAB);

  CHECK_THROWS_AS((void)element_from_quadruple(0, 0, 0, 0, inf), Error);
  CHECK_THROWS_AS((void)element_from_quadruple(1, 1, 0, 0, inf), Error);
  CHECK_THROWS_AS((void)element_from_quadruple(0, 1, 1, 1, inf), Error);
  CHECK_THROWS_AS((void)element_from_quadruple(2, 3, 0, 0, inf), Error);
}

TEST_CASE("element_from_quadruple matches a brute-force checker") {
  for (const Params& p : {params("inf", "inf"), params("2", "2"),
                          params("1", "1"), params("3", "1"),
                          params("inf", "2")}) {
    for (std::uint64_t i = 0; i <= 1; ++i)
      for (std::uint64_t j = 0; j <= 1; ++j)
        for (std::uint64_t m = 0; m <= 10; ++m)
          for (std::uint64_t n = 0; n <= 10; ++n) {
            bool expected = brute_valid(i, m, n, j, p);
            bool accepted = true;
            try {
              (void)element_from_quadruple(i, m, n, j, p);
            } catch (const Error&) {
              accepted = false;
            }
            CAPTURE(i);
            CAPTURE(m);
            CAPTURE(n);
            CAPTURE(j);
            CHECK(accepted == expected);
            CHECK(is_valid_quadruple(i, m, n, j, p) == expected);
          }
  }
}

TEST_CASE("classification tags") {
  Params p = params("inf", "inf");
  CHECK(classify(of("b^2", p)) == WordType::I);
  CHECK(classify(of("a^2b", p)) == WordType::IIProper);
  CHECK(classify(of("ab^2a", p)) == WordType::III);
  CHECK(classify(kIdemAB) == WordType::IIImproper);
  CHECK(word_type_name(WordType::IIImproper) == "II*");
}

TEST_CASE("exactly one shape matches every valid quadruple") {
  Params p = params("3", "2");
  for (const ReducedWord& x : window_elements(p, 8)) {
    bool type_one = x.m > x.i && x.n == 0 && x.j == 0;
    bool type_two = x.i == 0 && x.m == 0 && x.n >= 1 && x.n >= x.j;
    bool type_three = x.m > x.i && x.n > x.j;
    CHECK(int(type_one) + int(type_two) + int(type_three) == 1);
  }
}

TEST_CASE("display and expand") {
  Params p = params("inf", "inf");
  ReducedWord x = element_from_quadruple(1, 2, 2, 1, p);
  CHECK(display(x) == "ab^2a^2b");
  CHECK(expand(x).letters() == "abbaab");
  CHECK(display(kIdemAB) == "ab");
  CHECK(display(ReducedWord{0, 3, 0, 0}) == "b^3");
  CHECK(display(kGenA) == "a");
}

TEST_CASE("display round-trips through parse and reduce") {
  for (const Params& p : {params("inf", "inf"), params("2", "3"),
                          params("1", "1"), params("1", "4")}) {
    for (const ReducedWord& x : window_elements(p, 8)) {
      CHECK(reduce_word(parse_word(display(x)), p) == x);
      CHECK(reduce_word(expand(x), p) == x);
    }
  }
}

TEST_CASE("run-length words handle huge exponents without expansion") {
  FreeWord w = parse_word("a^4000000000b");
  CHECK(w.length() == 4000000001ull);
  CHECK_THROWS_AS((void)w.letters(), Error);
  CHECK_THROWS_AS(parse_word("a^5000000000"), Error);  // beyond the 2^32 cap
}

TEST_SUITE_END();
