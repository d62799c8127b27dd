#pragma once

// Reduced-word grammar for the semigroups O_(nu,mu)(a,b).
//
// Every element has a unique reduced form a^i b^m a^n b^j with i,j in {0,1}
// and exactly one of three shapes:
//
//   type I    a^i b^m          (n = j = 0, m > i)
//   type II   a^n b^j          (i = m = 0, n >= 1, n >= j; n = j = 1 is the
//                               distinguished improper word ab)
//   type III  a^i b^m a^n b^j  (m > i and n > j)
//
// The parameters bound exponents only next to a rewrite context: m <= mu when
// i = 1, and n <= nu when j = 1. Pure powers a^k, b^k are unbounded.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "extnat.hpp"

namespace orthomon {

struct Params {
  ExtNat nu;  // least n with a^(n+1) b = a^n, or infinity
  ExtNat mu;  // least m with a b^(m+1) = b^m, or infinity

  friend bool operator==(const Params&, const Params&) = default;

  std::string str() const { return "(" + nu.str() + "," + mu.str() + ")"; }
};

// (1,1) gives the bicyclic semigroup.
inline Params make_params(ExtNat nu, ExtNat mu) { return Params{nu, mu}; }

enum class WordType { I, IIProper, IIImproper, III };

std::string_view word_type_name(WordType t);  // "I", "II", "II*", "III"

// Field order i, m, n, j so that the defaulted comparison is lexicographic
// by (i, m, n, j) — the deterministic order used everywhere.
struct ReducedWord {
  std::uint32_t i = 0;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint32_t j = 0;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
};

// Generator constants.
inline constexpr ReducedWord kGenA{0, 0, 1, 0};
inline constexpr ReducedWord kGenB{0, 1, 0, 0};
inline constexpr ReducedWord kIdemAB{0, 0, 1, 1};  // the improper word ab

WordType classify(const ReducedWord& x);

bool is_valid_quadruple(std::uint64_t i, std::uint64_t m, std::uint64_t n,
                        std::uint64_t j, const Params& p);

// Validates shape and parameter bounds; raises Shape or Bound.
ReducedWord element_from_quadruple(std::uint64_t i, std::uint64_t m,
                                   std::uint64_t n, std::uint64_t j,
                                   const Params& p);

// Caret form with exponent 1 unwritten and zero-exponent factors omitted,
// e.g. "ab^2a^2b".
std::string display(const ReducedWord& x);

// A nonempty word over {a,b}, held as maximal letter runs so that huge
// exponents never have to be materialized.
class FreeWord {
 public:
  struct Run {
    char letter;          // 'a' or 'b'
    std::uint64_t count;  // >= 1

    friend bool operator==(const Run&, const Run&) = default;
  };

  FreeWord() = default;

  // Appends, merging with the last run when the letter repeats.
  void append(char letter, std::uint64_t count);

  const std::vector<Run>& runs() const noexcept { return runs_; }
  bool empty() const noexcept { return runs_.empty(); }
  std::uint64_t length() const noexcept;

  // The expanded letter sequence; raises Overflow past max_len.
  std::string letters(std::uint64_t max_len = 1u << 20) const;

  std::string str() const;  // caret form of the runs

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Run> runs_;
};

// Grammar: (("a"|"b")("^" [1-9][0-9]*)?)+ with whitespace ignored.
FreeWord parse_word(std::string_view text);

FreeWord expand(const ReducedWord& x);

// All valid reduced words with m, n <= max_exp, in (i,m,n,j) order.
std::vector<ReducedWord> window_elements(const Params& p,
                                         std::uint64_t max_exp);

}  // namespace orthomon
