#pragma once

// Independent equality oracle: bounded congruence closure of free words
// under the defining relations
//
//   aba = a,  bab = b,  aabb = ab,
//   a^(nu+1) b = a^nu   (nu finite),
//   a b^(mu+1) = b^mu   (mu finite),
//
// optionally augmented with e*e = e for the catalogued band idempotents.
//
// Words of length 1..L are indexed shortlex (a < b). The congruence is the
// finest equivalence containing the relation pairs and closed under
// one-letter extension on either side whenever both extended words still
// fit in the bound; since extensions only grow a word, this yields exactly
// substitution-closure within the bound. Implemented as union-find
// congruence closure over four partial unary operators (prepend/append a/b).
//
// Distinct classes never refute equality on their own: a merge may only be
// witnessed through words longer than L. Classes touching length L are
// flagged boundary-suspect; a hard NO is offered only off-boundary and only
// when the caller opts into the completeness assumption.

#include <cstdint>
#include <string>
#include <vector>

#include "core.hpp"

namespace orthomon {

struct RelationSet {
  std::vector<std::pair<std::string, std::string>> pairs;

  // Base pairs, parameter rewrites when finite, and (optionally) idempotent
  // squares e*e = e with |e*e| <= L.
  static RelationSet standard(const Params& p, bool with_idempotents,
                              std::uint32_t L);
};

class CongruenceTable {
 public:
  enum class Answer { Yes, NoOrUnknown, No };

  // 4 <= L <= 16. Deterministic: class ids are assigned by shortlex order
  // of the class representatives.
  static CongruenceTable build(const Params& p, std::uint32_t L,
                               bool with_idempotents);

  Answer equal(const FreeWord& w1, const FreeWord& w2,
               bool assume_complete = false) const;

  const Params& params() const noexcept { return params_; }
  std::uint32_t length_bound() const noexcept { return L_; }
  bool with_idempotents() const noexcept { return idem_; }
  std::size_t class_count() const noexcept { return rep_.size(); }
  std::size_t word_count() const noexcept { return class_of_.size(); }

  std::uint32_t class_of(const std::string& letters) const;
  bool class_suspect(std::uint32_t cls) const { return suspect_[cls] != 0; }
  std::string representative(std::uint32_t cls) const;

  // Shortlex word/index correspondence (index 0 = "a").
  static std::uint32_t word_index(const std::string& letters);
  static std::string word_at(std::uint32_t index);

  // Versioned JSON cache; load validates the header against the key.
  void save(const std::string& path) const;
  static CongruenceTable load(const std::string& path);
  static std::string cache_file_name(const Params& p, std::uint32_t L,
                                     bool with_idempotents);

  friend bool operator==(const CongruenceTable&, const CongruenceTable&);

 private:
  Params params_ = Params{ExtNat::infinity(), ExtNat::infinity()};
  std::uint32_t L_ = 0;
  bool idem_ = false;
  std::vector<std::uint32_t> class_of_;  // per word index
  std::vector<std::uint32_t> rep_;       // per class: minimal word index
  std::vector<std::uint8_t> suspect_;    // per class

  void finalize(const std::vector<std::uint32_t>& root_of);
};

struct CrossCheckReport {
  Params params = Params{ExtNat::infinity(), ExtNat::infinity()};
  std::uint32_t len_bound = 0;
  std::uint64_t words_checked = 0;
  // hard failures: oracle-equal words with different reduced forms
  std::vector<std::pair<std::string, std::string>> soundness_violations;
  // advisory: words the bounded relations cannot connect to their reduced
  // form (presentation-incompleteness diagnostics, not engine errors)
  std::vector<std::string> reachability_failures;

  bool sound() const { return soundness_violations.empty(); }
};

// Requires len_bound <= L - 4 (slack for substitution room).
CrossCheckReport cross_check(const CongruenceTable& table, const Params& p,
                             std::uint32_t len_bound);

}  // namespace orthomon
