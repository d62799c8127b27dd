#pragma once

// Bounded generated-subsemigroup closure, bicyclic-pair recognition and
// coordinates, the union decompositions into bicyclic pieces and cyclic
// parts, band D-classes of idempotents, and the window-scale checks behind
// the verification suites.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "core.hpp"

namespace orthomon {

struct ClosureResult {
  std::vector<ReducedWord> elements;  // sorted by (i,m,n,j)
  bool complete = false;              // no product left the exponent cap
  std::uint64_t cap = 0;
};

// Breadth-first closure under multiply. Products with an exponent above cap
// are recorded as overflow (complete=false) and not expanded.
ClosureResult closure(const std::vector<ReducedWord>& gens, const Params& p,
                      std::uint64_t cap);

// q r q = q, r q r = r, q^2 r = q, q r^2 = r (q in the a-role, r in the
// b-role).
bool satisfies_bicyclic_presentation(const ReducedWord& q,
                                     const ReducedWord& r, const Params& p);

// The unique (m, n) with m+n <= cap and r^m q^n = x, where r^0 q^0 is the
// identity q*r. Raises Precondition unless (q, r) satisfies the bicyclic
// presentation.
std::optional<std::pair<std::uint64_t, std::uint64_t>> bicyclic_coords(
    const ReducedWord& x, const ReducedWord& q, const ReducedWord& r,
    const Params& p, std::uint64_t cap);

// Union pieces. The first four name bicyclic subsemigroups by their
// generator pairs; for mu = 1 or nu = 1 the surviving tags denote the
// collapsed pairs (the generator words simply reduce to the collapsed
// generators).
enum class PieceTag {
  B_A2B_AB2,
  B_BA3B_B2A2B,
  B_BA2_B2A,
  B_AB2A2_AB3A,
  CYC_A,
  CYC_B,
};

std::string_view piece_tag_name(PieceTag t);

// The set of union pieces containing x; never empty. Requires mu > 1 or
// nu > 1, and cap at least (sum of x's exponents + 2) to decide membership
// (raises Undecided below that).
std::set<PieceTag> decomposition_pieces(const ReducedWord& x, const Params& p,
                                        std::uint64_t cap);

enum class BandDClassTag { Rect4, Right2, Left2, Singleton };

std::string_view band_dclass_tag_name(BandDClassTag t);

struct BandDClass {
  std::vector<ReducedWord> members;  // sorted
  BandDClassTag tag;
};

// The D-class of e inside the band of idempotents, computed structurally
// from the idempotent families (ab; a b^k a^k b; a b^k a^(k-1);
// b^(k-1) a^k b; b^k a^k).
BandDClass idempotent_dclass(const ReducedWord& e, const Params& p);

struct CheckReport {
  std::string lemma;
  Params params;
  std::uint64_t window = 0;
  std::vector<std::string> violations;
  std::vector<std::string> not_machine_checked;
  std::vector<std::string> excluded;  // excluded R-/L-classes (window identity)

  bool ok() const { return violations.empty(); }
};

// Window identity: membership in the central bicyclic piece B(a^2b, ab^2)
// (collapsed pair when mu = 1 or nu = 1) equals avoidance of every R_{b^k}
// (1 <= k < mu) and L_{a^l} (1 <= l < nu). Requires mu > 1 or nu > 1 and
// window >= 4.
CheckReport check_lemma210(const Params& p, std::uint64_t window);

// Derived-pair claims about intersections of the union pieces: presentation
// + truncated-closure containment + (non)emptiness and properness witnesses.
// Maximality is reported as not machine-checked. Raises Precondition unless
// the parameters match one of the patterns nu>mu>1, mu>nu>1, nu=mu finite,
// or mu=1<nu finite.
CheckReport check_intersection_claims(const Params& p, std::uint64_t window);

}  // namespace orthomon
