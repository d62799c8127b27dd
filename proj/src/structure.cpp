#include "structure.hpp"

#include <algorithm>
#include <map>

#include "green.hpp"

namespace orthomon {

namespace {

bool exceeds_cap(const ReducedWord& x, std::uint64_t cap) {
  return x.m > cap || x.n > cap;
}

std::uint64_t exponent_sum(const ReducedWord& x) {
  return x.i + x.m + x.n + x.j;
}

ReducedWord of(const char* text, const Params& p) {
  return reduce_word(parse_word(text), p);
}

}  // namespace

ClosureResult closure(const std::vector<ReducedWord>& gens, const Params& p,
                      std::uint64_t cap) {
  if (gens.empty()) raise(ErrorCode::Domain, "closure requires generators");
  for (const ReducedWord& g : gens)
    if (exceeds_cap(g, cap))
      raise(ErrorCode::Domain, "closure cap below a generator exponent");

  std::set<ReducedWord> seen(gens.begin(), gens.end());
  std::vector<ReducedWord> work(seen.begin(), seen.end());
  bool complete = true;
  for (std::size_t idx = 0; idx < work.size(); ++idx) {
    ReducedWord x = work[idx];
    // snapshot: every unordered pair is covered once the later of the two
    // is processed
    std::vector<ReducedWord> partners(seen.begin(), seen.end());
    for (const ReducedWord& y : partners) {
      for (ReducedWord z :
           {multiply(x, y, p), multiply(y, x, p)}) {
        if (exceeds_cap(z, cap)) {
          complete = false;
          continue;
        }
        if (seen.insert(z).second) work.push_back(z);
      }
    }
  }
  return ClosureResult{std::vector<ReducedWord>(seen.begin(), seen.end()),
                       complete, cap};
}

bool satisfies_bicyclic_presentation(const ReducedWord& q,
                                     const ReducedWord& r, const Params& p) {
  ReducedWord qr = multiply(q, r, p);
  ReducedWord rq = multiply(r, q, p);
  return multiply(qr, q, p) == q && multiply(rq, r, p) == r &&
         multiply(q, qr, p) == q && multiply(q, multiply(r, r, p), p) == r;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> bicyclic_coords(
    const ReducedWord& x, const ReducedWord& q, const ReducedWord& r,
    const Params& p, std::uint64_t cap) {
  if (!satisfies_bicyclic_presentation(q, r, p))
    raise(ErrorCode::Precondition,
          "bicyclic_coords requires a pair satisfying the bicyclic "
          "presentation");
  ReducedWord identity = multiply(q, r, p);
  // rpow[k] = r^k, qpow[k] = q^k; the k = 0 slots are placeholders
  std::vector<ReducedWord> rpow{identity, r};
  std::vector<ReducedWord> qpow{identity, q};
  for (std::uint64_t k = 2; k <= cap; ++k) {
    rpow.push_back(multiply(rpow[k - 1], r, p));
    qpow.push_back(multiply(qpow[k - 1], q, p));
  }

  for (std::uint64_t m = 0; m <= cap; ++m) {
    for (std::uint64_t n = 0; m + n <= cap; ++n) {
      ReducedWord e;
      if (m == 0 && n == 0)
        e = identity;
      else if (m == 0)
        e = qpow[n];
      else if (n == 0)
        e = rpow[m];
      else
        e = multiply(rpow[m], qpow[n], p);
      if (e == x) return std::make_pair(m, n);
    }
  }
  return std::nullopt;
}

std::string_view piece_tag_name(PieceTag t) {
  switch (t) {
    case PieceTag::B_A2B_AB2:
      return "B_A2B_AB2";
    case PieceTag::B_BA3B_B2A2B:
      return "B_BA3B_B2A2B";
    case PieceTag::B_BA2_B2A:
      return "B_BA2_B2A";
    case PieceTag::B_AB2A2_AB3A:
      return "B_AB2A2_AB3A";
    case PieceTag::CYC_A:
      return "CYC_A";
    case PieceTag::CYC_B:
      return "CYC_B";
  }
  return "?";
}

namespace {

struct PieceDef {
  PieceTag tag;
  const char* q;  // nullptr marks a cyclic piece
  const char* r;
};

// Generator words reduce under p to the collapsed pairs automatically
// (e.g. ab^2 = b when mu = 1), so the tables can hold literal words.
std::vector<PieceDef> piece_table(const Params& p) {
  bool mu1 = p.mu == ExtNat::finite(1);
  bool nu1 = p.nu == ExtNat::finite(1);
  if (mu1 && nu1)
    raise(ErrorCode::Precondition,
          "decomposition requires mu > 1 or nu > 1");
  if (mu1)
    return {{PieceTag::B_A2B_AB2, "a^2b", "b"},
            {PieceTag::B_BA2_B2A, "ba^2", "b^2a"},
            {PieceTag::CYC_A, nullptr, nullptr}};
  if (nu1)
    return {{PieceTag::B_A2B_AB2, "a", "ab^2"},
            {PieceTag::B_BA2_B2A, "ba^2", "b^2a"},
            {PieceTag::CYC_B, nullptr, nullptr}};
  return {{PieceTag::B_A2B_AB2, "a^2b", "ab^2"},
          {PieceTag::B_BA3B_B2A2B, "ba^3b", "b^2a^2b"},
          {PieceTag::B_BA2_B2A, "ba^2", "b^2a"},
          {PieceTag::B_AB2A2_AB3A, "ab^2a^2", "ab^3a"},
          {PieceTag::CYC_A, nullptr, nullptr},
          {PieceTag::CYC_B, nullptr, nullptr}};
}

bool in_cyclic_a(const ReducedWord& x) {
  return x.i == 0 && x.m == 0 && x.j == 0;  // a^n
}

bool in_cyclic_b(const ReducedWord& x) {
  return x.n == 0 && x.i == 0;  // b^m
}

}  // namespace

std::set<PieceTag> decomposition_pieces(const ReducedWord& x, const Params& p,
                                        std::uint64_t cap) {
  std::vector<PieceDef> defs = piece_table(p);
  std::uint64_t need = exponent_sum(x) + 2;
  if (cap < need)
    raise(ErrorCode::Undecided, "cap " + std::to_string(cap) +
                                    " too small to decide membership "
                                    "(need >= " +
                                    std::to_string(need) + ")");
  std::set<PieceTag> tags;
  for (const PieceDef& def : defs) {
    if (def.q == nullptr) {
      bool member = def.tag == PieceTag::CYC_A ? in_cyclic_a(x)
                                               : in_cyclic_b(x);
      if (member) tags.insert(def.tag);
      continue;
    }
    ReducedWord q = of(def.q, p);
    ReducedWord r = of(def.r, p);
    if (bicyclic_coords(x, q, r, p, need)) tags.insert(def.tag);
  }
  return tags;
}

std::string_view band_dclass_tag_name(BandDClassTag t) {
  switch (t) {
    case BandDClassTag::Rect4:
      return "RECT4";
    case BandDClassTag::Right2:
      return "RIGHT2";
    case BandDClassTag::Left2:
      return "LEFT2";
    case BandDClassTag::Singleton:
      return "SINGLETON";
  }
  return "?";
}

namespace {

// The idempotent families; level k >= 2 groups the four Fig.-style band
// coordinates around the chain idempotent b^(k-1) a^(k-1).
ReducedWord fam_abab(std::uint64_t k) { return ReducedWord{1, k, k, 1}; }
ReducedWord fam_aba(std::uint64_t k) { return ReducedWord{1, k, k - 1, 0}; }
ReducedWord fam_bab(std::uint64_t k) { return ReducedWord{0, k - 1, k, 1}; }
ReducedWord fam_ba(std::uint64_t k) { return ReducedWord{0, k, k, 0}; }

// level of an idempotent: the k of the layer it belongs to, 0 for ab
std::optional<std::uint64_t> idempotent_level(const ReducedWord& e) {
  if (e == kIdemAB) return 0;
  if (e.i == 1 && e.j == 1 && e.m == e.n && e.m >= 2) return e.m;
  if (e.i == 1 && e.j == 0 && e.m == e.n + 1 && e.m >= 2) return e.m;
  if (e.i == 0 && e.j == 1 && e.n == e.m + 1 && e.n >= 2) return e.n;
  if (e.i == 0 && e.j == 0 && e.m == e.n && e.m >= 1) return e.m + 1;
  return std::nullopt;
}

}  // namespace

BandDClass idempotent_dclass(const ReducedWord& e, const Params& p) {
  if (!is_idempotent(e, p))
    raise(ErrorCode::NonIdempotent, "idempotent_dclass requires an idempotent");
  std::optional<std::uint64_t> level = idempotent_level(e);
  if (!level)
    raise(ErrorCode::Precondition,
          "idempotent outside the catalogued families: " + display(e));
  if (*level == 0) return BandDClass{{e}, BandDClassTag::Singleton};

  std::uint64_t k = *level;
  std::vector<ReducedWord> members{fam_ba(k - 1)};
  bool has_left = false, has_right = false, has_corner = false;
  auto add_if_valid = [&](ReducedWord w, bool* flag) {
    if (is_valid_quadruple(w.i, w.m, w.n, w.j, p)) {
      members.push_back(w);
      *flag = true;
    }
  };
  add_if_valid(fam_abab(k), &has_corner);
  add_if_valid(fam_aba(k), &has_left);
  add_if_valid(fam_bab(k), &has_right);
  std::sort(members.begin(), members.end());

  BandDClassTag tag;
  if (members.size() == 4)
    tag = BandDClassTag::Rect4;
  else if (has_right)
    tag = BandDClassTag::Right2;
  else if (has_left)
    tag = BandDClassTag::Left2;
  else
    tag = BandDClassTag::Singleton;
  (void)has_corner;  // k <= min(mu,nu) implies both wings exist as well
  return BandDClass{members, tag};
}

CheckReport check_lemma210(const Params& p, std::uint64_t window) {
  if (p.mu == ExtNat::finite(1) && p.nu == ExtNat::finite(1))
    raise(ErrorCode::Precondition,
          "window identity requires mu > 1 or nu > 1");
  if (window < 4)
    raise(ErrorCode::Precondition, "window identity requires window >= 4");

  CheckReport report;
  report.lemma = "lemma210";
  report.params = p;
  report.window = window;

  for (std::uint64_t k = 1; p.mu.ge(k + 1) && k <= window; ++k)
    report.excluded.push_back("R_b" + (k > 1 ? "^" + std::to_string(k) : ""));
  for (std::uint64_t l = 1; p.nu.ge(l + 1) && l <= window; ++l)
    report.excluded.push_back("L_a" + (l > 1 ? "^" + std::to_string(l) : ""));

  ReducedWord q = of("a^2b", p);
  ReducedWord r = of("ab^2", p);
  for (const ReducedWord& x : window_elements(p, window)) {
    auto [rk, lk] = green_keys(x);
    bool in_b_row = !rk.center && rk.i == 0 && rk.m >= 1 && p.mu.ge(rk.m + 1);
    bool in_a_col = !lk.center && lk.j == 0 && lk.n >= 1 && p.nu.ge(lk.n + 1);
    bool excluded = in_b_row || in_a_col;
    bool member =
        bicyclic_coords(x, q, r, p, exponent_sum(x) + 2).has_value();
    if (member == excluded)
      report.violations.push_back(display(x) + (member
                                                    ? " is in the piece but "
                                                      "lies in an excluded "
                                                      "class"
                                                    : " avoids every excluded "
                                                      "class but is not in "
                                                      "the piece"));
  }
  return report;
}

namespace {

std::uint64_t max_exponent(const ReducedWord& x) { return std::max(x.m, x.n); }

struct PiecePair {
  ReducedWord q, r;
};

bool member_of(const ReducedWord& x, const PiecePair& b, const Params& p) {
  return bicyclic_coords(x, b.q, b.r, p, exponent_sum(x) + 2).has_value();
}

// presentation + truncated-closure containment of B(pair) in every piece of
// `inside`
void check_pair_contained(CheckReport& report, const std::string& label,
                          const PiecePair& pair,
                          const std::vector<PiecePair>& inside,
                          const Params& p, std::uint64_t window) {
  if (!satisfies_bicyclic_presentation(pair.q, pair.r, p)) {
    report.violations.push_back(label + ": pair fails the bicyclic "
                                        "presentation");
    return;
  }
  std::uint64_t cap =
      std::max(max_exponent(pair.q), max_exponent(pair.r)) + window;
  ClosureResult cl = closure({pair.q, pair.r}, p, cap);
  for (const ReducedWord& x : cl.elements)
    for (std::size_t idx = 0; idx < inside.size(); ++idx)
      if (!member_of(x, inside[idx], p))
        report.violations.push_back(label + ": " + display(x) +
                                    " escapes enclosing piece #" +
                                    std::to_string(idx + 1));
}

std::string word_ba(std::uint64_t m, std::uint64_t n, bool trailing_b) {
  // b^m a^n or b^m a^n b in caret form
  std::string s = "b^" + std::to_string(m) + "a^" + std::to_string(n);
  if (trailing_b) s += "b";
  return s;
}

}  // namespace

CheckReport check_intersection_claims(const Params& p, std::uint64_t window) {
  CheckReport report;
  report.params = p;
  report.window = window;
  report.not_machine_checked.push_back(
      "maximality of the largest-bicyclic claims (infinite search space)");

  auto pair_of = [&](const std::string& qs, const std::string& rs) {
    return PiecePair{reduce_word(parse_word(qs), p),
                     reduce_word(parse_word(rs), p)};
  };
  auto emptiness = [&](const PiecePair& b1, const PiecePair& b2,
                       bool expect_empty) {
    bool found = false;
    ReducedWord witness;
    for (const ReducedWord& x : window_elements(p, window))
      if (member_of(x, b1, p) && member_of(x, b2, p)) {
        found = true;
        witness = x;
        break;
      }
    if (expect_empty && found)
      report.violations.push_back("expected empty intersection but found " +
                                  display(witness));
    if (!expect_empty && !found)
      report.violations.push_back(
          "expected nonempty intersection but found no window witness");
  };
  auto properness = [&](const PiecePair& sub, const std::vector<PiecePair>& of_pieces,
                        const std::string& label) {
    for (const ReducedWord& x : window_elements(p, window)) {
      bool in_all = true;
      for (const PiecePair& b : of_pieces)
        if (!member_of(x, b, p)) {
          in_all = false;
          break;
        }
      if (in_all && !member_of(x, sub, p)) return;  // proper: witness found
    }
    report.violations.push_back(label +
                                ": no properness witness in the window");
  };

  bool mu1 = p.mu == ExtNat::finite(1);
  bool nu1 = p.nu == ExtNat::finite(1);
  PiecePair main_piece = pair_of("a^2b", "ab^2");
  PiecePair row_piece = pair_of("ba^3b", "b^2a^2b");
  PiecePair ba_piece = pair_of("ba^2", "b^2a");
  PiecePair ab2a_piece = pair_of("ab^2a^2", "ab^3a");

  if (!mu1 && !nu1 && p.nu > p.mu && p.mu.is_finite()) {
    // nu > mu > 1
    report.lemma = "lemma208.iii";
    std::uint64_t mu = p.mu.value();
    PiecePair d1 = pair_of(word_ba(mu, mu + 2, true), word_ba(mu + 1, mu + 1, true));
    PiecePair d2 = pair_of(word_ba(mu, mu + 1, false), word_ba(mu + 1, mu, false));
    check_pair_contained(report, "derived pair 1", d1, {main_piece, row_piece},
                         p, window);
    check_pair_contained(report, "derived pair 2", d2,
                         {ab2a_piece, ba_piece}, p, window);
    if (p.nu.is_infinite()) {
      emptiness(d1, d2, true);
    } else {
      emptiness(d1, d2, false);
      std::uint64_t nu = p.nu.value();
      PiecePair deep = pair_of(word_ba(nu, nu + 1, false), word_ba(nu + 1, nu, false));
      check_pair_contained(report, "deep pair", deep, {d1, d2}, p, window);
      properness(deep, {d1, d2}, "deep pair");
    }
  } else if (!mu1 && !nu1 && p.mu > p.nu && p.nu.is_finite()) {
    // mu > nu > 1
    report.lemma = "lemma208.iv";
    std::uint64_t nu = p.nu.value();
    PiecePair d1 = pair_of("ab^" + std::to_string(nu + 1) + "a^" +
                               std::to_string(nu + 1),
                           "ab^" + std::to_string(nu + 2) + "a^" +
                               std::to_string(nu));
    PiecePair d2 = pair_of(word_ba(nu, nu + 1, false), word_ba(nu + 1, nu, false));
    check_pair_contained(report, "derived pair 1", d1,
                         {main_piece, ab2a_piece}, p, window);
    check_pair_contained(report, "derived pair 2", d2, {row_piece, ba_piece},
                         p, window);
    if (p.mu.is_infinite()) {
      emptiness(d1, d2, true);
    } else {
      emptiness(d1, d2, false);
      std::uint64_t mu = p.mu.value();
      PiecePair deep = pair_of(word_ba(mu, mu + 1, false), word_ba(mu + 1, mu, false));
      check_pair_contained(report, "deep pair", deep, {d1, d2}, p, window);
      properness(deep, {d1, d2}, "deep pair");
    }
  } else if (!mu1 && !nu1 && p.mu == p.nu && p.nu.is_finite()) {
    // nu = mu finite, > 1
    report.lemma = "lemma208.v";
    std::uint64_t nu = p.nu.value();
    PiecePair shared = pair_of(word_ba(nu, nu + 1, false), word_ba(nu + 1, nu, false));
    check_pair_contained(report, "shared pair vs row intersection", shared,
                         {main_piece, row_piece}, p, window);
    check_pair_contained(report, "shared pair vs column intersection", shared,
                         {ab2a_piece, ba_piece}, p, window);
  } else if (mu1 && p.nu > ExtNat::finite(1) && p.nu.is_finite()) {
    // mu = 1 < nu, nu finite
    report.lemma = "lemma209.iii";
    std::uint64_t nu = p.nu.value();
    PiecePair deep = pair_of(word_ba(nu, nu + 1, false), word_ba(nu + 1, nu, false));
    // main_piece collapsed to B(a^2b, b) by reduction of ab^2
    check_pair_contained(report, "deep pair", deep, {main_piece, ba_piece}, p,
                         window);
    properness(deep, {main_piece, ba_piece}, "deep pair");
  } else {
    raise(ErrorCode::Precondition,
          "no intersection-claim pattern matches parameters " + p.str());
  }
  return report;
}

}  // namespace orthomon
