#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "arith.hpp"
#include "green.hpp"
#include "oracle.hpp"
#include "structure.hpp"

namespace orthomon {

namespace {

ReducedWord of(const char* text, const Params& p) {
  return reduce_word(parse_word(text), p);
}

SuiteResult make_result(const char* suite, const Params& p) {
  SuiteResult result;
  result.suite = suite;
  result.params = p;
  return result;
}

void note_failure(SuiteResult& result, const std::string& detail) {
  ++result.failures;
  if (result.notes.size() < 8) result.notes.push_back(detail);
}

std::mt19937_64 seeded_rng(const SuiteResult& result, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (char c : result.suite + result.params.str())
    h = h * 1099511628211ull + static_cast<unsigned char>(c);
  return std::mt19937_64(h);
}

const ReducedWord& pick(const std::vector<ReducedWord>& pool,
                        std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
  return pool[dist(rng)];
}

std::vector<ReducedWord> window_idempotents(const Params& p,
                                            std::uint64_t max_exp) {
  std::vector<ReducedWord> out;
  for (const ReducedWord& x : window_elements(p, max_exp))
    if (is_idempotent(x, p)) out.push_back(x);
  return out;
}

SuiteResult suite_assoc(const Params& p, std::uint64_t seed) {
  SuiteResult result = make_result("assoc", p);
  auto rng = seeded_rng(result, seed);
  std::vector<ReducedWord> pool = window_elements(p, 12);
  for (int t = 0; t < 100000; ++t) {
    const ReducedWord& x = pick(pool, rng);
    const ReducedWord& y = pick(pool, rng);
    const ReducedWord& z = pick(pool, rng);
    ++result.checks;
    if (multiply(multiply(x, y, p), z, p) != multiply(x, multiply(y, z, p), p))
      note_failure(result, "associativity fails on " + display(x) + ", " +
                               display(y) + ", " + display(z));
  }
  return result;
}

SuiteResult suite_green(const Params& p, std::uint64_t seed) {
  SuiteResult result = make_result("green", p);
  auto rng = seeded_rng(result, seed);

  // H-triviality: equal keys imply equality (window 6)
  std::vector<ReducedWord> window = window_elements(p, 6);
  for (const ReducedWord& x : window)
    for (const ReducedWord& y : window) {
      ++result.checks;
      if (r_related(x, y) && l_related(x, y) && x != y)
        note_failure(result,
                     "H-related but distinct: " + display(x) + ", " + display(y));
    }

  // distinct powers of non-idempotents up to 50
  std::vector<ReducedWord> bases{kGenA, kGenB};
  for (int t = 0; t < 4; ++t) {
    const ReducedWord& x = pick(window, rng);
    if (!is_idempotent(x, p)) bases.push_back(x);
  }
  for (const ReducedWord& x : bases) {
    std::set<ReducedWord> seen;
    for (std::uint64_t k = 1; k <= 50; ++k) {
      ++result.checks;
      if (!seen.insert(power(x, k, p)).second)
        note_failure(result, "powers of " + display(x) + " collide at k=" +
                                 std::to_string(k));
    }
  }

  // witness soundness: R-related window pairs have one-sided multipliers
  std::vector<ReducedWord> small = window_elements(p, 4);
  std::vector<ReducedWord> search = window_elements(p, 8);
  auto has_witness = [&](const ReducedWord& from, const ReducedWord& to,
                         bool right) {
    for (const ReducedWord& u : search)
      if ((right ? multiply(from, u, p) : multiply(u, from, p)) == to)
        return true;
    return false;
  };
  for (int t = 0; t < 200; ++t) {
    const ReducedWord& x = pick(small, rng);
    const ReducedWord& y = pick(small, rng);
    if (r_related(x, y)) {
      ++result.checks;
      if (!has_witness(x, y, true) || !has_witness(y, x, true))
        note_failure(result, "missing R witness for " + display(x) + ", " +
                                 display(y));
    }
    if (l_related(x, y)) {
      ++result.checks;
      if (!has_witness(x, y, false) || !has_witness(y, x, false))
        note_failure(result, "missing L witness for " + display(x) + ", " +
                                 display(y));
    }
  }

  // eggbox completeness: every realized (RKey, LKey) pair is realized by a
  // single element with exactly those keys
  std::vector<RKey> rkeys;
  std::vector<LKey> lkeys;
  for (const ReducedWord& x : window_elements(p, 4)) {
    auto [rk, lk] = green_keys(x);
    if (std::find(rkeys.begin(), rkeys.end(), rk) == rkeys.end())
      rkeys.push_back(rk);
    if (std::find(lkeys.begin(), lkeys.end(), lk) == lkeys.end())
      lkeys.push_back(lk);
  }
  for (const RKey& rk : rkeys)
    for (const LKey& lk : lkeys) {
      ++result.checks;
      ReducedWord cell;
      if (rk.center && lk.center)
        cell = kIdemAB;
      else if (rk.center)
        cell = ReducedWord{0, 0, lk.n, lk.j};
      else if (lk.center)
        cell = ReducedWord{rk.i, rk.m, 0, 0};
      else
        cell = ReducedWord{rk.i, rk.m, lk.n, lk.j};
      auto [crk, clk] = green_keys(cell);
      if (!(crk == rk) || !(clk == lk))
        note_failure(result, "cell for " + rk.str() + " x " + lk.str() +
                                 " has wrong keys");
    }
  return result;
}

SuiteResult suite_lemma203(const Params& p, std::uint64_t) {
  SuiteResult result = make_result("lemma203", p);
  for (const ReducedWord& x : window_elements(p, 6)) {
    ++result.checks;
    WordType t = classify(x);
    bool in_L = l_related(x, kIdemAB);
    bool in_R = r_related(x, kIdemAB);
    bool want_I = in_L && x != kIdemAB;
    bool want_II = in_R;
    bool want_III = !in_L && !in_R;
    bool ok = (t == WordType::I) == want_I &&
              (t == WordType::IIProper || t == WordType::IIImproper) ==
                  want_II &&
              (t == WordType::III) == want_III;
    if (!ok)
      note_failure(result, "type/class mismatch at " + display(x));
  }
  return result;
}

SuiteResult suite_lemma204(const Params& p, std::uint64_t seed) {
  SuiteResult result = make_result("lemma204", p);
  auto rng = seeded_rng(result, seed);
  std::vector<ReducedWord> pool = window_elements(p, 8);
  struct Region {
    const char* name;
    std::function<bool(const ReducedWord&)> contains;
  };
  std::vector<Region> regions{
      {"R_ab", [](const ReducedWord& x) { return r_related(x, kIdemAB); }},
      {"L_ab", [](const ReducedWord& x) { return l_related(x, kIdemAB); }},
      {"S\\R_ab", [](const ReducedWord& x) { return !r_related(x, kIdemAB); }},
      {"S\\L_ab", [](const ReducedWord& x) { return !l_related(x, kIdemAB); }},
  };
  for (const Region& region : regions) {
    std::vector<ReducedWord> members;
    for (const ReducedWord& x : pool)
      if (region.contains(x)) members.push_back(x);
    for (int t = 0; t < 10000; ++t) {
      const ReducedWord& x = pick(members, rng);
      const ReducedWord& y = pick(members, rng);
      ++result.checks;
      if (!region.contains(multiply(x, y, p)))
        note_failure(result, std::string(region.name) + " not closed at " +
                                 display(x) + " * " + display(y));
    }
  }
  // generator identities: R_ab = <a, ab>, L_ab = <b, ab> at window scale
  ClosureResult r_gen = closure({kGenA, kIdemAB}, p, 6);
  for (const ReducedWord& x : r_gen.elements) {
    ++result.checks;
    if (!r_related(x, kIdemAB))
      note_failure(result, "<a, ab> leaves R_ab at " + display(x));
  }
  ClosureResult l_gen = closure({kGenB, kIdemAB}, p, 6);
  for (const ReducedWord& x : l_gen.elements) {
    ++result.checks;
    if (!l_related(x, kIdemAB))
      note_failure(result, "<b, ab> leaves L_ab at " + display(x));
  }
  return result;
}

SuiteResult suite_lemma205(const Params& p, std::uint64_t seed) {
  SuiteResult result = make_result("lemma205", p);
  auto rng = seeded_rng(result, seed);
  std::vector<ReducedWord> pool = window_elements(p, 10);

  if (p.mu == ExtNat::finite(1)) {
    // witness: a * b^2 = b lands in R_b although both factors avoid R_b
    ++result.checks;
    ReducedWord product = multiply(kGenA, of("b^2", p), p);
    bool ok = product == kGenB && !r_related(kGenA, kGenB) &&
              !r_related(of("b^2", p), kGenB) && r_related(product, kGenB);
    if (!ok) note_failure(result, "mu=1 witness a*b^2=b failed");
  } else {
    std::vector<ReducedWord> outside;
    for (const ReducedWord& x : pool)
      if (!r_related(x, kGenB)) outside.push_back(x);
    for (int t = 0; t < 10000; ++t) {
      const ReducedWord& x = pick(outside, rng);
      const ReducedWord& y = pick(outside, rng);
      ++result.checks;
      if (r_related(multiply(x, y, p), kGenB))
        note_failure(result, "S\\R_b not closed at " + display(x) + " * " +
                                 display(y));
    }
  }

  if (p.nu == ExtNat::finite(1)) {
    ++result.checks;
    ReducedWord product = multiply(of("a^2", p), kGenB, p);
    bool ok = product == kGenA && !l_related(of("a^2", p), kGenA) &&
              !l_related(kGenB, kGenA) && l_related(product, kGenA);
    if (!ok) note_failure(result, "nu=1 witness a^2*b=a failed");
  } else {
    std::vector<ReducedWord> outside;
    for (const ReducedWord& x : pool)
      if (!l_related(x, kGenA)) outside.push_back(x);
    for (int t = 0; t < 10000; ++t) {
      const ReducedWord& x = pick(outside, rng);
      const ReducedWord& y = pick(outside, rng);
      ++result.checks;
      if (l_related(multiply(x, y, p), kGenA))
        note_failure(result, "S\\L_a not closed at " + display(x) + " * " +
                                 display(y));
    }
  }
  return result;
}

SuiteResult suite_lemma206(const Params& p, std::uint64_t) {
  SuiteResult result = make_result("lemma206", p);
  std::vector<ReducedWord> idems = window_idempotents(p, 6);
  for (const ReducedWord& e : idems)
    for (const ReducedWord& f : idems)
      for (const ReducedWord& g : idems) {
        ++result.checks;
        ReducedWord lhs = multiply(multiply(multiply(e, f, p), g, p), e, p);
        ReducedWord rhs = multiply(multiply(multiply(e, g, p), f, p), e, p);
        if (lhs != rhs)
          note_failure(result, "normality fails at " + display(e) + ", " +
                                   display(f) + ", " + display(g));
      }
  return result;
}

SuiteResult suite_band(const Params& p, std::uint64_t) {
  SuiteResult result = make_result("band", p);
  std::vector<ReducedWord> idems = window_idempotents(p, 6);

  // orthodoxy: products of idempotents are idempotent
  for (const ReducedWord& e : idems)
    for (const ReducedWord& f : idems) {
      ++result.checks;
      if (!is_idempotent(multiply(e, f, p), p))
        note_failure(result,
                     "band not closed at " + display(e) + " * " + display(f));
    }

  // natural order is a partial order
  auto le = [&](const ReducedWord& e, const ReducedWord& f) {
    return natural_le(e, f, p);
  };
  for (const ReducedWord& e : idems) {
    ++result.checks;
    if (!le(e, e)) note_failure(result, "order not reflexive at " + display(e));
  }
  for (const ReducedWord& e : idems)
    for (const ReducedWord& f : idems) {
      ++result.checks;
      if (le(e, f) && le(f, e) && e != f)
        note_failure(result, "order not antisymmetric at " + display(e) +
                                 ", " + display(f));
    }
  for (const ReducedWord& e : idems)
    for (const ReducedWord& f : idems) {
      if (!le(e, f)) continue;
      for (const ReducedWord& g : idems) {
        ++result.checks;
        if (le(f, g) && !le(e, g))
          note_failure(result, "order not transitive at " + display(e) + " <= " +
                                   display(f) + " <= " + display(g));
      }
    }

  // every valid level-k layer is a nonsingular rectangular band
  for (std::uint64_t k = 2; k <= 6; ++k) {
    ReducedWord corner{1, k, k, 1};
    if (!is_valid_quadruple(corner.i, corner.m, corner.n, corner.j, p))
      continue;
    std::vector<ReducedWord> layer{corner,
                                   ReducedWord{1, k, k - 1, 0},
                                   ReducedWord{0, k - 1, k - 1, 0},
                                   ReducedWord{0, k - 1, k, 1}};
    bool some_ef_ne_e = false, some_ef_ne_f = false;
    for (const ReducedWord& e : layer)
      for (const ReducedWord& f : layer) {
        ++result.checks;
        if (multiply(multiply(e, f, p), e, p) != e)
          note_failure(result, "layer " + std::to_string(k) +
                                   " not rectangular at " + display(e) + ", " +
                                   display(f));
        ReducedWord ef = multiply(e, f, p);
        if (ef != e) some_ef_ne_e = true;
        if (ef != f) some_ef_ne_f = true;
      }
    ++result.checks;
    if (!some_ef_ne_e || !some_ef_ne_f)
      note_failure(result,
                   "layer " + std::to_string(k) + " is singular");
  }
  return result;
}

SuiteResult suite_lemma207(const Params& p, std::uint64_t) {
  SuiteResult result = make_result("lemma207", p);
  if (p.mu == ExtNat::finite(1) && p.nu == ExtNat::finite(1)) {
    result.applicable = false;
    result.notes.push_back("requires mu > 1 or nu > 1");
    return result;
  }

  struct Claim {
    const char* q;
    const char* r;
    const char* identity;
  };
  // generator words reduce to the collapsed pairs when mu = 1 or nu = 1
  std::vector<Claim> claims{{"a^2b", "ab^2", "ab"},
                            {"ab^2a^2", "ab^3a", "ab^2a"},
                            {"ba^2", "b^2a", "ba"},
                            {"ba^3b", "b^2a^2b", "ba^2b"}};
  for (const Claim& claim : claims) {
    ReducedWord q = of(claim.q, p);
    ReducedWord r = of(claim.r, p);
    ReducedWord e = of(claim.identity, p);
    ++result.checks;
    if (!is_inverse_pair(q, r, p))
      note_failure(result, std::string(claim.q) + " and " + claim.r +
                               " are not mutually inverse");
    ++result.checks;
    if (!satisfies_bicyclic_presentation(q, r, p))
      note_failure(result, std::string("pair (") + claim.q + ", " + claim.r +
                               ") fails the bicyclic presentation");
    ++result.checks;
    if (multiply(q, r, p) != e || multiply(e, q, p) != q ||
        multiply(r, e, p) != r)
      note_failure(result, std::string("identity of <") + claim.q + ", " +
                               claim.r + "> is not " + claim.identity);
  }

  // ab covers ab^2a^2b (equal to ab's unique cover inside the chain)
  ReducedWord top = kIdemAB;
  ReducedWord next = of("ab^2a^2b", p);
  ++result.checks;
  if (!natural_le(next, top, p) || next == top)
    note_failure(result, "ab^2a^2b is not below ab");
  for (const ReducedWord& g : window_idempotents(p, 4)) {
    if (g == top || g == next) continue;
    ++result.checks;
    if (natural_le(next, g, p) && natural_le(g, top, p))
      note_failure(result, display(g) + " sits strictly between ab^2a^2b and ab");
  }

  // structural band D-classes match connected components of the thin-edge
  // graph on window idempotents
  std::vector<ReducedWord> idems = window_idempotents(p, 6);
  std::map<ReducedWord, std::size_t> index;
  for (std::size_t k = 0; k < idems.size(); ++k) index[idems[k]] = k;
  std::vector<std::size_t> comp(idems.size());
  for (std::size_t k = 0; k < comp.size(); ++k) comp[k] = k;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (std::size_t x = 0; x < idems.size(); ++x)
    for (std::size_t y = x + 1; y < idems.size(); ++y)
      if (r_related(idems[x], idems[y]) || l_related(idems[x], idems[y]))
        comp[find(x)] = find(y);
  for (const ReducedWord& e : idems) {
    BandDClass cls = idempotent_dclass(e, p);
    bool inside_window = true;
    for (const ReducedWord& f : cls.members)
      if (f.m > 6 || f.n > 6) inside_window = false;
    if (!inside_window) continue;
    std::vector<ReducedWord> component;
    for (const ReducedWord& f : idems)
      if (find(index[f]) == find(index[e])) component.push_back(f);
    ++result.checks;
    if (component != cls.members)
      note_failure(result, "band D-class of " + display(e) +
                               " disagrees with the thin-edge component");
  }
  return result;
}

SuiteResult suite_lemma208(const Params& p, std::uint64_t) {
  SuiteResult result = make_result("lemma208", p);
  bool mu1 = p.mu == ExtNat::finite(1);
  bool nu1 = p.nu == ExtNat::finite(1);
  if (mu1 || nu1) {
    result.applicable = false;
    result.notes.push_back("requires mu > 1 and nu > 1 (see lemma209)");
    return result;
  }

  // coverage: every window element lies in at least one union piece
  for (const ReducedWord& x : window_elements(p, 5)) {
    ++result.checks;
    if (decomposition_pieces(x, p, x.i + x.m + x.n + x.j + 2).empty())
      note_failure(result, display(x) + " is covered by no piece");
  }

  // the four piece identities are pairwise incomparable
  std::vector<ReducedWord> identities{of("ab", p), of("ba^2b", p), of("ba", p),
                                      of("ab^2a", p)};
  for (const ReducedWord& e : identities)
    for (const ReducedWord& f : identities) {
      if (e == f) continue;
      ++result.checks;
      if (natural_le(e, f, p))
        note_failure(result, "piece identities comparable: " + display(e) +
                                 " <= " + display(f));
    }
  result.notes.push_back(
      "containment of every same-identity bicyclic subsemigroup: not "
      "machine-checked");

  bool pattern = (p.nu > p.mu && p.mu.is_finite()) ||
                 (p.mu > p.nu && p.nu.is_finite()) ||
                 (p.mu == p.nu && p.nu.is_finite());
  if (pattern) {
    CheckReport report = check_intersection_claims(p, 5);
    result.checks += 1;
    if (!report.ok())
      for (const std::string& v : report.violations)
        note_failure(result, report.lemma + ": " + v);
    for (const std::string& n : report.not_machine_checked)
      result.notes.push_back(report.lemma + ": " + n);
  } else {
    result.notes.push_back("no intersection-claim pattern for " + p.str());
  }
  return result;
}

SuiteResult suite_lemma209(const Params& p, std::uint64_t) {
  SuiteResult result = make_result("lemma209", p);
  bool mu1 = p.mu == ExtNat::finite(1);
  bool nu1 = p.nu == ExtNat::finite(1);
  if (mu1 == nu1) {  // neither or both
    result.applicable = false;
    result.notes.push_back("requires exactly one of mu, nu equal to 1");
    return result;
  }

  for (const ReducedWord& x : window_elements(p, 5)) {
    ++result.checks;
    if (decomposition_pieces(x, p, x.i + x.m + x.n + x.j + 2).empty())
      note_failure(result, display(x) + " is covered by no piece");
  }

  ReducedWord e1 = kIdemAB;
  ReducedWord e2 = of("ba", p);
  ++result.checks;
  if (natural_le(e1, e2, p) || natural_le(e2, e1, p))
    note_failure(result, "piece identities ab and ba are comparable");

  if (mu1 && p.nu.is_finite()) {
    CheckReport report = check_intersection_claims(p, 5);
    ++result.checks;
    if (!report.ok())
      for (const std::string& v : report.violations)
        note_failure(result, report.lemma + ": " + v);
    for (const std::string& n : report.not_machine_checked)
      result.notes.push_back(report.lemma + ": " + n);
  } else {
    result.notes.push_back(
        "intersection claim applies to mu = 1 with finite nu only");
  }
  return result;
}

SuiteResult suite_lemma210(const Params& p, std::uint64_t) {
  SuiteResult result = make_result("lemma210", p);
  if (p.mu == ExtNat::finite(1) && p.nu == ExtNat::finite(1)) {
    result.applicable = false;
    result.notes.push_back("requires mu > 1 or nu > 1");
    return result;
  }
  CheckReport report = check_lemma210(p, 5);
  result.checks += window_elements(p, 5).size();
  for (const std::string& v : report.violations) note_failure(result, v);
  result.notes.push_back("excluded classes: " +
                         [&] {
                           std::string s;
                           for (const std::string& e : report.excluded)
                             s += (s.empty() ? "" : ", ") + e;
                           return s.empty() ? std::string("none") : s;
                         }());
  return result;
}

SuiteResult suite_oracle(const Params& p, std::uint64_t) {
  SuiteResult result = make_result("oracle", p);
  CongruenceTable table = CongruenceTable::build(p, 12, true);
  CrossCheckReport report = cross_check(table, p, 7);
  result.checks += report.words_checked;
  for (const auto& [w1, w2] : report.soundness_violations)
    note_failure(result, "oracle-equal words reduce differently: " + w1 +
                             ", " + w2);
  bool bicyclic = p.nu == ExtNat::finite(1) && p.mu == ExtNat::finite(1);
  if (bicyclic) {
    for (const std::string& w : report.reachability_failures)
      note_failure(result, "bicyclic reachability failure at " + w);
  } else {
    result.notes.push_back(
        "reachability failures (advisory): " +
        std::to_string(report.reachability_failures.size()));
  }
  return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "assoc",    "band",     "green",    "lemma203", "lemma204", "lemma205",
      "lemma206", "lemma207", "lemma208", "lemma209", "lemma210", "oracle"};
  return names;
}

const std::vector<Params>& verification_matrix() {
  static const std::vector<Params> matrix = [] {
    auto inf = ExtNat::infinity();
    auto fin = [](std::uint64_t v) { return ExtNat::finite(v); };
    return std::vector<Params>{
        {inf, inf},    {fin(2), inf},    {inf, fin(3)},
        {fin(2), fin(2)}, {fin(3), fin(2)}, {fin(2), fin(3)},
        {fin(1), fin(2)}, {fin(2), fin(1)}, {fin(1), fin(1)}};
  }();
  return matrix;
}

SuiteResult run_suite(const std::string& name, const Params& p,
                      std::uint64_t seed) {
  if (name == "assoc") return suite_assoc(p, seed);
  if (name == "band") return suite_band(p, seed);
  if (name == "green") return suite_green(p, seed);
  if (name == "lemma203") return suite_lemma203(p, seed);
  if (name == "lemma204") return suite_lemma204(p, seed);
  if (name == "lemma205") return suite_lemma205(p, seed);
  if (name == "lemma206") return suite_lemma206(p, seed);
  if (name == "lemma207") return suite_lemma207(p, seed);
  if (name == "lemma208") return suite_lemma208(p, seed);
  if (name == "lemma209") return suite_lemma209(p, seed);
  if (name == "lemma210") return suite_lemma210(p, seed);
  if (name == "oracle") return suite_oracle(p, seed);
  raise(ErrorCode::Domain, "unknown verification suite '" + name + "'");
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
  std::vector<SuiteResult> results;
  for (const Params& p : verification_matrix())
    for (const std::string& name : suite_names())
      results.push_back(run_suite(name, p, seed));
  return results;
}

}  // namespace orthomon
