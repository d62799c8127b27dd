#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>

#include "arith.hpp"
#include "json.hpp"

namespace orthomon {

namespace {

constexpr std::uint32_t kNone = ~std::uint32_t{0};

std::string repeat(char c, std::uint64_t k) {
  return std::string(static_cast<std::size_t>(k), c);
}

// words of length 1..len, shortlex: offset(len) = 2^len - 2
std::uint32_t length_offset(std::uint32_t len) {
  return (std::uint32_t{1} << len) - 2;
}

std::uint32_t total_words(std::uint32_t L) {
  return (std::uint32_t{1} << (L + 1)) - 2;
}

class UnionFind {
 public:
  explicit UnionFind(std::uint32_t n) : parent_(n) {
    for (std::uint32_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // returns {kept root, absorbed root} or {r, kNone} if already joined
  std::pair<std::uint32_t, std::uint32_t> unite(std::uint32_t a,
                                                std::uint32_t b) {
    std::uint32_t ra = find(a), rb = find(b);
    if (ra == rb) return {ra, kNone};
    // keep the smaller index as root so representatives stay shortlex-minimal
    if (rb < ra) std::swap(ra, rb);
    parent_[rb] = ra;
    return {ra, rb};
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

std::uint32_t CongruenceTable::word_index(const std::string& letters) {
  std::uint32_t len = static_cast<std::uint32_t>(letters.size());
  std::uint32_t bits = 0;
  for (char c : letters) bits = (bits << 1) | (c == 'b' ? 1u : 0u);
  return length_offset(len) + bits;
}

std::string CongruenceTable::word_at(std::uint32_t index) {
  std::uint32_t len = 1;
  while (index >= length_offset(len + 1)) ++len;
  std::uint32_t bits = index - length_offset(len);
  std::string out(len, 'a');
  for (std::uint32_t k = 0; k < len; ++k)
    if (bits & (1u << (len - 1 - k))) out[k] = 'b';
  return out;
}

RelationSet RelationSet::standard(const Params& p, bool with_idempotents,
                                  std::uint32_t L) {
  RelationSet rs;
  rs.pairs.emplace_back("aba", "a");
  rs.pairs.emplace_back("bab", "b");
  rs.pairs.emplace_back("aabb", "ab");
  if (p.nu.is_finite()) {
    std::uint64_t nu = p.nu.value();
    if (nu + 2 <= L)
      rs.pairs.emplace_back(repeat('a', nu + 1) + "b", repeat('a', nu));
  }
  if (p.mu.is_finite()) {
    std::uint64_t mu = p.mu.value();
    if (mu + 2 <= L)
      rs.pairs.emplace_back("a" + repeat('b', mu + 1), repeat('b', mu));
  }
  if (with_idempotents) {
    // catalogued band idempotents whose squares fit in the bound
    auto add_square = [&](const ReducedWord& e) {
      FreeWord w = expand(e);
      if (2 * w.length() <= L) {
        std::string letters = w.letters();
        rs.pairs.emplace_back(letters + letters, letters);
      }
    };
    add_square(kIdemAB);
    for (std::uint64_t k = 1; 4 * k <= L; ++k)
      add_square(ReducedWord{0, k, k, 0});  // b^k a^k
    for (std::uint64_t k = 2; 4 * k <= L; ++k) {
      if (is_valid_quadruple(1, k, k, 1, p))
        add_square(ReducedWord{1, k, k, 1});  // a b^k a^k b
      if (is_valid_quadruple(1, k, k - 1, 0, p))
        add_square(ReducedWord{1, k, k - 1, 0});  // a b^k a^(k-1)
      if (is_valid_quadruple(0, k - 1, k, 1, p))
        add_square(ReducedWord{0, k - 1, k, 1});  // b^(k-1) a^k b
    }
  }
  return rs;
}

CongruenceTable CongruenceTable::build(const Params& p, std::uint32_t L,
                                       bool with_idempotents) {
  if (L < 4 || L > 16)
    raise(ErrorCode::Domain, "congruence length bound must be in [4, 16]");
  std::uint32_t n = total_words(L);
  UnionFind uf(n);

  // partial unary operators: 0/1 prepend a/b, 2/3 append a/b
  auto op_image = [&](int op, std::uint32_t idx) -> std::uint32_t {
    std::uint32_t len = 1;
    while (idx >= length_offset(len + 1)) ++len;
    if (len + 1 > L) return kNone;
    std::uint32_t bits = idx - length_offset(len);
    switch (op) {
      case 0:
        return length_offset(len + 1) + bits;
      case 1:
        return length_offset(len + 1) + bits + (1u << len);
      case 2:
        return length_offset(len + 1) + (bits << 1);
      default:
        return length_offset(len + 1) + (bits << 1) + 1u;
    }
  };

  // per-root image class witness for each operator
  std::vector<std::array<std::uint32_t, 4>> fimg(n);
  for (std::uint32_t w = 0; w < n; ++w)
    for (int op = 0; op < 4; ++op) fimg[w][op] = op_image(op, w);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pending;
  for (const auto& [lhs, rhs] : RelationSet::standard(p, with_idempotents, L)
                                    .pairs) {
    if (lhs.size() <= L && rhs.size() <= L)
      pending.emplace_back(word_index(lhs), word_index(rhs));
  }

  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    auto [kept, absorbed] = uf.unite(x, y);
    if (absorbed == kNone) continue;
    for (int op = 0; op < 4; ++op) {
      std::uint32_t a = fimg[kept][op];
      std::uint32_t b = fimg[absorbed][op];
      if (b == kNone) continue;
      if (a == kNone)
        fimg[kept][op] = b;
      else
        pending.emplace_back(a, b);
    }
  }

  std::vector<std::uint32_t> root_of(n);
  for (std::uint32_t w = 0; w < n; ++w) root_of[w] = uf.find(w);

  CongruenceTable table;
  table.params_ = p;
  table.L_ = L;
  table.idem_ = with_idempotents;
  table.finalize(root_of);
  return table;
}

void CongruenceTable::finalize(const std::vector<std::uint32_t>& root_of) {
  std::uint32_t n = static_cast<std::uint32_t>(root_of.size());
  class_of_.assign(n, kNone);
  rep_.clear();
  std::map<std::uint32_t, std::uint32_t> id_of_root;
  for (std::uint32_t w = 0; w < n; ++w) {
    std::uint32_t root = root_of[w];
    auto [it, fresh] = id_of_root.emplace(root, static_cast<std::uint32_t>(rep_.size()));
    if (fresh) rep_.push_back(w);  // first member in shortlex order
    class_of_[w] = it->second;
  }
  suspect_.assign(rep_.size(), 0);
  std::uint32_t first_max_len = length_offset(L_);
  for (std::uint32_t w = first_max_len; w < n; ++w)
    suspect_[class_of_[w]] = 1;
}

std::uint32_t CongruenceTable::class_of(const std::string& letters) const {
  if (letters.empty() || letters.size() > L_)
    raise(ErrorCode::Length, "word length outside the table bound");
  for (char c : letters)
    if (c != 'a' && c != 'b')
      raise(ErrorCode::Parse, "oracle words must be over {a,b}");
  return class_of_[word_index(letters)];
}

std::string CongruenceTable::representative(std::uint32_t cls) const {
  return word_at(rep_[cls]);
}

CongruenceTable::Answer CongruenceTable::equal(const FreeWord& w1,
                                               const FreeWord& w2,
                                               bool assume_complete) const {
  if (w1.length() > L_ || w2.length() > L_)
    raise(ErrorCode::Length, "word length exceeds the table bound");
  std::uint32_t c1 = class_of(w1.letters());
  std::uint32_t c2 = class_of(w2.letters());
  if (c1 == c2) return Answer::Yes;
  if (assume_complete && !class_suspect(c1) && !class_suspect(c2))
    return Answer::No;
  return Answer::NoOrUnknown;
}

bool operator==(const CongruenceTable& a, const CongruenceTable& b) {
  return a.params_ == b.params_ && a.L_ == b.L_ && a.idem_ == b.idem_ &&
         a.class_of_ == b.class_of_ && a.rep_ == b.rep_ &&
         a.suspect_ == b.suspect_;
}

std::string CongruenceTable::cache_file_name(const Params& p, std::uint32_t L,
                                             bool with_idempotents) {
  return "congruence-nu" + p.nu.str() + "-mu" + p.mu.str() + "-L" +
         std::to_string(L) + (with_idempotents ? "-idem" : "-plain") + ".json";
}

void CongruenceTable::save(const std::string& path) const {
  nlohmann::json doc;
  doc["version"] = 1;
  doc["nu"] = params_.nu.str();
  doc["mu"] = params_.mu.str();
  doc["L"] = L_;
  doc["idem"] = idem_;
  doc["classes"] = class_of_;
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::Io, "cannot write cache file " + path);
  out << doc.dump() << "\n";
  if (!out) raise(ErrorCode::Io, "failed writing cache file " + path);
}

CongruenceTable CongruenceTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::Io, "cannot read cache file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::Io, "corrupt cache file " + path + ": " + e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1)
      raise(ErrorCode::Io, "unsupported cache version in " + path);
    CongruenceTable table;
    table.params_ = Params{ExtNat::parse(doc.at("nu").get<std::string>()),
                           ExtNat::parse(doc.at("mu").get<std::string>())};
    table.L_ = doc.at("L").get<std::uint32_t>();
    table.idem_ = doc.at("idem").get<bool>();
    std::vector<std::uint32_t> classes =
        doc.at("classes").get<std::vector<std::uint32_t>>();
    if (table.L_ < 4 || table.L_ > 16 ||
        classes.size() != total_words(table.L_))
      raise(ErrorCode::Io, "cache file " + path + " has inconsistent shape");
    // rebuild representatives and suspect flags from the class assignment
    std::uint32_t n = static_cast<std::uint32_t>(classes.size());
    std::uint32_t nclasses = 0;
    for (std::uint32_t c : classes) nclasses = std::max(nclasses, c + 1);
    std::vector<std::uint32_t> root_of(n);
    std::vector<std::uint32_t> first(nclasses, kNone);
    for (std::uint32_t w = 0; w < n; ++w) {
      if (classes[w] >= nclasses)
        raise(ErrorCode::Io, "cache file " + path + " has bad class ids");
      if (first[classes[w]] == kNone) first[classes[w]] = w;
      root_of[w] = first[classes[w]];
    }
    table.finalize(root_of);
    if (table.class_of_ != classes)
      raise(ErrorCode::Io,
            "cache file " + path + " has non-canonical class ids");
    return table;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::Io, "corrupt cache file " + path + ": " + e.what());
  }
}

CrossCheckReport cross_check(const CongruenceTable& table, const Params& p,
                             std::uint32_t len_bound) {
  if (len_bound + 4 > table.length_bound())
    raise(ErrorCode::Precondition,
          "cross_check needs len_bound <= L - 4 for substitution room");
  CrossCheckReport report;
  report.params = p;
  report.len_bound = len_bound;

  // soundness: within one oracle class all reduced forms must agree
  std::map<std::uint32_t, std::pair<std::string, ReducedWord>> first_seen;
  std::uint32_t limit = (std::uint32_t{1} << (len_bound + 1)) - 2;
  for (std::uint32_t idx = 0; idx < limit; ++idx) {
    std::string letters = CongruenceTable::word_at(idx);
    ++report.words_checked;
    ReducedWord reduced = reduce_word(parse_word(letters), p);
    std::uint32_t cls = table.class_of(letters);
    auto [it, fresh] = first_seen.emplace(cls, std::make_pair(letters, reduced));
    if (!fresh && it->second.second != reduced)
      report.soundness_violations.emplace_back(it->second.first, letters);

    FreeWord normal = expand(reduced);
    if (normal.length() > table.length_bound() ||
        table.equal(parse_word(letters), normal) !=
            CongruenceTable::Answer::Yes)
      report.reachability_failures.push_back(letters);
  }
  return report;
}

}  // namespace orthomon
