#include "core.hpp"

#include <algorithm>
#include <cctype>

namespace orthomon {

std::string_view word_type_name(WordType t) {
  switch (t) {
    case WordType::I:
      return "I";
    case WordType::IIProper:
      return "II";
    case WordType::IIImproper:
      return "II*";
    case WordType::III:
      return "III";
  }
  return "?";
}

WordType classify(const ReducedWord& x) {
  if (x.n == 0) return WordType::I;
  if (x.m == 0 && x.i == 0)
    return (x.n == 1 && x.j == 1) ? WordType::IIImproper : WordType::IIProper;
  return WordType::III;
}

bool is_valid_quadruple(std::uint64_t i, std::uint64_t m, std::uint64_t n,
                        std::uint64_t j, const Params& p) {
  if (i > 1 || j > 1) return false;
  if (m > kMaxExponent || n > kMaxExponent) return false;
  bool shape_I = (n == 0 && j == 0 && m > i);
  bool shape_II = (i == 0 && m == 0 && n >= 1 && n >= j);
  bool shape_III = (m > i && n > j);
  if (!shape_I && !shape_II && !shape_III) return false;
  if (i == 1 && p.mu.lt(m)) return false;
  if (j == 1 && p.nu.lt(n)) return false;
  return true;
}

ReducedWord element_from_quadruple(std::uint64_t i, std::uint64_t m,
                                   std::uint64_t n, std::uint64_t j,
                                   const Params& p) {
  auto quad = [&] {
    return "(" + std::to_string(i) + "," + std::to_string(m) + "," +
           std::to_string(n) + "," + std::to_string(j) + ")";
  };
  if (m > kMaxExponent || n > kMaxExponent)
    raise(ErrorCode::Overflow, "exponent exceeds the 2^32 cap in " + quad());
  bool shape_I = (i <= 1 && n == 0 && j == 0 && m > i);
  bool shape_II = (i == 0 && m == 0 && n >= 1 && j <= 1 && n >= j);
  bool shape_III = (i <= 1 && j <= 1 && m > i && n > j);
  if (!shape_I && !shape_II && !shape_III)
    raise(ErrorCode::Shape, "no reduced-word shape matches " + quad());
  if (i == 1 && p.mu.lt(m))
    raise(ErrorCode::Bound,
          "bound m <= mu violated by " + quad() + " under " + p.str());
  if (j == 1 && p.nu.lt(n))
    raise(ErrorCode::Bound,
          "bound n <= nu violated by " + quad() + " under " + p.str());
  return ReducedWord{static_cast<std::uint32_t>(i), m, n,
                     static_cast<std::uint32_t>(j)};
}

namespace {

void append_factor(std::string& out, char letter, std::uint64_t exp) {
  if (exp == 0) return;
  out += letter;
  if (exp > 1) {
    out += '^';
    out += std::to_string(exp);
  }
}

}  // namespace

std::string display(const ReducedWord& x) {
  std::string out;
  append_factor(out, 'a', x.i);
  append_factor(out, 'b', x.m);
  append_factor(out, 'a', x.n);
  append_factor(out, 'b', x.j);
  return out;
}

void FreeWord::append(char letter, std::uint64_t count) {
  if (count == 0) return;
  if (letter != 'a' && letter != 'b')
    raise(ErrorCode::Parse, std::string("illegal letter '") + letter + "'");
  if (!runs_.empty() && runs_.back().letter == letter) {
    runs_.back().count += count;
    if (runs_.back().count > kMaxExponent)
      raise(ErrorCode::Overflow, "run length exceeds the 2^32 cap");
  } else {
    runs_.push_back(Run{letter, count});
  }
}

std::uint64_t FreeWord::length() const noexcept {
  std::uint64_t total = 0;
  for (const Run& r : runs_) total += r.count;
  return total;
}

std::string FreeWord::letters(std::uint64_t max_len) const {
  if (length() > max_len)
    raise(ErrorCode::Overflow, "word too long to expand into letters");
  std::string out;
  out.reserve(static_cast<std::size_t>(length()));
  for (const Run& r : runs_)
    out.append(static_cast<std::size_t>(r.count), r.letter);
  return out;
}

std::string FreeWord::str() const {
  std::string out;
  for (const Run& r : runs_) append_factor(out, r.letter, r.count);
  return out;
}

FreeWord parse_word(std::string_view text) {
  FreeWord word;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    char letter = text[pos];
    if (letter != 'a' && letter != 'b')
      raise(ErrorCode::Parse,
            std::string("illegal character '") + letter + "' in word");
    ++pos;
    skip_ws();
    std::uint64_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      if (pos >= text.size() ||
          !std::isdigit(static_cast<unsigned char>(text[pos])))
        raise(ErrorCode::Parse, "'^' must be followed by a positive integer");
      exp = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        exp = exp * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (exp > kMaxExponent)
          raise(ErrorCode::Overflow, "exponent exceeds the 2^32 cap");
        ++pos;
      }
      if (exp == 0) raise(ErrorCode::Parse, "zero exponent");
      skip_ws();
    }
    word.append(letter, exp);
  }
  if (word.empty()) raise(ErrorCode::Parse, "empty word");
  return word;
}

FreeWord expand(const ReducedWord& x) {
  FreeWord word;
  word.append('a', x.i);
  word.append('b', x.m);
  word.append('a', x.n);
  word.append('b', x.j);
  return word;
}

std::vector<ReducedWord> window_elements(const Params& p,
                                         std::uint64_t max_exp) {
  std::vector<ReducedWord> out;
  for (std::uint32_t i = 0; i <= 1; ++i)
    for (std::uint64_t m = 0; m <= max_exp; ++m)
      for (std::uint64_t n = 0; n <= max_exp; ++n)
        for (std::uint32_t j = 0; j <= 1; ++j)
          if (is_valid_quadruple(i, m, n, j, p))
            out.push_back(ReducedWord{i, m, n, j});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace orthomon
