#include "arith.hpp"

#include <optional>
#include <variant>

namespace orthomon {

namespace {

// Type I fragment a^i b^m with m > i.
struct Prefix {
  std::uint32_t i;
  std::uint64_t m;
};

// Type II fragment a^n b^j with n >= 1, n >= j. (1,1) is the improper
// fragment ab.
struct Suffix {
  std::uint64_t n;
  std::uint32_t j;
};

void check_exponent(std::uint64_t e) {
  if (e > kMaxExponent)
    raise(ErrorCode::Overflow, "product exponent exceeds the 2^32 cap");
}

// a b^(mu+1) = b^mu, applied once when the bound is exceeded.
Prefix normalize(Prefix f, const Params& p) {
  check_exponent(f.m);
  if (f.i == 1 && p.mu.lt(f.m)) return Prefix{0, f.m - 1};
  return f;
}

// a^(nu+1) b = a^nu, applied once when the bound is exceeded.
Suffix normalize(Suffix f, const Params& p) {
  check_exponent(f.n);
  if (f.j == 1 && p.nu.lt(f.n)) return Suffix{f.n - 1, 0};
  return f;
}

Prefix mul_prefix_prefix(Prefix x, Prefix y, const Params& p) {
  return normalize(Prefix{x.i, x.m + y.m - y.i}, p);
}

Suffix mul_suffix_suffix(Suffix x, Suffix y, const Params& p) {
  return normalize(Suffix{x.n + y.n - x.j, y.j}, p);
}

// (a^n b^j)(a^i b^m): type I when m-i > n-j, type II otherwise.
std::variant<Prefix, Suffix> mul_suffix_prefix(Suffix x, Prefix y,
                                               const Params& p) {
  std::uint64_t d1 = y.m - y.i;
  std::uint64_t d2 = x.n - x.j;
  if (d1 > d2) return normalize(Prefix{1, d1 - d2 + 1}, p);
  return normalize(Suffix{d2 - d1 + 1, 1}, p);
}

std::optional<Prefix> prefix_of(const ReducedWord& x) {
  if (x.m == 0) return std::nullopt;  // type II
  return Prefix{x.i, x.m};
}

std::optional<Suffix> suffix_of(const ReducedWord& x) {
  if (x.n == 0) return std::nullopt;  // type I
  return Suffix{x.n, x.j};
}

bool improper(Suffix s) { return s.n == 1 && s.j == 1; }

ReducedWord word_of(Prefix f) { return ReducedWord{f.i, f.m, 0, 0}; }

ReducedWord word_of(Suffix s) { return ReducedWord{0, 0, s.n, s.j}; }

ReducedWord word_of(Prefix f, Suffix s) {
  return ReducedWord{f.i, f.m, s.n, s.j};
}

}  // namespace

ReducedWord multiply(const ReducedWord& x, const ReducedWord& y,
                     const Params& p) {
  std::optional<Prefix> px = prefix_of(x);
  std::optional<Suffix> qx = suffix_of(x);
  std::optional<Prefix> py = prefix_of(y);
  std::optional<Suffix> qy = suffix_of(y);

  if (!qx && !py) {
    // type I times type II: concatenate, or drop an improper right factor
    if (improper(*qy)) return word_of(*px);
    return word_of(*px, *qy);
  }

  std::variant<Prefix, Suffix> mid =
      (qx && py) ? mul_suffix_prefix(*qx, *py, p)
                 : (qx ? std::variant<Prefix, Suffix>(*qx)
                       : std::variant<Prefix, Suffix>(*py));

  if (std::holds_alternative<Prefix>(mid)) {
    // qy is empty or proper here: y with an improper suffix is the word ab,
    // which has no prefix part, so mid would have been x's suffix.
    Prefix w = std::get<Prefix>(mid);
    if (px) w = mul_prefix_prefix(*px, w, p);
    if (!qy) return word_of(w);
    return word_of(w, *qy);
  }

  Suffix w = std::get<Suffix>(mid);
  if (qy) w = mul_suffix_suffix(w, *qy, p);
  if (!px) return word_of(w);
  if (improper(w)) return word_of(*px);
  return word_of(*px, w);
}

ReducedWord reduce_word(const FreeWord& w, const Params& p) {
  if (w.empty()) raise(ErrorCode::Parse, "cannot reduce the empty word");
  bool first = true;
  ReducedWord acc;
  for (const FreeWord::Run& run : w.runs()) {
    ReducedWord factor = run.letter == 'a' ? ReducedWord{0, 0, run.count, 0}
                                           : ReducedWord{0, run.count, 0, 0};
    acc = first ? factor : multiply(acc, factor, p);
    first = false;
  }
  return acc;
}

ReducedWord power(const ReducedWord& x, std::uint64_t k, const Params& p) {
  if (k < 1) raise(ErrorCode::Domain, "power requires k >= 1");
  // binary powering; multiply is associative
  ReducedWord base = x;
  ReducedWord acc;
  bool have_acc = false;
  while (k > 0) {
    if (k & 1) {
      acc = have_acc ? multiply(acc, base, p) : base;
      have_acc = true;
    }
    k >>= 1;
    if (k > 0) base = multiply(base, base, p);
  }
  return acc;
}

bool is_idempotent(const ReducedWord& x, const Params& p) {
  return multiply(x, x, p) == x;
}

bool natural_le(const ReducedWord& e, const ReducedWord& f, const Params& p) {
  if (!is_idempotent(e, p) || !is_idempotent(f, p))
    raise(ErrorCode::NonIdempotent,
          "natural_le requires idempotent arguments");
  return multiply(e, f, p) == e && multiply(f, e, p) == e;
}

bool is_inverse_pair(const ReducedWord& x, const ReducedWord& y,
                     const Params& p) {
  return multiply(multiply(x, y, p), x, p) == x &&
         multiply(multiply(y, x, p), y, p) == y;
}

std::vector<ReducedWord> inverses_within(const ReducedWord& x,
                                         const Params& p, std::uint64_t cap) {
  if (cap < 1) raise(ErrorCode::Domain, "inverses_within requires cap >= 1");
  std::vector<ReducedWord> out;
  for (const ReducedWord& y : window_elements(p, cap))
    if (is_inverse_pair(x, y, p)) out.push_back(y);
  return out;
}

ExtNat order_of(const ReducedWord& x, const Params& p) {
  return is_idempotent(x, p) ? ExtNat::finite(1) : ExtNat::infinity();
}

}  // namespace orthomon
