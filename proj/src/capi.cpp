#include "orthomon/orthomon.h"

#include <cstring>
#include <filesystem>
#include <string>

#include "arith.hpp"
#include "core.hpp"
#include "green.hpp"
#include "json_io.hpp"
#include "oracle.hpp"
#include "render.hpp"
#include "structure.hpp"
#include "verify.hpp"

using namespace orthomon;

struct ortho_params {
  Params value;
};

struct ortho_word {
  ReducedWord value;
};

struct ortho_word_list {
  std::vector<ortho_word> items;
};

struct ortho_oracle {
  CongruenceTable table;
};

namespace {

thread_local std::string g_last_error;

ortho_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Domain:
      return ORTHO_ERR_DOMAIN;
    case ErrorCode::Parse:
      return ORTHO_ERR_PARSE;
    case ErrorCode::Shape:
      return ORTHO_ERR_SHAPE;
    case ErrorCode::Bound:
      return ORTHO_ERR_BOUND;
    case ErrorCode::NonIdempotent:
      return ORTHO_ERR_NON_IDEMPOTENT;
    case ErrorCode::Precondition:
      return ORTHO_ERR_PRECONDITION;
    case ErrorCode::Length:
      return ORTHO_ERR_LENGTH;
    case ErrorCode::Overflow:
      return ORTHO_ERR_OVERFLOW;
    case ErrorCode::Undecided:
      return ORTHO_ERR_UNDECIDED;
    case ErrorCode::Io:
      return ORTHO_ERR_IO;
  }
  return ORTHO_ERR_ARGUMENT;
}

template <typename Fn>
ortho_status wrap(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ORTHO_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ORTHO_ERR_ARGUMENT;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ExtNat extnat_of(uint32_t v) {
  return v == ORTHO_INF ? ExtNat::infinity() : ExtNat::finite(v);
}

void require(bool ok, const char* what) {
  if (!ok) raise(ErrorCode::Domain, what);
}

ortho_word_list* list_of(const std::vector<ReducedWord>& words) {
  auto* list = new ortho_word_list;
  list->items.reserve(words.size());
  for (const ReducedWord& w : words) list->items.push_back(ortho_word{w});
  return list;
}

nlohmann::json suite_json(const SuiteResult& r) {
  return nlohmann::json{{"suite", r.suite},
                        {"params", params_json(r.params)},
                        {"applicable", r.applicable},
                        {"pass", r.pass()},
                        {"checks", r.checks},
                        {"failures", r.failures},
                        {"notes", r.notes}};
}

}  // namespace

extern "C" {

const char* ortho_version(void) { return "1.0.0"; }

const char* ortho_status_name(ortho_status status) {
  switch (status) {
    case ORTHO_OK:
      return "ok";
    case ORTHO_ERR_DOMAIN:
      return "domain";
    case ORTHO_ERR_PARSE:
      return "parse";
    case ORTHO_ERR_SHAPE:
      return "shape";
    case ORTHO_ERR_BOUND:
      return "bound";
    case ORTHO_ERR_NON_IDEMPOTENT:
      return "non-idempotent";
    case ORTHO_ERR_PRECONDITION:
      return "precondition";
    case ORTHO_ERR_LENGTH:
      return "length";
    case ORTHO_ERR_OVERFLOW:
      return "overflow";
    case ORTHO_ERR_UNDECIDED:
      return "undecided";
    case ORTHO_ERR_IO:
      return "io";
    case ORTHO_ERR_ARGUMENT:
      return "argument";
  }
  return "?";
}

const char* ortho_last_error(void) { return g_last_error.c_str(); }

void ortho_string_free(char* s) { std::free(s); }

ortho_status ortho_params_new(uint32_t nu, uint32_t mu, ortho_params** out) {
  return wrap([&] {
    require(out != nullptr, "null out-parameter");
    *out = new ortho_params{Params{extnat_of(nu), extnat_of(mu)}};
  });
}

void ortho_params_free(ortho_params* p) { delete p; }

uint32_t ortho_params_nu(const ortho_params* p) {
  return p->value.nu.is_infinite()
             ? ORTHO_INF
             : static_cast<uint32_t>(p->value.nu.value());
}

uint32_t ortho_params_mu(const ortho_params* p) {
  return p->value.mu.is_infinite()
             ? ORTHO_INF
             : static_cast<uint32_t>(p->value.mu.value());
}

ortho_status ortho_word_parse(const ortho_params* p, const char* text,
                              ortho_word** out) {
  return wrap([&] {
    require(p && text && out, "null argument");
    *out = new ortho_word{reduce_word(parse_word(text), p->value)};
  });
}

ortho_status ortho_word_from_quadruple(const ortho_params* p, uint64_t i,
                                       uint64_t m, uint64_t n, uint64_t j,
                                       ortho_word** out) {
  return wrap([&] {
    require(p && out, "null argument");
    *out = new ortho_word{element_from_quadruple(i, m, n, j, p->value)};
  });
}

void ortho_word_free(ortho_word* w) { delete w; }

void ortho_word_quadruple(const ortho_word* w, uint64_t out[4]) {
  out[0] = w->value.i;
  out[1] = w->value.m;
  out[2] = w->value.n;
  out[3] = w->value.j;
}

ortho_word_type ortho_word_get_type(const ortho_word* w) {
  switch (classify(w->value)) {
    case WordType::I:
      return ORTHO_TYPE_I;
    case WordType::IIProper:
      return ORTHO_TYPE_II_PROPER;
    case WordType::IIImproper:
      return ORTHO_TYPE_II_IMPROPER;
    case WordType::III:
      return ORTHO_TYPE_III;
  }
  return ORTHO_TYPE_III;
}

int ortho_word_equal(const ortho_word* x, const ortho_word* y) {
  return x->value == y->value ? 1 : 0;
}

ortho_status ortho_word_display(const ortho_word* w, char** out) {
  return wrap([&] {
    require(w && out, "null argument");
    *out = copy_string(display(w->value));
  });
}

ortho_status ortho_word_json(const ortho_word* w, char** out) {
  return wrap([&] {
    require(w && out, "null argument");
    *out = copy_string(element_json(w->value).dump());
  });
}

ortho_status ortho_mul(const ortho_params* p, const ortho_word* x,
                       const ortho_word* y, ortho_word** out) {
  return wrap([&] {
    require(p && x && y && out, "null argument");
    *out = new ortho_word{multiply(x->value, y->value, p->value)};
  });
}

ortho_status ortho_pow(const ortho_params* p, const ortho_word* x, uint64_t k,
                       ortho_word** out) {
  return wrap([&] {
    require(p && x && out, "null argument");
    *out = new ortho_word{power(x->value, k, p->value)};
  });
}

ortho_status ortho_is_idempotent(const ortho_params* p, const ortho_word* x,
                                 int* out) {
  return wrap([&] {
    require(p && x && out, "null argument");
    *out = is_idempotent(x->value, p->value) ? 1 : 0;
  });
}

ortho_status ortho_natural_le(const ortho_params* p, const ortho_word* e,
                              const ortho_word* f, int* out) {
  return wrap([&] {
    require(p && e && f && out, "null argument");
    *out = natural_le(e->value, f->value, p->value) ? 1 : 0;
  });
}

ortho_status ortho_is_inverse_pair(const ortho_params* p, const ortho_word* x,
                                   const ortho_word* y, int* out) {
  return wrap([&] {
    require(p && x && y && out, "null argument");
    *out = is_inverse_pair(x->value, y->value, p->value) ? 1 : 0;
  });
}

ortho_status ortho_order_is_finite(const ortho_params* p, const ortho_word* x,
                                   int* out) {
  return wrap([&] {
    require(p && x && out, "null argument");
    *out = order_of(x->value, p->value).is_finite() ? 1 : 0;
  });
}

ortho_status ortho_green_related(const ortho_params* p, const ortho_word* x,
                                 const ortho_word* y, char rel, int* out) {
  return wrap([&] {
    require(p && x && y && out, "null argument");
    bool value = false;
    switch (rel) {
      case 'R':
        value = r_related(x->value, y->value);
        break;
      case 'L':
        value = l_related(x->value, y->value);
        break;
      case 'H':
        value = h_related(x->value, y->value);
        break;
      case 'D':
        value = d_related(x->value, y->value);
        break;
      default:
        raise(ErrorCode::Domain, "relation must be one of R, L, H, D");
    }
    *out = value ? 1 : 0;
  });
}

ortho_status ortho_green_keys(const ortho_word* x, char** rkey, char** lkey) {
  return wrap([&] {
    require(x && rkey && lkey, "null argument");
    auto [rk, lk] = green_keys(x->value);
    *rkey = copy_string(rk.str());
    *lkey = copy_string(lk.str());
  });
}

size_t ortho_word_list_size(const ortho_word_list* list) {
  return list->items.size();
}

const ortho_word* ortho_word_list_get(const ortho_word_list* list, size_t k) {
  return k < list->items.size() ? &list->items[k] : nullptr;
}

void ortho_word_list_free(ortho_word_list* list) { delete list; }

ortho_status ortho_inverses_within(const ortho_params* p, const ortho_word* x,
                                   uint64_t cap, ortho_word_list** out) {
  return wrap([&] {
    require(p && x && out, "null argument");
    *out = list_of(inverses_within(x->value, p->value, cap));
  });
}

ortho_status ortho_closure(const ortho_params* p,
                           const ortho_word* const* gens, size_t ngens,
                           uint64_t cap, ortho_word_list** out,
                           int* complete) {
  return wrap([&] {
    require(p && gens && out && complete && ngens > 0, "null argument");
    std::vector<ReducedWord> generators;
    for (size_t k = 0; k < ngens; ++k) {
      require(gens[k] != nullptr, "null generator");
      generators.push_back(gens[k]->value);
    }
    ClosureResult result = closure(generators, p->value, cap);
    *out = list_of(result.elements);
    *complete = result.complete ? 1 : 0;
  });
}

ortho_status ortho_bicyclic_presentation(const ortho_params* p,
                                         const ortho_word* q,
                                         const ortho_word* r, int* out) {
  return wrap([&] {
    require(p && q && r && out, "null argument");
    *out = satisfies_bicyclic_presentation(q->value, r->value, p->value) ? 1
                                                                         : 0;
  });
}

ortho_status ortho_bicyclic_coords(const ortho_params* p, const ortho_word* x,
                                   const ortho_word* q, const ortho_word* r,
                                   uint64_t cap, int* found, uint64_t* m,
                                   uint64_t* n) {
  return wrap([&] {
    require(p && x && q && r && found && m && n, "null argument");
    auto coords = bicyclic_coords(x->value, q->value, r->value, p->value, cap);
    *found = coords.has_value() ? 1 : 0;
    if (coords) {
      *m = coords->first;
      *n = coords->second;
    }
  });
}

ortho_status ortho_pieces(const ortho_params* p, const ortho_word* x,
                          uint64_t cap, uint32_t* mask) {
  return wrap([&] {
    require(p && x && mask, "null argument");
    uint32_t bits = 0;
    for (PieceTag tag : decomposition_pieces(x->value, p->value, cap))
      bits |= 1u << static_cast<unsigned>(tag);
    *mask = bits;
  });
}

const char* ortho_piece_name(unsigned index) {
  if (index > static_cast<unsigned>(PieceTag::CYC_B)) return nullptr;
  return piece_tag_name(static_cast<PieceTag>(index)).data();
}

ortho_status ortho_idempotent_dclass(const ortho_params* p,
                                     const ortho_word* e,
                                     ortho_word_list** members,
                                     const char** tag) {
  return wrap([&] {
    require(p && e && members && tag, "null argument");
    BandDClass cls = idempotent_dclass(e->value, p->value);
    *members = list_of(cls.members);
    *tag = band_dclass_tag_name(cls.tag).data();
  });
}

ortho_status ortho_check_lemma210(const ortho_params* p, uint64_t window,
                                  char** report, int* ok) {
  return wrap([&] {
    require(p && report && ok, "null argument");
    CheckReport result = check_lemma210(p->value, window);
    *report = copy_string(report_json(result).dump());
    *ok = result.ok() ? 1 : 0;
  });
}

ortho_status ortho_check_intersections(const ortho_params* p, uint64_t window,
                                       char** report, int* ok) {
  return wrap([&] {
    require(p && report && ok, "null argument");
    CheckReport result = check_intersection_claims(p->value, window);
    *report = copy_string(report_json(result).dump());
    *ok = result.ok() ? 1 : 0;
  });
}

ortho_status ortho_eggbox_tsv(const ortho_params* p, uint64_t rows,
                              uint64_t cols, char** out) {
  return wrap([&] {
    require(p && out, "null argument");
    *out = copy_string(eggbox_tsv(eggbox_grid(p->value, rows, cols)));
  });
}

ortho_status ortho_eggbox_ascii(const ortho_params* p, uint64_t rows,
                                uint64_t cols, char** out) {
  return wrap([&] {
    require(p && out, "null argument");
    *out = copy_string(eggbox_ascii(eggbox_grid(p->value, rows, cols)));
  });
}

ortho_status ortho_band_dot(const ortho_params* p, uint64_t depth,
                            char** out) {
  return wrap([&] {
    require(p && out, "null argument");
    *out = copy_string(band_dot(band_hasse(p->value, depth)));
  });
}

ortho_status ortho_oracle_build(const ortho_params* p, uint32_t L,
                                int with_idempotents, const char* cache_dir,
                                int rebuild, ortho_oracle** out) {
  return wrap([&] {
    require(p && out, "null argument");
    bool idem = with_idempotents != 0;
    if (cache_dir != nullptr && *cache_dir != '\0' && !rebuild) {
      std::filesystem::path path =
          std::filesystem::path(cache_dir) /
          CongruenceTable::cache_file_name(p->value, L, idem);
      if (std::filesystem::exists(path)) {
        CongruenceTable table = CongruenceTable::load(path.string());
        if (table.params() == p->value && table.length_bound() == L &&
            table.with_idempotents() == idem) {
          *out = new ortho_oracle{std::move(table)};
          return;
        }
      }
    }
    CongruenceTable table = CongruenceTable::build(p->value, L, idem);
    if (cache_dir != nullptr && *cache_dir != '\0') {
      std::filesystem::create_directories(cache_dir);
      std::filesystem::path path =
          std::filesystem::path(cache_dir) /
          CongruenceTable::cache_file_name(p->value, L, idem);
      table.save(path.string());
    }
    *out = new ortho_oracle{std::move(table)};
  });
}

void ortho_oracle_free(ortho_oracle* oracle) { delete oracle; }

ortho_status ortho_oracle_equal(const ortho_oracle* oracle, const char* w1,
                                const char* w2, int assume_complete,
                                int* answer) {
  return wrap([&] {
    require(oracle && w1 && w2 && answer, "null argument");
    CongruenceTable::Answer result = oracle->table.equal(
        parse_word(w1), parse_word(w2), assume_complete != 0);
    *answer = result == CongruenceTable::Answer::Yes
                  ? 1
                  : (result == CongruenceTable::Answer::No ? -1 : 0);
  });
}

ortho_status ortho_oracle_stats_json(const ortho_oracle* oracle, char** out) {
  return wrap([&] {
    require(oracle && out, "null argument");
    const CongruenceTable& t = oracle->table;
    nlohmann::json doc{{"params", params_json(t.params())},
                       {"L", t.length_bound()},
                       {"idem", t.with_idempotents()},
                       {"words", t.word_count()},
                       {"classes", t.class_count()}};
    *out = copy_string(doc.dump());
  });
}

ortho_status ortho_oracle_cross_check(const ortho_oracle* oracle,
                                      uint32_t len_bound, char** report,
                                      int* sound) {
  return wrap([&] {
    require(oracle && report && sound, "null argument");
    CrossCheckReport result =
        cross_check(oracle->table, oracle->table.params(), len_bound);
    *report = copy_string(cross_check_json(result).dump());
    *sound = result.sound() ? 1 : 0;
  });
}

ortho_status ortho_verify(const ortho_params* p, const char* suite,
                          uint64_t seed, char** report, int* ok) {
  return wrap([&] {
    require(p && suite && report && ok, "null argument");
    std::vector<SuiteResult> results;
    if (std::string(suite) == "all") {
      for (const std::string& name : suite_names())
        results.push_back(run_suite(name, p->value, seed));
    } else {
      results.push_back(run_suite(suite, p->value, seed));
    }
    std::string lines;
    bool all_ok = true;
    for (const SuiteResult& r : results) {
      lines += suite_json(r).dump() + "\n";
      all_ok = all_ok && r.pass();
    }
    *report = copy_string(lines);
    *ok = all_ok ? 1 : 0;
  });
}

ortho_status ortho_verify_matrix(uint64_t seed, char** report, int* ok) {
  return wrap([&] {
    require(report && ok, "null argument");
    std::string lines;
    bool all_ok = true;
    for (const SuiteResult& r : run_all_suites(seed)) {
      lines += suite_json(r).dump() + "\n";
      all_ok = all_ok && r.pass();
    }
    *report = copy_string(lines);
    *ok = all_ok ? 1 : 0;
  });
}

}  // extern "C"
