#include "thresh.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <string_view>
#include <vector>

#include "thresh/charpoly.hpp"
#include "thresh/errors.hpp"
#include "thresh/graph.hpp"
#include "thresh/oracle.hpp"
#include "thresh/poly.hpp"
#include "thresh/random.hpp"

struct thresh_poly {
  thresh::IntPoly value;
};

namespace {

thread_local std::string g_last_error;

thresh_status fail(thresh_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
thresh_status guarded(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const thresh::ParseError& e) {
    return fail(THRESH_E_PARSE, e.what());
  } catch (const thresh::DomainError& e) {
    return fail(THRESH_E_DOMAIN, e.what());
  } catch (const thresh::CapExceeded& e) {
    return fail(THRESH_E_CAP, e.what());
  } catch (const std::bad_alloc&) {
    return fail(THRESH_E_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(THRESH_E_INTERNAL, e.what());
  } catch (...) {
    return fail(THRESH_E_INTERNAL, "unknown exception");
  }
}

char* dup_string(std::string_view s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

mpz_class parse_integer(const char* text) {
  std::string_view s(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  bool ok = i < s.size();
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') ok = false;
  }
  if (!ok) throw thresh::ParseError("not a decimal integer: \"" + std::string(s) + "\"");
  return mpz_class(std::string(s[0] == '+' ? s.substr(1) : s));
}

std::vector<mpz_class> parse_integers(const char* const* items, std::size_t count) {
  std::vector<mpz_class> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (items[k] == nullptr) throw thresh::ParseError("null integer entry");
    out.push_back(parse_integer(items[k]));
  }
  return out;
}

thresh::ThresholdGraph parse_graph(const char* bits) {
  return thresh::ThresholdGraph(thresh::parse_sequence(bits));
}

}  // namespace

#define THRESH_REQUIRE(ptr) \
  do { \
    if ((ptr) == nullptr) return fail(THRESH_E_NULL, #ptr " is NULL"); \
  } while (0)

extern "C" {

const char* thresh_last_error(void) { return g_last_error.c_str(); }

const char* thresh_status_name(thresh_status status) {
  switch (status) {
    case THRESH_OK: return "ok";
    case THRESH_E_PARSE: return "parse error";
    case THRESH_E_DOMAIN: return "domain error";
    case THRESH_E_CAP: return "oracle cap exceeded";
    case THRESH_E_NULL: return "null argument";
    case THRESH_E_INTERNAL: return "internal error";
    case THRESH_E_NOMEM: return "out of memory";
  }
  return "unknown status";
}

void thresh_string_free(char* s) { std::free(s); }

thresh_status thresh_algo_from_name(const char* name, thresh_algo* out) {
  THRESH_REQUIRE(name);
  THRESH_REQUIRE(out);
  const std::string_view n(name);
  if (n == "auto") *out = THRESH_ALGO_AUTO;
  else if (n == "quadratic") *out = THRESH_ALGO_QUADRATIC;
  else if (n == "balanced") *out = THRESH_ALGO_BALANCED;
  else if (n == "oracle") *out = THRESH_ALGO_ORACLE;
  else if (n == "interp") *out = THRESH_ALGO_INTERP;
  else return fail(THRESH_E_PARSE, "unknown algorithm \"" + std::string(n) + "\"");
  return THRESH_OK;
}

size_t thresh_oracle_cap(void) { return thresh::oracle_cap(); }
void thresh_set_oracle_cap(size_t cap) { thresh::set_oracle_cap(cap); }
size_t thresh_auto_crossover(void) { return thresh::auto_crossover(); }
void thresh_set_auto_crossover(size_t n) { thresh::set_auto_crossover(n); }
size_t thresh_kronecker_cutoff(void) { return thresh::kronecker_cutoff(); }
void thresh_set_kronecker_cutoff(size_t cutoff) { thresh::set_kronecker_cutoff(cutoff); }

thresh_status thresh_vertex_count(const char* bits, size_t* out) {
  THRESH_REQUIRE(bits);
  THRESH_REQUIRE(out);
  return guarded([&] {
    *out = thresh::parse_sequence(bits).vertex_count();
    return THRESH_OK;
  });
}

thresh_status thresh_edge_query(const char* bits, size_t i, size_t j, int* out) {
  THRESH_REQUIRE(bits);
  THRESH_REQUIRE(out);
  return guarded([&] {
    *out = parse_graph(bits).edge_query(i, j) ? 1 : 0;
    return THRESH_OK;
  });
}

thresh_status thresh_edge_count(const char* bits, uint64_t* out) {
  THRESH_REQUIRE(bits);
  THRESH_REQUIRE(out);
  return guarded([&] {
    *out = parse_graph(bits).edge_count();
    return THRESH_OK;
  });
}

thresh_status thresh_random_sequence(uint64_t seed, size_t n, char** out) {
  THRESH_REQUIRE(out);
  if (n == 0) return fail(THRESH_E_DOMAIN, "a graph needs at least one vertex");
  return guarded([&] {
    *out = dup_string(thresh::random_sequence(seed, n).to_string());
    return THRESH_OK;
  });
}

thresh_status thresh_det(const char* const* b, size_t nb, const char* const* d, size_t nd,
                         char** out) {
  if (nb > 0) THRESH_REQUIRE(b);
  if (nd > 0) THRESH_REQUIRE(d);
  THRESH_REQUIRE(out);
  return guarded([&] {
    thresh::WeightedThresholdMatrix m(parse_integers(b, nb), parse_integers(d, nd));
    *out = dup_string(thresh::det_weighted(m).get_str());
    return THRESH_OK;
  });
}

thresh_status thresh_eval(const char* bits, const char* at, char** out) {
  THRESH_REQUIRE(bits);
  THRESH_REQUIRE(at);
  THRESH_REQUIRE(out);
  return guarded([&] {
    const auto g = parse_graph(bits);
    *out = dup_string(thresh::charpoly_eval(g, parse_integer(at)).get_str());
    return THRESH_OK;
  });
}

thresh_status thresh_charpoly(const char* bits, thresh_algo algo, unsigned threads,
                              thresh_poly** out) {
  THRESH_REQUIRE(bits);
  THRESH_REQUIRE(out);
  return guarded([&] {
    thresh::Algorithm a{};
    switch (algo) {
      case THRESH_ALGO_AUTO: a = thresh::Algorithm::Auto; break;
      case THRESH_ALGO_QUADRATIC: a = thresh::Algorithm::Quadratic; break;
      case THRESH_ALGO_BALANCED: a = thresh::Algorithm::Balanced; break;
      case THRESH_ALGO_ORACLE: a = thresh::Algorithm::Oracle; break;
      case THRESH_ALGO_INTERP: a = thresh::Algorithm::Interpolation; break;
      default: return fail(THRESH_E_DOMAIN, "unknown algorithm id");
    }
    const auto g = parse_graph(bits);
    *out = new thresh_poly{thresh::charpoly(g, a, threads)};
    return THRESH_OK;
  });
}

thresh_status thresh_charpoly_weighted(const char* const* b, size_t nb, const char* const* d,
                                       size_t nd, thresh_poly** out) {
  if (nb > 0) THRESH_REQUIRE(b);
  if (nd > 0) THRESH_REQUIRE(d);
  THRESH_REQUIRE(out);
  return guarded([&] {
    thresh::WeightedThresholdMatrix m(parse_integers(b, nb), parse_integers(d, nd));
    *out = new thresh_poly{thresh::charpoly_weighted(m)};
    return THRESH_OK;
  });
}

void thresh_poly_free(thresh_poly* p) { delete p; }

size_t thresh_poly_length(const thresh_poly* p) { return p ? p->value.length() : 0; }

size_t thresh_poly_max_bits(const thresh_poly* p) { return p ? p->value.max_bits() : 0; }

thresh_status thresh_poly_coeff(const thresh_poly* p, size_t k, char** out) {
  THRESH_REQUIRE(p);
  THRESH_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(p->value.coeff(k).get_str());
    return THRESH_OK;
  });
}

int thresh_poly_equal(const thresh_poly* a, const thresh_poly* b) {
  if (a == nullptr || b == nullptr) return a == b;
  return a->value == b->value ? 1 : 0;
}

thresh_status thresh_poly_eval(const thresh_poly* p, const char* at, char** out) {
  THRESH_REQUIRE(p);
  THRESH_REQUIRE(at);
  THRESH_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(thresh::poly_eval(p->value, parse_integer(at)).get_str());
    return THRESH_OK;
  });
}

thresh_status thresh_poly_to_json(const thresh_poly* p, char** out) {
  THRESH_REQUIRE(p);
  THRESH_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(thresh::to_json(p->value));
    return THRESH_OK;
  });
}

thresh_status thresh_poly_from_json(const char* json, thresh_poly** out) {
  THRESH_REQUIRE(json);
  THRESH_REQUIRE(out);
  return guarded([&] {
    *out = new thresh_poly{thresh::parse_json(json)};
    return THRESH_OK;
  });
}

thresh_status thresh_poly_to_text(const thresh_poly* p, char** out) {
  THRESH_REQUIRE(p);
  THRESH_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(thresh::to_text(p->value));
    return THRESH_OK;
  });
}

thresh_status thresh_poly_from_text(const char* text, thresh_poly** out) {
  THRESH_REQUIRE(text);
  THRESH_REQUIRE(out);
  return guarded([&] {
    *out = new thresh_poly{thresh::parse_text(text)};
    return THRESH_OK;
  });
}

}  // extern "C"
