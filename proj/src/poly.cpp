#include "thresh/poly.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>

#include <json.hpp>

#include "thresh/errors.hpp"

static_assert(GMP_NUMB_BITS == 64 && GMP_NAIL_BITS == 0,
              "Kronecker packing assumes 64-bit limbs without nails");

namespace thresh {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::lambda() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

bool IntPoly::degree_at_most(long long bound) const noexcept {
  if (coeffs_.empty()) return true;
  return bound >= 0 && coeffs_.size() - 1 <= static_cast<unsigned long long>(bound);
}

mpz_class IntPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : mpz_class(0);
}

std::size_t IntPoly::max_bits() const noexcept {
  std::size_t bits = 0;
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  }
  return bits;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  *this = poly_mul(*this, rhs);
  return *this;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  r += b;
  return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  r -= b;
  return r;
}

IntPoly poly_neg(IntPoly a) {
  std::vector<mpz_class> c = a.coeffs();
  for (auto& x : c) x = -x;
  return IntPoly(std::move(c));
}

IntPoly poly_scale(const IntPoly& a, const mpz_class& s) {
  if (s == 0) return {};
  std::vector<mpz_class> c = a.coeffs();
  for (auto& x : c) x *= s;
  return IntPoly(std::move(c));
}

namespace {

std::atomic<std::size_t> g_kronecker_cutoff{32};

// ORs |v| into the limb buffer starting at bit offset `bit`.
void or_magnitude(mp_limb_t* buf, std::size_t bit, const mpz_class& v) {
  const mpz_srcptr z = v.get_mpz_t();
  const std::size_t nlimbs = mpz_size(z);
  const std::size_t word = bit / GMP_NUMB_BITS;
  const unsigned shift = bit % GMP_NUMB_BITS;
  for (std::size_t t = 0; t < nlimbs; ++t) {
    const mp_limb_t w = mpz_getlimbn(z, static_cast<mp_size_t>(t));
    buf[word + t] |= w << shift;
    if (shift != 0) buf[word + t + 1] |= w >> (GMP_NUMB_BITS - shift);
  }
}

// Evaluates p at 2^slot. Positive and negative coefficients are packed into
// separate nonnegative integers so every slot holds a plain magnitude.
mpz_class pack(const IntPoly& p, std::size_t slot) {
  const std::size_t total_bits = slot * p.length();
  const std::size_t nwords = total_bits / GMP_NUMB_BITS + 2;
  mpz_class pos, neg;
  mp_limb_t* pbuf = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(nwords));
  mp_limb_t* nbuf = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(nwords));
  std::fill(pbuf, pbuf + nwords, mp_limb_t{0});
  std::fill(nbuf, nbuf + nwords, mp_limb_t{0});
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const int s = sgn(c[k]);
    if (s > 0) or_magnitude(pbuf, k * slot, c[k]);
    else if (s < 0) or_magnitude(nbuf, k * slot, c[k]);
  }
  mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(nwords));
  mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(nwords));
  return pos - neg;
}

// Bits [start, start + len) of a nonnegative integer given by its limbs.
mpz_class extract_bits(const mp_limb_t* limbs, std::size_t nlimbs, std::size_t start,
                       std::size_t len) {
  auto limb = [&](std::size_t i) -> mp_limb_t { return i < nlimbs ? limbs[i] : 0; };
  const std::size_t out_words = (len + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
  const std::size_t word = start / GMP_NUMB_BITS;
  const unsigned shift = start % GMP_NUMB_BITS;
  mpz_class r;
  mp_limb_t* out = mpz_limbs_write(r.get_mpz_t(), static_cast<mp_size_t>(out_words));
  for (std::size_t t = 0; t < out_words; ++t) {
    mp_limb_t w = limb(word + t) >> shift;
    if (shift != 0) w |= limb(word + t + 1) << (GMP_NUMB_BITS - shift);
    out[t] = w;
  }
  if (const unsigned rem = len % GMP_NUMB_BITS; rem != 0) {
    out[out_words - 1] &= (mp_limb_t{1} << rem) - 1;
  }
  mpz_limbs_finish(r.get_mpz_t(), static_cast<mp_size_t>(out_words));
  return r;
}

std::size_t ceil_log2(std::size_t m) {
  return m <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(m - 1));
}

}  // namespace

std::size_t kronecker_cutoff() { return g_kronecker_cutoff.load(std::memory_order_relaxed); }

void set_kronecker_cutoff(std::size_t cutoff) {
  g_kronecker_cutoff.store(cutoff, std::memory_order_relaxed);
}

IntPoly poly_mul_schoolbook(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<mpz_class> r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

IntPoly poly_mul_kronecker(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // |c_k| <= min(len) * 2^(bits(a) + bits(b)) < 2^(slot - 2)
  const std::size_t slot = a.max_bits() + b.max_bits() +
                           ceil_log2(std::min(a.length(), b.length())) + 2;
  mpz_class product = pack(a, slot) * pack(b, slot);

  // Offset every slot by 2^(slot-1) so each digit of the sum lies in
  // [0, 2^slot); subtracting the offset per slot recovers c_k exactly.
  const std::size_t out_len = a.length() + b.length() - 1;
  {
    const std::size_t nwords = (slot * out_len) / GMP_NUMB_BITS + 1;
    mpz_class offset;
    mp_limb_t* buf = mpz_limbs_write(offset.get_mpz_t(), static_cast<mp_size_t>(nwords));
    std::fill(buf, buf + nwords, mp_limb_t{0});
    for (std::size_t k = 0; k < out_len; ++k) {
      const std::size_t bit = k * slot + slot - 1;
      buf[bit / GMP_NUMB_BITS] |= mp_limb_t{1} << (bit % GMP_NUMB_BITS);
    }
    mpz_limbs_finish(offset.get_mpz_t(), static_cast<mp_size_t>(nwords));
    product += offset;
  }
  if (sgn(product) < 0) throw ArithmeticInvariantError("kronecker: negative offset product");

  const mpz_class half = mpz_class(1) << static_cast<mp_bitcnt_t>(slot - 1);
  const mp_limb_t* limbs = mpz_limbs_read(product.get_mpz_t());
  const std::size_t nlimbs = mpz_size(product.get_mpz_t());
  std::vector<mpz_class> out(out_len);
  for (std::size_t k = 0; k < out_len; ++k) {
    out[k] = extract_bits(limbs, nlimbs, k * slot, slot) - half;
  }
  if (mpz_sizeinbase(product.get_mpz_t(), 2) > slot * out_len) {
    throw ArithmeticInvariantError("kronecker: product overflowed its slots");
  }
  return IntPoly(std::move(out));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b, std::size_t cutoff) {
  if (a.is_zero() || b.is_zero()) return {};
  if (std::min(a.length(), b.length()) < cutoff) return poly_mul_schoolbook(a, b);
  return poly_mul_kronecker(a, b);
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) { return poly_mul(a, b, kronecker_cutoff()); }

mpz_class poly_eval(const IntPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) { return poly_add(a, b); }
IntPoly operator-(const IntPoly& a, const IntPoly& b) { return poly_sub(a, b); }
IntPoly operator-(IntPoly a) { return poly_neg(std::move(a)); }
IntPoly operator*(const IntPoly& a, const IntPoly& b) { return poly_mul(a, b); }

std::string to_text(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    const bool negative = sgn(c[k]) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const mpz_class mag = abs(c[k]);
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "λ";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view s) : s_(s) {}

  IntPoly parse() {
    std::map<std::size_t, mpz_class> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;

      mpz_class coeff = 1;
      bool have_digits = false;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = mpz_class(digits());
        have_digits = true;
        skip_space();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip_space();
          if (!variable()) fail("expected variable after '*'");
          terms[power()] += sign * coeff;
          skip_space();
          continue;
        }
      }
      if (variable()) {
        terms[power()] += sign * coeff;
      } else if (have_digits) {
        terms[0] += sign * coeff;
      } else {
        fail("expected a coefficient or variable");
      }
      skip_space();
    }
    std::size_t top = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<mpz_class> c(top + 1);
    for (auto& [k, v] : terms) c[k] += v;
    return IntPoly(std::move(c));
  }

 private:
  [[nodiscard]] bool at_end() const { return pos_ >= s_.size(); }
  [[nodiscard]] char peek() const { return s_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    const std::size_t begin = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(s_.substr(begin, pos_ - begin));
  }

  bool variable() {
    if (s_.substr(pos_).starts_with("λ")) {
      pos_ += std::string_view("λ").size();
      return true;
    }
    if (!at_end() && (peek() == 'x' || peek() == 'l')) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t power() {
    skip_space();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_space();
    const std::string d = digits();
    if (d.empty()) fail("expected exponent after '^'");
    return std::stoul(d);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial text: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

IntPoly parse_text(std::string_view text) { return TextParser(text).parse(); }

std::string to_json(const IntPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr.dump();
}

IntPoly parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("polynomial json: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("polynomial json: expected an array");
  std::vector<mpz_class> c;
  c.reserve(j.size());
  for (const auto& el : j) {
    std::string s;
    if (el.is_string()) s = el.get<std::string>();
    else if (el.is_number_integer()) s = el.dump();
    else throw ParseError("polynomial json: coefficients must be decimal strings");
    if (!is_decimal(s)) throw ParseError("polynomial json: bad coefficient \"" + s + "\"");
    c.emplace_back(s);
  }
  return IntPoly(std::move(c));
}

PolyMatrix2 PolyMatrix2::identity() { return {IntPoly{1}, {}, {}, IntPoly{1}}; }

PolyMatrix2 matmul2(const PolyMatrix2& a, const PolyMatrix2& b) {
  return {
      a.e11 * b.e11 + a.e12 * b.e21,
      a.e11 * b.e12 + a.e12 * b.e22,
      a.e21 * b.e11 + a.e22 * b.e21,
      a.e21 * b.e12 + a.e22 * b.e22,
  };
}

std::pair<IntPoly, IntPoly> apply_to_vector(const PolyMatrix2& m,
                                            const std::pair<IntPoly, IntPoly>& v) {
  return {m.e11 * v.first + m.e12 * v.second, m.e21 * v.first + m.e22 * v.second};
}

}  // namespace thresh
