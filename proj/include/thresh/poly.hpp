#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace thresh {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficient k multiplies lambda^k. The representation is canonical: the
/// top coefficient is nonzero and the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  /// The polynomial lambda.
  static IntPoly lambda();
  /// c * lambda^k.
  static IntPoly monomial(const mpz_class& c, std::size_t k);

  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// nullopt stands for the degree of the zero polynomial (minus infinity).
  [[nodiscard]] std::optional<std::size_t> degree() const noexcept;
  /// True iff degree <= bound; the zero polynomial satisfies every bound.
  [[nodiscard]] bool degree_at_most(long long bound) const noexcept;
  [[nodiscard]] std::size_t length() const noexcept { return coeffs_.size(); }

  /// Coefficient of lambda^k, zero past the end.
  [[nodiscard]] mpz_class coeff(std::size_t k) const;
  [[nodiscard]] const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  /// Largest bit length of any coefficient magnitude (0 for the zero polynomial).
  [[nodiscard]] std::size_t max_bits() const noexcept;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void normalize();

  std::vector<mpz_class> coeffs_;
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_neg(IntPoly a);
IntPoly poly_scale(const IntPoly& a, const mpz_class& c);

/// Length at which poly_mul switches from schoolbook to Kronecker
/// substitution; compared against the shorter operand. Default 32.
std::size_t kronecker_cutoff();
void set_kronecker_cutoff(std::size_t cutoff);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b, std::size_t cutoff);
IntPoly poly_mul_schoolbook(const IntPoly& a, const IntPoly& b);
/// Packs both operands into big integers at a slot width wide enough for
/// every product coefficient, multiplies once and unpacks.
IntPoly poly_mul_kronecker(const IntPoly& a, const IntPoly& b);

mpz_class poly_eval(const IntPoly& p, const mpz_class& x);

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator-(IntPoly a);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

/// Human-readable form, highest degree first: "λ^3 - 3λ - 2". Zero prints "0".
std::string to_text(const IntPoly& p);
/// Inverse of to_text. Accepts "λ", "x" or "l" as the variable name.
IntPoly parse_text(std::string_view text);
/// JSON array of decimal strings, low-to-high: ["-1","0","1"].
std::string to_json(const IntPoly& p);
/// Inverse of to_json. Also accepts plain JSON integers as elements.
IntPoly parse_json(std::string_view text);

/// 2x2 matrix of polynomials, row-major entries e11 e12 / e21 e22.
struct PolyMatrix2 {
  IntPoly e11, e12, e21, e22;

  static PolyMatrix2 identity();

  friend bool operator==(const PolyMatrix2&, const PolyMatrix2&) = default;
};

PolyMatrix2 matmul2(const PolyMatrix2& a, const PolyMatrix2& b);
std::pair<IntPoly, IntPoly> apply_to_vector(const PolyMatrix2& m,
                                            const std::pair<IntPoly, IntPoly>& v);

}  // namespace thresh
