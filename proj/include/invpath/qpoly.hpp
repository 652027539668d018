#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invpath {

/// Polynomial in q with 64-bit integer coefficients.
///
/// Coefficients are stored in ascending degree with trailing zeros trimmed, so
/// the zero polynomial has no coefficients. Every arithmetic operation is
/// overflow-checked and throws std::overflow_error instead of wrapping.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<int64_t> coeffs);
  explicit QPoly(std::vector<int64_t> coeffs);

  static QPoly constant(int64_t c);
  /// c * q^k
  static QPoly monomial(int64_t c, int k);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the leading term; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int64_t coeff(int k) const;
  std::span<const int64_t> coeffs() const { return coeffs_; }

  /// Value at an integer point, overflow-checked.
  int64_t eval(int64_t q) const;

  QPoly shifted(int k) const;
  QPoly scaled(int64_t c) const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Quotient of an exact division. Throws std::logic_error when the divisor
  /// does not divide this polynomial.
  QPoly exact_div(const QPoly& divisor) const;

  /// "c0 + c1*q + c2*q^2 + ..." with zero terms omitted, unit coefficients
  /// elided and negative terms written with " - ". The zero polynomial is "0".
  std::string str() const;
  static QPoly parse(std::string_view text);

 private:
  void trim();
  std::vector<int64_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

QPoly pow(const QPoly& base, int exponent);

/// [n]_q = 1 + q + ... + q^{n-1}; n >= 1.
QPoly qint(int n);

/// [2n-1]_q!! = prod_{k=1}^{n} [2k-1]_q.
QPoly odd_double_factorial(int n);

/// Gaussian binomial coefficient; zero when k < 0 or k > n.
QPoly gaussian_binomial(int n, int k);

/// Ordinary binomial coefficient, overflow-checked; zero outside 0 <= k <= n.
int64_t binomial(int n, int k);

namespace checked {
int64_t add(int64_t a, int64_t b, const char* what, int degree);
int64_t mul(int64_t a, int64_t b, const char* what, int degree);
}  // namespace checked

}  // namespace invpath
