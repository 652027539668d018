#include "invpath/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace invpath {

namespace checked {

int64_t add(int64_t a, int64_t b, const char* what, int degree) {
  int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error(std::string("qpoly: coefficient overflow in ") + what +
                              " at degree " + std::to_string(degree));
  }
  return out;
}

int64_t mul(int64_t a, int64_t b, const char* what, int degree) {
  int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error(std::string("qpoly: coefficient overflow in ") + what +
                              " at degree " + std::to_string(degree));
  }
  return out;
}

}  // namespace checked

QPoly::QPoly(std::initializer_list<int64_t> coeffs) : coeffs_(coeffs) { trim(); }

QPoly::QPoly(std::vector<int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(int64_t c) { return QPoly(std::vector<int64_t>{c}); }

QPoly QPoly::monomial(int64_t c, int k) {
  if (k < 0) throw std::domain_error("qpoly: negative exponent");
  std::vector<int64_t> v(static_cast<size_t>(k) + 1, 0);
  v[k] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int64_t QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

int64_t QPoly::eval(int64_t q) const {
  // Horner
  int64_t acc = 0;
  for (int k = degree(); k >= 0; --k) {
    acc = checked::mul(acc, q, "eval", k);
    acc = checked::add(acc, coeffs_[k], "eval", k);
  }
  return acc;
}

QPoly QPoly::shifted(int k) const {
  if (k < 0) throw std::domain_error("qpoly: negative shift");
  if (is_zero()) return {};
  std::vector<int64_t> v(static_cast<size_t>(k), 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(v));
}

QPoly QPoly::scaled(int64_t c) const {
  std::vector<int64_t> v(coeffs_.size());
  for (size_t k = 0; k < v.size(); ++k) {
    v[k] = checked::mul(coeffs_[k], c, "scalar-mul", static_cast<int>(k));
  }
  return QPoly(std::move(v));
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (size_t k = 0; k < other.coeffs_.size(); ++k) {
    coeffs_[k] = checked::add(coeffs_[k], other.coeffs_[k], "add", static_cast<int>(k));
  }
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (size_t k = 0; k < other.coeffs_.size(); ++k) {
    int64_t neg;
    if (__builtin_sub_overflow(int64_t{0}, other.coeffs_[k], &neg)) {
      throw std::overflow_error("qpoly: coefficient overflow in sub at degree " +
                                std::to_string(k));
    }
    coeffs_[k] = checked::add(coeffs_[k], neg, "sub", static_cast<int>(k));
  }
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<int64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      const int deg = static_cast<int>(i + j);
      v[i + j] = checked::add(v[i + j], checked::mul(a.coeffs_[i], b.coeffs_[j], "mul", deg),
                              "mul", deg);
    }
  }
  return QPoly(std::move(v));
}

QPoly& QPoly::operator*=(const QPoly& other) { return *this = *this * other; }

QPoly QPoly::exact_div(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::logic_error("qpoly: division by zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) {
    throw std::logic_error("qpoly: inexact division (" + str() + ") / (" + divisor.str() + ")");
  }
  std::vector<int64_t> rem = coeffs_;
  const int dd = divisor.degree();
  const int64_t lead = divisor.coeffs_.back();
  std::vector<int64_t> quot(static_cast<size_t>(degree() - dd) + 1, 0);
  for (int k = degree() - dd; k >= 0; --k) {
    const int64_t top = rem[k + dd];
    if (top % lead != 0) {
      throw std::logic_error("qpoly: inexact division (" + str() + ") / (" + divisor.str() + ")");
    }
    const int64_t c = top / lead;
    quot[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      const int64_t prod = checked::mul(c, divisor.coeffs_[j], "div", k + j);
      int64_t diff;
      if (__builtin_sub_overflow(rem[k + j], prod, &diff)) {
        throw std::overflow_error("qpoly: coefficient overflow in div at degree " +
                                  std::to_string(k + j));
      }
      rem[k + j] = diff;
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](int64_t c) { return c != 0; })) {
    throw std::logic_error("qpoly: inexact division (" + str() + ") / (" + divisor.str() + ")");
  }
  return QPoly(std::move(quot));
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const int64_t c = coeffs_[k];
    if (c == 0) continue;
    // |INT64_MIN| is not representable; print it through unsigned.
    const bool negative = c < 0;
    const uint64_t mag = negative ? uint64_t{0} - static_cast<uint64_t>(c) : static_cast<uint64_t>(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'q';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

QPoly QPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("qpoly: cannot parse \"" + std::string(text) + "\": " + why);
  };
  if (s.empty()) fail("empty input");

  QPoly out;
  size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    uint64_t mag = 1;
    bool has_digits = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mag = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        if (__builtin_mul_overflow(mag, uint64_t{10}, &mag) ||
            __builtin_add_overflow(mag, static_cast<uint64_t>(s[i] - '0'), &mag)) {
          fail("coefficient out of range");
        }
        ++i;
      }
      has_digits = true;
    }
    int exponent = 0;
    if (has_digits && i < s.size() && s[i] == '*') {
      ++i;
      if (i >= s.size() || s[i] != 'q') fail("expected 'q' after '*'");
    }
    if (i < s.size() && s[i] == 'q') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("bad exponent");
        exponent = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          exponent = exponent * 10 + (s[i] - '0');
          if (exponent > 1'000'000) fail("exponent out of range");
          ++i;
        }
      }
    } else if (!has_digits) {
      fail("expected a term");
    }
    const uint64_t limit = negative ? uint64_t{1} << 63 : (uint64_t{1} << 63) - 1;
    if (mag > limit) fail("coefficient out of range");
    const int64_t c = negative ? static_cast<int64_t>(uint64_t{0} - mag) : static_cast<int64_t>(mag);
    out += monomial(c, exponent);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

QPoly pow(const QPoly& base, int exponent) {
  if (exponent < 0) throw std::domain_error("qpoly: negative power");
  QPoly out = QPoly::constant(1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

QPoly qint(int n) {
  if (n < 1) throw std::domain_error("qint: [n]_q requires n >= 1, got " + std::to_string(n));
  return QPoly(std::vector<int64_t>(static_cast<size_t>(n), 1));
}

QPoly odd_double_factorial(int n) {
  if (n < 0) throw std::domain_error("odd_double_factorial: negative argument");
  QPoly out = QPoly::constant(1);
  for (int k = 1; k <= n; ++k) out *= qint(2 * k - 1);
  return out;
}

QPoly gaussian_binomial(int n, int k) {
  if (n < 0) throw std::domain_error("gaussian_binomial: negative n");
  if (k < 0 || k > n) return {};
  k = std::min(k, n - k);
  // After step i the accumulator is binom(n, i+1)_q, so every division is exact.
  QPoly acc = QPoly::constant(1);
  for (int i = 0; i < k; ++i) {
    acc = (acc * qint(n - i)).exact_div(qint(i + 1));
  }
  return acc;
}

int64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  int64_t acc = 1;
  for (int i = 0; i < k; ++i) {
    // acc * (n-i) / (i+1) stays integral at every step.
    acc = checked::mul(acc, n - i, "binomial", 0) / (i + 1);
  }
  return acc;
}

}  // namespace invpath
