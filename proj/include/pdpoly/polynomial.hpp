#pragma once

#include <complex>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pdpoly {

using BigInt = mpz_class;

/// Dense polynomial with unbounded integer coefficients; coeff(i) is the
/// coefficient of x^i. The stored sequence never ends in a zero, so the zero
/// polynomial is the empty sequence and has degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(int power, const BigInt& c = 1);
  /// (x+1)^n - 1, i.e. coefficients C(n,i) for 1 <= i <= n.
  static IntPolynomial binomial_minus_one(int n);
  /// (x+1)^n.
  static IntPolynomial binomial(int n);
  static IntPolynomial from_decimal_strings(const std::vector<std::string>& digits);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coeff(int i) const;
  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int lowest_power() const noexcept;
  BigInt max_abs_coefficient() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }

  IntPolynomial scale(const BigInt& c) const;
  /// Multiply by x^k.
  IntPolynomial shift(int k) const;
  /// Divide by x^k; throws NotDivisible unless the k lowest coefficients vanish.
  IntPolynomial shift_down(int k) const;
  IntPolynomial derivative() const;

  BigInt eval_int(const BigInt& t) const;
  std::complex<double> eval_complex(std::complex<double> z) const;

  /// Decimal strings indexed by power; padded with "0" up to min_length.
  std::vector<std::string> to_decimal_strings(std::size_t min_length = 0) const;
  /// Human-readable form, highest power first: "x^4+4x^3+6x^2+4x".
  std::string to_string() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }
  /// Orders by degree, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Exact division; throws NotDivisible when q does not divide p over the
/// integers (including q == 0).
IntPolynomial div_exact(const IntPolynomial& p, const IntPolynomial& q);

BigInt binomial_coefficient(int n, int k);

struct Unimodality {
  bool unimodal = true;
  /// Lowest index attaining the maximum coefficient; -1 for the zero polynomial.
  int peak = -1;
};

/// Weakly rises to a peak then weakly falls across the nonzero range.
Unimodality is_unimodal(const IntPolynomial& p);

}  // namespace pdpoly
