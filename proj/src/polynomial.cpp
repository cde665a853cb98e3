#include "pdpoly/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "pdpoly/error.hpp"

namespace pdpoly {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(int power, const BigInt& c) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(power) + 1, 0);
  coeffs.back() = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::binomial(int n) {
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) mpz_bin_uiui(row[static_cast<std::size_t>(i)].get_mpz_t(), n, i);
  return IntPolynomial(std::move(row));
}

IntPolynomial IntPolynomial::binomial_minus_one(int n) {
  auto p = binomial(n);
  p.coeffs_[0] -= 1;
  p.trim();
  return p;
}

IntPolynomial IntPolynomial::from_decimal_strings(const std::vector<std::string>& digits) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(digits.size());
  for (const auto& d : digits) {
    BigInt value;
    if (value.set_str(d, 10) != 0) throw Error(ErrorKind::FormatError, "bad decimal coefficient '" + d + "'");
    coeffs.push_back(std::move(value));
  }
  return IntPolynomial(std::move(coeffs));
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

int IntPolynomial::lowest_power() const noexcept {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

BigInt IntPolynomial::max_abs_coefficient() const {
  BigInt best = 0;
  for (const auto& c : coeffs_)
    if (abs(c) > best) best = abs(c);
  return best;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial IntPolynomial::scale(const BigInt& c) const {
  std::vector<BigInt> out(coeffs_);
  for (auto& x : out) x *= c;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shift(int k) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shift_down(int k) const {
  const int low = lowest_power();
  if (is_zero() || k <= 0) return *this;
  if (low < k) throw Error(ErrorKind::NotDivisible, "cannot divide by x^" + std::to_string(k) + ": nonzero low term");
  return IntPolynomial(std::vector<BigInt>(coeffs_.begin() + k, coeffs_.end()));
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::eval_int(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::complex<double> IntPolynomial::eval_complex(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

std::vector<std::string> IntPolynomial::to_decimal_strings(std::size_t min_length) const {
  std::vector<std::string> out;
  out.reserve(std::max(min_length, coeffs_.size()));
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  while (out.size() < min_length) out.emplace_back("0");
  return out;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (c < 0) out << (first ? "-" : "-");
    else if (!first) out << "+";
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b) {
  if (auto cmp = a.degree() <=> b.degree(); cmp != 0) return cmp;
  for (int i = a.degree(); i >= 0; --i) {
    const int c = cmp(a.coeffs_[static_cast<std::size_t>(i)], b.coeffs_[static_cast<std::size_t>(i)]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

IntPolynomial div_exact(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw Error(ErrorKind::NotDivisible, "division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < q.degree()) throw Error(ErrorKind::NotDivisible, "divisor has larger degree");
  std::vector<BigInt> rem(p.coefficients());
  const auto& d = q.coefficients();
  const BigInt& lead = d.back();
  const int dq = q.degree();
  std::vector<BigInt> quot(static_cast<std::size_t>(p.degree() - dq + 1), 0);
  for (int i = p.degree() - dq; i >= 0; --i) {
    BigInt& top = rem[static_cast<std::size_t>(i + dq)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw Error(ErrorKind::NotDivisible, "quotient is not integral");
    const BigInt factor = top / lead;
    for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(i + j)] -= factor * d[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(i)] = factor;
  }
  for (const auto& r : rem)
    if (r != 0) throw Error(ErrorKind::NotDivisible, "nonzero remainder");
  return IntPolynomial(std::move(quot));
}

BigInt binomial_coefficient(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Unimodality is_unimodal(const IntPolynomial& p) {
  Unimodality result;
  if (p.is_zero()) return result;
  const auto& c = p.coefficients();
  const int low = p.lowest_power();
  const int high = p.degree();
  int peak = low;
  for (int i = low; i <= high; ++i)
    if (c[static_cast<std::size_t>(i)] > c[static_cast<std::size_t>(peak)]) peak = i;
  result.peak = peak;
  for (int i = low; i < peak; ++i)
    if (c[static_cast<std::size_t>(i)] > c[static_cast<std::size_t>(i + 1)]) result.unimodal = false;
  for (int i = peak; i < high; ++i)
    if (c[static_cast<std::size_t>(i)] < c[static_cast<std::size_t>(i + 1)]) result.unimodal = false;
  return result;
}

}  // namespace pdpoly
