#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pcube {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial with nonnegative arbitrary-precision integer coefficients.
///
/// Coefficients are stored low degree first and kept normalized: no trailing
/// zeros, and the zero polynomial has no coefficients at all.  Negative
/// coefficients are rejected at construction, which is why there is no
/// subtraction.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long long> coeffs);
  explicit Polynomial(std::vector<BigInt> coeffs);

  static Polynomial constant(BigInt c) { return Polynomial(std::vector<BigInt>{std::move(c)}); }
  static Polynomial x() { return Polynomial{0, 1}; }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^i, zero beyond the degree.
  BigInt operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt{0}; }

  BigInt evaluate(const BigInt& t) const;
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const BigInt& k);
Polynomial pow(const Polynomial& p, unsigned k);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }

/// p(x + c).
Polynomial shift(const Polynomial& p, unsigned long c);

/// Coefficientwise order: deg p <= deg q and p_i <= q_i for every i.
bool poly_leq(const Polynomial& p, const Polynomial& q);
bool poly_lt(const Polynomial& p, const Polynomial& q);

bool is_unimodal(const Polynomial& p);
bool is_log_concave(const Polynomial& p);
bool has_internal_zeros(const Polynomial& p);

/// Coefficients as decimal strings, low degree first.
std::vector<std::string> coefficient_strings(const Polynomial& p);

}  // namespace pcube
