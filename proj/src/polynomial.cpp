#include "pcube/polynomial.hpp"

#include <algorithm>

#include "pcube/error.hpp"

namespace pcube {

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
  for (const auto& c : coeffs_) {
    if (c < 0) throw InputError("polynomial coefficients must be nonnegative, got " + c.str());
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool unit = coeffs_[i] == 1 && i > 0;
    if (!unit) out += coeffs_[i].str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
  std::vector<BigInt> out(std::max(p.coeffs().size(), q.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i] + q[i];
  return Polynomial(std::move(out));
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<BigInt> out(p.coeffs().size() + q.coeffs().size() - 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) out[i + j] += p.coeffs()[i] * q.coeffs()[j];
  }
  return Polynomial(std::move(out));
}

Polynomial scale(const Polynomial& p, const BigInt& k) {
  std::vector<BigInt> out(p.coeffs());
  for (auto& c : out) c *= k;
  return Polynomial(std::move(out));
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result{1};
  Polynomial base = p;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    k >>= 1U;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Polynomial shift(const Polynomial& p, unsigned long c) {
  // Horner in the shifted variable: p(x + c) = (...(a_n (x+c) + a_{n-1})(x+c) ...).
  std::vector<BigInt> acc;
  const BigInt cc = c;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    std::vector<BigInt> next(acc.size() + 1);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] += acc[i] * cc;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return Polynomial(std::move(acc));
}

bool poly_leq(const Polynomial& p, const Polynomial& q) {
  if (p.degree() > q.degree()) return false;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] > q.coeffs()[i]) return false;
  }
  return true;
}

bool poly_lt(const Polynomial& p, const Polynomial& q) { return poly_leq(p, q) && !(p == q); }

bool is_unimodal(const Polynomial& p) {
  const auto& s = p.coeffs();
  if (s.size() <= 2) return true;
  const auto peak = static_cast<std::size_t>(std::max_element(s.begin(), s.end()) - s.begin());
  for (std::size_t i = 1; i <= peak; ++i) {
    if (s[i - 1] > s[i]) return false;
  }
  for (std::size_t i = peak + 1; i < s.size(); ++i) {
    if (s[i - 1] < s[i]) return false;
  }
  return true;
}

bool is_log_concave(const Polynomial& p) {
  const auto& s = p.coeffs();
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i - 1] * s[i + 1] > s[i] * s[i]) return false;
  }
  return true;
}

bool has_internal_zeros(const Polynomial& p) {
  const auto& s = p.coeffs();
  const auto first = std::find_if(s.begin(), s.end(), [](const BigInt& c) { return c != 0; });
  // Normalized: the last coefficient is nonzero.
  return std::find(first, s.end(), BigInt{0}) != s.end();
}

std::vector<std::string> coefficient_strings(const Polynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

}  // namespace pcube
