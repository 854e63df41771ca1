#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "motive/checked.hpp"
#include "motive/errors.hpp"

namespace motive {

// Sparse exact integer polynomial with nonnegative exponents. Serves both as
// a class in the Grothendieck ring of varieties, written in the Lefschetz
// class L, and as a length generating function in t; only the print symbol
// differs. Canonical form stores no zero coefficients.
class LPolynomial {
 public:
  LPolynomial() = default;  // the zero polynomial

  static LPolynomial constant(std::int64_t c) {
    LPolynomial p;
    p.insert_term(0, c);
    return p;
  }

  static LPolynomial monomial(int exponent, std::int64_t coeff = 1) {
    if (exponent < 0) {
      throw DomainError("LPolynomial: negative exponent " + std::to_string(exponent));
    }
    LPolynomial p;
    p.insert_term(exponent, coeff);
    return p;
  }

  // The Lefschetz class L, the class of the affine line.
  static LPolynomial lefschetz() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  std::int64_t coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
  }

  const std::map<int, std::int64_t>& coefficients() const { return coeffs_; }

  LPolynomial operator+(const LPolynomial& rhs) const {
    LPolynomial out = *this;
    for (const auto& [e, c] : rhs.coeffs_) out.insert_term(e, c);
    return out;
  }

  LPolynomial operator-(const LPolynomial& rhs) const {
    LPolynomial out = *this;
    for (const auto& [e, c] : rhs.coeffs_) out.insert_term(e, checked_mul(c, -1));
    return out;
  }

  LPolynomial operator*(const LPolynomial& rhs) const {
    LPolynomial out;
    for (const auto& [ea, ca] : coeffs_)
      for (const auto& [eb, cb] : rhs.coeffs_) out.insert_term(ea + eb, checked_mul(ca, cb));
    return out;
  }

  LPolynomial pow(int k) const {
    if (k < 0) throw DomainError("LPolynomial::pow: negative power");
    LPolynomial out = constant(1);
    for (int i = 0; i < k; ++i) out = out * (*this);
    return out;
  }

  std::int64_t evaluate(std::int64_t x) const {
    std::int64_t acc = 0;
    for (const auto& [e, c] : coeffs_) acc = checked_add(acc, checked_mul(c, checked_pow(x, e)));
    return acc;
  }

  // Ascending exponent order, e.g. "L^3 - L^5 - L^6 + L^8".
  std::string to_string(char symbol = 'L') const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      const std::int64_t mag = c < 0 ? checked_mul(c, -1) : c;
      if (first) {
        if (c < 0) out += "-";
        first = false;
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (e == 0) {
        out += std::to_string(mag);
      } else {
        if (mag != 1) out += std::to_string(mag);
        out += symbol;
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

  friend bool operator==(const LPolynomial&, const LPolynomial&) = default;

 private:
  void insert_term(int e, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  std::map<int, std::int64_t> coeffs_;
};

}  // namespace motive
