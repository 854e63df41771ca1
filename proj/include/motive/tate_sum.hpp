#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "motive/checked.hpp"
#include "motive/errors.hpp"
#include "motive/l_polynomial.hpp"

namespace motive {

// Finite formal direct sum of Tate objects Z(p)[q], stored as a canonical
// multiplicity map keyed by (twist p, shift q) with no zero entries.
//
// Multiplicities are signed so that virtual classes (open complements) can be
// expressed; is_effective() reports whether every multiplicity is
// nonnegative. A sum is pure Tate when every term is Z(p)[2p] with positive
// multiplicity; those are the sums that arise as motives of cellular schemes,
// and only for them are pure_coefficients() and the duality check defined.
class TateSum {
 public:
  using Key = std::pair<int, int>;  // (twist, shift)

  TateSum() = default;  // the zero object

  static TateSum unit() { return of(0, 0, 1); }  // Z = Z(0)[0]

  static TateSum of(int twist, int shift, std::int64_t mult = 1) {
    TateSum s;
    s.add_term(twist, shift, mult);
    return s;
  }

  // ranks[p] copies of Z(p)[2p]: the pure sum with the given Chow ranks.
  static TateSum from_chow_ranks(const std::vector<std::int64_t>& ranks) {
    TateSum s;
    for (std::size_t p = 0; p < ranks.size(); ++p) {
      if (ranks[p] < 0) throw DomainError("from_chow_ranks: negative rank at p=" + std::to_string(p));
      s.add_term(static_cast<int>(p), static_cast<int>(2 * p), ranks[p]);
    }
    return s;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, std::int64_t>& terms() const { return terms_; }

  std::int64_t multiplicity(int twist, int shift) const {
    auto it = terms_.find({twist, shift});
    return it == terms_.end() ? 0 : it->second;
  }

  std::int64_t total_multiplicity() const {
    std::int64_t acc = 0;
    for (const auto& [k, m] : terms_) acc = checked_add(acc, m);
    return acc;
  }

  // Direct sum: pointwise sum of multiplicity maps.
  TateSum operator+(const TateSum& rhs) const {
    TateSum out = *this;
    for (const auto& [k, m] : rhs.terms_) out.add_term(k.first, k.second, m);
    return out;
  }

  TateSum operator-(const TateSum& rhs) const {
    TateSum out = *this;
    for (const auto& [k, m] : rhs.terms_) out.add_term(k.first, k.second, checked_mul(m, -1));
    return out;
  }

  // Tensor product: Z(p)[q] (x) Z(p')[q'] = Z(p+p')[q+q'], multiplicities
  // multiply; the whole product is the convolution of the two maps.
  TateSum operator*(const TateSum& rhs) const {
    TateSum out;
    for (const auto& [ka, ma] : terms_)
      for (const auto& [kb, mb] : rhs.terms_)
        out.add_term(ka.first + kb.first, ka.second + kb.second, checked_mul(ma, mb));
    return out;
  }

  TateSum twist_shift(int twist, int shift) const {
    TateSum out;
    for (const auto& [k, m] : terms_) out.add_term(k.first + twist, k.second + shift, m);
    return out;
  }

  TateSum scaled(std::int64_t m) const {
    TateSum out;
    for (const auto& [k, c] : terms_) out.add_term(k.first, k.second, checked_mul(c, m));
    return out;
  }

  bool is_pure_tate() const {
    for (const auto& [k, m] : terms_)
      if (k.second != 2 * k.first || m <= 0) return false;
    return true;
  }

  bool is_effective() const {
    for (const auto& [k, m] : terms_)
      if (m < 0) return false;
    return true;
  }

  // K0 realization Z(p)[q] -> (-1)^q L^p. Twists must be nonnegative (the
  // class ring has no Laurent support).
  LPolynomial euler_class() const {
    LPolynomial out;
    for (const auto& [k, m] : terms_) {
      if (k.first < 0) {
        throw DomainError("euler_class: negative twist " + std::to_string(k.first));
      }
      const std::int64_t sign = (k.second % 2 == 0) ? 1 : -1;
      out = out + LPolynomial::monomial(k.first, checked_mul(m, sign));
    }
    return out;
  }

  // For a pure sum, the vector c with c[p] = multiplicity of Z(p)[2p],
  // gaps filled with zero.
  std::vector<std::int64_t> pure_coefficients() const {
    if (!is_pure_tate()) throw DomainError("pure_coefficients: sum is not pure Tate");
    if (terms_.empty()) return {};
    const int top = terms_.rbegin()->first.first;
    std::vector<std::int64_t> out(static_cast<std::size_t>(top) + 1, 0);
    for (const auto& [k, m] : terms_) out[static_cast<std::size_t>(k.first)] = m;
    return out;
  }

  // Poincare duality for a pure sum of dimension n: c[p] == c[n-p] and
  // c[0] == 1.
  bool self_duality_check(int n) const {
    std::vector<std::int64_t> c = pure_coefficients();
    if (n < 0 || static_cast<int>(c.size()) > n + 1) return false;
    c.resize(static_cast<std::size_t>(n) + 1, 0);
    if (c[0] != 1) return false;
    for (int p = 0; p <= n; ++p)
      if (c[static_cast<std::size_t>(p)] != c[static_cast<std::size_t>(n - p)]) return false;
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, m] : terms_) {
      const std::int64_t mag = m < 0 ? checked_mul(m, -1) : m;
      if (first) {
        if (m < 0) out += "-";
        first = false;
      } else {
        out += m < 0 ? " - " : " + ";
      }
      if (mag != 1) out += std::to_string(mag) + "*";
      out += "Z(" + std::to_string(k.first) + ")[" + std::to_string(k.second) + "]";
    }
    return out;
  }

  friend bool operator==(const TateSum&, const TateSum&) = default;

 private:
  void add_term(int p, int q, std::int64_t m) {
    if (m == 0) return;
    auto [it, inserted] = terms_.try_emplace({p, q}, m);
    if (!inserted) {
      it->second = checked_add(it->second, m);
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Key, std::int64_t> terms_;
};

}  // namespace motive
