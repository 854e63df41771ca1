#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "motive/errors.hpp"
#include "motive/int_matrix.hpp"

namespace motive {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Split simple Cartan type. Admissible pairs: A n>=1, B n>=2, C n>=2,
// D n>=4, E n in {6,7,8}, F n=4, G n=2. C2 is accepted and normalized to B2
// when the root system is built (the Weyl groups coincide).
struct CartanType {
  Family family = Family::A;
  int rank = 1;

  static CartanType make(Family family, int rank) {
    bool ok = false;
    switch (family) {
      case Family::A: ok = rank >= 1; break;
      case Family::B: ok = rank >= 2; break;
      case Family::C: ok = rank >= 2; break;
      case Family::D: ok = rank >= 4; break;
      case Family::E: ok = rank >= 6 && rank <= 8; break;
      case Family::F: ok = rank == 4; break;
      case Family::G: ok = rank == 2; break;
    }
    if (!ok) {
      throw UsageError("inadmissible Cartan type " + std::string(1, static_cast<char>(family)) +
                       std::to_string(rank) +
                       " (admissible: A n>=1, B n>=2, C n>=2, D n>=4, E 6..8, F4, G2)");
    }
    return CartanType{family, rank};
  }

  // Accepts ^[ABCDEFG][1-9][0-9]*$ and checks admissibility.
  static CartanType parse(std::string_view text) {
    const std::string hint = "expected a Cartan type like A2, B3 or F4";
    if (text.size() < 2) throw UsageError("cannot parse Cartan type '" + std::string(text) + "': " + hint);
    const char f = text[0];
    if (f < 'A' || f > 'G') {
      throw UsageError("cannot parse Cartan type '" + std::string(text) + "': " + hint);
    }
    if (text[1] == '0') {
      throw UsageError("cannot parse Cartan type '" + std::string(text) + "': rank has a leading zero");
    }
    long rank = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') {
        throw UsageError("cannot parse Cartan type '" + std::string(text) + "': " + hint);
      }
      rank = rank * 10 + (text[i] - '0');
      if (rank > 1000) throw UsageError("Cartan rank out of range in '" + std::string(text) + "'");
    }
    return make(static_cast<Family>(f), static_cast<int>(rank));
  }

  CartanType normalized() const {
    if (family == Family::C && rank == 2) return CartanType{Family::B, 2};
    return *this;
  }

  std::string to_string() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
  }

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

using RootVector = std::vector<std::int64_t>;  // simple-root coordinates

inline std::int64_t root_height(const RootVector& v) {
  std::int64_t h = 0;
  for (std::int64_t x : v) h = checked_add(h, x);
  return h;
}

// Cartan matrix in the Bourbaki numbering; entry (i,j) is <alpha_j, alpha_i^v>.
inline IntMatrix cartan_matrix(CartanType type) {
  type = type.normalized();
  const int n = type.rank;
  IntMatrix c(n, n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 2;
  auto bond = [&c](int i, int j) {  // single edge, 1-based
    c.at(i - 1, j - 1) = -1;
    c.at(j - 1, i - 1) = -1;
  };
  switch (type.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:  // alpha_n short
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      c.at(n - 1, n - 2) = -2;
      break;
    case Family::C:  // alpha_n long
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      c.at(n - 2, n - 1) = -2;
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      bond(3, 4);
      bond(2, 4);
      for (int i = 4; i < n; ++i) bond(i, i + 1);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      c.at(2, 1) = -2;
      break;
    case Family::G:  // alpha_1 short
      bond(1, 2);
      c.at(0, 1) = -3;
      break;
  }
  return c;
}

// Crystallographic root system in simple-root coordinates. Positive roots
// are generated from the simple roots by reflection closure. The exponents
// are read off the height distribution of the positive roots (the dual
// partition of the height histogram), which also pins the Weyl group order
// as prod(e_i + 1).
class RootSystem {
 public:
  static RootSystem build(CartanType type) {
    const CartanType t = type.normalized();
    return from_cartan_matrix(cartan_matrix(t), t);
  }

  static RootSystem from_cartan_matrix(IntMatrix cartan, std::optional<CartanType> label = {}) {
    RootSystem rs;
    rs.validate_cartan(cartan);
    rs.cartan_ = std::move(cartan);
    rs.type_ = label;
    rs.generate_positive_roots();
    rs.derive_exponents();
    return rs;
  }

  int rank() const { return cartan_.rows(); }
  const IntMatrix& cartan() const { return cartan_; }
  const std::optional<CartanType>& type() const { return type_; }
  const std::vector<RootVector>& positive_roots() const { return positive_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  const std::vector<int>& exponents() const { return exponents_; }

  std::int64_t weyl_order() const {
    std::int64_t n = 1;
    for (int e : exponents_) n = checked_mul(n, e + 1);
    return n;
  }

  // Reflection in the i-th simple root (1-based), on coordinate vectors.
  RootVector reflect(int i, const RootVector& v) const {
    RootVector out = v;
    std::int64_t pairing = 0;
    for (int j = 0; j < rank(); ++j) pairing = checked_add(pairing, checked_mul(cartan_.at(i - 1, j), v[j]));
    out[i - 1] = checked_sub(v[i - 1], pairing);
    return out;
  }

  // Action matrix of the i-th simple reflection on simple-root coordinates.
  IntMatrix simple_reflection(int i) const {
    IntMatrix m = IntMatrix::identity(rank());
    for (int j = 0; j < rank(); ++j) m.at(i - 1, j) = (i - 1 == j ? -1 : -cartan_.at(i - 1, j));
    return m;
  }

 private:
  static constexpr std::size_t max_generated_roots = 200000;

  void validate_cartan(const IntMatrix& c) const {
    if (c.rows() != c.cols()) throw DomainError("Cartan matrix must be square");
    for (int i = 0; i < c.rows(); ++i) {
      if (c.at(i, i) != 2) throw DomainError("Cartan matrix diagonal must be 2");
      for (int j = 0; j < c.cols(); ++j) {
        if (i == j) continue;
        if (c.at(i, j) > 0) throw DomainError("Cartan matrix off-diagonal entries must be <= 0");
        if ((c.at(i, j) == 0) != (c.at(j, i) == 0)) {
          throw DomainError("Cartan matrix zero pattern must be symmetric");
        }
      }
    }
  }

  void generate_positive_roots() {
    const int n = rank();
    std::set<RootVector> seen;
    std::vector<RootVector> queue;
    for (int i = 0; i < n; ++i) {
      RootVector e(n, 0);
      e[i] = 1;
      seen.insert(e);
      queue.push_back(std::move(e));
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const RootVector r = queue[head];
      for (int i = 1; i <= n; ++i) {
        RootVector s = reflect(i, r);
        const bool positive = std::all_of(s.begin(), s.end(), [](std::int64_t x) { return x >= 0; });
        if (!positive) continue;
        if (seen.insert(s).second) {
          if (seen.size() > max_generated_roots) {
            throw DomainError("Cartan matrix does not generate a finite root system");
          }
          queue.push_back(std::move(s));
        }
      }
    }
    positive_.assign(seen.begin(), seen.end());
    std::sort(positive_.begin(), positive_.end(), [](const RootVector& a, const RootVector& b) {
      const std::int64_t ha = root_height(a), hb = root_height(b);
      return ha != hb ? ha < hb : a < b;
    });
  }

  void derive_exponents() {
    const int n = rank();
    std::vector<std::int64_t> height_count;  // index h-1 counts roots of height h
    for (const RootVector& r : positive_) {
      const std::int64_t h = root_height(r);
      if (static_cast<std::size_t>(h) > height_count.size()) height_count.resize(static_cast<std::size_t>(h), 0);
      ++height_count[static_cast<std::size_t>(h) - 1];
    }
    exponents_.clear();
    for (int i = 1; i <= n; ++i) {
      int e = 0;
      for (std::int64_t cnt : height_count)
        if (cnt >= i) ++e;
      exponents_.push_back(e);
    }
    std::sort(exponents_.begin(), exponents_.end());
  }

  IntMatrix cartan_;
  std::optional<CartanType> type_;
  std::vector<RootVector> positive_;
  std::vector<int> exponents_;
};

// Subset of the simple roots, carried with the ambient rank so complements
// are well-defined. Indices are 1-based; the bitmask uses bit i-1 for index i.
class ParabolicSubset {
 public:
  ParabolicSubset() = default;

  static ParabolicSubset empty(int rank) { return from_mask(0, rank); }

  static ParabolicSubset full(int rank) {
    check_rank(rank);
    return from_mask(rank == 0 ? 0u : (rank == 32 ? ~0u : ((1u << rank) - 1u)), rank);
  }

  static ParabolicSubset from_mask(std::uint32_t mask, int rank) {
    check_rank(rank);
    if (rank < 32 && (mask >> rank) != 0) {
      throw UsageError("parabolic subset index out of range 1.." + std::to_string(rank));
    }
    ParabolicSubset s;
    s.rank_ = rank;
    s.mask_ = mask;
    return s;
  }

  static ParabolicSubset of(const std::vector<int>& indices, int rank) {
    check_rank(rank);
    std::uint32_t mask = 0;
    for (int i : indices) {
      if (i < 1 || i > rank) {
        throw UsageError("parabolic subset index " + std::to_string(i) + " out of range 1.." +
                         std::to_string(rank));
      }
      const std::uint32_t bit = 1u << (i - 1);
      if (mask & bit) throw UsageError("parabolic subset has duplicate index " + std::to_string(i));
      mask |= bit;
    }
    return from_mask(mask, rank);
  }

  // Comma-separated 1-based indices, e.g. "1,3"; the empty string is the
  // empty subset.
  static ParabolicSubset parse(std::string_view text, int rank) {
    if (!text.empty() && text.back() == ',') {
      throw UsageError("trailing comma in parabolic subset list");
    }
    std::vector<int> indices;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view token = text.substr(pos, end - pos);
      if (token.empty()) throw UsageError("empty entry in parabolic subset list");
      long value = 0;
      for (char ch : token) {
        if (ch < '0' || ch > '9') {
          throw UsageError("cannot parse parabolic subset entry '" + std::string(token) + "'");
        }
        value = value * 10 + (ch - '0');
        if (value > 1000) throw UsageError("parabolic subset entry out of range");
      }
      indices.push_back(static_cast<int>(value));
      pos = end + 1;
      if (end == text.size()) break;
    }
    return of(indices, rank);
  }

  int rank() const { return rank_; }
  std::uint32_t mask() const { return mask_; }
  int size() const { return __builtin_popcount(mask_); }
  bool contains(int index) const { return index >= 1 && index <= rank_ && (mask_ & (1u << (index - 1))); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 1; i <= rank_; ++i)
      if (mask_ & (1u << (i - 1))) out.push_back(i);
    return out;
  }

  bool is_subset_of(const ParabolicSubset& other) const {
    return rank_ == other.rank_ && (mask_ & ~other.mask_) == 0;
  }

  ParabolicSubset complement() const { return from_mask(full(rank_).mask() & ~mask_, rank_); }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;

 private:
  static void check_rank(int rank) {
    if (rank < 0 || rank > 32) throw UsageError("parabolic subsets support rank 0..32");
  }

  int rank_ = 0;
  std::uint32_t mask_ = 0;
};

// Root subsystem spanned by the chosen simple roots: the induced sub-Cartan
// matrix, rebuilt as a standalone root system on |I| simple roots.
inline RootSystem levi_subsystem(const RootSystem& rs, const ParabolicSubset& subset) {
  if (subset.rank() != rs.rank()) throw DomainError("levi_subsystem: subset rank mismatch");
  const std::vector<int> idx = subset.indices();
  const int m = static_cast<int>(idx.size());
  IntMatrix sub(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) sub.at(a, b) = rs.cartan().at(idx[a] - 1, idx[b] - 1);
  return RootSystem::from_cartan_matrix(std::move(sub));
}

}  // namespace motive
