#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "motive/l_polynomial.hpp"
#include "motive/root_system.hpp"

namespace motive {

// A Weyl group element: its canonical reduced word (the lexicographically
// smallest one), its length, and its action on the root lattice in
// simple-root coordinates. The canonical word is produced by peeling the
// smallest left descent at every step, which is exactly the greedy
// construction of the lexicographically smallest reduced word.
struct WeylElement {
  std::vector<int> word;  // 1-based generator indices
  int length = 0;
  IntMatrix action;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

inline constexpr std::int64_t default_weyl_cap = 1'000'000;

// l(w) is the number of positive roots sent to negative roots by w.
inline int weyl_length(const RootSystem& rs, const IntMatrix& action) {
  int inversions = 0;
  for (const RootVector& r : rs.positive_roots()) {
    if (root_height(action.apply(r)) < 0) ++inversions;
  }
  return inversions;
}

// l(w s_i) > l(w) exactly when w maps alpha_i to a positive root; the image
// of alpha_i is column i of the action matrix.
inline bool is_right_ascent(const IntMatrix& action, int i) {
  std::int64_t h = 0;
  for (int r = 0; r < action.rows(); ++r) h = checked_add(h, action.at(r, i - 1));
  return h > 0;
}

class WeylGroup {
 public:
  // Full enumeration by breadth-first search over right multiplication by the
  // simple reflections. The group order is known in advance from the
  // exponents, so the cap is checked before any work happens. Elements come
  // out sorted by (length, word), so the identity is first and the longest
  // element last.
  static WeylGroup enumerate(const RootSystem& rs, std::int64_t cap = default_weyl_cap) {
    const std::int64_t order = rs.weyl_order();
    if (order > cap) {
      throw CapExceededError("Weyl group order " + std::to_string(order) +
                             " exceeds the enumeration cap " + std::to_string(cap) +
                             "; raise the cap explicitly to proceed");
    }
    const int n = rs.rank();
    std::vector<IntMatrix> gen;
    gen.reserve(n);
    for (int i = 1; i <= n; ++i) gen.push_back(rs.simple_reflection(i));

    std::map<IntMatrix, int> index;
    std::vector<IntMatrix> mats;
    std::vector<int> lens;
    mats.push_back(IntMatrix::identity(n));
    lens.push_back(0);
    index.emplace(mats[0], 0);

    std::vector<int> frontier{0};
    int depth = 0;
    while (!frontier.empty()) {
      std::vector<int> next;
      ++depth;
      for (int at : frontier) {
        for (int i = 0; i < n; ++i) {
          IntMatrix m = mats[at].multiply(gen[i]);
          auto [it, inserted] = index.emplace(m, static_cast<int>(mats.size()));
          if (inserted) {
            mats.push_back(std::move(m));
            lens.push_back(depth);
            next.push_back(static_cast<int>(mats.size()) - 1);
          }
        }
      }
      frontier = std::move(next);
    }
    if (static_cast<std::int64_t>(mats.size()) != order) {
      throw InvariantError("Weyl enumeration found " + std::to_string(mats.size()) +
                           " elements, expected " + std::to_string(order));
    }

    // Canonical words, shortest elements first: the lexicographically
    // smallest reduced word of w is [j] + word(s_j w) for the smallest left
    // descent j, and s_j w is one layer shorter.
    const int max_len = depth == 0 ? 0 : depth - 1;
    std::vector<std::vector<int>> by_len(static_cast<std::size_t>(max_len) + 1);
    for (std::size_t x = 0; x < mats.size(); ++x) by_len[static_cast<std::size_t>(lens[x])].push_back(static_cast<int>(x));
    std::vector<std::vector<int>> words(mats.size());
    for (int ell = 1; ell <= max_len; ++ell) {
      for (int x : by_len[static_cast<std::size_t>(ell)]) {
        for (int j = 0; j < n; ++j) {
          IntMatrix m = gen[j].multiply(mats[static_cast<std::size_t>(x)]);
          auto it = index.find(m);
          if (it == index.end()) throw InvariantError("Weyl enumeration is not closed under products");
          if (lens[static_cast<std::size_t>(it->second)] != ell - 1) continue;
          const std::vector<int>& tail = words[static_cast<std::size_t>(it->second)];
          std::vector<int>& w = words[static_cast<std::size_t>(x)];
          w.reserve(tail.size() + 1);
          w.push_back(j + 1);
          w.insert(w.end(), tail.begin(), tail.end());
          break;
        }
      }
    }

    std::vector<WeylElement> elements;
    elements.reserve(mats.size());
    for (std::size_t x = 0; x < mats.size(); ++x) {
      elements.push_back(WeylElement{std::move(words[x]), lens[x], std::move(mats[x])});
    }
    std::sort(elements.begin(), elements.end(), [](const WeylElement& a, const WeylElement& b) {
      return std::tie(a.length, a.word) < std::tie(b.length, b.word);
    });
    return WeylGroup(rs, std::move(elements));
  }

  const RootSystem& root_system() const { return rs_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& identity() const { return elements_.front(); }
  const WeylElement& longest() const { return elements_.back(); }

  // Length generating function Sum_w t^{l(w)}.
  LPolynomial poincare() const {
    LPolynomial p;
    for (const WeylElement& w : elements_) p = p + LPolynomial::monomial(w.length);
    return p;
  }

  // W^I: the minimal-length coset representatives, i.e. the elements with
  // every i in I a right ascent.
  std::vector<WeylElement> minimal_coset_reps(const ParabolicSubset& subset) const {
    if (subset.rank() != rs_.rank()) throw DomainError("minimal_coset_reps: subset rank mismatch");
    std::vector<WeylElement> reps;
    for (const WeylElement& w : elements_) {
      bool minimal = true;
      for (int i : subset.indices()) {
        if (!is_right_ascent(w.action, i)) {
          minimal = false;
          break;
        }
      }
      if (minimal) reps.push_back(w);
    }
    return reps;
  }

 private:
  WeylGroup(RootSystem rs, std::vector<WeylElement> elements)
      : rs_(std::move(rs)), elements_(std::move(elements)) {}

  RootSystem rs_;
  std::vector<WeylElement> elements_;
};

// Rebuild the canonical element from an action matrix by peeling smallest
// left descents. Rejects matrices that are not Weyl group actions.
inline WeylElement element_from_action(const RootSystem& rs, IntMatrix action) {
  if (action.rows() != rs.rank() || action.cols() != rs.rank()) {
    throw DomainError("element_from_action: matrix has the wrong shape");
  }
  const int total = weyl_length(rs, action);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(total));
  IntMatrix cur = action;
  int cur_len = total;
  while (cur_len > 0) {
    bool peeled = false;
    for (int j = 1; j <= rs.rank(); ++j) {
      IntMatrix m = rs.simple_reflection(j).multiply(cur);
      if (weyl_length(rs, m) == cur_len - 1) {
        word.push_back(j);
        cur = std::move(m);
        --cur_len;
        peeled = true;
        break;
      }
    }
    if (!peeled) throw DomainError("matrix does not act as a Weyl group element");
  }
  if (!cur.is_identity()) throw DomainError("matrix does not act as a Weyl group element");
  return WeylElement{std::move(word), total, std::move(action)};
}

inline WeylElement compose(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
  return element_from_action(rs, u.action.multiply(v.action));
}

// Right ascent set {i : l(w s_i) > l(w)}. Empty exactly for the longest
// element, all of Delta exactly for the identity.
inline ParabolicSubset ascent_set(const RootSystem& rs, const WeylElement& w) {
  std::uint32_t mask = 0;
  for (int i = 1; i <= rs.rank(); ++i) {
    if (is_right_ascent(w.action, i)) mask |= 1u << (i - 1);
  }
  return ParabolicSubset::from_mask(mask, rs.rank());
}

// Delta minus the support of the canonical reduced word. The support of w is
// independent of the chosen reduced word.
inline ParabolicSubset support_complement(const RootSystem& rs, const WeylElement& w) {
  std::uint32_t support = 0;
  for (int letter : w.word) support |= 1u << (letter - 1);
  return ParabolicSubset::from_mask(ParabolicSubset::full(rs.rank()).mask() & ~support, rs.rank());
}

inline LPolynomial length_generating_function(const std::vector<WeylElement>& elements) {
  LPolynomial p;
  for (const WeylElement& w : elements) p = p + LPolynomial::monomial(w.length);
  return p;
}

}  // namespace motive
