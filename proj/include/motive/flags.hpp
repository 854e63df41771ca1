#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motive/cellular.hpp"
#include "motive/tate_sum.hpp"
#include "motive/weyl.hpp"

namespace motive {

// Chow ranks of the fiber of a cellular fibration. The Leray-Hirsch
// decomposition requires the fiber to satisfy Poincare duality: rank 1 in
// degree zero and a palindromic rank vector.
struct FiberData {
  std::vector<std::int64_t> chow_ranks;  // index p
  int fiber_dim = -1;

  static FiberData make(std::vector<std::int64_t> ranks) {
    FiberData f;
    f.fiber_dim = static_cast<int>(ranks.size()) - 1;
    f.chow_ranks = std::move(ranks);
    f.validate();
    return f;
  }

  static FiberData from_flag(const WeylGroup& W, const ParabolicSubset& subset);

  void validate() const {
    if (chow_ranks.empty()) throw DomainError("fiber has no Chow ranks");
    if (fiber_dim != static_cast<int>(chow_ranks.size()) - 1) {
      throw DomainError("fiber dimension " + std::to_string(fiber_dim) + " does not match " +
                        std::to_string(chow_ranks.size()) + " Chow ranks");
    }
    for (std::size_t p = 0; p < chow_ranks.size(); ++p) {
      if (chow_ranks[p] < 0) throw DomainError("fiber Chow rank at p=" + std::to_string(p) + " is negative");
    }
    if (chow_ranks[0] != 1) {
      throw DomainError("fiber violates Poincare duality at rank p=0: expected 1, got " +
                        std::to_string(chow_ranks[0]));
    }
    for (int p = 0; p <= fiber_dim; ++p) {
      const std::int64_t a = chow_ranks[static_cast<std::size_t>(p)];
      const std::int64_t b = chow_ranks[static_cast<std::size_t>(fiber_dim - p)];
      if (a != b) {
        throw DomainError("fiber violates Poincare duality at rank p=" + std::to_string(p) + ": " +
                          std::to_string(a) + " vs " + std::to_string(b) + " at p=" +
                          std::to_string(fiber_dim - p));
      }
    }
  }

  TateSum pure_sum() const { return TateSum::from_chow_ranks(chow_ranks); }
};

// One term Z(l(w))[2l(w)] per minimal coset representative w in W^I: the
// Bruhat cell decomposition of G/P_I. The top twist is N - N_I.
inline TateSum flag_motive(const WeylGroup& W, const ParabolicSubset& subset) {
  TateSum out;
  for (const WeylElement& w : W.minimal_coset_reps(subset)) {
    out = out + TateSum::of(w.length, 2 * w.length);
  }
  return out;
}

inline FiberData FiberData::from_flag(const WeylGroup& W, const ParabolicSubset& subset) {
  const std::vector<WeylElement> reps = W.minimal_coset_reps(subset);
  int top = 0;
  for (const WeylElement& w : reps) top = std::max(top, w.length);
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(top) + 1, 0);
  for (const WeylElement& w : reps) ++ranks[static_cast<std::size_t>(w.length)];
  return make(std::move(ranks));
}

// Sum over p of chow_ranks[p] copies of base(p)[2p]. The base may be any
// Tate sum; the output is pure exactly when the base is.
inline TateSum leray_hirsch(const FiberData& fiber, const TateSum& base) {
  fiber.validate();
  TateSum out;
  for (std::size_t p = 0; p < fiber.chow_ranks.size(); ++p) {
    const std::int64_t rank = fiber.chow_ranks[p];
    if (rank == 0) continue;
    out = out + base.twist_shift(static_cast<int>(p), static_cast<int>(2 * p)).scaled(rank);
  }
  return out;
}

// Iterated Leray-Hirsch along a tower of cellular fibrations, rightmost
// fiber applied first. The result is the ambient tower object; the motive
// being resolved sits inside it as a direct summand, and no projector onto
// that summand is computed here.
inline TateSum tower_motive(const std::vector<FiberData>& fibers, const TateSum& base) {
  TateSum out = base;
  for (auto it = fibers.rbegin(); it != fibers.rend(); ++it) out = leray_hirsch(*it, out);
  return out;
}

}  // namespace motive
