#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "motive/checked.hpp"
#include "motive/configurations.hpp"
#include "motive/l_polynomial.hpp"
#include "motive/tate_sum.hpp"
#include "motive/weyl.hpp"
#include "motive/wonderful.hpp"

namespace motive {

// Graded pieces of the slice filtration of a torus bundle: the p-th piece is
// base(p)[p] tensored with the rank-C(r,p) exterior power of the cocharacter
// lattice. Only the graded pieces are materialized; they carry all the rank
// information downstream checks need.
struct TorusFiltrationPiece {
  int p = 0;
  std::int64_t rank = 0;  // = C(r, p)
  TateSum piece;
};

struct TorusFiltration {
  int torus_rank = 0;
  std::vector<TorusFiltrationPiece> pieces;  // p = 0..r; the filtration stops after r
};

inline TorusFiltration torus_filtration_pieces(int torus_rank, const TateSum& base) {
  if (torus_rank < 0) throw DomainError("torus rank must be nonnegative");
  TorusFiltration out;
  out.torus_rank = torus_rank;
  const std::int64_t base_mult = base.total_multiplicity();
  for (int p = 0; p <= torus_rank; ++p) {
    const std::int64_t rank = binomial(torus_rank, p);
    TorusFiltrationPiece piece{p, rank, base.twist_shift(p, p).scaled(rank)};
    if (piece.piece.total_multiplicity() != checked_mul(rank, base_mult)) {
      throw InvariantError("torus filtration piece rank mismatch at p=" + std::to_string(p));
    }
    out.pieces.push_back(std::move(piece));
  }
  return out;
}

// Class of a split reductive group with the given Weyl data and a central
// torus of the given rank: the Borel fibration gives
// [G] = L^N (L-1)^(rank+z) P_W(L).
inline LPolynomial reductive_group_class(const WeylGroup& W, int central_torus_rank = 0) {
  if (central_torus_rank < 0) throw DomainError("central torus rank must be nonnegative");
  const RootSystem& rs = W.root_system();
  LPolynomial out = LPolynomial::monomial(rs.num_positive());
  out = out * (LPolynomial::lefschetz() - LPolynomial::constant(1)).pow(rs.rank() + central_torus_rank);
  return out * W.poincare();
}

// Class of the total space of a Zariski-locally trivial bundle: classes
// multiply.
inline LPolynomial g_bundle_class(const LPolynomial& base_class, const LPolynomial& group_class) {
  return base_class * group_class;
}

// One node per face of the nested filtration. The middle class is the orbit
// closure, the left class the union of its boundary closures, the right
// class the open orbit; additivity left + right = middle is the K0 shadow of
// the localization triangle and is enforced at construction.
struct FiltrationNode {
  Face face;
  LPolynomial middle;
  LPolynomial left;
  LPolynomial right;
  std::vector<FiltrationNode> children;
};

inline FiltrationNode nested_filtration_report(const WeylGroup& W, const LPolynomial& base_class,
                                               CellInterpretation interp = CellInterpretation::ascent,
                                               std::int64_t cell_cap = default_cell_cap) {
  const RootSystem& rs = W.root_system();
  const int r = rs.rank();
  if (r > 20) throw CapExceededError("nested filtration supports rank <= 20");
  const std::int64_t tables = static_cast<std::int64_t>(1) << r;
  const std::int64_t budget = checked_mul(tables, checked_mul(W.order(), W.order()));
  if (budget > cell_cap) {
    throw CapExceededError("nested filtration needs " + std::to_string(budget) +
                           " cell evaluations, above the cell cap " + std::to_string(cell_cap) +
                           "; raise the cap explicitly to proceed");
  }

  const std::uint32_t full = ParabolicSubset::full(r).mask();
  std::map<std::uint32_t, LPolynomial> closure;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    closure[mask] =
        orbit_closure_motive(W, ParabolicSubset::from_mask(mask, r), interp, cell_cap).euler_class();
  }

  // Orbit classes by Moebius inversion over sub-faces.
  std::map<std::uint32_t, LPolynomial> orbit;
  for (const auto& [mask, cls] : closure) {
    LPolynomial acc;
    std::uint32_t sub = mask;
    while (true) {
      const int sign = ((__builtin_popcount(mask) - __builtin_popcount(sub)) % 2 == 0) ? 1 : -1;
      acc = sign > 0 ? acc + closure.at(sub) : acc - closure.at(sub);
      if (sub == 0) break;
      sub = (sub - 1) & mask;
    }
    orbit.emplace(mask, std::move(acc));
  }

  auto boundary_union = [&](std::uint32_t mask) -> LPolynomial {
    if (mask == 0) return LPolynomial();
    std::vector<int> bits;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) bits.push_back(i);
    const int m = static_cast<int>(bits.size());
    std::vector<ConfigComponent> components;
    for (int t = 0; t < m; ++t) {
      const std::uint32_t sub = mask & ~(1u << bits[static_cast<std::size_t>(t)]);
      components.push_back(ConfigComponent{
          "D" + ParabolicSubset::from_mask(sub, r).to_string(), closure.at(sub)});
    }
    Configuration::IntersectionMap intersections;
    for (std::uint32_t s = 0; m >= 2 && s < (1u << m); ++s) {
      if (__builtin_popcount(s) < 2) continue;
      std::uint32_t sub = mask;
      for (int t = 0; t < m; ++t) {
        if (s & (1u << t)) sub &= ~(1u << bits[static_cast<std::size_t>(t)]);
      }
      intersections.emplace(s, closure.at(sub));
    }
    return union_class(Configuration::make(std::move(components), std::move(intersections)));
  };

  auto build = [&](auto&& self, std::uint32_t mask) -> FiltrationNode {
    FiltrationNode node;
    node.face = face_of(rs, ParabolicSubset::from_mask(mask, r));
    node.middle = closure.at(mask) * base_class;
    node.left = boundary_union(mask) * base_class;
    node.right = orbit.at(mask) * base_class;
    if (!(node.left + node.right == node.middle)) {
      throw InvariantError("filtration additivity failed at face " + node.face.subset.to_string());
    }
    for (int i = 0; i < r; ++i) {
      if (mask & (1u << i)) node.children.push_back(self(self, mask & ~(1u << i)));
    }
    return node;
  };
  return build(build, full);
}

}  // namespace motive
