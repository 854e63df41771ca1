#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motive/cellular.hpp"
#include "motive/configurations.hpp"
#include "motive/flags.hpp"
#include "motive/tate_sum.hpp"
#include "motive/weyl.hpp"

namespace motive {

inline constexpr std::int64_t default_cell_cap = 10'000'000;

// Which reading of I_u enters the cell dimension formula. The ascent reading
// is the default: it is the one under which every orbit closure passes the
// duality check and agrees with the independent fibration oracle. The
// support reading (Delta minus the letters of the reduced word) is kept for
// auditability; on A2 it produces a non-palindromic top-face table.
enum class CellInterpretation { ascent, support };

inline const char* name(CellInterpretation interp) {
  return interp == CellInterpretation::ascent ? "ascent" : "support";
}

inline ParabolicSubset cell_index_set(const RootSystem& rs, const WeylElement& u,
                                      CellInterpretation interp) {
  return interp == CellInterpretation::ascent ? ascent_set(rs, u) : support_complement(rs, u);
}

// Face F_I of the weight polytope. The associated orbit closure has
// dimension 2N + |I|; I = Delta is the whole compactification, I = {} the
// closed orbit (a product of two full flag varieties).
struct Face {
  ParabolicSubset subset;
  int dim = 0;
  int codim = 0;

  friend bool operator==(const Face&, const Face&) = default;
};

inline Face face_of(const RootSystem& rs, const ParabolicSubset& subset) {
  if (subset.rank() != rs.rank()) throw DomainError("face_of: subset rank mismatch");
  return Face{subset, 2 * rs.num_positive() + subset.size(), rs.rank() - subset.size()};
}

// All 2^rank faces, ordered by (|I|, mask).
inline std::vector<Face> face_lattice(const RootSystem& rs) {
  const int r = rs.rank();
  if (r > 20) throw CapExceededError("face lattice enumeration supports rank <= 20");
  std::vector<Face> faces;
  faces.reserve(static_cast<std::size_t>(1) << r);
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    faces.push_back(face_of(rs, ParabolicSubset::from_mask(mask, r)));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.subset.size() != b.subset.size()) return a.subset.size() < b.subset.size();
    return a.subset.mask() < b.subset.mask();
  });
  return faces;
}

// Cell dimensions n(u,v) = l(w0) - l(u) + |I /\ I_u| + l(v) over W x W, in
// the group's canonical element order. Exactly |W|^2 entries; the maximum,
// 2N + |I|, sits at (identity, w0).
class CellTable {
 public:
  CellTable(ParabolicSubset face, CellInterpretation interp, std::size_t group_size,
            std::vector<int> dims)
      : face_(std::move(face)), interp_(interp), group_size_(group_size), dims_(std::move(dims)) {}

  const ParabolicSubset& face() const { return face_; }
  CellInterpretation interpretation() const { return interp_; }
  std::size_t group_size() const { return group_size_; }
  std::size_t size() const { return dims_.size(); }

  int entry(std::size_t u, std::size_t v) const { return dims_[u * group_size_ + v]; }

  int max_dimension() const {
    int top = 0;
    for (int d : dims_) top = std::max(top, d);
    return top;
  }

  std::vector<std::int64_t> histogram() const {
    std::vector<std::int64_t> h(static_cast<std::size_t>(max_dimension()) + 1, 0);
    for (int d : dims_) ++h[static_cast<std::size_t>(d)];
    return h;
  }

  LPolynomial generating_function() const {
    LPolynomial p;
    const std::vector<std::int64_t> h = histogram();
    for (std::size_t d = 0; d < h.size(); ++d) {
      if (h[d] != 0) p = p + LPolynomial::monomial(static_cast<int>(d), h[d]);
    }
    return p;
  }

  // Materialize labeled cells "(u-word, v-word)"; intended for desk-scale
  // inspection and round-trips through the cellular module.
  CellDecomposition to_cell_decomposition(const WeylGroup& W) const {
    auto word_str = [](const WeylElement& w) {
      if (w.word.empty()) return std::string("e");
      std::string s;
      for (std::size_t i = 0; i < w.word.size(); ++i) {
        if (i) s += ".";
        s += std::to_string(w.word[i]);
      }
      return s;
    };
    std::vector<Cell> cells;
    cells.reserve(dims_.size());
    for (std::size_t u = 0; u < group_size_; ++u) {
      for (std::size_t v = 0; v < group_size_; ++v) {
        cells.push_back(Cell{entry(u, v), "(" + word_str(W.elements()[u]) + "," +
                                              word_str(W.elements()[v]) + ")"});
      }
    }
    return CellDecomposition::make(std::move(cells));
  }

 private:
  ParabolicSubset face_;
  CellInterpretation interp_;
  std::size_t group_size_;
  std::vector<int> dims_;
};

inline CellTable orbit_closure_cells(const WeylGroup& W, const ParabolicSubset& face,
                                     CellInterpretation interp = CellInterpretation::ascent,
                                     std::int64_t cell_cap = default_cell_cap) {
  const RootSystem& rs = W.root_system();
  if (face.rank() != rs.rank()) throw DomainError("orbit_closure_cells: subset rank mismatch");
  const std::int64_t entries = checked_mul(W.order(), W.order());
  if (entries > cell_cap) {
    throw CapExceededError("cell table needs " + std::to_string(entries) +
                           " entries, above the cell cap " + std::to_string(cell_cap) +
                           "; raise the cap explicitly to proceed");
  }
  const int N = rs.num_positive();
  const std::size_t n = static_cast<std::size_t>(W.order());
  std::vector<int> base(n);
  for (std::size_t u = 0; u < n; ++u) {
    const WeylElement& el = W.elements()[u];
    const ParabolicSubset iu = cell_index_set(rs, el, interp);
    base[u] = N - el.length + __builtin_popcount(face.mask() & iu.mask());
  }
  std::vector<int> dims(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      dims[u * n + v] = base[u] + W.elements()[v].length;
    }
  }
  return CellTable(face, interp, n, std::move(dims));
}

inline TateSum orbit_closure_motive(const WeylGroup& W, const ParabolicSubset& face,
                                    CellInterpretation interp = CellInterpretation::ascent,
                                    std::int64_t cell_cap = default_cell_cap) {
  return TateSum::from_chow_ranks(orbit_closure_cells(W, face, interp, cell_cap).histogram());
}

// Class of the open orbit attached to the face, by Moebius inversion over
// the Boolean lattice of sub-faces: the closure is the disjoint union of the
// orbits of its sub-faces.
inline LPolynomial orbit_class(const WeylGroup& W, const ParabolicSubset& face,
                               CellInterpretation interp = CellInterpretation::ascent,
                               std::int64_t cell_cap = default_cell_cap) {
  const std::int64_t tables = static_cast<std::int64_t>(1) << face.size();
  const std::int64_t budget = checked_mul(tables, checked_mul(W.order(), W.order()));
  if (budget > cell_cap) {
    throw CapExceededError("orbit class needs " + std::to_string(budget) +
                           " cell evaluations, above the cell cap " + std::to_string(cell_cap) +
                           "; raise the cap explicitly to proceed");
  }
  LPolynomial out;
  const std::uint32_t top = face.mask();
  const int size = face.size();
  std::uint32_t sub = top;
  while (true) {
    const ParabolicSubset J = ParabolicSubset::from_mask(sub, face.rank());
    const LPolynomial cls = orbit_closure_motive(W, J, interp, cell_cap).euler_class();
    const int sign = ((size - __builtin_popcount(sub)) % 2 == 0) ? 1 : -1;
    out = sign > 0 ? out + cls : out - cls;
    if (sub == 0) break;
    sub = (sub - 1) & top;
  }
  return out;
}

// Independent route to the orbit class: the orbit fibers over a product of
// two partial flag varieties with fiber the adjoint quotient of the Levi, so
// its class is [G/P_I]^2 * L^{N_I} (L-1)^{|I|} P_{W_I}(L). Used to
// cross-validate the cell tables and the I_u interpretation.
inline LPolynomial orbit_class_oracle(const WeylGroup& W, const ParabolicSubset& face,
                                      std::int64_t weyl_cap = default_weyl_cap) {
  const LPolynomial flag = flag_motive(W, face).euler_class();
  const RootSystem levi = levi_subsystem(W.root_system(), face);
  const WeylGroup levi_W = WeylGroup::enumerate(levi, weyl_cap);
  LPolynomial adjoint = LPolynomial::monomial(levi.num_positive());
  adjoint = adjoint * (LPolynomial::lefschetz() - LPolynomial::constant(1)).pow(face.size());
  adjoint = adjoint * levi_W.poincare();
  return flag * flag * adjoint;
}

// Boundary of the closure attached to a face: one component per sub-face of
// codimension one, intersections given by intersecting sub-faces. For the
// full face this is the boundary divisor of the compactification itself.
inline Configuration face_boundary_configuration(const WeylGroup& W, const ParabolicSubset& face,
                                                 CellInterpretation interp = CellInterpretation::ascent,
                                                 std::int64_t cell_cap = default_cell_cap) {
  const std::vector<int> idx = face.indices();
  const int m = static_cast<int>(idx.size());
  const std::int64_t tables = static_cast<std::int64_t>(1) << m;
  const std::int64_t budget = checked_mul(tables, checked_mul(W.order(), W.order()));
  if (budget > cell_cap) {
    throw CapExceededError("boundary configuration needs " + std::to_string(budget) +
                           " cell evaluations, above the cell cap " + std::to_string(cell_cap) +
                           "; raise the cap explicitly to proceed");
  }
  std::vector<ConfigComponent> components;
  components.reserve(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    const std::uint32_t sub_mask = face.mask() & ~(1u << (idx[static_cast<std::size_t>(t)] - 1));
    const ParabolicSubset J = ParabolicSubset::from_mask(sub_mask, face.rank());
    components.push_back(ConfigComponent{
        "D" + J.to_string(), orbit_closure_motive(W, J, interp, cell_cap).euler_class()});
  }
  Configuration::IntersectionMap intersections;
  for (std::uint32_t s = 0; m >= 2 && s < (1u << m); ++s) {
    if (__builtin_popcount(s) < 2) continue;
    std::uint32_t sub_mask = face.mask();
    for (int t = 0; t < m; ++t) {
      if (s & (1u << t)) sub_mask &= ~(1u << (idx[static_cast<std::size_t>(t)] - 1));
    }
    const ParabolicSubset J = ParabolicSubset::from_mask(sub_mask, face.rank());
    intersections.emplace(s, orbit_closure_motive(W, J, interp, cell_cap).euler_class());
  }
  return Configuration::make(std::move(components), std::move(intersections));
}

inline Configuration boundary_configuration(const WeylGroup& W,
                                            CellInterpretation interp = CellInterpretation::ascent,
                                            std::int64_t cell_cap = default_cell_cap) {
  return face_boundary_configuration(W, ParabolicSubset::full(W.root_system().rank()), interp, cell_cap);
}

}  // namespace motive
