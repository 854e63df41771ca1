#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motive/errors.hpp"
#include "motive/tate_sum.hpp"

namespace motive {

struct Cell {
  int dim = 0;
  std::string label;
};

// A cell decomposition recorded as the list of affine cell dimensions.
// Labels are carried through for traceability only. The output of
// motive_of_cells is the decomposition of the compactly supported motive;
// for smooth proper inputs it agrees with the motive itself.
class CellDecomposition {
 public:
  static CellDecomposition make(std::vector<Cell> cells, std::optional<int> total_dim = {}) {
    if (cells.empty()) throw DomainError("cell decomposition must have at least one cell");
    for (const Cell& c : cells) {
      if (c.dim < 0) throw DomainError("cell dimension must be nonnegative");
      if (total_dim && c.dim > *total_dim) {
        throw DomainError("cell dimension " + std::to_string(c.dim) +
                          " exceeds declared total dimension " + std::to_string(*total_dim));
      }
    }
    CellDecomposition d;
    d.cells_ = std::move(cells);
    d.total_dim_ = total_dim;
    return d;
  }

  static CellDecomposition from_dims(const std::vector<int>& dims) {
    std::vector<Cell> cells;
    cells.reserve(dims.size());
    for (int d : dims) cells.push_back(Cell{d, ""});
    return make(std::move(cells));
  }

  const std::vector<Cell>& cells() const { return cells_; }
  std::optional<int> total_dimension() const { return total_dim_; }

 private:
  std::vector<Cell> cells_;
  std::optional<int> total_dim_;
};

// One term Z(d)[2d] per cell of dimension d.
inline TateSum motive_of_cells(const CellDecomposition& d) {
  TateSum out;
  for (const Cell& c : d.cells()) out = out + TateSum::of(c.dim, 2 * c.dim);
  return out;
}

// Histogram of cell dimensions: the rank of CH_p is the number of p-cells.
inline std::vector<std::int64_t> chow_ranks(const CellDecomposition& d) {
  int top = 0;
  for (const Cell& c : d.cells()) top = std::max(top, c.dim);
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(top) + 1, 0);
  for (const Cell& c : d.cells()) ++ranks[static_cast<std::size_t>(c.dim)];
  return ranks;
}

struct Stratum {
  TateSum base;
  int twist = 0;  // relative dimension d_i of the stratum over its base
  std::string label;
};

class RelativeCellFiltration {
 public:
  static RelativeCellFiltration make(std::vector<Stratum> strata) {
    if (strata.empty()) throw DomainError("relative cell filtration must have at least one stratum");
    for (const Stratum& s : strata) {
      if (s.twist < 0) throw DomainError("stratum twist must be nonnegative");
    }
    RelativeCellFiltration f;
    f.strata_ = std::move(strata);
    return f;
  }

  const std::vector<Stratum>& strata() const { return strata_; }

 private:
  std::vector<Stratum> strata_;
};

// Direct sum over strata of base_i twisted by (d_i)[2 d_i]. The filtration
// order never matters. Each base must be pure Tate so the result stays
// inside this model.
inline TateSum relative_cellular_motive(const RelativeCellFiltration& f) {
  TateSum out;
  std::size_t at = 0;
  for (const Stratum& s : f.strata()) {
    if (!s.base.is_pure_tate()) {
      throw DomainError("stratum " + (s.label.empty() ? "#" + std::to_string(at) : "'" + s.label + "'") +
                        " has a base motive that is not pure Tate");
    }
    out = out + s.base.twist_shift(s.twist, 2 * s.twist);
    ++at;
  }
  return out;
}

}  // namespace motive
