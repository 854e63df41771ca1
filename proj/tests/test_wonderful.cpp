#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "motive/wonderful.hpp"

using motive::CartanType;
using motive::CellInterpretation;
using motive::CellTable;
using motive::Face;
using motive::LPolynomial;
using motive::ParabolicSubset;
using motive::RootSystem;
using motive::TateSum;
using motive::WeylGroup;

namespace {

WeylGroup group(const char* type) {
  return WeylGroup::enumerate(RootSystem::build(CartanType::parse(type)));
}

using Hist = std::vector<std::int64_t>;

}  // namespace

TEST_CASE("face lattice", "[wonderful]") {
  const RootSystem a1 = RootSystem::build(CartanType::parse("A1"));
  const std::vector<Face> faces1 = motive::face_lattice(a1);
  REQUIRE(faces1.size() == 2);
  CHECK(faces1[0].subset == ParabolicSubset::empty(1));
  CHECK(faces1[0].dim == 2);
  CHECK(faces1[0].codim == 1);
  CHECK(faces1[1].subset == ParabolicSubset::full(1));
  CHECK(faces1[1].dim == 3);
  CHECK(faces1[1].codim == 0);

  const std::vector<Face> faces2 = motive::face_lattice(RootSystem::build(CartanType::parse("A2")));
  REQUIRE(faces2.size() == 4);
  std::vector<int> dims;
  for (const Face& f : faces2) dims.push_back(f.dim);
  CHECK(dims == std::vector<int>{6, 7, 7, 8});

  CHECK(motive::face_lattice(RootSystem::build(CartanType::parse("B3"))).size() == 8);
}

TEST_CASE("A1 orbit closures", "[wonderful]") {
  const WeylGroup W = group("A1");
  // the whole compactification of the adjoint A1 group is a projective 3-space
  CHECK(motive::orbit_closure_cells(W, ParabolicSubset::full(1)).histogram() == Hist{1, 1, 1, 1});
  // the closed orbit is a product of two projective lines
  CHECK(motive::orbit_closure_cells(W, ParabolicSubset::empty(1)).histogram() == Hist{1, 2, 1});
  // both readings of I_u coincide on A1
  CHECK(motive::orbit_closure_cells(W, ParabolicSubset::full(1), CellInterpretation::support)
            .histogram() == Hist{1, 1, 1, 1});

  const LPolynomial expected = LPolynomial::monomial(3) - LPolynomial::lefschetz();
  CHECK(motive::orbit_class(W, ParabolicSubset::full(1)) == expected);
  CHECK(motive::orbit_class_oracle(W, ParabolicSubset::full(1)) == expected);
}

TEST_CASE("A2 orbit closures under the ascent reading", "[wonderful]") {
  const WeylGroup W = group("A2");
  CHECK(motive::orbit_closure_cells(W, ParabolicSubset::full(2)).histogram() ==
        Hist{1, 2, 4, 7, 8, 7, 4, 2, 1});
  CHECK(motive::orbit_closure_cells(W, ParabolicSubset::parse("1", 2)).histogram() ==
        Hist{1, 3, 6, 8, 8, 6, 3, 1});
  CHECK(motive::orbit_closure_cells(W, ParabolicSubset::parse("2", 2)).histogram() ==
        Hist{1, 3, 6, 8, 8, 6, 3, 1});
  CHECK(motive::orbit_closure_cells(W, ParabolicSubset::empty(2)).histogram() ==
        Hist{1, 4, 8, 10, 8, 4, 1});
  // the closed orbit is the square of the flag variety
  const TateSum flag = motive::flag_motive(W, ParabolicSubset::empty(2));
  CHECK(motive::orbit_closure_motive(W, ParabolicSubset::empty(2)) == flag * flag);

  const LPolynomial expected = LPolynomial::monomial(8) - LPolynomial::monomial(6) -
                               LPolynomial::monomial(5) + LPolynomial::monomial(3);
  CHECK(motive::orbit_class(W, ParabolicSubset::full(2)) == expected);

  // middle-face orbit class, frozen from the fibration oracle
  // (1 + L + L^2)^2 (L^3 - L)
  const LPolynomial p2 = LPolynomial::constant(1) + LPolynomial::monomial(1) + LPolynomial::monomial(2);
  const LPolynomial a1_class = LPolynomial::monomial(3) - LPolynomial::monomial(1);
  CHECK(motive::orbit_class(W, ParabolicSubset::parse("1", 2)) == p2 * p2 * a1_class);
  CHECK(motive::orbit_class_oracle(W, ParabolicSubset::parse("1", 2)) == p2 * p2 * a1_class);
}

TEST_CASE("A2 support reading is pinned as non-dual", "[wonderful]") {
  const WeylGroup W = group("A2");
  const CellTable table =
      motive::orbit_closure_cells(W, ParabolicSubset::full(2), CellInterpretation::support);
  CHECK(table.histogram() == Hist{1, 4, 6, 7, 6, 5, 4, 2, 1});
  const TateSum m = TateSum::from_chow_ranks(table.histogram());
  CHECK_FALSE(m.self_duality_check(8));
  // under the default ascent reading the same face is self-dual
  CHECK(motive::orbit_closure_motive(W, ParabolicSubset::full(2)).self_duality_check(8));
}

TEST_CASE("B2 top face, frozen by hand", "[wonderful]") {
  // bases 4 - l(u) + |I_u| give [6,4,4,3,3,2,2,0] over u; convolving with the
  // length histogram [1,2,2,2,1] yields this table
  const WeylGroup W = group("B2");
  CHECK(motive::orbit_closure_cells(W, ParabolicSubset::full(2)).histogram() ==
        Hist{1, 2, 4, 8, 11, 12, 11, 8, 4, 2, 1});
  const LPolynomial expected = LPolynomial::monomial(10) - LPolynomial::monomial(8) -
                               LPolynomial::monomial(6) + LPolynomial::monomial(4);
  CHECK(motive::orbit_class(W, ParabolicSubset::full(2)) == expected);
}

TEST_CASE("G2 top face, frozen by hand", "[wonderful]") {
  // dihedral combinatorics: every element of intermediate length has exactly
  // one ascent, so the bases 6 - l(u) + |I_u| are [8,6,6,5,5,4,4,3,3,2,2,0];
  // convolving with the length histogram [1,2,2,2,2,2,1] gives this table
  const WeylGroup W = group("G2");
  CHECK(motive::orbit_closure_cells(W, ParabolicSubset::full(2)).histogram() ==
        Hist{1, 2, 4, 8, 12, 16, 19, 20, 19, 16, 12, 8, 4, 2, 1});
}

TEST_CASE("cell table invariants", "[wonderful]") {
  for (const char* type : {"A2", "B2", "G2"}) {
    const WeylGroup W = group(type);
    const RootSystem& rs = W.root_system();
    for (std::uint32_t mask = 0; mask < (1u << rs.rank()); ++mask) {
      const ParabolicSubset I = ParabolicSubset::from_mask(mask, rs.rank());
      for (CellInterpretation interp : {CellInterpretation::ascent, CellInterpretation::support}) {
        const CellTable table = motive::orbit_closure_cells(W, I, interp);
        INFO(type << " I=" << I.to_string() << " " << motive::name(interp));
        REQUIRE(static_cast<std::int64_t>(table.size()) == W.order() * W.order());
        REQUIRE(table.max_dimension() == 2 * rs.num_positive() + I.size());
        // the maximum sits at (identity, longest)
        REQUIRE(table.entry(0, static_cast<std::size_t>(W.order() - 1)) == table.max_dimension());
        REQUIRE(table.generating_function().evaluate(1) == W.order() * W.order());
      }
    }
  }
}

TEST_CASE("closure motives are self-dual under the ascent reading", "[wonderful]") {
  for (const char* type : {"A1", "A2", "B2", "G2"}) {
    const WeylGroup W = group(type);
    const RootSystem& rs = W.root_system();
    for (std::uint32_t mask = 0; mask < (1u << rs.rank()); ++mask) {
      const ParabolicSubset I = ParabolicSubset::from_mask(mask, rs.rank());
      const TateSum m = motive::orbit_closure_motive(W, I);
      INFO(type << " I=" << I.to_string());
      REQUIRE(m.is_pure_tate());
      REQUIRE(m.self_duality_check(2 * rs.num_positive() + I.size()));
    }
  }
}

TEST_CASE("cell table round-trips through the cellular module", "[wonderful]") {
  const WeylGroup W = group("A2");
  const CellTable table = motive::orbit_closure_cells(W, ParabolicSubset::parse("1", 2));
  const motive::CellDecomposition cells = table.to_cell_decomposition(W);
  CHECK(motive::motive_of_cells(cells) == motive::orbit_closure_motive(W, ParabolicSubset::parse("1", 2)));
}

TEST_CASE("orbit classes agree with the fibration oracle", "[wonderful]") {
  for (const char* type : {"A1", "A2", "B2", "G2"}) {
    const WeylGroup W = group(type);
    const RootSystem& rs = W.root_system();
    for (std::uint32_t mask = 0; mask < (1u << rs.rank()); ++mask) {
      const ParabolicSubset I = ParabolicSubset::from_mask(mask, rs.rank());
      INFO(type << " I=" << I.to_string());
      REQUIRE(motive::orbit_class(W, I) == motive::orbit_class_oracle(W, I));
    }
  }
}

TEST_CASE("orbit classes partition the compactification", "[wonderful]") {
  for (const char* type : {"A2", "B2"}) {
    const WeylGroup W = group(type);
    const RootSystem& rs = W.root_system();
    LPolynomial sum;
    for (std::uint32_t mask = 0; mask < (1u << rs.rank()); ++mask) {
      sum = sum + motive::orbit_class(W, ParabolicSubset::from_mask(mask, rs.rank()));
    }
    INFO(type);
    CHECK(sum ==
          motive::orbit_closure_motive(W, ParabolicSubset::full(rs.rank())).euler_class());
  }
}

TEST_CASE("closed-orbit class equals its closure class", "[wonderful]") {
  const WeylGroup W = group("B2");
  CHECK(motive::orbit_class(W, ParabolicSubset::empty(2)) ==
        motive::orbit_closure_motive(W, ParabolicSubset::empty(2)).euler_class());
}

TEST_CASE("boundary configurations", "[wonderful]") {
  const WeylGroup a1 = group("A1");
  const motive::Configuration b1 = motive::boundary_configuration(a1);
  REQUIRE(b1.component_count() == 1);
  CHECK(b1.components()[0].cls == LPolynomial::constant(1) + LPolynomial::monomial(1, 2) +
                                      LPolynomial::monomial(2));

  const WeylGroup a2 = group("A2");
  const motive::Configuration b2 = motive::boundary_configuration(a2);
  REQUIRE(b2.component_count() == 2);
  const LPolynomial divisor = LPolynomial::constant(1) + LPolynomial::monomial(1, 3) +
                              LPolynomial::monomial(2, 6) + LPolynomial::monomial(3, 8) +
                              LPolynomial::monomial(4, 8) + LPolynomial::monomial(5, 6) +
                              LPolynomial::monomial(6, 3) + LPolynomial::monomial(7);
  CHECK(b2.components()[0].cls == divisor);
  CHECK(b2.components()[1].cls == divisor);
  const LPolynomial closed_orbit =
      motive::orbit_closure_motive(a2, ParabolicSubset::empty(2)).euler_class();
  REQUIRE(b2.intersections().count(0b11u) == 1);
  CHECK(*b2.intersections().at(0b11u) == closed_orbit);
  CHECK(motive::validate_configuration(b2).valid);
  // union = two divisors minus the closed orbit
  CHECK(motive::union_class(b2) == divisor + divisor - closed_orbit);
  const LPolynomial expected_union =
      LPolynomial::constant(1) + LPolynomial::monomial(1, 2) + LPolynomial::monomial(2, 4) +
      LPolynomial::monomial(3, 6) + LPolynomial::monomial(4, 8) + LPolynomial::monomial(5, 8) +
      LPolynomial::monomial(6, 5) + LPolynomial::monomial(7, 2);
  CHECK(motive::union_class(b2) == expected_union);
}

TEST_CASE("caps guard the cell enumeration", "[wonderful]") {
  const WeylGroup a2 = group("A2");
  CHECK_THROWS_AS(motive::orbit_closure_cells(a2, ParabolicSubset::full(2),
                                              CellInterpretation::ascent, 10),
                  motive::CapExceededError);
  // a full F4 sweep at the default budget is out of reach by design
  const WeylGroup f4 = group("F4");
  CHECK_THROWS_AS(motive::orbit_class(f4, ParabolicSubset::full(4)), motive::CapExceededError);
  // a single F4 table fits
  CHECK_NOTHROW(motive::orbit_closure_cells(f4, ParabolicSubset::full(4)));
}

TEST_CASE("interpretations dispatch to the two readings", "[wonderful]") {
  const WeylGroup W = group("A2");
  const RootSystem& rs = W.root_system();
  for (const motive::WeylElement& w : W.elements()) {
    if (w.word == std::vector<int>{1, 2}) {
      CHECK(motive::cell_index_set(rs, w, CellInterpretation::ascent) ==
            ParabolicSubset::parse("1", 2));
      CHECK(motive::cell_index_set(rs, w, CellInterpretation::support) ==
            ParabolicSubset::empty(2));
    }
  }
}
