#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclink/bigrational.hpp"
#include "cyclink/cover.hpp"
#include "cyclink/rational_linalg.hpp"

namespace cyclink {

// Unknowns are x_i^j, column i*q + (j-1). Rows: one sum row per branch arc,
// then one crossing row per (branch arc, sheet) for arcs ending at an underpass.
struct LinearSystem {
  IntMatrix A;
  std::vector<BigInt> b;
  std::size_t branch_arcs = 0;
  int q = 1;

  std::size_t column(std::size_t arc, int sheet) const { return arc * q + static_cast<std::size_t>(sheet - 1); }
};

// A 2-chain bounding a lift component of `curve`. The walls hanging from the
// curve's own lifts in `coset` carry coefficient 1, every other pseudo-branch
// wall 0; x holds the walls over the branch curve, arc-major.
struct TwoChain {
  std::size_t curve = 0;
  Coset coset;
  int q = 1;
  std::vector<BigRational> x;

  std::size_t branch_arcs() const { return x.size() / q; }
  const BigRational& at(std::size_t arc, int sheet) const { return x.at(arc * q + (sheet - 1)); }
  BigRational& at(std::size_t arc, int sheet) { return x.at(arc * q + (sheet - 1)); }
};

LinearSystem assemble_system(const CoverStructure& cover, std::size_t curve, const Coset& coset);
std::optional<TwoChain> bounding_chain(const CoverStructure& cover, std::size_t curve, const Coset& coset);
std::optional<BigInt> minimal_bounding_multiple(const CoverStructure& cover, std::size_t curve, const Coset& coset);

// Cellular boundary map over every wall of the cover (walls over the branch
// curve and over each lifted arc of every other component) into horizontal and
// vertical 1-cells, together with the lifted curve as a 1-cycle.
struct BoundaryComplex {
  IntMatrix d2;
  std::vector<BigInt> target;
  std::vector<std::size_t> wall_offset;  // first column of each component's walls
  int q = 1;

  std::size_t wall_column(std::size_t comp, std::size_t arc, int sheet) const {
    return wall_offset[comp] + arc * q + static_cast<std::size_t>(sheet - 1);
  }
};
BoundaryComplex full_boundary(const CoverStructure& cover, std::size_t curve, const Coset& coset);

// Rebuilds the cellular boundary of the chain over every wall and every
// horizontal and vertical 1-cell, and compares it with the lifted curve.
bool verify_boundary(const CoverStructure& cover, const TwoChain& chain);

}  // namespace cyclink
