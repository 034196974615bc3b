#pragma once

#include <cstddef>
#include <vector>

#include "cyclink/diagram.hpp"

namespace cyclink {

// ((x-1) mod q) + 1 with a non-negative modulus: values in 1..q.
int wrap_sheet(long x, int q);

class SheetMap {
 public:
  SheetMap() = default;
  explicit SheetMap(std::vector<int> table);
  static SheetMap identity(int q);
  static SheetMap shift(int q, long s);  // j -> j + s

  int degree() const { return static_cast<int>(table_.size()); }
  int operator()(int j) const;
  int inverse(int j) const;
  bool is_bijection() const;
  const std::vector<int>& table() const { return table_; }
  bool operator==(const SheetMap&) const = default;

 private:
  std::vector<int> table_;  // table_[j-1] = image of sheet j
};

enum class WallKind { branch, pseudo };

// The wall crossed when walking past an underpass: the cone on the overstrand arc.
struct WallHit {
  WallKind wall_kind = WallKind::branch;
  std::size_t wall_component = 0;
  std::size_t wall_arc = 0;
  int sign = 1;
  std::vector<int> superscript;  // superscript[j-1] for sheet j of the walker

  int superscript_of(int j) const;
};

struct Coset {
  std::size_t index = 1;    // k in 1..I
  std::vector<int> sheets;  // sorted
  bool contains(int j) const;
  bool operator==(const Coset&) const = default;
};

struct CoverStructure {
  int q = 1;
  LinkDiagram diagram;
  // omega[c][i] for arcs i < n; omega[c][n] is the map after a full walk.
  std::vector<std::vector<SheetMap>> omega;
  std::vector<std::vector<WallHit>> sigma;  // sigma[c][i] per underpass
  std::vector<int> lbar;                    // lk(K, c) mod q; 0 for the branch
  std::vector<std::vector<Coset>> components_of;  // empty for the branch

  std::size_t branch() const { return diagram.branch; }
  const SheetMap& closure(std::size_t c) const { return omega.at(c).back(); }
};

CoverStructure build_cover(const LinkDiagram& d, int q);
const std::vector<Coset>& lift_components(const CoverStructure& cover, std::size_t c);
const Coset& coset_of(const CoverStructure& cover, std::size_t c, std::size_t k);
int sigma_at(const CoverStructure& cover, std::size_t c, std::size_t i, int j);

}  // namespace cyclink
