#include "cyclink/homology.hpp"

#include <string>

#include "cyclink/error.hpp"

namespace cyclink {

namespace {

void check_curve(const CoverStructure& cover, std::size_t curve, const Coset& coset) {
  const Coset& known = coset_of(cover, curve, coset.index);
  if (!(known == coset))
    throw InvalidInput("coset is not a lift component of component " + std::to_string(curve));
}

}  // namespace

LinearSystem assemble_system(const CoverStructure& cover, std::size_t curve, const Coset& coset) {
  check_curve(cover, curve, coset);
  const int q = cover.q;
  const std::size_t K = cover.branch();
  const auto& ups = cover.diagram.components[K].underpasses;
  const std::size_t n = cover.diagram.arc_count(K);

  LinearSystem sys;
  sys.q = q;
  sys.branch_arcs = n;
  sys.A = IntMatrix(n + ups.size() * q, n * q);
  sys.b.assign(sys.A.rows(), 0);

  for (std::size_t i = 0; i < n; ++i)
    for (int j = 1; j <= q; ++j) sys.A(i, sys.column(i, j)) = 1;

  std::size_t row = n;
  for (std::size_t i = 0; i < ups.size(); ++i) {
    const Underpass& u = ups[i];
    const WallHit& hit = cover.sigma[K][i];
    const std::size_t next = (i + 1) % n;
    for (int j = 1; j <= q; ++j, ++row) {
      sys.A(row, sys.column(i, j)) += 1;
      sys.A(row, sys.column(next, j)) -= 1;
      const int s1 = hit.superscript_of(j);
      const int s2 = hit.superscript_of(wrap_sheet(j + 1, q));
      if (u.over.component == K) {
        sys.A(row, sys.column(u.over.arc, s1)) -= u.sign;
        sys.A(row, sys.column(u.over.arc, s2)) += u.sign;
      } else if (u.over.component == curve) {
        sys.b[row] = u.sign * (static_cast<int>(coset.contains(s1)) - static_cast<int>(coset.contains(s2)));
      }
    }
  }
  return sys;
}

std::optional<TwoChain> bounding_chain(const CoverStructure& cover, std::size_t curve, const Coset& coset) {
  LinearSystem sys = assemble_system(cover, curve, coset);
  auto x = solve_particular(sys.A, sys.b);
  if (!x) return std::nullopt;
  return TwoChain{curve, coset, cover.q, std::move(*x)};
}

std::optional<BigInt> minimal_bounding_multiple(const CoverStructure& cover, std::size_t curve, const Coset& coset) {
  LinearSystem sys = assemble_system(cover, curve, coset);
  return minimal_scalar_integer_solution(sys.A, sys.b);
}

BoundaryComplex full_boundary(const CoverStructure& cover, std::size_t curve, const Coset& coset) {
  check_curve(cover, curve, coset);
  const LinkDiagram& d = cover.diagram;
  const int q = cover.q;
  const std::size_t K = d.branch;

  BoundaryComplex bc;
  bc.q = q;
  std::size_t cols = 0;
  for (std::size_t c = 0; c < d.size(); ++c) {
    bc.wall_offset.push_back(cols);
    cols += d.arc_count(c) * q;
  }
  // Rows: branch arcs k_i, lifted arcs of the other components, then one
  // vertical cell per (understrand component, underpass, sheet).
  std::vector<std::size_t> horiz(d.size()), vert(d.size());
  std::size_t rows = 0;
  for (std::size_t c = 0; c < d.size(); ++c) {
    horiz[c] = rows;
    rows += c == K ? d.arc_count(c) : d.arc_count(c) * q;
  }
  for (std::size_t c = 0; c < d.size(); ++c) {
    vert[c] = rows;
    rows += d.components[c].underpasses.size() * q;
  }
  bc.d2 = IntMatrix(rows, cols);
  bc.target.assign(rows, 0);

  for (std::size_t c = 0; c < d.size(); ++c)
    for (std::size_t a = 0; a < d.arc_count(c); ++a)
      for (int s = 1; s <= q; ++s) {
        std::size_t row = c == K ? horiz[c] + a : horiz[c] + a * q + (s - 1);
        bc.d2(row, bc.wall_column(c, a, s)) += 1;
      }

  // Superscript of the wall over arc `oa` of `oc` met on sheet j of the walker.
  auto met = [&](std::size_t u, std::size_t i, std::size_t oc, std::size_t oa, int sign, int j) {
    int s = cover.omega[oc][oa].inverse(cover.omega[u][i](j));
    return oc == K && sign == -1 ? wrap_sheet(s - 1, q) : s;
  };
  for (std::size_t u = 0; u < d.size(); ++u) {
    const auto& ups = d.components[u].underpasses;
    const std::size_t n = ups.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Underpass& up = ups[i];
      const std::size_t oc = up.over.component, oa = up.over.arc;
      for (int j = 1; j <= q; ++j) {
        // Leaving the last arc, a lifted curve continues on the sheet its walk closes to.
        const int j_next = i + 1 == n ? cover.closure(u)(j) : j;
        // Around the branch curve the vertical cell spans two adjacent sheets; around
        // any other understrand both slit sides are met from the same sheet.
        const int s1 = met(u, i, oc, oa, up.sign, j);
        const int s2 = u == K ? met(u, i, oc, oa, up.sign, wrap_sheet(j + 1, q)) : s1;
        const std::size_t row = vert[u] + i * q + (j - 1);
        bc.d2(row, bc.wall_column(u, i, j)) += 1;
        bc.d2(row, bc.wall_column(u, (i + 1) % n, j_next)) -= 1;
        bc.d2(row, bc.wall_column(oc, oa, s1)) -= up.sign;
        bc.d2(row, bc.wall_column(oc, oa, s2)) += up.sign;
      }
    }
  }

  for (std::size_t a = 0; a < d.arc_count(curve); ++a)
    for (int s : coset.sheets) bc.target[horiz[curve] + a * q + (s - 1)] = 1;
  return bc;
}

bool verify_boundary(const CoverStructure& cover, const TwoChain& chain) {
  const LinkDiagram& d = cover.diagram;
  const std::size_t K = d.branch;
  if (chain.q != cover.q || chain.x.size() != d.arc_count(K) * static_cast<std::size_t>(cover.q))
    throw InvalidInput("chain does not belong to this cover");
  const BoundaryComplex bc = full_boundary(cover, chain.curve, chain.coset);

  std::vector<BigRational> walls(bc.d2.cols());
  for (std::size_t a = 0; a < d.arc_count(K); ++a)
    for (int s = 1; s <= cover.q; ++s) walls[bc.wall_column(K, a, s)] = chain.at(a, s);
  for (std::size_t a = 0; a < d.arc_count(chain.curve); ++a)
    for (int s : chain.coset.sheets) walls[bc.wall_column(chain.curve, a, s)] = 1;

  const auto boundary = mat_vec(bc.d2, std::span<const BigRational>(walls));
  for (std::size_t r = 0; r < boundary.size(); ++r)
    if (boundary[r] != bc.target[r]) return false;
  return true;
}

}  // namespace cyclink
