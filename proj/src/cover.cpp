#include "cyclink/cover.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cyclink/error.hpp"

namespace cyclink {

int wrap_sheet(long x, int q) { return static_cast<int>(((x - 1) % q + q) % q + 1); }

SheetMap::SheetMap(std::vector<int> table) : table_(std::move(table)) {}

SheetMap SheetMap::identity(int q) { return shift(q, 0); }

SheetMap SheetMap::shift(int q, long s) {
  std::vector<int> t(q);
  for (int j = 1; j <= q; ++j) t[j - 1] = wrap_sheet(j + s, q);
  return SheetMap(std::move(t));
}

int SheetMap::operator()(int j) const {
  if (j < 1 || j > degree()) throw InvalidInput("sheet " + std::to_string(j) + " out of range");
  return table_[j - 1];
}

int SheetMap::inverse(int j) const {
  auto it = std::find(table_.begin(), table_.end(), j);
  if (it == table_.end()) throw InvalidInput("sheet " + std::to_string(j) + " has no preimage");
  return static_cast<int>(it - table_.begin()) + 1;
}

bool SheetMap::is_bijection() const {
  std::vector<int> sorted = table_;
  std::sort(sorted.begin(), sorted.end());
  for (int j = 0; j < degree(); ++j)
    if (sorted[j] != j + 1) return false;
  return true;
}

int WallHit::superscript_of(int j) const {
  if (j < 1 || j > static_cast<int>(superscript.size()))
    throw InvalidInput("sheet " + std::to_string(j) + " out of range");
  return superscript[j - 1];
}

bool Coset::contains(int j) const { return std::binary_search(sheets.begin(), sheets.end(), j); }

CoverStructure build_cover(const LinkDiagram& d, int q) {
  if (q < 1) throw InvalidInput("degree q must be positive");
  require_valid(d);
  const std::size_t K = d.branch;
  long w = writhe(d, K);
  if (w % q != 0)
    throw InvalidInput("branch component has writhe " + std::to_string(w) + ", not 0 mod " + std::to_string(q) +
                       "; run normalize_writhe first");

  CoverStructure cv;
  cv.q = q;
  cv.diagram = d;
  const std::size_t nc = d.size();

  // Walks only change sheet when passing under the branch component, and then by
  // a cyclic shift, so every omega is j -> j + shift[c][i].
  std::vector<std::vector<long>> shift(nc);
  cv.omega.resize(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    const auto& ups = d.components[c].underpasses;
    shift[c].assign(1, 0);
    for (const auto& u : ups) shift[c].push_back(shift[c].back() + (u.over.component == K ? u.sign : 0));
    for (long s : shift[c]) cv.omega[c].push_back(SheetMap::shift(q, s));
  }

  cv.sigma.resize(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    const auto& ups = d.components[c].underpasses;
    for (std::size_t i = 0; i < ups.size(); ++i) {
      const auto& u = ups[i];
      WallHit hit;
      hit.wall_kind = u.over.component == K ? WallKind::branch : WallKind::pseudo;
      hit.wall_component = u.over.component;
      hit.wall_arc = u.over.arc;
      hit.sign = u.sign;
      const SheetMap& over = cv.omega[u.over.component][u.over.arc];
      for (int j = 1; j <= q; ++j) {
        int s = over.inverse(cv.omega[c][i](j));
        if (hit.wall_kind == WallKind::branch && u.sign == -1) s = wrap_sheet(s - 1, q);
        hit.superscript.push_back(s);
      }
      cv.sigma[c].push_back(std::move(hit));
    }
  }

  cv.lbar.assign(nc, 0);
  cv.components_of.resize(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    if (c == K) continue;
    long lk = pairwise_linking(d, K, c);
    int l = static_cast<int>(((lk % q) + q) % q);
    cv.lbar[c] = l;
    int I = l == 0 ? q : std::gcd(l, q);
    for (int k = 1; k <= I; ++k) {
      Coset g;
      g.index = static_cast<std::size_t>(k);
      for (int t = 0; t < q / I; ++t) g.sheets.push_back(wrap_sheet(k + static_cast<long>(t) * l, q));
      std::sort(g.sheets.begin(), g.sheets.end());
      cv.components_of[c].push_back(std::move(g));
    }
  }
  return cv;
}

const std::vector<Coset>& lift_components(const CoverStructure& cover, std::size_t c) {
  if (c >= cover.diagram.size()) throw InvalidInput("component index " + std::to_string(c) + " out of range");
  if (c == cover.branch()) throw InvalidInput("the branch component has no lift components");
  return cover.components_of[c];
}

const Coset& coset_of(const CoverStructure& cover, std::size_t c, std::size_t k) {
  const auto& all = lift_components(cover, c);
  if (k < 1 || k > all.size())
    throw InvalidInput("coset " + std::to_string(k) + " out of range (component has " + std::to_string(all.size()) +
                       " lifts)");
  return all[k - 1];
}

int sigma_at(const CoverStructure& cover, std::size_t c, std::size_t i, int j) {
  if (c >= cover.sigma.size()) throw InvalidInput("component index " + std::to_string(c) + " out of range");
  if (i >= cover.sigma[c].size())
    throw InvalidInput("arc " + std::to_string(i) + " of component " + std::to_string(c) + " has no underpass");
  return cover.sigma[c][i].superscript_of(j);
}

}  // namespace cyclink
