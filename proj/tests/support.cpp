#include "support.hpp"

#include <map>
#include <optional>

#include "cyclink/cover.hpp"
#include "cyclink/homology.hpp"
#include "cyclink/linking.hpp"
#include "cyclink/rational_linalg.hpp"

namespace cyclink::testing {

LinkDiagram closed_braid(int strands, const std::vector<int>& word) {
  struct Event {
    std::size_t crossing;
    bool over;
  };
  struct Crossing {
    int sign = 0;
    std::size_t over_comp = 0, over_arc = 0;
  };
  std::vector<Crossing> crossings(word.size());
  std::vector<int> component_at(strands, -1);
  std::vector<std::vector<Event>> walks;

  for (int start = 0; start < strands; ++start) {
    if (component_at[start] >= 0) continue;
    const int c = static_cast<int>(walks.size());
    auto& walk = walks.emplace_back();
    int p = start;
    do {
      component_at[p] = c;
      for (std::size_t t = 0; t < word.size(); ++t) {
        const int g = std::abs(word[t]) - 1;  // strands g, g+1 swap
        if (p != g && p != g + 1) continue;
        const bool moving_right = p == g;
        // positive letter: the strand moving right passes over
        const bool over = (word[t] > 0) == moving_right;
        walk.push_back({t, over});
        crossings[t].sign = word[t] > 0 ? -1 : 1;
        p = moving_right ? g + 1 : g;
      }
    } while (p != start);
  }

  LinkDiagram d;
  d.branch = 0;
  std::vector<std::vector<std::size_t>> unders(walks.size());
  for (std::size_t c = 0; c < walks.size(); ++c) {
    std::size_t n_under = 0;
    for (const auto& e : walks[c])
      if (!e.over) ++n_under;
    std::size_t seen = 0;
    for (const auto& e : walks[c]) {
      if (e.over) {
        crossings[e.crossing].over_comp = c;
        crossings[e.crossing].over_arc = n_under ? seen % n_under : 0;
      } else {
        unders[c].push_back(e.crossing);
        ++seen;
      }
    }
  }
  for (std::size_t c = 0; c < walks.size(); ++c) {
    LinkComponent comp;
    comp.name = c == 0 ? "K" : "c" + std::to_string(c);
    for (std::size_t t : unders[c])
      comp.underpasses.push_back({crossings[t].sign, {crossings[t].over_comp, crossings[t].over_arc}});
    d.components.push_back(std::move(comp));
  }
  return d;
}

LinkDiagram random_closed_braid(std::mt19937& rng) {
  for (;;) {
    const int strands = std::uniform_int_distribution<int>(2, 4)(rng);
    const int length = std::uniform_int_distribution<int>(3, 9)(rng);
    std::vector<int> word;
    for (int t = 0; t < length; ++t) {
      int g = std::uniform_int_distribution<int>(1, strands - 1)(rng);
      word.push_back(std::bernoulli_distribution(0.5)(rng) ? g : -g);
    }
    LinkDiagram d = closed_braid(strands, word);
    if (d.size() >= 2) return d;
  }
}

namespace {

using Table = std::vector<std::vector<LinkingEntry>>;

// Every (curve, coset) -> chain of the cover, absent when the lift does not bound.
struct Lift {
  std::size_t curve;
  Coset coset;
  std::optional<TwoChain> chain;
};

std::vector<Lift> all_lifts(const CoverStructure& cv) {
  std::vector<Lift> lifts;
  for (std::size_t c = 0; c < cv.diagram.size(); ++c) {
    if (c == cv.branch()) continue;
    for (const auto& g : lift_components(cv, c)) lifts.push_back({c, g, bounding_chain(cv, c, g)});
  }
  return lifts;
}

std::string name(const CoverStructure& cv, const Lift& l) {
  return cv.diagram.components[l.curve].name + "^" + std::to_string(l.coset.index);
}

}  // namespace

std::vector<std::string> check_properties(const LinkDiagram& d, int q, std::mt19937& rng, const PropertyOptions& opt) {
  std::vector<std::string> fail;
  const CoverStructure cv = build_cover(d, q);
  const std::string at = " (q=" + std::to_string(q) + ")";

  // sheet bookkeeping
  for (std::size_t c = 0; c < d.size(); ++c) {
    if (!(cv.omega[c][0] == SheetMap::identity(q))) fail.push_back("omega[0] not identity" + at);
    for (const auto& m : cv.omega[c])
      if (!m.is_bijection()) fail.push_back("omega not a bijection" + at);
    for (const auto& hit : cv.sigma[c])
      if (!SheetMap(hit.superscript).is_bijection()) fail.push_back("sigma not a bijection" + at);
    const SheetMap expected = c == d.branch ? SheetMap::identity(q) : SheetMap::shift(q, cv.lbar[c]);
    if (!(cv.closure(c) == expected)) fail.push_back("walk of " + d.components[c].name + " does not close" + at);
  }

  const auto lifts = all_lifts(cv);
  for (const auto& l : lifts) {
    if (!l.chain) continue;
    const TwoChain& ch = *l.chain;
    for (std::size_t i = 0; i < ch.branch_arcs(); ++i) {
      BigRational s = 0;
      for (int j = 1; j <= q; ++j) s += ch.at(i, j);
      if (s != 0) fail.push_back("sum row fails on " + name(cv, l) + at);
    }
    if (!verify_boundary(cv, ch)) fail.push_back("boundary oracle rejects chain of " + name(cv, l) + at);
    TwoChain bumped = ch;
    bumped.x[std::uniform_int_distribution<std::size_t>(0, ch.x.size() - 1)(rng)] += 1;
    if (verify_boundary(cv, bumped)) fail.push_back("boundary oracle accepts a perturbed chain of " + name(cv, l) + at);
  }

  // linking from a given chain against every other bounding lift
  auto row = [&](const TwoChain& ch) {
    std::vector<std::optional<BigRational>> r;
    for (const auto& other : lifts) {
      if ((other.curve == ch.curve && other.coset == ch.coset) || !other.chain)
        r.emplace_back();
      else
        r.emplace_back(linking_formula(cv, ch, other.curve, other.coset));
    }
    return r;
  };

  for (const auto& l : lifts) {
    if (!l.chain) continue;
    const auto base = row(*l.chain);
    const LinearSystem sys = assemble_system(cv, l.curve, l.coset);
    const auto kernel = nullspace_basis(to_rational(sys.A));
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < opt.gauge_trials && !kernel.empty(); ++trial) {
      TwoChain moved = *l.chain;
      for (const auto& v : kernel) {
        BigRational f(coef(rng), std::uniform_int_distribution<int>(1, 4)(rng));
        f.canonicalize();
        for (std::size_t t = 0; t < v.size(); ++t) moved.x[t] += f * v[t];
      }
      if (!verify_boundary(cv, moved)) fail.push_back("gauge-shifted chain of " + name(cv, l) + " fails oracle" + at);
      if (row(moved) != base) fail.push_back("gauge shift changes linking of " + name(cv, l) + at);
    }
  }

  for (std::size_t a = 0; a < lifts.size(); ++a)
    for (std::size_t b = a + 1; b < lifts.size(); ++b) {
      if (!lifts[a].chain || !lifts[b].chain) continue;
      BigRational ab = linking_formula(cv, *lifts[b].chain, lifts[a].curve, lifts[a].coset);
      BigRational ba = linking_formula(cv, *lifts[a].chain, lifts[b].curve, lifts[b].coset);
      if (ab != ba)
        fail.push_back("asymmetric lk(" + name(cv, lifts[a]) + ", " + name(cv, lifts[b]) + "): " + to_string(ab) +
                       " vs " + to_string(ba) + at);
    }

  if (q == 1)
    for (std::size_t a = 0; a < lifts.size(); ++a)
      for (std::size_t b = 0; b < lifts.size(); ++b)
        if (lifts[a].curve != lifts[b].curve && lifts[b].chain &&
            linking_formula(cv, *lifts[b].chain, lifts[a].curve, lifts[a].coset) !=
                pairwise_linking(d, lifts[a].curve, lifts[b].curve))
          fail.push_back("q=1 linking differs from classical linking");

  if (opt.mirror) {
    const CoverStructure mv = build_cover(mirror(d), q);
    for (std::size_t a = 0; a < d.size(); ++a)
      for (std::size_t b = 0; b < d.size(); ++b) {
        if (a == d.branch || b == d.branch) continue;
        const auto m1 = linking_matrix(cv, a, b).entries;
        const auto m2 = linking_matrix(mv, a, b).entries;
        bool ok = m1.size() == m2.size();
        for (std::size_t j = 0; ok && j < m1.size(); ++j)
          for (std::size_t k = 0; ok && k < m1[j].size(); ++k) {
            const auto* x = std::get_if<BigRational>(&m1[j][k]);
            const auto* y = std::get_if<BigRational>(&m2[j][k]);
            ok = x && y ? *x == -*y : m1[j][k].index() == m2[j][k].index();
          }
        if (!ok)
          fail.push_back("mirror does not negate lk(" + d.components[a].name + ", " + d.components[b].name + ")" + at);
      }
  }
  return fail;
}

}  // namespace cyclink::testing
