#include "cyclink/linking.hpp"

#include <optional>

#include "cyclink/error.hpp"

namespace cyclink {

std::string describe(UndefinedReason reason) {
  switch (reason) {
    case UndefinedReason::not_null_homologous:
      return "not rationally null-homologous";
    case UndefinedReason::self_pairing:
      return "self-pairing";
  }
  return "undefined";
}

std::string to_string(const LinkingEntry& e) {
  if (const auto* v = std::get_if<BigRational>(&e)) return to_string(*v);
  return "undefined (" + describe(std::get<Undefined>(e).reason) + ")";
}

BigRational linking_formula(const CoverStructure& cover, const TwoChain& chain, std::size_t gamma,
                            const Coset& gamma_coset) {
  if (gamma == chain.curve && gamma_coset == chain.coset)
    throw InvalidInput("linking of a lift with itself is not defined");
  const std::size_t K = cover.branch();
  const auto& ups = cover.diagram.components.at(gamma).underpasses;
  BigRational total = 0;
  for (int jp : gamma_coset.sheets)
    for (std::size_t i = 0; i < ups.size(); ++i) {
      const Underpass& u = ups[i];
      const int s = cover.sigma[gamma][i].superscript_of(jp);
      if (u.over.component == K)
        total += u.sign * chain.at(u.over.arc, s);
      else if (u.over.component == chain.curve && chain.coset.contains(s))
        total += u.sign;
    }
  return total;
}

LinkingEntry linking_number(const CoverStructure& cover, const TwoChain& chain, std::size_t gamma,
                            const Coset& gamma_coset) {
  if (!bounding_chain(cover, gamma, gamma_coset)) return Undefined{UndefinedReason::not_null_homologous};
  return linking_formula(cover, chain, gamma, gamma_coset);
}

LinkingReport linking_matrix(const CoverStructure& cover, std::size_t curve_a, std::size_t curve_b) {
  LinkingReport rep;
  rep.curve_a = curve_a;
  rep.curve_b = curve_b;
  rep.cosets_a = lift_components(cover, curve_a);
  rep.cosets_b = lift_components(cover, curve_b);

  std::vector<std::optional<TwoChain>> chains_b;
  for (const auto& g : rep.cosets_b) chains_b.push_back(bounding_chain(cover, curve_b, g));
  std::vector<bool> bounds_a;
  for (std::size_t j = 0; j < rep.cosets_a.size(); ++j)
    bounds_a.push_back(curve_a == curve_b ? chains_b[j].has_value()
                                          : bounding_chain(cover, curve_a, rep.cosets_a[j]).has_value());

  for (std::size_t j = 0; j < rep.cosets_a.size(); ++j) {
    auto& row = rep.entries.emplace_back();
    for (std::size_t k = 0; k < rep.cosets_b.size(); ++k) {
      if (curve_a == curve_b && j == k)
        row.push_back(Undefined{UndefinedReason::self_pairing});
      else if (!bounds_a[j] || !chains_b[k])
        row.push_back(Undefined{UndefinedReason::not_null_homologous});
      else
        row.push_back(linking_formula(cover, *chains_b[k], curve_a, rep.cosets_a[j]));
    }
  }
  return rep;
}

}  // namespace cyclink
