#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "cyclink/bigrational.hpp"
#include "cyclink/cover.hpp"
#include "cyclink/homology.hpp"

namespace cyclink {

enum class UndefinedReason { not_null_homologous, self_pairing };

struct Undefined {
  UndefinedReason reason;
  bool operator==(const Undefined&) const = default;
};

using LinkingEntry = std::variant<BigRational, Undefined>;

std::string describe(UndefinedReason reason);
std::string to_string(const LinkingEntry& e);

struct LinkingReport {
  std::size_t curve_a = 0, curve_b = 0;
  std::vector<Coset> cosets_a, cosets_b;
  std::vector<std::vector<LinkingEntry>> entries;  // entries[j][k] = lk(a^j, b^k)
};

// Evaluates the intersection count of gamma's lift with `chain`, without
// checking that the lift of gamma bounds.
BigRational linking_formula(const CoverStructure& cover, const TwoChain& chain, std::size_t gamma,
                            const Coset& gamma_coset);

// As above, but reports an undefined entry when the lift of gamma is not
// rationally null-homologous. Pairing a lift with itself throws.
LinkingEntry linking_number(const CoverStructure& cover, const TwoChain& chain, std::size_t gamma,
                            const Coset& gamma_coset);

LinkingReport linking_matrix(const CoverStructure& cover, std::size_t curve_a, std::size_t curve_b);

}  // namespace cyclink
