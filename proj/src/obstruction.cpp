#include "cyclink/obstruction.hpp"

#include "cyclink/cover.hpp"
#include "cyclink/error.hpp"
#include "cyclink/homology.hpp"

namespace cyclink {

std::string to_string(SignProfile p) {
  switch (p) {
    case SignProfile::all_nonneg_not_zero:
      return "all-nonneg-not-zero";
    case SignProfile::all_nonpos_not_zero:
      return "all-nonpos-not-zero";
    case SignProfile::mixed:
      return "mixed";
    case SignProfile::all_zero:
      return "all-zero";
    case SignProfile::undefined:
      return "undefined";
  }
  return "undefined";
}

std::string to_string(Verdict v) { return v == Verdict::obstructed ? "obstructed" : "inconclusive"; }

bool is_prime_power(long q) {
  if (q < 2) return false;
  for (long p = 2; p * p <= q; ++p)
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  return true;
}

SignProfile sign_profile(const LinkingReport& report) {
  bool pos = false, neg = false, any = false;
  for (std::size_t j = 0; j < report.entries.size(); ++j)
    for (std::size_t k = 0; k < report.entries[j].size(); ++k) {
      if (report.curve_a == report.curve_b && j == k) continue;
      const auto* v = std::get_if<BigRational>(&report.entries[j][k]);
      if (!v) return SignProfile::undefined;
      any = true;
      if (sgn(*v) > 0) pos = true;
      if (sgn(*v) < 0) neg = true;
    }
  if (!any) return SignProfile::undefined;
  if (pos && neg) return SignProfile::mixed;
  if (pos) return SignProfile::all_nonneg_not_zero;
  if (neg) return SignProfile::all_nonpos_not_zero;
  return SignProfile::all_zero;
}

ObstructionVerdict evaluate_obstruction(const LinkDiagram& d, int q) {
  require_valid(d);
  if (d.size() != 2)
    throw InvalidInput("obstruction needs exactly two components (pattern and meridian), got " +
                       std::to_string(d.size()));
  const std::size_t K = d.branch;
  const std::size_t eta = 1 - K;
  CoverStructure cover = build_cover(d, q);

  ObstructionVerdict v;
  v.q = q;
  v.w = pairwise_linking(d, K, eta);
  v.order_n = minimal_bounding_multiple(cover, eta, coset_of(cover, eta, 1));
  v.matrix = linking_matrix(cover, eta, eta);
  v.sign_profile = sign_profile(v.matrix);

  auto& h = v.hypotheses;
  h.q_prime_power = is_prime_power(q);
  h.q_divides_w = v.w % q == 0;
  if (v.order_n) {
    const BigInt& n = *v.order_n;
    h.lifts_bound_integrally = n == 1;
    h.order_odd_or_divides_w =
        mpz_odd_p(n.get_mpz_t()) || (v.w != 0 && mpz_divisible_p(BigInt(v.w).get_mpz_t(), n.get_mpz_t()));
  }
  const bool hypotheses_hold =
      h.q_prime_power && h.q_divides_w && (h.lifts_bound_integrally || h.order_odd_or_divides_w);
  const bool coherent =
      v.sign_profile == SignProfile::all_nonneg_not_zero || v.sign_profile == SignProfile::all_nonpos_not_zero;
  v.verdict = hypotheses_hold && coherent ? Verdict::obstructed : Verdict::inconclusive;
  return v;
}

}  // namespace cyclink
