#pragma once

#include <optional>
#include <string>

#include "cyclink/bigrational.hpp"
#include "cyclink/diagram.hpp"
#include "cyclink/linking.hpp"

namespace cyclink {

enum class SignProfile { all_nonneg_not_zero, all_nonpos_not_zero, mixed, all_zero, undefined };
enum class Verdict { obstructed, inconclusive };

std::string to_string(SignProfile p);
std::string to_string(Verdict v);

struct ObstructionHypotheses {
  bool q_prime_power = false;
  bool q_divides_w = false;
  bool lifts_bound_integrally = false;  // n = 1
  bool order_odd_or_divides_w = false;  // n odd, or w a nonzero multiple of n
};

struct ObstructionVerdict {
  int q = 1;
  long w = 0;
  std::optional<BigInt> order_n;
  ObstructionHypotheses hypotheses;
  LinkingReport matrix;
  SignProfile sign_profile = SignProfile::undefined;
  Verdict verdict = Verdict::inconclusive;
};

bool is_prime_power(long q);
SignProfile sign_profile(const LinkingReport& report);

// Two-component diagram: the branch is the pattern knot, the other component its meridian.
ObstructionVerdict evaluate_obstruction(const LinkDiagram& d, int q);

}  // namespace cyclink
