#pragma once

#include <random>
#include <string>
#include <vector>

#include "cyclink/diagram.hpp"

namespace cyclink::testing {

// Closure of a random braid on 2..4 strands, encoded geometrically (strands run
// downward; the left-to-right strand over gives a negative crossing). The
// component through the leftmost strand is the branch. Always has at least two
// components.
LinkDiagram random_closed_braid(std::mt19937& rng);

// Closure of an explicit braid word; letters are +-g for generator g >= 1.
LinkDiagram closed_braid(int strands, const std::vector<int>& word);

struct PropertyOptions {
  int gauge_trials = 10;
  bool mirror = true;
};

// Runs the chain/linking property checks on d at degree q; returns one message
// per violated property (empty when all hold).
std::vector<std::string> check_properties(const LinkDiagram& d, int q, std::mt19937& rng,
                                          const PropertyOptions& opt = {});

}  // namespace cyclink::testing
