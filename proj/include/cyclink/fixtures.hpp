#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cyclink/diagram.hpp"

namespace cyclink {

struct ExpectedValue {
  std::string operation;
  nlohmann::json args;
  nlohmann::json value;
  std::string provenance;
};

struct ConsistencyCheck {
  std::string description;
  bool passed = false;
};

struct Fixture {
  std::string name;
  std::filesystem::path diagram_file;
  LinkDiagram diagram;
  std::optional<long> winding;  // stated lk(K, eta)
  std::vector<int> degrees;     // q values the fixture is meant for
  std::vector<ExpectedValue> expected;
  std::vector<ConsistencyCheck> consistency;
};

std::filesystem::path default_corpus_dir();
std::vector<std::string> fixture_names(const std::filesystem::path& dir = default_corpus_dir());

// Throws InvalidInput for unknown names and Error when a consistency check fails.
Fixture load_fixture(std::string_view name, const std::filesystem::path& dir = default_corpus_dir());

// Recomputes one expected value; returns an empty string on agreement, else a
// description of the mismatch.
std::string check_expected(const Fixture& f, const ExpectedValue& e);

}  // namespace cyclink
