#pragma once

#include <filesystem>

#include <json.hpp>

#include "cyclink/diagram.hpp"
#include "cyclink/homology.hpp"
#include "cyclink/linking.hpp"
#include "cyclink/obstruction.hpp"

namespace cyclink {

inline constexpr const char* kDiagramFormat = "cyclink-diagram-1";

// Structural parse only; throws InvalidInput on malformed documents. Index
// validity is left to validate().
LinkDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json diagram_to_json(const LinkDiagram& d);
LinkDiagram load_diagram(const std::filesystem::path& path);

nlohmann::json chain_to_json(const CoverStructure& cover, const TwoChain& chain);
nlohmann::json entry_to_json(const LinkingEntry& e);
nlohmann::json report_to_json(const CoverStructure& cover, const LinkingReport& report);
nlohmann::json verdict_to_json(const LinkDiagram& d, const ObstructionVerdict& v);

}  // namespace cyclink
