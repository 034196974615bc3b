#include "cyclink/json_io.hpp"

#include <fstream>

#include "cyclink/error.hpp"

namespace cyclink {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::size_t index_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw InvalidInput(where + ": \"" + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

json coset_json(const Coset& c) { return c.sheets; }

}  // namespace

LinkDiagram diagram_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("diagram: expected a JSON object");
  const json& fmt = field(j, "format", "diagram");
  if (!fmt.is_string() || fmt.get<std::string>() != kDiagramFormat)
    throw InvalidInput(std::string("diagram: format must be \"") + kDiagramFormat + "\"");
  LinkDiagram d;
  d.branch = index_field(j, "branch", "diagram");
  const json& comps = field(j, "components", "diagram");
  if (!comps.is_array()) throw InvalidInput("diagram: \"components\" must be an array");
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::string where = "component " + std::to_string(c);
    LinkComponent comp;
    const json& name = field(comps[c], "name", where);
    if (!name.is_string()) throw InvalidInput(where + ": \"name\" must be a string");
    comp.name = name.get<std::string>();
    const json& ups = field(comps[c], "underpasses", where);
    if (!ups.is_array()) throw InvalidInput(where + ": \"underpasses\" must be an array");
    for (std::size_t i = 0; i < ups.size(); ++i) {
      std::string uw = where + " underpass " + std::to_string(i);
      const json& sign = field(ups[i], "sign", uw);
      if (!sign.is_number_integer()) throw InvalidInput(uw + ": \"sign\" must be an integer");
      const json& over = field(ups[i], "over", uw);
      Underpass u;
      u.sign = sign.get<int>();
      u.over.component = index_field(over, "component", uw);
      u.over.arc = index_field(over, "arc", uw);
      comp.underpasses.push_back(u);
    }
    d.components.push_back(std::move(comp));
  }
  return d;
}

json diagram_to_json(const LinkDiagram& d) {
  json comps = json::array();
  for (const auto& c : d.components) {
    json ups = json::array();
    for (const auto& u : c.underpasses)
      ups.push_back({{"sign", u.sign}, {"over", {{"component", u.over.component}, {"arc", u.over.arc}}}});
    comps.push_back({{"name", c.name}, {"underpasses", ups}});
  }
  return {{"format", kDiagramFormat}, {"branch", d.branch}, {"components", comps}};
}

LinkDiagram load_diagram(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
  return diagram_from_json(j);
}

json chain_to_json(const CoverStructure& cover, const TwoChain& chain) {
  json x = json::array();
  for (std::size_t i = 0; i < chain.branch_arcs(); ++i) {
    json row = json::array();
    for (int s = 1; s <= chain.q; ++s) row.push_back(to_string(chain.at(i, s)));
    x.push_back(row);
  }
  return {{"curve", cover.diagram.components[chain.curve].name},
          {"q", chain.q},
          {"coset_index", chain.coset.index},
          {"coset", coset_json(chain.coset)},
          {"x", x}};
}

json entry_to_json(const LinkingEntry& e) {
  if (const auto* v = std::get_if<BigRational>(&e)) return to_string(*v);
  return {{"undefined", describe(std::get<Undefined>(e).reason)}};
}

json report_to_json(const CoverStructure& cover, const LinkingReport& r) {
  json entries = json::array();
  for (const auto& row : r.entries) {
    json jr = json::array();
    for (const auto& e : row) jr.push_back(entry_to_json(e));
    entries.push_back(jr);
  }
  json ca = json::array(), cb = json::array();
  for (const auto& c : r.cosets_a) ca.push_back(coset_json(c));
  for (const auto& c : r.cosets_b) cb.push_back(coset_json(c));
  return {{"a", cover.diagram.components[r.curve_a].name},
          {"b", cover.diagram.components[r.curve_b].name},
          {"q", cover.q},
          {"cosets_a", ca},
          {"cosets_b", cb},
          {"entries", entries}};
}

json verdict_to_json(const LinkDiagram& d, const ObstructionVerdict& v) {
  json entries = json::array();
  for (const auto& row : v.matrix.entries) {
    json jr = json::array();
    for (const auto& e : row) jr.push_back(entry_to_json(e));
    entries.push_back(jr);
  }
  return {{"q", v.q},
          {"w", v.w},
          {"order_n", v.order_n ? json(to_string(*v.order_n)) : json(nullptr)},
          {"hypotheses",
           {{"q_prime_power", v.hypotheses.q_prime_power},
            {"q_divides_w", v.hypotheses.q_divides_w},
            {"lifts_bound_integrally", v.hypotheses.lifts_bound_integrally},
            {"order_odd_or_divides_w", v.hypotheses.order_odd_or_divides_w}}},
          {"curve", d.components[v.matrix.curve_a].name},
          {"matrix", entries},
          {"sign_profile", to_string(v.sign_profile)},
          {"verdict", to_string(v.verdict)}};
}

}  // namespace cyclink
