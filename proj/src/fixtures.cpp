#include "cyclink/fixtures.hpp"

#include <algorithm>
#include <fstream>

#include "cyclink/cover.hpp"
#include "cyclink/error.hpp"
#include "cyclink/homology.hpp"
#include "cyclink/json_io.hpp"
#include "cyclink/linking.hpp"

namespace cyclink {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::string_view kSidecar = ".expected.json";

std::size_t component_named(const LinkDiagram& d, const std::string& name) {
  auto c = d.find(name);
  if (!c) throw InvalidInput("fixture has no component named " + name);
  return *c;
}

}  // namespace

fs::path default_corpus_dir() { return CYCLINK_FIXTURE_DIR; }

std::vector<std::string> fixture_names(const fs::path& dir) {
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::string file = entry.path().filename().string();
    if (file.size() > kSidecar.size() && file.ends_with(kSidecar)) continue;
    if (entry.path().extension() == ".json") names.push_back(entry.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

Fixture load_fixture(std::string_view name, const fs::path& dir) {
  Fixture f;
  f.name = std::string(name);
  f.diagram_file = dir / (f.name + ".json");
  if (!fs::exists(f.diagram_file)) throw InvalidInput("unknown fixture: " + f.name);
  f.diagram = load_diagram(f.diagram_file);

  fs::path sidecar = dir / (f.name + std::string(kSidecar));
  if (fs::exists(sidecar)) {
    std::ifstream in(sidecar);
    json j = json::parse(in);
    if (j.contains("winding")) f.winding = j["winding"].get<long>();
    if (j.contains("degrees")) f.degrees = j["degrees"].get<std::vector<int>>();
    for (const auto& e : j.value("expected", json::array()))
      f.expected.push_back({e.at("operation").get<std::string>(), e.value("args", json::object()), e.at("value"),
                            e.value("provenance", "")});
  }

  const auto report = validate(f.diagram);
  f.consistency.push_back({"diagram validates", report.empty()});
  if (report.empty()) {
    const std::size_t K = f.diagram.branch;
    for (int q : f.degrees)
      f.consistency.push_back({"branch writhe is 0 mod " + std::to_string(q), writhe(f.diagram, K) % q == 0});
    if (f.winding) {
      auto eta = f.diagram.find("eta");
      bool ok = eta && *eta != K && pairwise_linking(f.diagram, K, *eta) == *f.winding;
      f.consistency.push_back({"lk(K, eta) = " + std::to_string(*f.winding), ok});
    }
  }
  for (const auto& c : f.consistency)
    if (!c.passed) throw Error("fixture " + f.name + " fails consistency check: " + c.description);
  return f;
}

std::string check_expected(const Fixture& f, const ExpectedValue& e) {
  const auto& a = e.args;
  if (e.operation == "pairwise_linking") {
    long got = pairwise_linking(f.diagram, component_named(f.diagram, a.at("a")), component_named(f.diagram, a.at("b")));
    return got == e.value.get<long>() ? "" : "pairwise_linking = " + std::to_string(got);
  }
  CoverStructure cover = build_cover(f.diagram, a.at("q").get<int>());
  const std::size_t curve = component_named(f.diagram, a.at("curve"));
  if (e.operation == "lift_components") {
    json got = json::array();
    for (const auto& c : lift_components(cover, curve)) got.push_back(c.sheets);
    return got == e.value ? "" : "lift_components = " + got.dump();
  }
  const Coset& coset = coset_of(cover, curve, a.at("coset").get<std::size_t>());
  if (e.operation == "linking_row") {
    auto chain = bounding_chain(cover, curve, coset);
    if (!chain) return "lift does not bound";
    json got = json::array();
    for (const auto& other : lift_components(cover, curve))
      if (!(other == coset)) got.push_back(to_string(linking_number(cover, *chain, curve, other)));
    return got == e.value ? "" : "linking_row = " + got.dump();
  }
  if (e.operation == "minimal_bounding_multiple_divides") {
    auto n = minimal_bounding_multiple(cover, curve, coset);
    if (!n) return "lift does not bound";
    BigInt stated(e.value.get<std::string>());
    if (!mpz_divisible_p(stated.get_mpz_t(), n->get_mpz_t())) return "minimal multiple " + to_string(*n) + " does not divide " + to_string(stated);
    return "";
  }
  if (e.operation == "chain_in_affine_space") {
    LinearSystem sys = assemble_system(cover, curve, coset);
    auto target = e.value.get<std::vector<long>>();
    std::vector<BigInt> t(target.begin(), target.end());
    if (t.size() != sys.A.cols()) return "target has wrong length";
    return mat_vec(sys.A, std::span<const BigInt>(t)) == sys.b ? "" : "target does not solve the system";
  }
  throw InvalidInput("unknown expected-value operation " + e.operation);
}

}  // namespace cyclink
