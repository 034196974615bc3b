#include "cyclink/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "cyclink/cover.hpp"
#include "cyclink/error.hpp"
#include "cyclink/homology.hpp"
#include "cyclink/json_io.hpp"
#include "cyclink/linking.hpp"
#include "cyclink/obstruction.hpp"

namespace cyclink::cli {

namespace {

using nlohmann::json;

constexpr const char* kUndefined = "undefined (not rationally null-homologous)";

struct Config {
  std::string file;
  int q = 1;
  std::string curve, a, b;
  std::size_t coset = 1, i = 1, j = 1;
  bool json = false;
};

std::size_t resolve(const LinkDiagram& d, const std::string& sel) {
  if (auto c = d.find(sel)) return *c;
  if (!sel.empty() && sel.find_first_not_of("0123456789") == std::string::npos) {
    std::size_t c = std::stoul(sel);
    if (c < d.size()) return c;
  }
  throw InvalidInput("no component named '" + sel + "'");
}

LinkDiagram load_valid(const Config& cfg) {
  LinkDiagram d = load_diagram(cfg.file);
  require_valid(d);
  return d;
}

std::string chain_text(const TwoChain& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.branch_arcs(); ++i) {
    if (i) s += "|";
    for (int j = 1; j <= c.q; ++j) {
      if (j > 1) s += ",";
      s += to_string(c.at(i, j));
    }
  }
  return s + ")";
}

std::string coset_text(const Coset& c) {
  std::string s = "{";
  for (std::size_t t = 0; t < c.sheets.size(); ++t) s += (t ? "," : "") + std::to_string(c.sheets[t]);
  return s + "}";
}

std::string entry_text(const LinkingEntry& e) {
  if (const auto* u = std::get_if<Undefined>(&e))
    return u->reason == UndefinedReason::self_pairing ? "self" : "undefined";
  return to_string(std::get<BigRational>(e));
}

void print_matrix(std::ostream& out, const LinkDiagram& d, const LinkingReport& r) {
  out << "lk(" << d.components[r.curve_a].name << "^j, " << d.components[r.curve_b].name << "^k)";
  for (std::size_t k = 0; k < r.cosets_b.size(); ++k) out << "\tk=" << k + 1;
  out << "\n";
  for (std::size_t j = 0; j < r.entries.size(); ++j) {
    out << "j=" << j + 1;
    for (const auto& e : r.entries[j]) out << "\t" << entry_text(e);
    out << "\n";
  }
}

int cmd_validate(const Config& cfg, std::ostream& out) {
  LinkDiagram d = load_diagram(cfg.file);
  auto report = validate(d);
  if (cfg.json) {
    json v = json::array();
    for (const auto& x : report) v.push_back(x.message);
    out << json{{"valid", report.empty()}, {"violations", v}}.dump(2) << "\n";
  } else if (report.empty()) {
    out << "valid\n";
  } else {
    for (const auto& x : report) out << x.message << "\n";
  }
  return report.empty() ? 0 : 2;
}

int cmd_info(const Config& cfg, std::ostream& out) {
  LinkDiagram d = load_valid(cfg);
  CoverStructure cv = build_cover(d, cfg.q);
  json j{{"q", cfg.q}, {"branch", d.components[d.branch].name}};
  json comps = json::array(), links = json::array();
  for (std::size_t c = 0; c < d.size(); ++c) {
    json jc{{"name", d.components[c].name}, {"arcs", d.arc_count(c)}, {"writhe", writhe(d, c)}};
    if (c != d.branch) {
      jc["lbar"] = cv.lbar[c];
      json cs = json::array();
      for (const auto& g : cv.components_of[c]) cs.push_back(g.sheets);
      jc["lifts"] = cs;
    }
    comps.push_back(jc);
    for (std::size_t e = c + 1; e < d.size(); ++e)
      links.push_back({{"a", d.components[c].name}, {"b", d.components[e].name}, {"lk", pairwise_linking(d, c, e)}});
  }
  j["components"] = comps;
  j["linking"] = links;
  if (cfg.json) {
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "q = " << cfg.q << "\n";
  for (std::size_t c = 0; c < d.size(); ++c) {
    out << d.components[c].name << (c == d.branch ? " (branch)" : "") << ": arcs " << d.arc_count(c) << ", writhe "
        << writhe(d, c);
    if (c != d.branch) {
      out << ", lk(K) mod q " << cv.lbar[c] << ", lifts";
      for (const auto& g : cv.components_of[c]) out << " " << coset_text(g);
    }
    out << "\n";
  }
  for (const auto& l : links)
    out << "lk(" << l["a"].get<std::string>() << ", " << l["b"].get<std::string>() << ") = " << l["lk"] << "\n";
  return 0;
}

int cmd_chain(const Config& cfg, std::ostream& out) {
  LinkDiagram d = load_valid(cfg);
  CoverStructure cv = build_cover(d, cfg.q);
  std::size_t curve = resolve(d, cfg.curve);
  const Coset& g = coset_of(cv, curve, cfg.coset);
  auto chain = bounding_chain(cv, curve, g);
  if (cfg.json)
    out << (chain ? chain_to_json(cv, *chain)
                  : json{{"curve", d.components[curve].name}, {"coset", g.sheets}, {"undefined", describe(UndefinedReason::not_null_homologous)}})
                     .dump(2)
        << "\n";
  else
    out << (chain ? chain_text(*chain) : kUndefined) << "\n";
  return 0;
}

int cmd_lk(const Config& cfg, std::ostream& out) {
  LinkDiagram d = load_valid(cfg);
  CoverStructure cv = build_cover(d, cfg.q);
  std::size_t a = resolve(d, cfg.a), b = resolve(d, cfg.b);
  const Coset& ga = coset_of(cv, a, cfg.i);
  const Coset& gb = coset_of(cv, b, cfg.j);
  if (a == b && cfg.i == cfg.j) throw InvalidInput("linking of a lift with itself is not defined");
  auto chain = bounding_chain(cv, b, gb);
  LinkingEntry e = chain ? linking_number(cv, *chain, a, ga) : LinkingEntry(Undefined{UndefinedReason::not_null_homologous});
  if (cfg.json)
    out << json{{"a", d.components[a].name}, {"i", cfg.i}, {"b", d.components[b].name}, {"j", cfg.j}, {"q", cfg.q},
                {"lk", entry_to_json(e)}}
               .dump(2)
        << "\n";
  else
    out << (std::holds_alternative<BigRational>(e) ? to_string(std::get<BigRational>(e)) : kUndefined) << "\n";
  return 0;
}

int cmd_matrix(const Config& cfg, std::ostream& out) {
  LinkDiagram d = load_valid(cfg);
  CoverStructure cv = build_cover(d, cfg.q);
  LinkingReport r = linking_matrix(cv, resolve(d, cfg.a), resolve(d, cfg.b));
  if (cfg.json)
    out << report_to_json(cv, r).dump(2) << "\n";
  else
    print_matrix(out, d, r);
  return 0;
}

int cmd_order(const Config& cfg, std::ostream& out) {
  LinkDiagram d = load_valid(cfg);
  CoverStructure cv = build_cover(d, cfg.q);
  std::size_t curve = resolve(d, cfg.curve);
  auto n = minimal_bounding_multiple(cv, curve, coset_of(cv, curve, cfg.coset));
  if (cfg.json)
    out << json{{"curve", d.components[curve].name}, {"coset", cfg.coset}, {"q", cfg.q},
                {"order", n ? json(to_string(*n)) : json{{"undefined", describe(UndefinedReason::not_null_homologous)}}}}
               .dump(2)
        << "\n";
  else
    out << (n ? to_string(*n) : kUndefined) << "\n";
  return 0;
}

int cmd_obstruct(const Config& cfg, std::ostream& out) {
  LinkDiagram d = load_valid(cfg);
  ObstructionVerdict v = evaluate_obstruction(d, cfg.q);
  if (cfg.json) {
    out << verdict_to_json(d, v).dump(2) << "\n";
    return 0;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "q = " << v.q << "\n"
      << "w = " << v.w << "\n"
      << "order n = " << (v.order_n ? to_string(*v.order_n) : kUndefined) << "\n"
      << "q prime power: " << yn(v.hypotheses.q_prime_power) << "\n"
      << "q divides w: " << yn(v.hypotheses.q_divides_w) << "\n"
      << "lifts bound integrally (n = 1): " << yn(v.hypotheses.lifts_bound_integrally) << "\n"
      << "n odd or w a nonzero multiple of n: " << yn(v.hypotheses.order_odd_or_divides_w) << "\n";
  print_matrix(out, d, v.matrix);
  out << "sign profile: " << to_string(v.sign_profile) << "\n"
      << "verdict: " << to_string(v.verdict) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linking numbers of lifts in cyclic branched covers", "cyclink"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub, bool with_q) {
    sub->add_option("file", cfg.file, "diagram JSON (cyclink-diagram-1)")->required();
    if (with_q) sub->add_option("-q", cfg.q, "degree of the cover")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--json", cfg.json, "machine-readable output");
  };
  auto* validate_cmd = app.add_subcommand("validate", "check a diagram for structural errors");
  add_common(validate_cmd, false);
  auto* info_cmd = app.add_subcommand("info", "writhe, pairwise linking and lift components");
  add_common(info_cmd, true);
  auto* chain_cmd = app.add_subcommand("chain", "rational 2-chain bounding a lift component");
  add_common(chain_cmd, true);
  chain_cmd->add_option("--curve", cfg.curve, "component name or index")->required();
  chain_cmd->add_option("--coset", cfg.coset, "lift component index k")->required();
  auto* lk_cmd = app.add_subcommand("lk", "linking number of two lift components");
  add_common(lk_cmd, true);
  lk_cmd->add_option("--a", cfg.a, "first component")->required();
  lk_cmd->add_option("--i", cfg.i, "lift index of the first component")->required();
  lk_cmd->add_option("--b", cfg.b, "second component")->required();
  lk_cmd->add_option("--j", cfg.j, "lift index of the second component")->required();
  auto* matrix_cmd = app.add_subcommand("matrix", "linking matrix between the lifts of two curves");
  add_common(matrix_cmd, true);
  matrix_cmd->add_option("--a", cfg.a, "row component")->required();
  matrix_cmd->add_option("--b", cfg.b, "column component")->required();
  auto* order_cmd = app.add_subcommand("order", "least multiple of a lift component that bounds");
  add_common(order_cmd, true);
  order_cmd->add_option("--curve", cfg.curve, "component name or index")->required();
  order_cmd->add_option("--coset", cfg.coset, "lift component index k")->required();
  auto* obstruct_cmd = app.add_subcommand("obstruct", "satellite homomorphism obstruction for a pattern");
  add_common(obstruct_cmd, true);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(cfg, out);
    if (info_cmd->parsed()) return cmd_info(cfg, out);
    if (chain_cmd->parsed()) return cmd_chain(cfg, out);
    if (lk_cmd->parsed()) return cmd_lk(cfg, out);
    if (matrix_cmd->parsed()) return cmd_matrix(cfg, out);
    if (order_cmd->parsed()) return cmd_order(cfg, out);
    if (obstruct_cmd->parsed()) return cmd_obstruct(cfg, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cyclink::cli
