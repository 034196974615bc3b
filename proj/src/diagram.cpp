#include "cyclink/diagram.hpp"

#include <cstdlib>

#include "cyclink/error.hpp"

namespace cyclink {

namespace {

void check_component(const LinkDiagram& d, std::size_t c) {
  if (c >= d.size())
    throw InvalidInput("component index " + std::to_string(c) + " out of range (diagram has " +
                       std::to_string(d.size()) + ")");
}

}  // namespace

std::optional<std::size_t> LinkDiagram::find(std::string_view name) const {
  for (std::size_t c = 0; c < components.size(); ++c)
    if (components[c].name == name) return c;
  return std::nullopt;
}

ValidationReport validate(const LinkDiagram& d) {
  ValidationReport report;
  if (d.components.empty()) {
    report.push_back({Violation::Kind::empty_diagram, "diagram has no components"});
    return report;
  }
  if (d.branch >= d.size())
    report.push_back({Violation::Kind::branch_out_of_range,
                      "branch index " + std::to_string(d.branch) + " out of range"});
  for (std::size_t c = 0; c < d.size(); ++c) {
    const auto& comp = d.components[c];
    for (std::size_t i = 0; i < comp.underpasses.size(); ++i) {
      const auto& u = comp.underpasses[i];
      std::string where = "component " + std::to_string(c) + " underpass " + std::to_string(i);
      if (u.sign != 1 && u.sign != -1)
        report.push_back({Violation::Kind::bad_sign, where + ": bad sign " + std::to_string(u.sign)});
      if (u.over.component >= d.size())
        report.push_back({Violation::Kind::dangling_reference,
                          where + ": dangling reference to component " + std::to_string(u.over.component)});
      else if (u.over.arc >= d.arc_count(u.over.component))
        report.push_back({Violation::Kind::dangling_reference,
                          where + ": dangling reference to arc " + std::to_string(u.over.arc) +
                              " of component " + std::to_string(u.over.component)});
    }
  }
  return report;
}

void require_valid(const LinkDiagram& d) {
  auto report = validate(d);
  if (report.empty()) return;
  std::string msg = "invalid diagram:";
  for (const auto& v : report) msg += "\n  " + v.message;
  throw InvalidInput(msg);
}

long writhe(const LinkDiagram& d, std::size_t c) {
  check_component(d, c);
  long w = 0;
  for (const auto& u : d.components[c].underpasses)
    if (u.over.component == c) w += u.sign;
  return w;
}

long pairwise_linking(const LinkDiagram& d, std::size_t a, std::size_t b) {
  check_component(d, a);
  check_component(d, b);
  if (a == b) throw InvalidInput("pairwise linking needs two distinct components");
  long lk = 0;
  for (const auto& u : d.components[a].underpasses)
    if (u.over.component == b) lk += u.sign;
  return lk;
}

LinkDiagram normalize_writhe(const LinkDiagram& d, int q) {
  if (q < 1) throw InvalidInput("degree q must be positive");
  check_component(d, d.branch);
  long w = writhe(d, d.branch);
  long positive = ((-w) % q + q) % q;
  long negative = ((w % q) + q) % q;
  LinkDiagram out = d;
  if (positive == 0) return out;
  int sign = positive <= negative ? 1 : -1;
  long count = positive <= negative ? positive : negative;
  auto& ups = out.components[d.branch].underpasses;
  // An empty component is one arc; its first kink turns it into arc 0 plus the kink arc.
  for (long k = 0; k < count; ++k) {
    std::size_t kink_arc = ups.size();
    ups.push_back({sign, {d.branch, kink_arc}});
  }
  return out;
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (auto& comp : out.components)
    for (auto& u : comp.underpasses) u.sign = -u.sign;
  return out;
}

LinkDiagram reverse_component(const LinkDiagram& d, std::size_t c) {
  check_component(d, c);
  LinkDiagram out = d;
  std::size_t n = d.components[c].underpasses.size();
  if (n == 0) return out;
  // Old arc a runs from underpass a-1 to underpass a; reversed, it becomes arc n-a (mod n).
  auto new_arc = [n](std::size_t a) { return (n - a) % n; };
  for (std::size_t ci = 0; ci < out.size(); ++ci)
    for (auto& u : out.components[ci].underpasses)
      if (u.over.component == c) {
        u.over.arc = new_arc(u.over.arc);
        if (ci != c) u.sign = -u.sign;
      }
  auto& ups = out.components[c].underpasses;
  std::vector<Underpass> rev(ups.rbegin(), ups.rend());
  for (auto& u : rev)
    if (u.over.component != c) u.sign = -u.sign;
  ups = std::move(rev);
  return out;
}

}  // namespace cyclink
