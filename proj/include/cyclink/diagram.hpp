#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cyclink {

struct OverstrandRef {
  std::size_t component = 0;
  std::size_t arc = 0;
  bool operator==(const OverstrandRef&) const = default;
};

// Arc i of a component terminates at underpass i; arc i+1 (mod n) starts there.
struct Underpass {
  int sign = 1;
  OverstrandRef over;
  bool operator==(const Underpass&) const = default;
};

struct LinkComponent {
  std::string name;
  std::vector<Underpass> underpasses;

  // An empty underpass list is one closed arc.
  std::size_t arc_count() const { return underpasses.empty() ? 1 : underpasses.size(); }
  bool operator==(const LinkComponent&) const = default;
};

struct LinkDiagram {
  std::vector<LinkComponent> components;
  std::size_t branch = 0;

  std::size_t size() const { return components.size(); }
  std::size_t arc_count(std::size_t c) const { return components.at(c).arc_count(); }
  std::optional<std::size_t> find(std::string_view name) const;
  bool operator==(const LinkDiagram&) const = default;
};

struct Violation {
  enum class Kind { empty_diagram, branch_out_of_range, dangling_reference, bad_sign };
  Kind kind;
  std::string message;
};
using ValidationReport = std::vector<Violation>;

ValidationReport validate(const LinkDiagram& d);
// Throws InvalidInput carrying every violation.
void require_valid(const LinkDiagram& d);

// Signed count of self-crossings of c, each counted once at its understrand.
long writhe(const LinkDiagram& d, std::size_t c);
// Sum of signs of the underpasses of a beneath b.
long pairwise_linking(const LinkDiagram& d, std::size_t a, std::size_t b);

// Appends kinks to the end of the branch component until its writhe is 0 mod q.
LinkDiagram normalize_writhe(const LinkDiagram& d, int q);

// Reflection in a vertical plane: same combinatorics, every sign negated.
LinkDiagram mirror(const LinkDiagram& d);
// Reverses the orientation of component c, renumbering its arcs.
LinkDiagram reverse_component(const LinkDiagram& d, std::size_t c);

}  // namespace cyclink
