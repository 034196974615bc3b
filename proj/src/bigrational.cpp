#include "cyclink/bigrational.hpp"

#include "cyclink/error.hpp"

namespace cyclink {

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRational& v) {
  BigRational c(v);
  c.canonicalize();
  return c.get_str();
}

BigRational parse_rational(std::string_view text) {
  auto bad = [&] { return InvalidInput("not a rational number: '" + std::string(text) + "'"); };
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  BigInt p(n), q{std::string(den)};
  if (q == 0) throw bad();
  BigRational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace cyclink
