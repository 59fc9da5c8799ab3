#include "togglelab/rational.hpp"

#include <algorithm>

#include "togglelab/error.hpp"

namespace tgl {

std::string to_string(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  return r.get_str();
}

Rational rational_from_string(const std::string& text) {
  if (text.empty())
    fail(errc::parse_error, "empty rational literal");
  const bool ok = std::all_of(text.begin(), text.end(), [](char c) {
    return (c >= '0' && c <= '9') || c == '-' || c == '+' || c == '/';
  });
  if (!ok)
    fail(errc::parse_error, "bad rational literal: " + text);
  Rational q;
  if (q.set_str(text, 10) != 0)
    fail(errc::parse_error, "bad rational literal: " + text);
  if (q.get_den() == 0)
    fail(errc::parse_error, "zero denominator: " + text);
  q.canonicalize();
  return q;
}

bool is_zero_vector(const QVector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& x) { return x == 0; });
}

} // namespace tgl
