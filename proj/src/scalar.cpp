#include "cesaro/scalar.hpp"

#include <cstdio>

namespace cesaro {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(ErrorKind::Structural, "empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw Error(ErrorKind::Structural, "bad rational literal: " + text);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& x) { return x.get_str(); }

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace cesaro
