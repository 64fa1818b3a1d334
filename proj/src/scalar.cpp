#include "cdv/scalar.hpp"

#include <cctype>

namespace cdv {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  std::size_t slash = body.find('/');
  bool ok = slash == std::string_view::npos ? is_digits(body)
                                            : is_digits(body.substr(0, slash)) && is_digits(body.substr(slash + 1));
  if (!ok) throw ParseError("not a rational: '" + std::string(text) + "'");
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) throw ParseError("not a rational: '" + std::string(text) + "'");
  if (slash != std::string_view::npos && sgn(q.get_den()) == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Gaussian& z) {
  if (z.is_real()) return to_string(z.re());
  return "(" + to_string(z.re()) + "," + to_string(z.im()) + ")";
}

Gaussian parse_gaussian(std::string_view text) {
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("unterminated Gaussian: '" + std::string(text) + "'");
    std::string_view inner = text.substr(1, text.size() - 2);
    std::size_t comma = inner.find(',');
    if (comma == std::string_view::npos) throw ParseError("Gaussian needs (re,im): '" + std::string(text) + "'");
    return {parse_rational(inner.substr(0, comma)), parse_rational(inner.substr(comma + 1))};
  }
  return Gaussian(parse_rational(text));
}

}  // namespace cdv
