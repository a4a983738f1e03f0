#include "bandsep/rational.hpp"

#include "bandsep/error.hpp"

#include <charconv>

namespace bandsep {

std::int64_t floor(const Rational& r) {
  const auto num = r.numerator();
  const auto den = r.denominator();  // always > 0
  auto q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::int64_t ceil(const Rational& r) {
  return -floor(-r);
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw PreconditionError("malformed rational '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const auto p = parse_int(text.substr(0, slash), text);
  const auto q = parse_int(text.substr(slash + 1), text);
  if (q == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace bandsep
