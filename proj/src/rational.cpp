#include "sphanti/rational.hpp"

#include <limits>
#include <stdexcept>

#include "sphanti/error.hpp"

namespace sphanti {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto bad = [&] { return ParseError("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  const auto valid_int = [](std::string_view part) {
    if (!part.empty() && (part.front() == '-' || part.front() == '+')) part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw bad();
  } else {
    std::string_view num(s.data(), slash);
    std::string_view den(s.data() + slash + 1, s.size() - slash - 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') throw bad();
    if (den.find_first_not_of('0') == std::string_view::npos) throw ParseError("zero denominator in '" + s + "'");
  }
  // mpq_set_str rejects a leading '+'
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) throw bad();
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("not an integer: " + q.get_str());
  const mpz_class& n = q.get_num();
  if (!n.fits_slong_p()) throw std::domain_error("integer out of range: " + q.get_str());
  return n.get_si();
}

}  // namespace sphanti
