#include "dynatomic/rings.hpp"

#include <cctype>

namespace dynatomic {

mpz_class parse_integer(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw DomainError("malformed integer '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw DomainError("malformed integer '" + s + "'");
  if (s.size() - i > 1 && s[i] == '0') throw DomainError("non-canonical integer '" + s + "'");
  if (s == "-0") throw DomainError("non-canonical integer '" + s + "'");
  return mpz_class(s, 10);
}

mpq_class parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return mpq_class(parse_integer(s));
  mpz_class num = parse_integer(s.substr(0, slash));
  mpz_class den = parse_integer(s.substr(slash + 1));
  if (den <= 1) throw DomainError("non-canonical rational '" + s + "'");
  mpq_class q(num, den);
  q.canonicalize();
  if (q.get_den() != den) throw DomainError("rational not in lowest terms '" + s + "'");
  return q;
}

IntegerRing::value_type IntegerRing::parse(std::span<const std::string> coords) const {
  if (coords.size() != 1) throw DomainError("integer coefficient needs exactly one coordinate");
  return parse_integer(coords[0]);
}

RationalField::value_type RationalField::parse(std::span<const std::string> coords) const {
  if (coords.size() != 1) throw DomainError("rational coefficient needs exactly one coordinate");
  return parse_rational(coords[0]);
}

}  // namespace dynatomic
