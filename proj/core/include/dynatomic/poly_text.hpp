#pragma once

// Text format for bivariate polynomials: one term per line,
//
//   [a0,a1,...] z^I c^J
//
// where [a0,a1,...] is the coefficient's coordinate vector in its ring.  Terms
// are ordered by I descending, then J descending; zero coefficients are never
// written, so the zero polynomial is the empty string.

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynatomic/bivarpoly.hpp"
#include "dynatomic/error.hpp"

namespace dynatomic {

template <CoefficientRing R>
std::string format_coefficient(const R& ring, const typename R::value_type& a) {
  std::string out = "[";
  const auto coords = ring.format(a);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += coords[i];
  }
  out += ']';
  return out;
}

template <CoefficientRing R>
std::string to_text(const BivarPoly<R>& p) {
  std::string out;
  const auto& rows = p.rows();
  for (std::size_t i = rows.size(); i-- > 0;) {
    const auto c = rows[i].coeffs();
    for (std::size_t j = c.size(); j-- > 0;) {
      if (p.ring().is_zero(c[j])) continue;
      out += format_coefficient(p.ring(), c[j]);
      out += " z^" + std::to_string(i) + " c^" + std::to_string(j) + "\n";
    }
  }
  return out;
}

template <CoefficientRing R>
std::string to_text(const UniPoly<R>& p) {
  return to_text(BivarPoly<R>::from_c(p));
}

/// Human-readable form, e.g. "z^2 + z + c + 1".  Coefficients with more than
/// one coordinate are written as [a0,a1,...].
template <CoefficientRing R>
std::string to_pretty(const BivarPoly<R>& p) {
  std::string out;
  const auto& rows = p.rows();
  for (std::size_t i = rows.size(); i-- > 0;) {
    const auto c = rows[i].coeffs();
    for (std::size_t j = c.size(); j-- > 0;) {
      if (p.ring().is_zero(c[j])) continue;
      const auto coords = p.ring().format(c[j]);
      std::string coef;
      bool negative = false;
      if (coords.size() == 1) {
        coef = coords[0];
        if (!coef.empty() && coef[0] == '-') {
          negative = true;
          coef.erase(0, 1);
        }
      } else {
        coef = format_coefficient(p.ring(), c[j]);
      }
      std::string mono;
      if (i > 0) mono += i == 1 ? "z" : "z^" + std::to_string(i);
      if (j > 0) mono += (mono.empty() ? "" : "*") + (j == 1 ? std::string("c") : "c^" + std::to_string(j));
      std::string term;
      if (mono.empty())
        term = coef;
      else if (coef == "1")
        term = mono;
      else
        term = coef + "*" + mono;
      if (out.empty())
        out = (negative ? "-" : "") + term;
      else
        out += (negative ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

namespace detail {

inline std::size_t parse_exponent(std::string_view tok, char var) {
  if (tok.size() < 3 || tok[0] != var || tok[1] != '^') throw DomainError("expected " + std::string(1, var) + "^N, got '" + std::string(tok) + "'");
  std::size_t v = 0;
  for (std::size_t i = 2; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') throw DomainError("bad exponent '" + std::string(tok) + "'");
    v = v * 10 + static_cast<std::size_t>(tok[i] - '0');
  }
  if (tok.size() > 3 && tok[2] == '0') throw DomainError("non-canonical exponent '" + std::string(tok) + "'");
  return v;
}

}  // namespace detail

/// Parses the text format.  Terms may come in any order but each (I, J) may
/// appear only once and coefficients must be nonzero.
template <CoefficientRing R>
BivarPoly<R> parse_text(const R& ring, std::string_view text) {
  std::map<std::pair<std::size_t, std::size_t>, typename R::value_type> terms;
  std::size_t max_i = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    if (line.front() != '[') throw DomainError("term must start with '[': '" + std::string(line) + "'");
    const auto close = line.find(']');
    if (close == std::string_view::npos) throw DomainError("unterminated coefficient: '" + std::string(line) + "'");
    std::vector<std::string> coords;
    std::string_view inner = line.substr(1, close - 1);
    std::size_t s = 0;
    while (true) {
      auto comma = inner.find(',', s);
      coords.emplace_back(inner.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s));
      if (comma == std::string_view::npos) break;
      s = comma + 1;
    }
    std::string_view rest = line.substr(close + 1);
    if (rest.size() < 2 || rest[0] != ' ') throw DomainError("malformed term: '" + std::string(line) + "'");
    rest.remove_prefix(1);
    const auto sp = rest.find(' ');
    if (sp == std::string_view::npos) throw DomainError("malformed term: '" + std::string(line) + "'");
    const std::size_t i = detail::parse_exponent(rest.substr(0, sp), 'z');
    const std::size_t j = detail::parse_exponent(rest.substr(sp + 1), 'c');
    auto value = ring.parse(coords);
    if (ring.is_zero(value)) throw DomainError("zero coefficient in term: '" + std::string(line) + "'");
    if (!terms.emplace(std::make_pair(i, j), std::move(value)).second)
      throw DomainError("duplicate term z^" + std::to_string(i) + " c^" + std::to_string(j));
    max_i = std::max(max_i, i);
  }
  if (terms.empty()) return BivarPoly<R>(ring);
  std::vector<std::vector<typename R::value_type>> raw(max_i + 1);
  for (auto& [key, value] : terms) {
    auto& row = raw[key.first];
    if (row.size() <= key.second) row.resize(key.second + 1, ring.zero());
    row[key.second] = std::move(value);
  }
  std::vector<UniPoly<R>> rows;
  for (auto& r : raw) rows.emplace_back(ring, std::move(r));
  return BivarPoly<R>(ring, std::move(rows));
}

}  // namespace dynatomic
