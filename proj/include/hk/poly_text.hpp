#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hk/monomial_order.hpp"
#include "hk/polynomial.hpp"

namespace hk {

// Canonical polynomial text: terms sorted descending by the active order,
// "p/q" coefficients with 1 omitted, variables ascending by index, "^" for
// exponents. Example: x{a}*x{b} - 3/2*x{}^2.

inline std::string monomial_to_text(
    const Monomial& m, const std::function<std::string(int)>& name) {
  if (m.is_one()) return "1";
  std::string out;
  bool first = true;
  for (const auto& [v, e] : m.factors()) {
    if (!first) out += "*";
    out += "x" + name(v);
    if (e > 1) out += "^" + std::to_string(e);
    first = false;
  }
  return out;
}

inline std::string polynomial_to_text(
    const Polynomial& f, const MonomialOrder& ord,
    const std::function<std::string(int)>& name) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rat>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return ord.less(b.first, a.first);
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (m.is_one())
      out += rat_to_text(a);
    else if (a == 1)
      out += monomial_to_text(m, name);
    else
      out += rat_to_text(a) + "*" + monomial_to_text(m, name);
    first = false;
  }
  return out;
}

// Inverse of polynomial_to_text for any term arrangement; names must map
// back through the given table.
inline Polynomial polynomial_from_text(
    const std::string& text, const std::map<std::string, int>& var_of_name) {
  Polynomial out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip_ws();
  if (text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return out;
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("expected + or - between terms");
    }
    Rat coeff = 1;
    bool saw_coeff = false;
    if (i < text.size() && (std::isdigit(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && (std::isdigit(text[j]) || text[j] == '/')) ++j;
      coeff = rat_from_text(text.substr(i, j - i));
      saw_coeff = true;
      i = j;
    }
    std::vector<std::pair<int, int>> factors;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      } else if (!factors.empty() || saw_coeff) {
        break;
      }
      if (i >= text.size() || text[i] != 'x') {
        if (factors.empty() && !saw_coeff)
          throw std::invalid_argument("expected term");
        break;
      }
      ++i;
      std::size_t start = i;
      if (i < text.size() && text[i] == '{') {
        while (i < text.size() && text[i] != '}') ++i;
        if (i == text.size()) throw std::invalid_argument("unterminated variable name");
        ++i;
      } else {
        while (i < text.size() && text[i] != '*' && text[i] != '^' &&
               text[i] != ' ' && text[i] != '+' && text[i] != '-')
          ++i;
      }
      std::string name = text.substr(start, i - start);
      auto it = var_of_name.find(name);
      if (it == var_of_name.end())
        throw std::invalid_argument("unknown variable: " + name);
      int exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < text.size() && std::isdigit(text[j])) ++j;
        exp = std::stoi(text.substr(i, j - i));
        i = j;
      }
      factors.emplace_back(it->second, exp);
    }
    out = out + Polynomial::term(sign * coeff, Monomial(factors));
    first = false;
    skip_ws();
  }
  return out;
}

}  // namespace hk
