#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hk/rational.hpp"

namespace hk {

// Sparse monomial: sorted (variable index, exponent) pairs, exponents
// positive, no duplicates.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<std::pair<int, int>> factors) {
    std::sort(factors.begin(), factors.end());
    for (const auto& [v, e] : factors) {
      if (e < 0) throw std::invalid_argument("negative exponent");
      if (e == 0) continue;
      if (!factors_.empty() && factors_.back().first == v)
        factors_.back().second += e;
      else
        factors_.emplace_back(v, e);
    }
  }

  static Monomial variable(int v, int exp = 1) {
    return Monomial({{v, exp}});
  }

  const std::vector<std::pair<int, int>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
  }

  int exponent(int v) const {
    for (const auto& [w, e] : factors_)
      if (w == v) return e;
    return 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
      if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first))
        out.factors_.push_back(*ia++);
      else if (ia == a.factors_.end() || ib->first < ia->first)
        out.factors_.push_back(*ib++);
      else {
        out.factors_.emplace_back(ia->first, ia->second + ib->second);
        ++ia, ++ib;
      }
    }
    return out;
  }

  bool divides(const Monomial& m) const {
    auto it = m.factors_.begin();
    for (const auto& [v, e] : factors_) {
      while (it != m.factors_.end() && it->first < v) ++it;
      if (it == m.factors_.end() || it->first != v || it->second < e) return false;
    }
    return true;
  }

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::pair<int, int>> factors_;
};

// Sparse polynomial over exact rationals. Terms are kept sorted by the
// structural monomial order with nonzero coefficients, so equality is
// structural.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(const Rat& c) {
    Polynomial f;
    if (c != 0) f.terms_.emplace_back(Monomial{}, c);
    return f;
  }

  static Polynomial term(const Rat& c, const Monomial& m) {
    Polynomial f;
    if (c != 0) f.terms_.emplace_back(m, c);
    return f;
  }

  const std::vector<std::pair<Monomial, Rat>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Zero or a single constant term: the polynomial lies in the ground field.
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
  }

  Rat constant_coefficient() const {
    for (const auto& [m, c] : terms_)
      if (m.is_one()) return c;
    return 0;
  }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& [m, c] : terms_)
      if (m.degree() != terms_[0].first.degree()) return false;
    return true;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first))
        out.terms_.push_back(*ia++);
      else if (ia == a.terms_.end() || ib->first < ia->first)
        out.terms_.push_back(*ib++);
      else {
        Rat c = ia->second + ib->second;
        if (c != 0) out.terms_.emplace_back(ia->first, c);
        ++ia, ++ib;
      }
    }
    return out;
  }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial out = a;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::map<Monomial, Rat> acc;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
    Polynomial out;
    for (auto& [m, c] : acc)
      if (c != 0) out.terms_.emplace_back(m, c);
    return out;
  }

  friend Polynomial operator*(const Rat& c, const Polynomial& a) {
    Polynomial out;
    if (c == 0) return out;
    out = a;
    for (auto& [m, k] : out.terms_) k = c * k;
    return out;
  }

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<std::pair<Monomial, Rat>> terms_;
};

}  // namespace hk
