#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hk/lattice.hpp"
#include "hk/monomial_order.hpp"
#include "hk/polynomial.hpp"

namespace hk {

// One binomial x_u x_v - x_meet x_join for an unordered incomparable pair.
struct Generator {
  int u, v;        // lattice element indices, u < v
  int meet, join;  // lattice element indices
  Polynomial f;
  Monomial lead;   // x_u x_v under the active (compatible) order
};

// The binomial generators of the lattice subalgebra, one per unordered
// incomparable pair, listed in ascending (u, v) order so that generator ids
// coincide with co-comparability edge ids.
struct GeneratorSet {
  const Lattice* lattice = nullptr;
  MonomialOrder order;
  std::vector<Generator> gens;
  std::vector<std::vector<int>> incident;  // per variable: generator ids

  int size() const { return static_cast<int>(gens.size()); }

  Polynomial product(const std::vector<int>& ids) const {
    Polynomial out = Polynomial::constant(1);
    for (int id : ids) out = out * gens[id].f;
    return out;
  }

  Monomial lead_product(const std::vector<int>& ids) const {
    Monomial out;
    for (int id : ids) out = out * gens[id].lead;
    return out;
  }
};

inline GeneratorSet hibi_generators(const Lattice& l, MonomialOrder ord) {
  GeneratorSet gs;
  gs.lattice = &l;
  gs.order = std::move(ord);
  gs.incident.assign(l.size(), {});
  for (int u = 0; u < l.size(); ++u)
    for (int v = u + 1; v < l.size(); ++v) {
      if (!l.incomparable(u, v)) continue;
      Generator g;
      g.u = u;
      g.v = v;
      g.meet = l.meet(u, v);
      g.join = l.join(u, v);
      g.lead = Monomial::variable(u) * Monomial::variable(v);
      g.f = Polynomial::term(1, g.lead) -
            Polynomial::term(1, Monomial::variable(g.meet) *
                                    Monomial::variable(g.join));
      int id = gs.size();
      gs.incident[u].push_back(id);
      gs.incident[v].push_back(id);
      gs.gens.push_back(std::move(g));
    }
  return gs;
}

// Writes m as a product of generator leads, i.e. decomposes the exponent
// vector into edges of the incomparability graph. Backtracks over edges at
// the variable with the highest remaining exponent, trying generators in
// list order, and returns the first solution.
inline std::optional<std::vector<int>> represent_initial(const Monomial& m,
                                                         const GeneratorSet& gs) {
  if (m.degree() % 2 != 0) return std::nullopt;
  std::vector<int> exps(gs.lattice->size(), 0);
  for (const auto& [v, e] : m.factors()) {
    if (v >= static_cast<int>(exps.size()))
      throw std::invalid_argument("variable outside the lattice");
    exps[v] = e;
  }
  std::vector<int> chosen;
  auto rec = [&](auto&& self) -> bool {
    int v = -1;
    for (int i = 0; i < static_cast<int>(exps.size()); ++i)
      if (exps[i] > 0 && (v < 0 || exps[i] > exps[v])) v = i;
    if (v < 0) return true;
    for (int id : gs.incident[v]) {
      const Generator& g = gs.gens[id];
      if (exps[g.u] <= 0 || exps[g.v] <= 0) continue;
      --exps[g.u], --exps[g.v];
      chosen.push_back(id);
      if (self(self)) return true;
      chosen.pop_back();
      ++exps[g.u], ++exps[g.v];
    }
    return false;
  };
  if (!rec(rec)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

class SubductionCapError : public std::runtime_error {
 public:
  explicit SubductionCapError(const std::string& what)
      : std::runtime_error(what) {}
};

struct SubductionStep {
  Rat coeff;
  std::vector<int> gens;  // generator ids, multiset
};

// f = q + r with q a polynomial combination of generator products (the trace
// lists each subtracted c * prod f_i, plus the constant the loop ended on)
// and r the sum of leading terms that admit no lead representation.
struct Subduction {
  Polynomial q;
  Polynomial r;
  Rat tail = 0;  // constant left when the loop stopped; included in q
  std::vector<SubductionStep> steps;
  bool reduced_to_constant() const { return r.is_zero(); }
};

inline Subduction subduction(const Polynomial& f, const GeneratorSet& gs,
                             long max_steps = 1000000) {
  Subduction out;
  Polynomial p = f;
  long iter = 0;
  while (!p.is_constant()) {
    if (++iter > max_steps)
      throw SubductionCapError("subduction exceeded the iteration cap");
    auto [c, m] = gs.order.initial_term(p);
    if (auto rep = represent_initial(m, gs)) {
      Polynomial g = c * gs.product(*rep);
      out.q = out.q + g;
      p = p - g;
      out.steps.push_back({c, std::move(*rep)});
    } else {
      Polynomial t = Polynomial::term(c, m);
      out.r = out.r + t;
      p = p - t;
    }
  }
  out.tail = p.constant_coefficient();
  out.q = out.q + p;  // a constant is itself an element of k[F]
  return out;
}

// Divisor lattice of 2 * 3^m: a length-m chain next to a single point. Its
// generators are exactly the 2x2 minors of a 2 x (m+1) matrix of variables,
// with the diagonal products as leads under any compatible order.
inline bool plucker_identity_check(int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> rel;
  auto chain_label = [](int i) {
    std::string s = std::to_string(i);
    return "c" + std::string(2 - std::min<std::size_t>(2, s.size()), '0') + s;
  };
  for (int i = 1; i <= m; ++i) labels.push_back(chain_label(i));
  for (int i = 1; i < m; ++i) rel.emplace_back(chain_label(i), chain_label(i + 1));
  labels.push_back("d");
  Poset p(labels, rel);
  Lattice l = build_lattice(p);
  MonomialOrder ord = compatible_order(l);
  GeneratorSet gs = hibi_generators(l, ord);
  if (gs.size() != m * (m + 1) / 2) return false;

  std::uint64_t chain_mask = 0;
  std::vector<int> alpha(m + 2), beta(m + 2);  // 1-based rows of the matrix
  std::uint64_t d_bit = std::uint64_t{1} << p.index_of("d");
  for (int k = 1; k <= m + 1; ++k) {
    alpha[k] = l.index_of_members(chain_mask | d_bit);
    beta[k] = l.index_of_members(chain_mask);
    if (k <= m) chain_mask |= std::uint64_t{1} << p.index_of(chain_label(k));
  }
  for (int i = 1; i <= m + 1; ++i)
    for (int j = i + 1; j <= m + 1; ++j) {
      if (!l.incomparable(alpha[i], beta[j])) return false;
      Polynomial det =
          Polynomial::term(1, Monomial::variable(alpha[i]) *
                                  Monomial::variable(beta[j])) -
          Polynomial::term(1, Monomial::variable(beta[i]) *
                                  Monomial::variable(alpha[j]));
      bool found = false;
      for (const Generator& g : gs.gens) {
        if ((g.u == alpha[i] && g.v == beta[j]) ||
            (g.u == beta[j] && g.v == alpha[i])) {
          found = true;
          if (!(g.f == det)) return false;
          if (!(g.lead == Monomial::variable(alpha[i]) *
                              Monomial::variable(beta[j])))
            return false;
        }
      }
      if (!found) return false;
    }
  return true;
}

}  // namespace hk
