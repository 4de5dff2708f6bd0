// Acceptance suite: one self-contained scenario per criterion, each printing
// a single PASS/FAIL line. Run all with no arguments or a single one with
// --criterion N.

#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hk/checker.hpp"
#include "hk/json_report.hpp"

namespace {

using hk::CheckOptions;
using hk::CheckReport;
using hk::CoCompGraph;
using hk::GeneratorSet;
using hk::Lattice;
using hk::Monomial;
using hk::Polynomial;
using hk::Poset;
using hk::Rat;
using hk::WalkBinomial;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

Poset two_plus_two() {
  return Poset({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
}

Poset antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, char('a' + i)));
  return Poset(labels, {});
}

Poset crossing_chains6() {
  return Poset({"1", "2", "3", "4", "5", "6"},
               {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"5", "6"}, {"5", "4"}, {"2", "6"}});
}

Poset ladder_poset(int m) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 1; i <= m; ++i) labels.push_back("c" + std::to_string(i));
  for (int i = 1; i < m; ++i)
    rel.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
  labels.push_back("d");
  return Poset(labels, rel);
}

Monomial vars(std::vector<int> v) {
  std::vector<std::pair<int, int>> f;
  for (int x : v) f.emplace_back(x, 1);
  return Monomial(f);
}

// ---------------------------------------------------------------------- 1

Outcome criterion1() {
  Outcome o;
  Timer t;
  CheckReport r = hk::khovanskii_check(two_plus_two());
  o.require(r.lattice.size() == 9, "lattice must have 9 elements");
  o.require(!r.verdict.khovanskii, "verdict must be fail");
  o.require(r.verdict.witness.has_value(), "witness must be present");
  if (r.verdict.witness) {
    o.require(r.verdict.witness->binomial.walk.verts == std::vector<int>({1, 2, 3, 5}),
              "witness walk must be the 4-cycle on alpha_2,3,4,6");
    GeneratorSet gs = hk::hibi_generators(r.lattice, r.order);
    Polynomial sub = hk::substitute(r.verdict.witness->binomial, gs);
    Polynomial expected =
        -Polynomial::term(1, vars({0, 1, 2, 8})) -
        Polynomial::term(1, vars({0, 3, 4, 5})) +
        Polynomial::term(1, Monomial({{0, 2}, {4, 1}, {8, 1}})) +
        Polynomial::term(1, vars({0, 2, 3, 7})) +
        Polynomial::term(1, vars({0, 1, 5, 6})) -
        Polynomial::term(1, Monomial({{0, 2}, {6, 1}, {7, 1}}));
    o.require(sub == expected, "expansion must match the six-term polynomial");
    o.require(!r.verdict.witness->remainder.is_zero(), "remainder must be nonzero");
  }
  o.require(t.seconds() < 1.0, "must finish within 1 s");
  return o;
}

// ---------------------------------------------------------------------- 2

Outcome criterion2() {
  Outcome o;
  Timer t;
  CheckReport r = hk::khovanskii_check(antichain(3));
  o.require(r.lattice.size() == 8, "lattice must have 8 elements");
  o.require(!r.verdict.khovanskii, "verdict must be fail");
  o.require(r.verdict.witness.has_value(), "witness must be present");
  if (r.verdict.witness) {
    o.require(r.verdict.witness->binomial.walk.verts == std::vector<int>({1, 3, 4, 6}),
              "witness walk must be the 4-cycle on alpha_2,4,5,7");
    GeneratorSet gs = hk::hibi_generators(r.lattice, r.order);
    Polynomial sub = hk::substitute(r.verdict.witness->binomial, gs);
    Polynomial expected =
        -Polynomial::term(1, vars({1, 2, 3, 7})) -
        Polynomial::term(1, vars({0, 4, 5, 6})) +
        Polynomial::term(1, vars({0, 2, 5, 7})) +
        Polynomial::term(1, vars({0, 3, 4, 7})) +
        Polynomial::term(1, vars({0, 1, 6, 7})) -
        Polynomial::term(1, Monomial({{0, 2}, {7, 2}}));
    o.require(sub == expected, "expansion must match the six-term polynomial");
    auto name = [&](int v) { return r.lattice.label(v); };
    std::string text = hk::polynomial_to_text(sub, r.order, name);
    std::string tail = "- x{}^2*x{a,b,c}^2";
    o.require(text.size() > tail.size() &&
                  text.compare(text.size() - tail.size(), tail.size(), tail) == 0,
              "expansion must end in the squared bottom-top term");
    o.require(!r.verdict.witness->remainder.is_zero(), "remainder must be nonzero");
  }
  o.require(t.seconds() < 1.0, "must finish within 1 s");
  return o;
}

// ---------------------------------------------------------------------- 3

Outcome criterion3() {
  Outcome o;
  Timer t;
  for (int m = 1; m <= 5; ++m) {
    CheckReport r = hk::khovanskii_check(ladder_poset(m));
    o.require(r.verdict.khovanskii, "ladder m=" + std::to_string(m) + " must pass");
    o.require(r.complete_walk_set,
              "ladder m=" + std::to_string(m) + " must use the complete cycle set");
    o.require(hk::plucker_identity_check(m),
              "minor identity must hold for m=" + std::to_string(m));
  }
  o.require(t.seconds() < 5.0, "must finish within 5 s");
  return o;
}

// ---------------------------------------------------------------------- 4

Outcome criterion4() {
  Outcome o;
  Timer t5;
  hk::SweepReport r5 = hk::theorem_sweep(5);
  double s5 = t5.seconds();
  o.require(r5.all_agree, "sweep(5) must have zero disagreements");
  o.require(s5 < 30.0, "sweep(5) must finish within 30 s");
  Timer t6;
  hk::SweepReport r6 = hk::theorem_sweep(6);
  double s6 = t6.seconds();
  o.require(r6.all_agree, "sweep(6) must have zero disagreements");
  o.require(s6 < 600.0, "sweep(6) must finish within 10 min");
  if (r6.first_disagreement)
    o.notes.push_back("offender:\n" + *r6.first_disagreement);
  int irreducible = 0;
  for (const auto& row : r6.rows) irreducible += row.irreducible;
  o.notes.push_back("rows: " + std::to_string(r6.rows.size()) + " (" +
                    std::to_string(irreducible) + " irreducible), sweep(5) " +
                    std::to_string(s5) + " s, sweep(6) " + std::to_string(s6) + " s");
  return o;
}

// ---------------------------------------------------------------------- 5

Outcome criterion5() {
  Outcome o;
  Poset p = crossing_chains6();
  hk::CompositionMatrix m = hk::composition_matrix(p);
  o.require(m.size() == 5, "matrix must be 5x5");
  using Cell = std::vector<std::string>;
  std::map<std::pair<int, int>, Cell> expected = {
      {{0, 0}, {"1"}}, {{0, 2}, {"5"}}, {{1, 1}, {"2"}},
      {{2, 3}, {"3"}}, {{3, 4}, {"6"}}, {{4, 4}, {"4"}}};
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) {
      auto it = expected.find({i, j});
      Cell want = it == expected.end() ? Cell{} : it->second;
      o.require(m.cells[i][j] == want,
                "cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                    ") must match");
    }
  o.require(hk::is_isomorphic(hk::poset_from_composition_matrix(m), p),
            "matrix must invert to the poset up to isomorphism");
  for (int n = 1; n <= 6; ++n)
    for (const Poset& q : hk::enumerate_posets(n)) {
      if (!hk::is_two_plus_two_free(q)) continue;
      bool ok = hk::is_isomorphic(
          hk::poset_from_composition_matrix(hk::composition_matrix(q)), q);
      o.require(ok, "round trip must hold for a (2+2)-free poset on " +
                        std::to_string(n) + " elements");
    }
  return o;
}

// ---------------------------------------------------------------------- 6

Outcome criterion6() {
  Outcome o;
  Lattice l = hk::snake_poset("LLRL");
  o.require(l.size() == 12, "word LLRL must give 12 elements");
  std::vector<std::pair<int, int>> drawn = {
      {0, 1}, {0, 2}, {1, 3}, {1, 4},  {2, 3},  {3, 5},  {4, 5},  {4, 6},
      {5, 7}, {5, 8}, {6, 7}, {7, 9},  {7, 10}, {8, 9},  {9, 11}, {10, 11}};
  std::sort(drawn.begin(), drawn.end());
  o.require(l.covers() == drawn, "cover set must match the drawn lattice");
  o.require(hk::is_isomorphic(l.as_poset(),
                              hk::build_lattice(crossing_chains6()).as_poset()),
            "the 12-element lattice must be the ideal lattice of the "
            "6-element width-2 poset");
  std::vector<std::string> words{""};
  std::vector<std::string> frontier{""};
  for (int len = 1; len <= 8; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier) {
      next.push_back(w + "L");
      next.push_back(w + "R");
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  for (const auto& w : words) {
    Lattice s = hk::snake_poset(w);
    auto got = hk::recognize_snake(s);
    o.require(got.has_value() && *got == w,
              "recognition must invert construction for word \"" + w + "\"");
    o.require(s.size() == 2 * static_cast<int>(w.size()) + 4,
              "size must be 2l+4 for word \"" + w + "\"");
    o.require(hk::width(s.as_poset()) == 2, "width must be 2 for \"" + w + "\"");
    o.require(hk::is_bipartite(hk::cocomparability_graph(s)).has_value(),
              "co-comparability graph must be bipartite for \"" + w + "\"");
    if (!o.pass) break;
  }
  o.notes.push_back(std::to_string(words.size()) + " words checked");
  return o;
}

// ---------------------------------------------------------------------- 7

Outcome criterion7() {
  Outcome o;
  std::vector<Poset> pool = {antichain(2),        antichain(3), two_plus_two(),
                             ladder_poset(4),     crossing_chains6()};
  std::vector<Lattice> lattices;
  std::vector<GeneratorSet> gens;
  for (const Poset& p : pool) {
    lattices.push_back(hk::build_lattice(p));
    if (lattices.back().size() > 12) {
      o.require(false, "pool lattice exceeds 12 elements");
      return o;
    }
  }
  for (const Lattice& l : lattices)
    gens.push_back(hk::hibi_generators(l, hk::compatible_order(l)));
  std::uint64_t state = 20260809;
  auto next = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  int verified = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Lattice& l = lattices[trial % lattices.size()];
    const GeneratorSet& gs = gens[trial % lattices.size()];
    int degree = 2 + 2 * static_cast<int>(next() % 3);
    Polynomial f;
    int terms = 1 + static_cast<int>(next() % 6);
    for (int k = 0; k < terms; ++k) {
      Monomial m;
      for (int d = 0; d < degree; ++d)
        m = m * Monomial::variable(static_cast<int>(next() % l.size()));
      Rat c(static_cast<long>(next() % 21) - 10, 1 + static_cast<long>(next() % 6));
      f = f + Polynomial::term(c, m);
    }
    hk::Subduction s = hk::subduction(f, gs);
    if (!(s.q + s.r == f)) {
      o.require(false, "q + r must equal f on trial " + std::to_string(trial));
      break;
    }
    // replay: each recorded step must stand for the leading term it removed
    Polynomial p = f;
    std::size_t step = 0;
    bool replay_ok = true;
    while (!p.is_constant()) {
      auto [c, m] = gs.order.initial_term(p);
      if (step < s.steps.size() && gs.lead_product(s.steps[step].gens) == m &&
          s.steps[step].coeff == c) {
        p = p - c * gs.product(s.steps[step].gens);
        ++step;
      } else if (!hk::represent_initial(m, gs).has_value()) {
        p = p - Polynomial::term(c, m);
      } else {
        replay_ok = false;
        break;
      }
    }
    if (!replay_ok || step != s.steps.size()) {
      o.require(false, "trace must replay exactly on trial " + std::to_string(trial));
      break;
    }
    ++verified;
  }
  o.notes.push_back(std::to_string(verified) + " subductions verified");
  return o;
}

// ---------------------------------------------------------------------- 8

// Test-side oracle: the fibers of the edge-incidence map up to the given
// degree, found by two-pass grouping of raw edge multisets (hash first, then
// exact degree vectors within a hash group). Every pair inside a fiber is a
// kernel binomial; no walk structure, no connectivity, no primitivity.
struct KernelOracle {
  // each fiber: >= 2 edge multisets with one shared degree vector
  std::vector<std::vector<std::vector<int>>> fibers;
  long monomials = 0;
};

KernelOracle kernel_oracle(const CoCompGraph& g, int max_degree) {
  KernelOracle out;
  int e = static_cast<int>(g.edges.size());
  for (int q = 2; q <= max_degree; ++q) {
    std::vector<int> degs(g.n, 0);
    std::vector<int> mono;
    auto key_hash = [&] {
      std::uint64_t h = 1469598103934665603ULL;
      for (int d : degs) {
        h ^= static_cast<std::uint64_t>(d) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
      }
      return h;
    };
    std::vector<std::uint64_t> hashes;
    auto pass1 = [&](auto&& self, int from) -> void {
      if (static_cast<int>(mono.size()) == q) {
        ++out.monomials;
        hashes.push_back(key_hash());
        return;
      }
      for (int i = from; i < e; ++i) {
        mono.push_back(i);
        degs[g.edges[i].first]++;
        degs[g.edges[i].second]++;
        self(self, i);
        degs[g.edges[i].first]--;
        degs[g.edges[i].second]--;
        mono.pop_back();
      }
    };
    pass1(pass1, 0);
    std::sort(hashes.begin(), hashes.end());
    std::set<std::uint64_t> repeated;
    for (std::size_t i = 1; i < hashes.size(); ++i)
      if (hashes[i] == hashes[i - 1]) repeated.insert(hashes[i]);
    hashes.clear();
    hashes.shrink_to_fit();
    if (repeated.empty()) continue;
    std::map<std::uint64_t, std::vector<std::vector<int>>> by_hash;
    auto pass2 = [&](auto&& self, int from) -> void {
      if (static_cast<int>(mono.size()) == q) {
        std::uint64_t h = key_hash();
        if (repeated.count(h)) by_hash[h].push_back(mono);
        return;
      }
      for (int i = from; i < e; ++i) {
        mono.push_back(i);
        degs[g.edges[i].first]++;
        degs[g.edges[i].second]++;
        self(self, i);
        degs[g.edges[i].first]--;
        degs[g.edges[i].second]--;
        mono.pop_back();
      }
    };
    pass2(pass2, 0);
    // split hash groups by the exact degree vector (collisions are possible)
    auto degvec = [&](const std::vector<int>& m) {
      std::vector<int> d(g.n, 0);
      for (int i : m) {
        d[g.edges[i].first]++;
        d[g.edges[i].second]++;
      }
      return d;
    };
    for (auto& [h, monos] : by_hash) {
      std::map<std::vector<int>, std::vector<std::vector<int>>> exact;
      for (auto& m : monos) exact[degvec(m)].push_back(std::move(m));
      for (auto& [d, group] : exact)
        if (group.size() >= 2) out.fibers.push_back(std::move(group));
    }
  }
  return out;
}

std::vector<int> strip_common(std::vector<int>& a, std::vector<int>& b) {
  std::vector<int> ra, rb, common;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      common.push_back(a[i]);
      ++i, ++j;
    } else if (a[i] < b[j]) {
      ra.push_back(a[i++]);
    } else {
      rb.push_back(b[j++]);
    }
  }
  ra.insert(ra.end(), a.begin() + i, a.end());
  rb.insert(rb.end(), b.begin() + j, b.end());
  a = std::move(ra);
  b = std::move(rb);
  return common;
}

bool multiset_divides(const std::vector<int>& small, const std::vector<int>& big) {
  auto it = big.begin();
  for (int x : small) {
    while (it != big.end() && *it < x) ++it;
    if (it == big.end() || *it != x) return false;
    ++it;
  }
  return true;
}

std::vector<int> multiset_subtract(const std::vector<int>& big,
                                   const std::vector<int>& small) {
  std::vector<int> out;
  auto it = small.begin();
  for (int x : big) {
    if (it != small.end() && *it == x)
      ++it;
    else
      out.push_back(x);
  }
  return out;
}

// Oriented moves bucketed by the smallest plus-side edge for quick lookup.
struct MoveTable {
  std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> buckets;
  explicit MoveTable(int edges) : buckets(edges) {}
  void add(const std::vector<int>& plus, const std::vector<int>& minus) {
    if (plus.empty()) return;
    buckets[plus[0]].push_back({plus, minus});
    if (minus.empty()) return;
    buckets[minus[0]].push_back({minus, plus});
  }
};

// Greedy conformal reduction; complete whenever the table holds every
// side-wise minimal kernel element up to the binomial's degree.
bool conformal_reduce(std::vector<int> plus, std::vector<int> minus,
                      const MoveTable& table) {
  strip_common(plus, minus);
  while (!plus.empty()) {
    bool stepped = false;
    std::vector<int> seen_edges;
    for (int e : plus) {
      if (!seen_edges.empty() && seen_edges.back() == e) continue;
      seen_edges.push_back(e);
      for (const auto& [c, d] : table.buckets[e]) {
        if (static_cast<int>(c.size()) > static_cast<int>(plus.size())) continue;
        if (multiset_divides(c, plus) && multiset_divides(d, minus)) {
          plus = multiset_subtract(plus, c);
          minus = multiset_subtract(minus, d);
          stepped = true;
          break;
        }
      }
      if (stepped) break;
    }
    if (!stepped) return false;
  }
  return minus.empty();
}

double estimate_monomials(int edges, int max_degree) {
  double total = 0;
  for (int q = 2; q <= max_degree; ++q) {
    double c = 1;
    for (int i = 0; i < q; ++i) c = c * (edges + q - 1 - i) / (i + 1);
    total += c;
  }
  return total;
}

Outcome criterion8() {
  Outcome o;
  const double kBudget = 1.2e7;  // enumerated edge multisets per side
  int classes = 0, full = 0;
  long fibers_checked = 0, binomials_reduced = 0;
  std::vector<std::string> capped;
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : hk::enumerate_posets(n)) {
      ++classes;
      CoCompGraph g = hk::cocomparability_graph(hk::build_lattice(p));
      int edges = static_cast<int>(g.edges.size());
      int degree = 5;
      while (degree > 2 && estimate_monomials(edges, degree) > kBudget) --degree;
      if (degree < 5) {
        std::ostringstream note;
        note << "n=" << n << " lattice graph with " << edges
             << " edges capped at oracle degree " << degree << " ("
             << estimate_monomials(edges, 5) << " multisets at degree 5)";
        capped.push_back(note.str());
      } else {
        ++full;
      }
      if (edges < 2) continue;  // no fibers possible
      hk::ToricGenerators t =
          hk::toric_generators(g, 2 * degree, static_cast<long>(kBudget) + 1);
      KernelOracle oracle = kernel_oracle(g, degree);
      MoveTable t_moves(edges);
      for (const auto& wb : t.gens) t_moves.add(wb.plus, wb.minus);
      // Fiber membership lookup is affordable on the smaller graphs; balance
      // against the incidence matrix is the membership proof in general
      // (the oracle enumerates every multiset of the degree).
      long members = 0;
      for (const auto& fiber : oracle.fibers) members += fiber.size();
      std::map<std::vector<int>, int> member_fiber;
      if (members <= 2000000) {
        for (std::size_t i = 0; i < oracle.fibers.size(); ++i)
          for (const auto& m : oracle.fibers[i])
            member_fiber[m] = static_cast<int>(i);
      }
      for (const auto& wb : t.gens) {
        std::vector<int> da(g.n, 0), db(g.n, 0);
        for (int e : wb.plus) {
          da[g.edges[e].first]++;
          da[g.edges[e].second]++;
        }
        for (int e : wb.minus) {
          db[g.edges[e].first]++;
          db[g.edges[e].second]++;
        }
        o.require(da == db && wb.plus != wb.minus,
                  "toric binomial must be a nonzero kernel binomial");
        if (!member_fiber.empty()) {
          auto ip = member_fiber.find(wb.plus);
          auto im = member_fiber.find(wb.minus);
          o.require(ip != member_fiber.end() && im != member_fiber.end() &&
                        ip->second == im->second,
                    "toric binomial must appear in one oracle fiber");
        }
      }
      // Every kernel binomial must reduce to zero through the toric
      // generators. Within one fiber the binomials against a fixed
      // representative certify all pairs: a general pair is the difference
      // of two star pairs, and ideal membership is closed under that.
      for (const auto& fiber : oracle.fibers) {
        ++fibers_checked;
        for (std::size_t i = 1; i < fiber.size(); ++i) {
          ++binomials_reduced;
          if (!conformal_reduce(fiber[0], fiber[i], t_moves)) {
            o.require(false, "kernel binomial failed to reduce (n=" +
                                 std::to_string(n) + ", " +
                                 std::to_string(edges) + " edges)");
            return o;
          }
        }
      }
      if (!o.pass) return o;
    }
  std::ostringstream note;
  note << full << "/" << classes << " lattice graphs verified at degree 5; "
       << fibers_checked << " fibers, " << binomials_reduced
       << " kernel binomials reduced";
  o.notes.push_back(note.str());
  for (const auto& c : capped) o.notes.push_back("capped: " + c);
  o.require(capped.empty(),
            "every graph must be verified at degree 5; the capped graphs "
            "exceed any feasible kernel enumeration");
  return o;
}

// ----------------------------------------------------------------------

struct Criterion {
  int number;
  const char* title;
  Outcome (*fn)();
};

const Criterion kCriteria[] = {
    {1, "divisor lattice of 36 fails with the documented witness", criterion1},
    {2, "Boolean lattice of rank 3 fails with the documented witness", criterion2},
    {3, "divisor lattices of 2*3^m pass and match the minor identity", criterion3},
    {4, "freeness, snake recognition and the direct verdict agree to n=6", criterion4},
    {5, "composition matrix golden test and round trip", criterion5},
    {6, "snake lattice fixtures and recognition round trip", criterion6},
    {7, "subduction contract on 1000 randomized inputs", criterion7},
    {8, "toric generators match the kernel-vector oracle to degree 5", criterion8},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      only = std::atoi(argv[++i]);
  }
  bool all_pass = true;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.number != only) continue;
    Timer t;
    Outcome o = c.fn();
    double secs = t.seconds();
    std::ostringstream line;
    line << "[" << c.number << "] " << (o.pass ? "PASS" : "FAIL") << " - "
         << c.title << " (" << std::fixed;
    line.precision(2);
    line << secs << " s)";
    std::cout << line.str() << "\n";
    for (const auto& n : o.notes) std::cout << "      " << n << "\n";
    all_pass &= o.pass;
  }
  return all_pass ? 0 : 1;
}
