#pragma once

#include <atomic>
#include <chrono>
#include <future>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hk/classify.hpp"
#include "hk/graph.hpp"
#include "hk/hibi.hpp"
#include "hk/lattice.hpp"
#include "hk/poset.hpp"
#include "hk/poset_enum.hpp"
#include "hk/toric.hpp"

namespace hk {

enum class VerdictMethod { direct, predicted, snake };

inline const char* to_string(VerdictMethod m) {
  switch (m) {
    case VerdictMethod::direct: return "direct";
    case VerdictMethod::predicted: return "predicted";
    case VerdictMethod::snake: return "snake";
  }
  return "?";
}

struct Witness {
  WalkBinomial binomial;
  Polynomial remainder;
};

struct Verdict {
  bool khovanskii = true;
  VerdictMethod method = VerdictMethod::direct;
  // A pass obtained from a bounded non-bipartite walk enumeration only
  // certifies walks up to the bound.
  bool up_to_bound = false;
  std::optional<Witness> witness;
};

struct WalkRecord {
  WalkBinomial binomial;
  bool reduced = false;
  int steps = 0;
  std::vector<SubductionStep> trace;
};

struct CheckReport {
  Poset poset;
  Lattice lattice;
  MonomialOrder order;
  int generator_count = 0;
  int walk_count = 0;           // walks actually processed
  bool complete_walk_set = false;  // bipartite: the cycle list is everything
  Verdict verdict;
  std::vector<WalkRecord> walks;
  double elapsed_ms = 0.0;
};

struct CheckOptions {
  std::optional<std::vector<int>> extension;  // linear extension override
  int bound = 0;            // walk-length bound; 0 = twice the edge count
  bool full = false;        // keep going after the first failure
  bool keep_traces = true;
  long toric_budget = 20000000;
  long subduction_cap = 1000000;
};

namespace detail {

// Processing order for same-length cycles: lexicographic on the reversed
// representative (min vertex, then its larger cycle-neighbor). This is the
// order four_cycle_stream emits, and it makes the recorded witnesses match
// the classical worked examples.
inline std::vector<int> reversed_rep(const std::vector<int>& asc_cycle) {
  std::vector<int> key = asc_cycle;
  std::reverse(key.begin() + 1, key.end());
  return key;
}

struct CheckDriver {
  const CheckOptions& opts;
  const GeneratorSet& gs;
  CheckReport& report;

  // Returns false to stop the walk stream.
  bool process(WalkBinomial wb) {
    Polynomial p = substitute(wb, gs);
    Subduction s = subduction(p, gs, opts.subduction_cap);
    WalkRecord rec;
    rec.binomial = std::move(wb);
    rec.reduced = s.reduced_to_constant();
    rec.steps = static_cast<int>(s.steps.size());
    if (opts.keep_traces) rec.trace = s.steps;
    ++report.walk_count;
    bool failed = !rec.reduced;
    if (failed && !report.verdict.witness) {
      report.verdict.khovanskii = false;
      report.verdict.witness = Witness{rec.binomial, s.r};
    }
    report.walks.push_back(std::move(rec));
    return !(failed && !opts.full);
  }
};

}  // namespace detail

// The direct criterion: every toric generator of the co-comparability edge
// ring must subduce to a constant after substituting the lattice binomials.
// Walks are processed ascending by length and the first failure wins unless
// full mode is on.
inline CheckReport khovanskii_check(const Poset& p, CheckOptions opts = {}) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport report;
  report.poset = p;
  report.lattice = build_lattice(p);
  const Lattice& l = report.lattice;
  report.order = opts.extension ? order_from_extension(l, *opts.extension)
                                : compatible_order(l);
  GeneratorSet gs = hibi_generators(l, report.order);
  report.generator_count = gs.size();
  CoCompGraph g = cocomparability_graph(l);
  report.verdict.method = VerdictMethod::direct;
  detail::CheckDriver driver{opts, gs, report};

  if (is_bipartite(g)) {
    report.complete_walk_set = true;
    auto cycles = even_cycles(g);
    std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return detail::reversed_rep(a) < detail::reversed_rep(b);
    });
    for (const auto& cyc : cycles)
      if (!driver.process(binomial_of_walk(g, cyc))) break;
  } else {
    bool stopped = false;
    four_cycle_stream(g, [&](std::vector<int> cyc) {
      bool keep = driver.process(binomial_of_walk(g, std::move(cyc)));
      stopped = !keep;
      return keep;
    });
    if (!stopped) {
      // Everything quadratic reduced; enumerate the longer bounded walks.
      ToricGenerators toric = toric_generators(g, opts.bound, opts.toric_budget);
      std::vector<WalkBinomial> rest;
      for (auto& wb : toric.gens)
        if (wb.degree() > 2) rest.push_back(std::move(wb));
      std::sort(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::tie(a.plus, a.minus) < std::tie(b.plus, b.minus);
      });
      for (auto& wb : rest)
        if (!driver.process(std::move(wb))) break;
    }
    report.verdict.up_to_bound = report.verdict.khovanskii;
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

// Same verdict computed through the minimal sublattice of each walk: the
// full generator set reduces a substituted walk binomial exactly when the
// walk's own sublattice generators do.
inline CheckReport check_via_sublattices(const Poset& p, CheckOptions opts = {}) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport report;
  report.poset = p;
  report.lattice = build_lattice(p);
  const Lattice& l = report.lattice;
  report.order = opts.extension ? order_from_extension(l, *opts.extension)
                                : compatible_order(l);
  GeneratorSet gs = hibi_generators(l, report.order);
  report.generator_count = gs.size();
  CoCompGraph g = cocomparability_graph(l);
  report.verdict.method = VerdictMethod::direct;

  auto process = [&](const WalkBinomial& wb) -> bool {
    std::vector<int> seed(wb.walk.verts.begin(), wb.walk.verts.end());
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    Lattice sub = minimal_sublattice(l, seed);
    std::vector<int> to_sub(l.size(), -1);
    for (int i = 0; i < sub.size(); ++i)
      to_sub[l.index_of_members(sub.members(i))] = i;
    std::vector<int> sub_ext(sub.size());
    std::iota(sub_ext.begin(), sub_ext.end(), 0);
    GeneratorSet sub_gs = hibi_generators(sub, order_from_extension(sub, sub_ext));
    CoCompGraph sub_g = cocomparability_graph(sub);
    std::vector<int> verts;
    for (int v : wb.walk.verts) verts.push_back(to_sub[v]);
    WalkBinomial sub_wb = binomial_of_walk(sub_g, verts);
    Subduction s = subduction(substitute(sub_wb, sub_gs), sub_gs,
                              opts.subduction_cap);
    WalkRecord rec;
    rec.binomial = wb;
    rec.reduced = s.reduced_to_constant();
    rec.steps = static_cast<int>(s.steps.size());
    if (opts.keep_traces) rec.trace = s.steps;
    ++report.walk_count;
    bool failed = !rec.reduced;
    if (failed && !report.verdict.witness) {
      report.verdict.khovanskii = false;
      report.verdict.witness = Witness{wb, s.r};
    }
    report.walks.push_back(std::move(rec));
    return !(failed && !opts.full);
  };

  if (is_bipartite(g)) {
    report.complete_walk_set = true;
    auto cycles = even_cycles(g);
    std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return detail::reversed_rep(a) < detail::reversed_rep(b);
    });
    for (const auto& cyc : cycles)
      if (!process(binomial_of_walk(g, cyc))) break;
  } else {
    bool stopped = false;
    four_cycle_stream(g, [&](std::vector<int> cyc) {
      bool keep = process(binomial_of_walk(g, std::move(cyc)));
      stopped = !keep;
      return keep;
    });
    if (!stopped) {
      ToricGenerators toric = toric_generators(g, opts.bound, opts.toric_budget);
      std::vector<WalkBinomial> rest;
      for (auto& wb : toric.gens)
        if (wb.degree() > 2) rest.push_back(std::move(wb));
      std::sort(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::tie(a.plus, a.minus) < std::tie(b.plus, b.minus);
      });
      for (const auto& wb : rest)
        if (!process(wb)) break;
    }
    report.verdict.up_to_bound = report.verdict.khovanskii;
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

struct SweepRow {
  int n = 0;
  int index = 0;  // within the size class
  std::string poset_text;
  bool irreducible = false;
  bool free = false;
  std::optional<std::string> snake;
  bool direct = false;
  bool direct_up_to_bound = false;
  bool predicted = false;
  bool agree = false;
};

struct SweepReport {
  int n_max = 0;
  std::vector<SweepRow> rows;
  bool all_agree = true;
  std::optional<std::string> first_disagreement;
};

namespace detail {

inline SweepRow sweep_row(const Poset& p, int n, int index) {
  SweepRow row;
  row.n = n;
  row.index = index;
  row.poset_text = serialize_poset(p);
  row.irreducible = is_ordinal_irreducible(p);
  row.free = is_free_pair(p);
  row.predicted = predict_khovanskii(p);
  if (row.irreducible) {
    auto word = recognize_snake(build_lattice(p));
    if (word) row.snake = *word;
  }
  CheckOptions opts;
  opts.keep_traces = false;
  CheckReport direct = khovanskii_check(p, opts);
  row.direct = direct.verdict.khovanskii;
  row.direct_up_to_bound = direct.verdict.up_to_bound;
  if (row.irreducible)
    row.agree = row.free == row.snake.has_value() && row.free == row.direct &&
                row.predicted == row.direct && !row.direct_up_to_bound;
  else
    row.agree = row.predicted == row.direct;
  return row;
}

}  // namespace detail

// Every unlabeled poset on 2..n_max elements: freeness, snake recognition on
// the ideal lattice, and the direct subduction verdict must be one and the
// same story. Rows are emitted in canonical enumeration order regardless of
// the number of workers.
inline SweepReport theorem_sweep(int n_max, int jobs = 1,
                                 int enumeration_bound = 7) {
  SweepReport report;
  report.n_max = n_max;
  std::vector<std::pair<Poset, std::pair<int, int>>> tasks;
  for (int n = 2; n <= n_max; ++n) {
    auto classes = enumerate_posets(n, enumeration_bound);
    for (std::size_t i = 0; i < classes.size(); ++i)
      tasks.emplace_back(classes[i], std::make_pair(n, static_cast<int>(i)));
  }
  report.rows.resize(tasks.size());
  if (jobs <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t)
      report.rows[t] = detail::sweep_row(tasks[t].first, tasks[t].second.first,
                                         tasks[t].second.second);
  } else {
    std::vector<std::future<void>> workers;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < jobs; ++w)
      workers.push_back(std::async(std::launch::async, [&] {
        for (;;) {
          std::size_t t = next.fetch_add(1);
          if (t >= tasks.size()) return;
          report.rows[t] = detail::sweep_row(
              tasks[t].first, tasks[t].second.first, tasks[t].second.second);
        }
      }));
    for (auto& w : workers) w.get();
  }
  for (const auto& row : report.rows)
    if (!row.agree && !report.first_disagreement) {
      report.all_agree = false;
      report.first_disagreement = row.poset_text;
    }
  return report;
}

struct OrderExperiment {
  std::vector<std::vector<int>> extensions;
  std::vector<bool> verdicts;
  bool all_same = true;
};

// Reruns the direct check under several distinct compatible orders (distinct
// linear extensions). Evidence, not an invariant.
inline OrderExperiment order_independence_experiment(const Poset& p, int k) {
  if (k < 1) throw std::invalid_argument("need at least one order");
  OrderExperiment out;
  Lattice l = build_lattice(p);
  out.extensions = sample_linear_extensions(l, k);
  for (const auto& ext : out.extensions) {
    CheckOptions opts;
    opts.extension = ext;
    opts.keep_traces = false;
    out.verdicts.push_back(khovanskii_check(p, opts).verdict.khovanskii);
  }
  for (bool v : out.verdicts)
    if (v != out.verdicts[0]) out.all_same = false;
  return out;
}

}  // namespace hk
