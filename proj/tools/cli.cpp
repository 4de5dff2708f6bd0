#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hk/checker.hpp"
#include "hk/json_report.hpp"

namespace hk::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (const char* seed = std::getenv("HK_SEED_DIR")) {
      std::ifstream seeded(std::string(seed) + "/" + path, std::ios::binary);
      if (seeded) {
        std::ostringstream ss;
        ss << seeded.rdbuf();
        return ss.str();
      }
    }
    throw InputError("cannot open input: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Poset load_poset(const std::string& path) { return parse_poset(slurp(path)); }

std::vector<int> parse_extension(const std::string& csv, int n) {
  std::vector<int> ext;
  std::istringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      ext.push_back(std::stoi(tok) - 1);
    } catch (const std::exception&) {
      throw InputError("bad --order entry: " + tok);
    }
  }
  if (static_cast<int>(ext.size()) != n)
    throw InputError("--order must list all " + std::to_string(n) +
                     " lattice elements");
  return ext;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void pretty_check(std::ostream& out, const CheckReport& r) {
  CoCompGraph g = cocomparability_graph(r.lattice);
  out << "poset: " << r.poset.size() << " elements, "
      << r.poset.cover_pairs().size() << " covers\n";
  out << "lattice: " << r.lattice.size() << " elements\n";
  out << "generators: " << r.generator_count << "\n";
  out << "walks processed: " << r.walk_count
      << (r.complete_walk_set ? " (complete even-cycle set)"
                              : " (bounded enumeration)")
      << "\n";
  if (r.verdict.khovanskii) {
    out << "verdict: Khovanskii basis";
    if (r.verdict.up_to_bound) out << " (up to the walk-length bound only)";
    out << "\n";
  } else {
    out << "verdict: NOT a Khovanskii basis\n";
    const auto& w = *r.verdict.witness;
    out << "witness walk:";
    for (int v : w.binomial.walk.verts) out << " " << v + 1;
    out << "\nwitness binomial: " << binomial_text(w.binomial, g) << "\n";
    auto name = [&](int v) { return r.lattice.label(v); };
    out << "remainder: " << polynomial_to_text(w.remainder, r.order, name)
        << "\n";
  }
}

int cmd_check(const std::string& input, const std::string& order_csv,
              int bound, bool full, bool pretty, std::ostream& out,
              std::ostream& err) {
  Poset p = load_poset(input);
  CheckOptions opts;
  opts.bound = bound;
  opts.full = full;
  if (!order_csv.empty()) {
    Lattice l = build_lattice(p);
    opts.extension = parse_extension(order_csv, l.size());
  }
  CheckReport r = khovanskii_check(p, opts);
  if (pretty) {
    pretty_check(out, r);
    err << "elapsed: " << r.elapsed_ms << " ms\n";
  } else {
    emit(out, check_report_json(r));
  }
  return r.verdict.khovanskii ? 0 : 1;
}

int cmd_classify(const std::string& input, bool pretty, std::ostream& out) {
  Poset p = load_poset(input);
  bool two_free = is_two_plus_two_free(p);
  bool three_free = is_three_antichain_free(p);
  auto blocks = ordinal_decompose(p);
  Lattice l = build_lattice(p);
  auto word = recognize_snake(l);
  Json j;
  j["kind"] = "classify";
  j["poset"] = poset_json(p);
  j["two_plus_two_free"] = two_free;
  j["three_antichain_free"] = three_free;
  j["free"] = two_free && three_free;
  j["ordinal_irreducible"] = blocks.size() <= 1;
  j["summands"] = blocks.size();
  j["lattice_size"] = l.size();
  if (word)
    j["snake_word"] = *word;
  else
    j["snake_word"] = nullptr;
  j["predicted_khovanskii"] = predict_khovanskii(p);
  if (pretty) {
    out << "elements: " << p.size() << "\n";
    out << "(2+2)-free: " << (two_free ? "yes" : "no") << "\n";
    out << "(1+1+1)-free: " << (three_free ? "yes" : "no") << "\n";
    out << "ordinal summands: " << blocks.size() << "\n";
    out << "lattice size: " << l.size() << "\n";
    out << "snake word: " << (word ? ("\"" + *word + "\"") : "none") << "\n";
    out << "predicted Khovanskii: "
        << (predict_khovanskii(p) ? "yes" : "no") << "\n";
  } else {
    emit(out, j);
  }
  return 0;
}

int cmd_lattice(const std::string& input, bool cocomp, bool pretty, bool dot,
                std::ostream& out) {
  Poset p = load_poset(input);
  Lattice l = build_lattice(p);
  if (cocomp) {
    CoCompGraph g = cocomparability_graph(l);
    if (dot) {
      out << to_dot(g);
      return 0;
    }
    if (pretty) {
      out << "co-comparability graph: " << g.n << " vertices, "
          << g.edges.size() << " edges\n";
      for (const auto& [u, v] : g.edges)
        out << "  {" << u + 1 << "," << v + 1 << "}  " << g.vlabels[u] << " -- "
            << g.vlabels[v] << "\n";
      return 0;
    }
    Json j;
    j["kind"] = "cocomparability_graph";
    j["poset"] = poset_json(p);
    j["vertices"] = g.vlabels;
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges)
      edges.push_back(Json::array({u + 1, v + 1}));
    j["edges"] = edges;
    j["bipartite"] = is_bipartite(g).has_value();
    emit(out, j);
    return 0;
  }
  if (dot) {
    out << lattice_dot(l);
    return 0;
  }
  if (pretty) {
    out << "lattice of " << l.size() << " ideals\n";
    for (int i = 0; i < l.size(); ++i)
      out << "  " << i + 1 << ": " << l.label(i) << "\n";
    return 0;
  }
  Json j;
  j["kind"] = "lattice";
  j["poset"] = poset_json(p);
  j["size"] = l.size();
  j["elements"] = l.labels();
  Json covers = Json::array();
  for (const auto& [a, b] : l.covers())
    covers.push_back(Json::array({a + 1, b + 1}));
  j["covers"] = covers;
  emit(out, j);
  return 0;
}

int cmd_compmat(const std::string& input, bool pretty, std::ostream& out) {
  Poset p = load_poset(input);
  CompositionMatrix m = composition_matrix(p);
  if (pretty) {
    for (const auto& row : m.cells) {
      for (const auto& cell : row) {
        std::string text = "{";
        for (std::size_t i = 0; i < cell.size(); ++i)
          text += (i ? "," : "") + cell[i];
        text += "}";
        out << text << " ";
      }
      out << "\n";
    }
    return 0;
  }
  emit(out, composition_matrix_json(m));
  return 0;
}

int cmd_snake(const std::string& word, const std::string& input, bool pretty,
              bool dot, std::ostream& out) {
  if (!word.empty() && !input.empty())
    throw InputError("give either --word or a poset file, not both");
  if (word.empty() && input.empty())
    throw InputError("snake needs --word or a poset file");
  if (!word.empty()) {
    Lattice l = snake_poset(word == "e" ? "" : word);
    if (dot) {
      out << lattice_dot(l);
      return 0;
    }
    if (pretty) {
      out << "snake lattice of word \"" << word << "\": " << l.size()
          << " elements\n";
      return 0;
    }
    Json j;
    j["kind"] = "snake";
    j["word"] = word == "e" ? "" : word;
    j["size"] = l.size();
    j["elements"] = l.labels();
    Json covers = Json::array();
    for (const auto& [a, b] : l.covers())
      covers.push_back(Json::array({a + 1, b + 1}));
    j["covers"] = covers;
    emit(out, j);
    return 0;
  }
  Poset p = load_poset(input);
  auto got = recognize_snake(build_lattice(p));
  if (pretty) {
    out << "snake word: " << (got ? ("\"" + *got + "\"") : "none") << "\n";
  } else {
    Json j;
    j["kind"] = "snake";
    j["poset"] = poset_json(p);
    if (got)
      j["word"] = *got;
    else
      j["word"] = nullptr;
    emit(out, j);
  }
  return 0;
}

int cmd_sweep(int max_n, int jobs, bool pretty, std::ostream& out,
              std::ostream& err) {
  SweepReport r = theorem_sweep(max_n, jobs);
  if (pretty) {
    for (const auto& row : r.rows) {
      out << "n=" << row.n << " id=" << row.index
          << (row.irreducible ? " irreducible" : " reducible  ")
          << " free=" << row.free << " snake="
          << (row.snake ? ("\"" + *row.snake + "\"") : std::string("-"))
          << " direct=" << row.direct << " predicted=" << row.predicted
          << (row.agree ? "" : "  <-- DISAGREES") << "\n";
    }
    out << (r.all_agree ? "all rows agree\n" : "DISAGREEMENT FOUND\n");
    if (r.first_disagreement) err << *r.first_disagreement;
  } else {
    emit(out, sweep_report_json(r));
  }
  return r.all_agree ? 0 : 1;
}

int cmd_orders(const std::string& input, int k, bool pretty,
               std::ostream& out) {
  Poset p = load_poset(input);
  OrderExperiment e = order_independence_experiment(p, k);
  if (pretty) {
    out << "distinct compatible orders tried: " << e.extensions.size() << "\n";
    for (std::size_t i = 0; i < e.verdicts.size(); ++i)
      out << "  order " << i + 1 << ": "
          << (e.verdicts[i] ? "pass" : "fail") << "\n";
    out << (e.all_same ? "verdicts agree\n" : "verdicts DIFFER\n");
  } else {
    emit(out, order_experiment_json(e));
  }
  return 0;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Khovanskii basis checker for distributive lattice binomials"};
  app.require_subcommand(1);
  bool pretty = false, dot = false, full = false;
  bool json = false;
  std::string order_csv;
  int bound = 0;
  int max_n = 5;
  int jobs = 1;
  int k = 5;
  std::string input, word;
  app.add_flag("--json", json, "machine-readable output (default)");
  app.add_flag("--pretty", pretty, "human-readable output");
  app.add_flag("--dot", dot, "Graphviz output where supported");

  auto* check = app.add_subcommand("check", "decide the Khovanskii property");
  check->add_option("input", input, "poset file")->required();
  check->add_option("--order", order_csv,
                    "linear extension as comma-separated 1-based lattice indices");
  check->add_option("--bound", bound, "even walk-length bound");
  check->add_flag("--full", full, "process every walk, no short-circuit");

  auto* classify = app.add_subcommand("classify", "combinatorial classification");
  classify->add_option("input", input, "poset file")->required();

  bool cocomp = false;
  auto* lattice = app.add_subcommand("lattice", "the lattice of poset ideals");
  lattice->add_option("input", input, "poset file")->required();
  lattice->add_flag("--cocomp", cocomp, "emit the co-comparability graph instead");

  auto* compmat = app.add_subcommand("compmat", "composition matrix");
  compmat->add_option("input", input, "poset file")->required();

  auto* snake = app.add_subcommand("snake", "build or recognize snake lattices");
  snake->add_option("--word", word, "word over {L,R}; 'e' for the empty word");
  snake->add_option("input", input, "poset file to recognize");

  auto* sweep = app.add_subcommand("sweep", "cross-validate all small posets");
  sweep->add_option("--max-n", max_n, "largest poset size (default 5)");
  sweep->add_option("--jobs", jobs, "worker threads");

  auto* orders = app.add_subcommand("orders", "verdicts across compatible orders");
  orders->add_option("input", input, "poset file")->required();
  orders->add_option("-k,--count", k, "number of distinct orders (default 5)");

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed())
      return cmd_check(input, order_csv, bound, full, pretty, out, err);
    if (classify->parsed()) return cmd_classify(input, pretty, out);
    if (lattice->parsed()) return cmd_lattice(input, cocomp, pretty, dot, out);
    if (compmat->parsed()) return cmd_compmat(input, pretty, out);
    if (snake->parsed()) return cmd_snake(word, input, pretty, dot, out);
    if (sweep->parsed()) return cmd_sweep(max_n, jobs, pretty, out, err);
    if (orders->parsed()) return cmd_orders(input, k, pretty, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PosetParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PosetError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::string* out_str,
        std::string* err_str) {
  if (out_str && err_str) {
    std::ostringstream out, err;
    int code = run_impl(args, out, err);
    *out_str = out.str();
    *err_str = err.str();
    return code;
  }
  return run_impl(args, std::cout, std::cerr);
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, nullptr, nullptr);
}

}  // namespace hk::cli
