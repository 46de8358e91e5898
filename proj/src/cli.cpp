#include "cubicpm/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubicpm/connectivity.hpp"
#include "cubicpm/decomposition.hpp"
#include "cubicpm/families.hpp"
#include "cubicpm/graph_io.hpp"
#include "cubicpm/isomorphism.hpp"
#include "cubicpm/matchings.hpp"
#include "cubicpm/report_io.hpp"
#include "cubicpm/surgery.hpp"
#include "cubicpm/verifier.hpp"

namespace cubicpm {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string graph_file;
  std::string name;
  bool g6 = false;
};

void add_input(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("--graph", o.graph_file, "Edge-list file ('-' for stdin)");
  cmd->add_option("--name", o.name, "Named graph");
  cmd->add_flag("--g6", o.g6, "Input is graph6");
}

Multigraph load_graph(const InputOptions& o, std::istream& in) {
  if (!o.name.empty()) {
    if (!o.graph_file.empty()) throw UsageError("--name and --graph are exclusive");
    return named(o.name);
  }
  std::string text;
  if (o.graph_file.empty() || o.graph_file == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(o.graph_file);
    if (!file) throw UsageError("cannot open " + o.graph_file);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  if (o.g6) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty()) return parse_graph6(line);
    }
    throw GraphError(ErrorKind::ParseError, "empty graph6 input");
  }
  return parse_edge_list(text);
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + s + "', expected LO..HI");
  }
}

std::vector<LemmaId> parse_lemmas(const std::string& spec) {
  if (spec == "all") return all_lemmas();
  std::vector<LemmaId> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_lemma(item));
    } catch (const GraphError&) {
      throw UsageError("unknown lemma '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("--lemma needs at least one id");
  return out;
}

const std::vector<std::pair<std::string, std::string>>& display_names() {
  static const std::vector<std::pair<std::string, std::string>> names = {
      {"theta", "theta"}, {"k4", "K4"},         {"k33", "K33"},
      {"prism", "prism"}, {"cube", "Q3"},       {"petersen", "Petersen"},
      {"heawood", "Heawood"}, {"moebius_kantor", "Moebius-Kantor"}};
  return names;
}

std::string leaf_name(const Multigraph& g) {
  for (const auto& [key, shown] : display_names()) {
    const Multigraph h = named(key);
    if (h.vertex_count() == g.vertex_count() && h.edge_count() == g.edge_count() && find_isomorphism(g, h)) {
      return shown;
    }
  }
  const Multigraph s = simplify(g);
  for (const auto& [key, shown] : display_names()) {
    const Multigraph h = simplify(named(key));
    if (h.vertex_count() == s.vertex_count() && h.edge_count() == s.edge_count() && find_isomorphism(s, h)) {
      return shown + "+multi";
    }
  }
  if (s.vertex_count() == 4 && s.edge_count() == 4 && s.is_connected() && s.max_degree() == 2) {
    return g.is_simple() ? "C4" : "C4+multi";
  }
  return "n=" + std::to_string(g.vertex_count()) + ",m=" + std::to_string(g.edge_count());
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

json edges_json(const Multigraph& g) {
  json arr = json::array();
  for (const Edge& e : g.edges()) arr.push_back({e.a, e.b});
  return arr;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact perfect-matching toolkit for cubic graphs", "cubicpm"};
  app.require_subcommand(1, 1);

  InputOptions input;
  bool as_json = false;
  std::string out_path;

  auto* count = app.add_subcommand("count", "Count perfect matchings");
  add_input(count, input);
  count->add_flag("--json", as_json);

  auto* cuts = app.add_subcommand("cuts", "List small edge cuts");
  add_input(cuts, input);
  int max_size = 3;
  bool cyclic_only = false;
  cuts->add_option("--max-size", max_size, "Largest cut size")->check(CLI::NonNegativeNumber);
  cuts->add_flag("--cyclic", cyclic_only, "Cyclic cuts only");
  cuts->add_flag("--json", as_json);

  auto* decompose_cmd = app.add_subcommand("decompose", "Brick and brace decomposition");
  add_input(decompose_cmd, input);
  decompose_cmd->add_flag("--json", as_json);

  auto* generate = app.add_subcommand("generate", "Generate graphs");
  std::string family = "random";
  std::string n_range;
  std::optional<std::uint64_t> seed;
  int gen_count = 1;
  generate->add_option("--family", family, "random|bipartite|klee|twisted|ladder|named|exhaustive")
      ->check(CLI::IsMember({"random", "bipartite", "klee", "twisted", "ladder", "named", "exhaustive"}));
  generate->add_option("--n", n_range, "Order (ladder: number of rungs)");
  generate->add_option("--seed", seed, "Seed (required for random families)");
  generate->add_option("--count", gen_count, "Number of graphs")->check(CLI::PositiveNumber);
  generate->add_option("--name", input.name, "Named graph");
  generate->add_option("--out", out_path);
  generate->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "Run lemma checks");
  std::string lemma_spec;
  std::optional<int> random_count;
  std::string verify_family;
  int family_count = 0;
  int threads = 1;
  bool bipartite = false;
  bool csv = false;
  bool keep_going = false;
  add_input(verify, input);
  verify->add_option("--lemma", lemma_spec, "ID[,ID...] or all")->required();
  verify->add_option("--random", random_count, "Random corpus size")->check(CLI::PositiveNumber);
  verify->add_option("--n", n_range, "Order range LO..HI");
  verify->add_option("--seed", seed, "First seed");
  verify->add_flag("--bipartite", bipartite, "Bipartite random corpus");
  verify->add_option("--family", verify_family, "twisted|twisted_host")
      ->check(CLI::IsMember({"twisted", "twisted_host"}));
  verify->add_option("--count", family_count, "Family corpus size")->check(CLI::PositiveNumber);
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--json", as_json);
  verify->add_flag("--csv", csv);
  verify->add_flag("--keep-going", keep_going, "Do not stop at the first Fail");
  verify->add_option("--out", out_path);

  auto* report = app.add_subcommand("report", "Summarize JSON reports");
  std::string report_in;
  report->add_option("--in", report_in, "JSON report file ('-' for stdin)");
  report->add_flag("--csv", csv);
  report->add_option("--out", out_path);

  std::vector<std::string> argv_store{"cubicpm"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (count->parsed()) {
      const Multigraph g = load_graph(input, in);
      const std::uint64_t c = count_matchings(g);
      if (as_json) out << json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"count", c}}.dump() << '\n';
      else out << c << '\n';
      return 0;
    }
    if (cuts->parsed()) {
      const Multigraph g = load_graph(input, in);
      const auto list = enumerate_cuts(g, max_size, cyclic_only);
      if (as_json) {
        json arr = json::array();
        for (const auto& c : list) {
          arr.push_back({{"side_a", c.side_a_vertices()},
                         {"edges", c.crossing_edges},
                         {"size", c.size},
                         {"cyclic", c.cyclic}});
        }
        out << arr.dump(2) << '\n';
      } else {
        for (const auto& c : list) {
          out << "size=" << c.size << " cyclic=" << (c.cyclic ? "yes" : "no") << " A=" << json(c.side_a_vertices()).dump()
              << " edges=" << json(c.crossing_edges).dump() << '\n';
        }
      }
      return 0;
    }
    if (decompose_cmd->parsed()) {
      const Multigraph g = load_graph(input, in);
      const auto root = decompose(g);
      const auto ls = leaves(root);
      const int b = brick_count(root);
      if (as_json) {
        json arr = json::array();
        for (const auto& leaf : ls) {
          arr.push_back({{"kind", std::string(to_string(leaf.kind))},
                         {"name", leaf_name(leaf.graph)},
                         {"edges", edges_json(leaf.graph)}});
        }
        out << json{{"leaves", arr}, {"bricks", b}}.dump(2) << '\n';
      } else {
        out << "leaves:";
        for (const auto& leaf : ls) out << " [" << to_string(leaf.kind) << ' ' << leaf_name(leaf.graph) << ']';
        out << "\nb=" << b << '\n';
      }
      return 0;
    }
    if (generate->parsed()) {
      Output sink(out_path, out);
      std::ostream& o = sink.stream();
      const bool needs_seed = family == "random" || family == "bipartite" || family == "klee" || family == "twisted";
      if (needs_seed && !seed) throw UsageError("--seed is required for family " + family);
      int n = 0;
      if (family != "named") {
        if (n_range.empty()) throw UsageError("--n is required");
        n = parse_range(n_range).first;
      }
      json arr = json::array();
      auto emit = [&](const Multigraph& g, const std::string& label, const json& extra) {
        if (as_json) {
          json item{{"label", label}, {"n", g.vertex_count()}, {"edges", edges_json(g)}};
          for (const auto& [k, v] : extra.items()) item[k] = v;
          arr.push_back(std::move(item));
        } else {
          o << "# " << label << '\n' << write_edge_list(g) << '\n';
        }
      };
      if (family == "named") {
        if (input.name.empty()) throw UsageError("--name is required for family named");
        emit(named(input.name), input.name, json::object());
      } else if (family == "ladder") {
        emit(ladder(n), "ladder(" + std::to_string(n) + ")", json::object());
      } else if (family == "exhaustive") {
        int i = 0;
        for (const auto& g : exhaustive_cubic_bridgeless(n)) emit(g, "exhaustive(n=" + std::to_string(n) + ")#" + std::to_string(i++), json::object());
      } else {
        for (int i = 0; i < gen_count; ++i) {
          const std::uint64_t s = *seed + static_cast<std::uint64_t>(i);
          const std::string label = family + "(seed=" + std::to_string(s) + ",n=" + std::to_string(n) + ")";
          if (family == "random") {
            emit(random_cubic_bridgeless(s, n), label, json::object());
          } else if (family == "bipartite") {
            emit(random_bipartite_cubic(s, n), label, json::object());
          } else if (family == "klee") {
            const auto k = random_klee(s, n);
            emit(k.graph, label, json{{"recipe", k.recipe.steps}});
          } else {
            const auto t = random_twisted_net(s, n);
            emit(t.graph, label + ":" + describe(t.recipe), json{{"recipe", describe(t.recipe)}});
          }
        }
      }
      if (as_json) o << arr.dump(2) << '\n';
      return 0;
    }
    if (verify->parsed()) {
      const auto lemmas = parse_lemmas(lemma_spec);
      std::vector<Instance> corpus;
      if (random_count) {
        if (!seed) throw UsageError("--seed is required with --random");
        if (n_range.empty()) throw UsageError("--n is required with --random");
        const auto [lo, hi] = parse_range(n_range);
        RandomCorpus spec;
        spec.first_seed = *seed;
        spec.count = *random_count;
        spec.n_lo = lo;
        spec.n_hi = hi;
        spec.bipartite = bipartite;
        corpus = random_corpus(spec);
      } else if (!verify_family.empty()) {
        if (!seed) throw UsageError("--seed is required with --family");
        if (family_count <= 0) throw UsageError("--count is required with --family");
        const int hi = n_range.empty() ? 16 : parse_range(n_range).second;
        corpus = verify_family == "twisted" ? twisted_corpus(*seed, family_count, hi)
                                            : twisted_host_corpus(*seed, family_count, hi);
      } else {
        const Multigraph g = load_graph(input, in);
        corpus.push_back({input.name.empty() ? (input.graph_file.empty() ? "stdin" : input.graph_file) : input.name, g,
                          std::nullopt});
      }
      SweepOptions options;
      options.threads = threads;
      options.stop_at_fail = !keep_going;
      const auto reports = sweep(lemmas, corpus, options);
      Output sink(out_path, out);
      std::ostream& o = sink.stream();
      if (as_json) o << reports_to_json(reports) << '\n';
      else if (csv) o << reports_to_csv(reports);
      else {
        for (const auto& r : reports) {
          o << to_string(r.lemma) << ' ' << r.instance << ' ' << to_string(r.verdict);
          if (r.hypothesis_met) {
            o << " measured=" << r.measured.str() << ' ' << (r.relation == Relation::AtLeast ? ">=" : "<=") << ' '
              << r.bound.str();
          }
          if (!r.reason.empty()) o << " (" << r.reason << ')';
          o << '\n';
        }
      }
      for (const auto& r : reports) {
        if (r.verdict == Verdict::Fail) {
          err << "FAIL " << to_string(r.lemma) << ' ' << r.instance << ": " << r.reason << '\n' << r.dump;
          return 1;
        }
      }
      return 0;
    }
    if (report->parsed()) {
      std::ostringstream buf;
      if (report_in.empty() || report_in == "-") {
        buf << in.rdbuf();
      } else {
        std::ifstream file(report_in);
        if (!file) throw UsageError("cannot open " + report_in);
        buf << file.rdbuf();
      }
      const auto reports = reports_from_json(buf.str());
      Output sink(out_path, out);
      sink.stream() << (csv ? reports_to_csv(reports) : summary_table(reports));
      for (const auto& r : reports) {
        if (r.verdict == Verdict::Fail) return 1;
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace cubicpm
