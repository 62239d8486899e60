#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "barbed/errors.hpp"
#include "barbed/graph_io.hpp"
#include "barbed/json_io.hpp"
#include "barbed/oracle.hpp"
#include "barbed/theory.hpp"

namespace barbed::cli {

namespace {

struct Globals {
  std::string graph_path;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string format = "json";
  bool verbose = false;
};

struct CorpusFlags {
  std::size_t count = 0;
  CorpusParams params;
};

/// A distance source given on the command line: weight, edge or pcf:<file>.
struct DistanceSpec {
  std::string text = "weight";
};

struct Loaded {
  PathChoiceFunction pcf;
  DistanceMatrix distance;
  std::string label;
};

class Output {
 public:
  Output(const Globals& globals, std::ostream& out) : globals_(globals), out_(out) {}

  bool json() const { return globals_.format == "json"; }

  void emit(const Json& doc, const std::string& table) {
    const std::string text = json() ? doc.dump(2) + "\n" : table;
    if (globals_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(globals_.out_path, std::ios::binary);
    if (!file) throw Error("cannot write output file '" + globals_.out_path + "'");
    file << text;
  }

 private:
  const Globals& globals_;
  std::ostream& out_;
};

WeightedGraph load_graph(const Globals& g) {
  if (g.graph_path.empty()) throw Error("--graph is required for this command");
  return read_graph_file(g.graph_path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Loaded load_distance(const WeightedGraph& g, const std::string& spec) {
  if (spec == "weight") return {extract_paths(g, PathMode::Weight), d_weight(g), "weight"};
  if (spec == "edge") return {extract_paths(g, PathMode::Edge), d_edge(g), "edge"};
  if (spec.rfind("pcf:", 0) == 0) {
    const std::string path = spec.substr(4);
    auto pcf = parse_pcf_json(read_text(path), g);
    auto d = distance_from_paths(g, pcf, path);
    return {std::move(pcf), std::move(d), path};
  }
  throw Error("distance must be 'weight', 'edge' or 'pcf:<file>', got '" + spec + "'");
}

SimplexOrdering parse_ordering(const WeightedGraph& g, const std::string& text) {
  if (text == "lex") return SimplexOrdering::lexicographic();
  if (text == "mst") return canonical_ordering(g.vertex_count(), kruskal_mst(g));
  if (text.rfind("shuffle:", 0) == 0) {
    try {
      return SimplexOrdering::shuffled(std::stoull(text.substr(8)));
    } catch (const std::exception&) {
      throw Error("--ordering shuffle:<seed> needs an unsigned integer seed");
    }
  }
  throw Error("--ordering must be 'lex', 'mst' or 'shuffle:<seed>'");
}

void add_corpus_flags(CLI::App* cmd, CorpusFlags& flags) {
  cmd->add_option("--random", flags.count, "Run over this many seeded random graphs instead of --graph");
  cmd->add_option("--n-min", flags.params.n_min, "Smallest vertex count")->capture_default_str();
  cmd->add_option("--n-max", flags.params.n_max, "Largest vertex count")->capture_default_str();
  cmd->add_option("--p-min", flags.params.p_min, "Smallest extra-edge probability")->capture_default_str();
  cmd->add_option("--p-max", flags.params.p_max, "Largest extra-edge probability")->capture_default_str();
  cmd->add_option("--w-min", flags.params.w_min, "Smallest edge weight")->capture_default_str();
  cmd->add_option("--w-max", flags.params.w_max, "Largest edge weight")->capture_default_str();
}

std::string matrix_table(const DistanceMatrix& d) {
  std::ostringstream os;
  os << to_string(d.provenance()) << " distance (" << d.size() << " vertices)\n";
  for (Vertex v = 0; v < d.size(); ++v) {
    for (Vertex w = 0; w < d.size(); ++w) os << std::setw(8) << format_number(d(v, w));
    os << "\n";
  }
  return os.str();
}

std::string bar_text(const Bar& b) {
  std::string s = "[" + format_number(b.birth) + ", " + (b.death == kInfinity ? "inf" : format_number(b.death)) + "]";
  if (!b.birth_simplex.empty()) {
    s += "  birth simplex {";
    for (std::size_t i = 0; i < b.birth_simplex.size(); ++i) s += (i ? "," : "") + std::to_string(b.birth_simplex[i]);
    s += "}";
  }
  return s;
}

std::string barcode_table(const Barcode& code) {
  std::ostringstream os;
  os << "bcd_" << code.k << " (" << code.size() << " bars)\n";
  for (const Bar& b : code.bars) os << "  " << bar_text(b) << "\n";
  return os.str();
}

std::string path_text(const Path& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "-" : "") + std::to_string(p[i]);
  return s;
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_distances(const Globals& gl, Output& out, const std::string& mode) {
  const auto g = load_graph(gl);
  Json doc;
  std::string table;
  if (mode == "weight" || mode == "both") {
    const auto d = d_weight(g);
    doc["weight"] = to_json(d);
    doc["weight_axioms"] = to_json(metric_axioms(d));
    table += matrix_table(d);
  }
  if (mode == "edge" || mode == "both") {
    const auto d = d_edge(g);
    doc["edge"] = to_json(d);
    doc["edge_axioms"] = to_json(metric_axioms(d));
    table += matrix_table(d);
  }
  if (mode == "both") {
    const auto order = compare_pointwise(d_weight(g), d_edge(g));
    doc["comparison"] = to_string(order);
    table += "weight vs edge: " + to_string(order) + "\n";
  }
  if (doc.empty()) throw Error("--mode must be weight, edge or both");
  out.emit(doc, table);
  return kOk;
}

int cmd_barcode(const Globals& gl, Output& out, const std::string& distance, std::size_t k,
                std::optional<std::size_t> max_dim, const std::string& ordering_text, std::size_t budget) {
  const auto g = load_graph(gl);
  const auto loaded = load_distance(g, distance);
  const auto complex = build_filtration(loaded.distance, max_dim.value_or(k + 1), parse_ordering(g, ordering_text), budget);
  const auto code = extract_barcode(reduce(complex), complex, k);
  Json doc = to_json(code);
  doc["distance"] = loaded.label;
  doc["ordering"] = complex.ordering().describe();
  out.emit(doc, barcode_table(code));
  return kOk;
}

int cmd_enumerate(const Globals& gl, Output& out, const std::string& filter_text, std::size_t cap) {
  const auto g = load_graph(gl);
  PcfEnumerationOptions options;
  if (filter_text == "none") options.filter = DominanceFilter::None;
  else if (filter_text == "weight") options.filter = DominanceFilter::Weight;
  else if (filter_text == "cost") options.filter = DominanceFilter::Cost;
  else throw Error("--filter must be none, weight or cost");
  options.max_vertices = cap;
  const auto pcfs = enumerate_pcfs(g, options);

  Json list = Json::array();
  std::ostringstream table;
  table << pcfs.size() << " path choice functions\n";
  for (std::size_t i = 0; i < pcfs.size(); ++i) {
    const auto dom = classify_dominance(g, pcfs[i]);
    Json maximal = Json::array();
    table << "#" << i << " maximal paths:";
    for (const auto& p : maximal_paths(pcfs[i])) {
      maximal.push_back(p);
      table << " " << path_text(p);
    }
    table << "  weight-dominated=" << dom.weight_dominated << " cost-dominated=" << dom.cost_dominated << "\n";
    list.push_back(Json{{"index", i},
                        {"maximal_paths", std::move(maximal)},
                        {"weight_dominated", dom.weight_dominated},
                        {"cost_dominated", dom.cost_dominated},
                        {"distance", to_json(distance_from_paths(g, pcfs[i]))["values"]},
                        {"paths", to_json(pcfs[i], g)["paths"]}});
  }
  out.emit(Json{{"count", pcfs.size()}, {"filter", filter_text}, {"pcfs", std::move(list)}}, table.str());
  return kOk;
}

int cmd_classify(const Globals& gl, Output& out, const std::string& distance) {
  const auto g = load_graph(gl);
  PathChoiceFunction pcf;
  if (distance.rfind("pcf:", 0) == 0) {
    // Parse without requiring consistency so the report can show violations.
    pcf = parse_pcf_json(read_text(distance.substr(4)), g);
  } else {
    pcf = load_distance(g, distance).pcf;
  }
  const auto consistency = check_consistency(pcf);
  Json doc{{"distance", distance}, {"consistency", to_json(consistency)}};
  std::ostringstream table;
  table << "consistent: " << consistency.ok << " (" << consistency.violations.size() << " violations)\n";
  if (consistency.ok) {
    const auto dom = classify_dominance(g, pcf);
    doc["dominance"] = to_json(dom);
    table << "weight-dominated: " << dom.weight_dominated << "\ncost-dominated: " << dom.cost_dominated << "\n";
  }
  out.emit(doc, table.str());
  return kOk;
}

int cmd_completion(const Globals& gl, Output& out, const std::string& distance) {
  const auto g = load_graph(gl);
  const auto loaded = load_distance(g, distance);
  const auto kg = graph_completion(g, loaded.pcf);
  out.emit(Json{{"distance", loaded.label}, {"completion", to_json(kg)}}, serialize_graph(kg));
  return kOk;
}

int cmd_mst_check(const Globals& gl, Output& out, const std::string& distance, const CorpusFlags& corpus) {
  if (corpus.count > 0) {
    if (distance != "weight" && distance != "edge") throw Error("--random needs --distance weight or edge");
    CorpusParams params = corpus.params;
    params.seed = gl.seed;
    std::size_t violations = 0;
    Json failures = Json::array();
    for (std::size_t i = 0; i < corpus.count; ++i) {
      const auto g = corpus_graph(params, i);
      const auto report = check_mst_invariance(g, load_distance(g, distance).pcf);
      if (report.weight_dominated && !report.equal) {
        ++violations;
        failures.push_back(Json{{"index", i}, {"graph", serialize_graph(g)}, {"report", to_json(report)}});
      }
    }
    out.emit(Json{{"corpus", to_json(params)}, {"count", corpus.count}, {"distance", distance},
                  {"violations", violations}, {"failures", std::move(failures)}},
             std::to_string(corpus.count) + " graphs, " + std::to_string(violations) + " violations\n");
    return violations == 0 ? kOk : kViolation;
  }
  const auto g = load_graph(gl);
  const auto loaded = load_distance(g, distance);
  const auto report = check_mst_invariance(g, loaded.pcf);
  std::ostringstream table;
  table << "|MST(G)| = " << report.mst_g.size() << ", |MST(K^g)| = " << report.mst_kg.size()
        << ", equal = " << report.equal << ", weight-dominated = " << report.weight_dominated << "\n";
  out.emit(to_json(report), table.str());
  return report.weight_dominated && !report.equal ? kViolation : kOk;
}

int cmd_verify_injection(const Globals& gl, Output& out, const std::string& small, const std::string& large,
                         const CorpusFlags& corpus) {
  if (corpus.count > 0) {
    for (const auto& s : {small, large}) {
      if (s != "weight" && s != "edge") throw Error("--random needs --small/--large of weight or edge");
    }
    CorpusParams params = corpus.params;
    params.seed = gl.seed;
    std::size_t failed = 0, matched = 0, unmatched = 0;
    Json failures = Json::array();
    for (std::size_t i = 0; i < corpus.count; ++i) {
      const auto g = corpus_graph(params, i);
      const auto report = verify_injection(g, load_distance(g, small).pcf, load_distance(g, large).pcf, small, large);
      matched += report.matched.size();
      unmatched += report.unmatched_target.size();
      if (!report.ok) {
        ++failed;
        failures.push_back(Json{{"index", i}, {"graph", serialize_graph(g)}, {"report", to_json(report)}});
      }
    }
    std::ostringstream table;
    table << corpus.count << " graphs, " << matched << " matched bars, " << unmatched << " unmatched target bars, "
          << failed << " failures\n";
    out.emit(Json{{"corpus", to_json(params)}, {"count", corpus.count}, {"small", small}, {"large", large},
                  {"matched_bars", matched}, {"unmatched_target_bars", unmatched}, {"failed", failed},
                  {"failures", std::move(failures)}},
             table.str());
    return failed == 0 ? kOk : kViolation;
  }
  const auto g = load_graph(gl);
  const auto s = load_distance(g, small);
  const auto l = load_distance(g, large);
  const auto report = verify_injection(g, s.pcf, l.pcf, s.label, l.label);
  std::ostringstream table;
  table << "source " << report.source_label << ":\n" << barcode_table(report.source_barcode);
  table << "target " << report.target_label << ":\n" << barcode_table(report.target_barcode);
  for (const auto& m : report.matched) table << "  " << bar_text(m.source) << "  ->  " << bar_text(m.target) << "\n";
  for (const auto& f : report.failures)
    table << "  FAIL {" << f.birth_edge.first << "," << f.birth_edge.second << "}: " << to_string(f.reason) << "\n";
  table << (report.ok ? "injection verified\n" : "injection FAILED\n");
  out.emit(to_json(report), table.str());
  return report.ok ? kOk : kViolation;
}

int cmd_audit(const Globals& gl, Output& out, const std::string& distance, const CorpusFlags& corpus) {
  auto one = [&](const WeightedGraph& g) { return audit_birth_edges(g, load_distance(g, distance).pcf); };
  if (corpus.count > 0) {
    if (distance != "weight" && distance != "edge") throw Error("--random needs --distance weight or edge");
    CorpusParams params = corpus.params;
    params.seed = gl.seed;
    std::size_t failed = 0;
    Json failures = Json::array();
    for (std::size_t i = 0; i < corpus.count; ++i) {
      const auto g = corpus_graph(params, i);
      const auto audit = one(g);
      if (!audit.ok) {
        ++failed;
        failures.push_back(Json{{"index", i}, {"graph", serialize_graph(g)}, {"audit", to_json(audit)}});
      }
    }
    out.emit(Json{{"corpus", to_json(params)}, {"count", corpus.count}, {"distance", distance}, {"failed", failed},
                  {"failures", std::move(failures)}},
             std::to_string(corpus.count) + " graphs, " + std::to_string(failed) + " with violations\n");
    return failed == 0 ? kOk : kViolation;
  }
  const auto g = load_graph(gl);
  const auto audit = one(g);
  std::ostringstream table;
  table << barcode_table(audit.barcode);
  for (const auto& v : audit.violations) table << "  violation: " << to_string(v.kind) << "\n";
  table << (audit.ok ? "audit passed\n" : "audit FAILED\n");
  out.emit(to_json(audit), table.str());
  return audit.ok ? kOk : kViolation;
}

int cmd_poset(const Globals& gl, Output& out, const std::vector<std::string>& pcf_files, std::size_t cap) {
  const auto g = load_graph(gl);
  std::vector<DistanceMatrix> distances;
  std::vector<std::string> labels;
  if (pcf_files.empty()) {
    PcfEnumerationOptions options;
    options.max_vertices = cap;
    const auto family = cost_dominated_distances(g, options);
    for (std::size_t i = 0; i < family.distances.size(); ++i) {
      distances.push_back(family.distances[i]);
      labels.push_back("enumerated #" + std::to_string(i));
    }
  } else {
    for (const auto& file : pcf_files) {
      auto loaded = load_distance(g, "pcf:" + file);
      distances.push_back(std::move(loaded.distance));
      labels.push_back(file);
    }
  }
  const auto extremes = poset_extremes(distances);
  const auto dw = d_weight(g);
  std::optional<std::size_t> weight_index;
  for (std::size_t i = 0; i < distances.size() && !weight_index; ++i) {
    if (distances[i].same_values(dw)) weight_index = i;
  }

  Json doc = to_json(extremes);
  doc["count"] = distances.size();
  doc["labels"] = labels;
  doc["d_weight_index"] = weight_index ? Json(*weight_index) : Json(nullptr);
  std::ostringstream table;
  table << distances.size() << " distances; least: " << (extremes.least ? labels[*extremes.least] : "none")
        << "; greatest: " << (extremes.greatest ? labels[*extremes.greatest] : "none") << "\n";
  if (const auto cert = find_no_greatest_certificate(g)) {
    doc["no_greatest_certificate"] = Json{{"v0", cert->v0},
                                          {"vi", cert->vi},
                                          {"first", to_json(cert->first_distance)["values"]},
                                          {"second", to_json(cert->second_distance)["values"]}};
    table << "no-greatest certificate at v0=" << cert->v0 << ", v_i=" << cert->vi << "\n";
  }
  out.emit(doc, table.str());
  return kOk;
}

int cmd_search(const Globals& gl, Output& out, SearchParams params) {
  params.corpus.seed = gl.seed;
  const auto result = search_counterexample(params);
  Json doc{{"k", params.k}, {"trials", params.trials}, {"corpus", to_json(params.corpus)},
           {"trials_examined", result.trials_examined}};
  std::ostringstream table;
  if (result.witness) {
    const auto& w = *result.witness;
    doc["found"] = true;
    doc["witness"] = Json{{"trial", w.trial},
                          {"edge_bars", w.edge_bars},
                          {"weight_bars", w.weight_bars},
                          {"graph", to_json(w.graph)},
                          {"edge_list", serialize_graph(w.graph)}};
    table << "witness at trial " << w.trial << ": |bcd_" << params.k << "(d_edge)| = " << w.edge_bars
          << " < |bcd_" << params.k << "(d_weight)| = " << w.weight_bars << "\n"
          << serialize_graph(w.graph);
  } else {
    doc["found"] = false;
    table << "none found in " << params.trials << " trials\n";
  }
  out.emit(doc, table.str());
  return kOk;
}

int cmd_oracle_diff(const Globals& gl, Output& out, const std::string& distance, std::size_t k,
                    const CorpusFlags& corpus) {
  auto compare_one = [&](const WeightedGraph& g) {
    const auto loaded = load_distance(g, distance);
    const auto complex = build_filtration(loaded.distance, k + 1);
    const auto engine = extract_barcode(reduce(complex), complex, k);
    const auto oracle = naive_homology_oracle(complex, k);
    return std::pair{engine, oracle};
  };
  if (corpus.count > 0) {
    CorpusParams params = corpus.params;
    params.seed = gl.seed;
    std::size_t mismatched = 0;
    Json failures = Json::array();
    for (std::size_t i = 0; i < corpus.count; ++i) {
      const auto g = corpus_graph(params, i);
      const auto [engine, oracle] = compare_one(g);
      if (engine.intervals() != oracle.intervals()) {
        ++mismatched;
        failures.push_back(Json{{"index", i}, {"graph", serialize_graph(g)}, {"engine", to_json(engine)},
                                {"oracle", to_json(oracle)}});
      }
    }
    out.emit(Json{{"corpus", to_json(params)}, {"count", corpus.count}, {"k", k}, {"distance", distance},
                  {"mismatched", mismatched}, {"failures", std::move(failures)}},
             std::to_string(corpus.count) + " graphs, " + std::to_string(mismatched) + " mismatches\n");
    return mismatched == 0 ? kOk : kViolation;
  }
  const auto g = load_graph(gl);
  const auto [engine, oracle] = compare_one(g);
  const bool agree = engine.intervals() == oracle.intervals();
  out.emit(Json{{"agree", agree}, {"engine", to_json(engine)}, {"oracle", to_json(oracle)}},
           "engine:\n" + barcode_table(engine) + "oracle:\n" + barcode_table(oracle) +
               (agree ? "agree\n" : "DISAGREE\n"));
  return agree ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Persistent homology of path-representable graph distances", "barbed"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--graph", globals.graph_path, "Edge-list graph file");
  app.add_option("--seed", globals.seed, "Seed for randomized runs")->capture_default_str();
  app.add_option("--out", globals.out_path, "Write output to this file instead of stdout");
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_flag("-v,--verbose", globals.verbose, "Log run parameters to stderr");

  std::string mode = "both";
  auto* distances = app.add_subcommand("distances", "d_weight and d_edge with their pointwise comparison");
  distances->add_option("--mode", mode, "weight, edge or both")->check(CLI::IsMember({"weight", "edge", "both"}));

  std::string distance = "weight";
  std::size_t k = 1;
  std::optional<std::size_t> max_dim;
  std::string ordering = "lex";
  std::size_t budget = kDefaultSimplexBudget;
  auto* barcode = app.add_subcommand("barcode", "Persistence barcode with birth simplices");
  barcode->add_option("--distance", distance, "weight, edge or pcf:<file>")->capture_default_str();
  barcode->add_option("--k", k, "Homology dimension")->capture_default_str();
  barcode->add_option("--max-dim", max_dim, "Skeleton dimension (default k+1)");
  barcode->add_option("--ordering", ordering, "Tie order: lex, mst or shuffle:<seed>")->capture_default_str();
  barcode->add_option("--budget", budget, "Simplex budget")->capture_default_str();

  std::string filter = "none";
  std::size_t enum_cap = 7;
  auto* enumerate = app.add_subcommand("enumerate-pcf", "All consistent path choice functions");
  enumerate->add_option("--filter", filter, "none, weight or cost")->capture_default_str();
  enumerate->add_option("--cap", enum_cap, "Vertex cap")->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Consistency and dominance of a path choice");
  classify->add_option("--distance,--pcf", distance, "weight, edge or pcf:<file>")->capture_default_str();

  auto* completion = app.add_subcommand("completion", "Graph completion by a path choice");
  completion->add_option("--distance,--pcf", distance, "weight, edge or pcf:<file>")->capture_default_str();

  CorpusFlags corpus;
  auto* mst_check = app.add_subcommand("mst-check", "Compare MST(G) with MST of the completion");
  mst_check->add_option("--distance,--pcf", distance, "weight, edge or pcf:<file>")->capture_default_str();
  add_corpus_flags(mst_check, corpus);

  std::string small = "weight", large = "edge";
  auto* inject = app.add_subcommand("verify-injection", "Check the birth-edge injection between 1-dim barcodes");
  inject->add_option("--small", small, "Smaller distance: weight, edge or pcf:<file>")->capture_default_str();
  inject->add_option("--large", large, "Larger distance: weight, edge or pcf:<file>")->capture_default_str();
  add_corpus_flags(inject, corpus);

  auto* audit = app.add_subcommand("audit", "Birth-edge properties of bcd_1");
  audit->add_option("--distance,--pcf", distance, "weight, edge or pcf:<file>")->capture_default_str();
  add_corpus_flags(audit, corpus);

  std::vector<std::string> pcf_files;
  std::size_t poset_cap = 7;
  auto* poset = app.add_subcommand("poset", "Least and greatest cost-dominated distances");
  poset->add_option("--pcf", pcf_files, "Compare these pcf files instead of enumerating");
  poset->add_option("--cap", poset_cap, "Vertex cap for enumeration")->capture_default_str();

  SearchParams search_params;
  auto* search = app.add_subcommand("search-counterexample", "Random search for |bcd_k(d_edge)| < |bcd_k(d_weight)|");
  search->add_option("--k", search_params.k, "Homology dimension (>= 2)")->capture_default_str();
  search->add_option("--trials", search_params.trials, "Number of random graphs")->capture_default_str();
  search->add_option("--threads", search_params.threads, "Worker threads")->capture_default_str();
  search->add_option("--n-min", search_params.corpus.n_min)->capture_default_str();
  search->add_option("--n-max", search_params.corpus.n_max)->capture_default_str();
  search->add_option("--p-min", search_params.corpus.p_min)->capture_default_str();
  search->add_option("--p-max", search_params.corpus.p_max)->capture_default_str();
  search->add_option("--w-min", search_params.corpus.w_min)->capture_default_str();
  search->add_option("--w-max", search_params.corpus.w_max)->capture_default_str();

  auto* oracle = app.add_subcommand("oracle-diff", "Compare the reduction against the rank oracle");
  oracle->add_option("--distance", distance, "weight, edge or pcf:<file>")->capture_default_str();
  oracle->add_option("--k", k, "Homology dimension")->capture_default_str();
  add_corpus_flags(oracle, corpus);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  if (globals.verbose) {
    err << "barbed " << app.get_subcommands().front()->get_name() << " seed=" << globals.seed << "\n";
  }

  Output output(globals, out);
  try {
    if (*distances) return cmd_distances(globals, output, mode);
    if (*barcode) return cmd_barcode(globals, output, distance, k, max_dim, ordering, budget);
    if (*enumerate) return cmd_enumerate(globals, output, filter, enum_cap);
    if (*classify) return cmd_classify(globals, output, distance);
    if (*completion) return cmd_completion(globals, output, distance);
    if (*mst_check) return cmd_mst_check(globals, output, distance, corpus);
    if (*inject) return cmd_verify_injection(globals, output, small, large, corpus);
    if (*audit) return cmd_audit(globals, output, distance, corpus);
    if (*poset) return cmd_poset(globals, output, pcf_files, poset_cap);
    if (*search) return cmd_search(globals, output, search_params);
    if (*oracle) return cmd_oracle_diff(globals, output, distance, k, corpus);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace barbed::cli
