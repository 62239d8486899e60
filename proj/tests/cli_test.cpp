#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "barbed/json_io.hpp"
#include "barbed/graph_io.hpp"
#include "barbed/path_system.hpp"
#include "cli.hpp"
#include "support/brute.hpp"

using namespace barbed;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name, const std::string& contents) {
  const auto dir = fs::temp_directory_path() / "barbed_cli_test";
  fs::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << contents;
  return path;
}

const std::string kTriangle = "0 1 1\n1 2 1\n0 2 3\n";

}  // namespace

TEST_CASE("distances reports both matrices and their order") {
  const auto g = scratch("tri.txt", kTriangle);
  const auto r = run({"--graph", g.string(), "distances", "--mode", "both"});
  REQUIRE(r.code == cli::kOk);
  const auto doc = Json::parse(r.out);
  CHECK(doc["comparison"] == "le");
  CHECK(doc["weight"]["values"][0][2] == 2.0);
  CHECK(doc["edge"]["values"][0][2] == 3.0);
  CHECK(doc["edge_axioms"]["triangle"] == false);

  const auto table = run({"--graph", g.string(), "--format", "table", "distances"});
  CHECK(table.out.find("weight vs edge: le") != std::string::npos);
}

TEST_CASE("json output is byte-stable") {
  const auto g = scratch("fig5.txt", serialize_graph(read_graph_file(brute::fixture_path("fig5_injection.txt"))));
  const std::vector<std::string> args{"--graph", g.string(), "verify-injection", "--small", "weight", "--large", "edge"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);

  const auto campaign = run({"--seed", "3", "verify-injection", "--random", "20", "--n-max", "7"});
  CHECK(campaign.code == cli::kOk);
  CHECK(campaign.out == run({"--seed", "3", "verify-injection", "--random", "20", "--n-max", "7"}).out);
  const auto doc = Json::parse(campaign.out);
  CHECK(doc["corpus"]["seed"] == 3);
  CHECK(doc["count"] == 20);
  CHECK(doc["failed"] == 0);
}

TEST_CASE("--out writes the document to a file") {
  const auto g = scratch("tri_out.txt", kTriangle);
  const auto target = fs::temp_directory_path() / "barbed_cli_test" / "out.json";
  fs::remove(target);
  const auto r = run({"--graph", g.string(), "--out", target.string(), "barcode", "--k", "0"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.empty());
  std::ifstream in(target);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(Json::parse(text.str())["k"] == 0);
}

TEST_CASE("barcode accepts pcf files and orderings") {
  const auto gpath = scratch("c4.txt", "0 1 1\n1 2 1\n2 3 1\n0 3 1\n");
  const auto g = read_graph_file(gpath);
  const auto pcf = scratch("c4_pcf.json", to_json(extract_paths(g, PathMode::Weight), g).dump());
  const auto r = run({"--graph", gpath.string(), "barcode", "--distance", "pcf:" + pcf.string(), "--k", "1"});
  REQUIRE(r.code == cli::kOk);
  const auto doc = Json::parse(r.out);
  REQUIRE(doc["bars"].size() == 1);
  CHECK(doc["bars"][0]["birth"] == 1.0);
  CHECK(doc["bars"][0]["death"] == 2.0);

  for (const std::string ordering : {"lex", "mst", "shuffle:5"}) {
    const auto o = run({"--graph", gpath.string(), "barcode", "--ordering", ordering});
    CHECK(o.code == cli::kOk);
  }
  CHECK(run({"--graph", gpath.string(), "barcode", "--ordering", "random"}).code == cli::kUsage);
}

TEST_CASE("enumerate-pcf, classify and completion") {
  const auto g = scratch("c4_toy.txt", serialize_graph(read_graph_file(brute::fixture_path("c4_toy.txt"))));
  const auto all = Json::parse(run({"--graph", g.string(), "enumerate-pcf"}).out);
  CHECK(all["count"] == 8);
  CHECK(Json::parse(run({"--graph", g.string(), "enumerate-pcf", "--filter", "cost"}).out)["count"] == 4);
  CHECK(run({"--graph", g.string(), "enumerate-pcf", "--filter", "odd"}).code == cli::kUsage);

  const auto cls = Json::parse(run({"--graph", g.string(), "classify", "--distance", "edge"}).out);
  CHECK(cls["consistency"]["ok"] == true);
  CHECK(cls["dominance"]["cost_dominated"] == true);

  const auto completion = Json::parse(run({"--graph", g.string(), "completion"}).out);
  CHECK(completion["completion"]["edges"].size() == 6);
}

TEST_CASE("mst-check reports without asserting outside its hypothesis") {
  const auto gpath = scratch("fig6.txt", serialize_graph(read_graph_file(brute::fixture_path("fig6_triangle.txt"))));
  const auto g = read_graph_file(gpath);
  const auto routed = make_path_choice(g, std::vector<Path>{{0, 1}, {1, 2}, {0, 1, 2}});
  const auto pcf = scratch("fig6_pcf.json", to_json(routed, g).dump());
  const auto r = run({"--graph", gpath.string(), "mst-check", "--pcf", "pcf:" + pcf.string()});
  CHECK(r.code == cli::kOk);
  const auto doc = Json::parse(r.out);
  CHECK(doc["equal"] == false);
  CHECK(doc["weight_dominated"] == false);

  CHECK(run({"--seed", "4", "mst-check", "--random", "10", "--n-max", "6"}).code == cli::kOk);
}

TEST_CASE("poset on the 5-cycle") {
  const auto g = scratch("c5.txt", serialize_graph(read_graph_file(brute::fixture_path("c5_poset.txt"))));
  const auto doc = Json::parse(run({"--graph", g.string(), "poset"}).out);
  CHECK(doc["greatest"].is_null());
  CHECK(doc["least"] == doc["d_weight_index"]);
  CHECK(doc.contains("no_greatest_certificate"));
}

TEST_CASE("search-counterexample") {
  const auto found = run({"--seed", "7", "search-counterexample", "--k", "2", "--trials", "100"});
  CHECK(found.code == cli::kOk);
  const auto doc = Json::parse(found.out);
  CHECK(doc["found"] == true);
  CHECK(doc["witness"]["edge_bars"] < doc["witness"]["weight_bars"]);

  const auto none = run({"search-counterexample", "--k", "2", "--trials", "2", "--n-min", "4", "--n-max", "4"});
  CHECK(none.code == cli::kOk);
  CHECK(Json::parse(none.out)["found"] == false);

  const auto refused = run({"search-counterexample", "--k", "1"});
  CHECK(refused.code == cli::kUsage);
  CHECK(refused.err.find("theorem holds in dimension 1") != std::string::npos);
}

TEST_CASE("oracle-diff and audit campaigns") {
  CHECK(run({"oracle-diff", "--random", "10", "--n-max", "6", "--k", "2"}).code == cli::kOk);
  CHECK(run({"audit", "--random", "10", "--distance", "edge"}).code == cli::kOk);
  const auto g = scratch("tri_oracle.txt", kTriangle);
  const auto doc = Json::parse(run({"--graph", g.string(), "oracle-diff", "--distance", "edge"}).out);
  CHECK(doc["agree"] == true);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"distances", "--bogus"}).code == cli::kUsage);
  CHECK(run({"--format", "xml", "distances"}).code == cli::kUsage);
  const auto missing = run({"distances"});
  CHECK(missing.code == cli::kUsage);
  CHECK(missing.err.find("--graph") != std::string::npos);
  const auto unreadable = run({"--graph", "/nonexistent/graph.txt", "distances"});
  CHECK(unreadable.code == cli::kUsage);
  const auto bad = scratch("bad.txt", "0 1 1\n0 1 2\n");
  const auto parse = run({"--graph", bad.string(), "distances"});
  CHECK(parse.code == cli::kUsage);
  CHECK(parse.err.find("line 2") != std::string::npos);
  const auto big = scratch("big.txt", "0 1 1\n1 2 1\n2 3 1\n3 4 1\n4 5 1\n5 6 1\n6 7 1\n");
  const auto cap = run({"--graph", big.string(), "enumerate-pcf"});
  CHECK(cap.code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}
