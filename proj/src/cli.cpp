#include "tref/cli.hpp"

#include <fstream>
#include <map>

#include <CLI11.hpp>

#include "tref/check.hpp"
#include "tref/errors.hpp"
#include "tref/io.hpp"

namespace tref {

namespace {

struct Options {
  std::string graph_path;
  int k = 0;
  std::string family = "tangle";
  std::string out_path;
  std::string dot_path;
  std::uint64_t seed = 0;
  long long max_nodes = kDefaultMaxNodes;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ArgumentError("cannot write " + path);
  f << text;
}

void emit_json(const Options& o, const nlohmann::json& j, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_file(o.out_path, text);
  }
}

int cmd_tangles(const Options& o, std::ostream& out) {
  static const std::map<std::string, FamilyKind> kinds = {
      {"tangle", FamilyKind::kTangleStars},
      {"profile", FamilyKind::kProfileTriples},
      {"block", FamilyKind::kBlockOracle}};
  auto it = kinds.find(o.family);
  if (it == kinds.end()) throw ArgumentError("unknown family " + o.family);
  const SepSystem sys(load_graph_file(o.graph_path), o.k);
  nlohmann::json j = {{"k", o.k}, {"family", o.family}};
  if (it->second == FamilyKind::kBlockOracle) {
    auto blocks = nlohmann::json::array();
    for (VertexSet b : enumerate_blocks(sys)) blocks.push_back(to_json(b));
    j["blocks"] = blocks;
  } else {
    auto list = nlohmann::json::array();
    for (const auto& t : enumerate_tangles(sys, AvoidanceFamily::of(it->second), o.max_nodes))
      list.push_back(to_json(t, sys));
    j["tangles"] = list;
  }
  emit_json(o, j, out);
  return 0;
}

int cmd_decompose(const Options& o, bool shrink, std::ostream& out) {
  const Graph g = load_graph_file(o.graph_path);
  Decomposition d = refine_all(g, o.k, FamilyKind::kTangleStars, o.max_nodes);
  if (shrink) d = refine_essential(g, o.k, d, o.max_nodes);
  emit_json(o, report_json(d, SepSystem(g, o.k)), out);
  if (!o.dot_path.empty()) write_file(o.dot_path, to_dot(d));
  return 0;
}

int cmd_width(const Options& o, std::ostream& out) {
  const Graph g = load_graph_file(o.graph_path);
  const int w = width_over_family(g);
  const bool tangle = w >= o.k;
  if (o.out_path.empty()) {
    out << "branch-width " << w << ", " << (tangle ? "" : "no ") << o.k << "-tangle\n";
  } else {
    emit_json(o, {{"k", o.k}, {"branch_width", w}, {"tangle", tangle}}, out);
  }
  return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Graph g = load_graph_file(o.graph_path);
  auto results = run_checks(g, o.k, o.seed, o.max_nodes);
  bool ok = true;
  auto list = nlohmann::json::array();
  for (const auto& r : results) {
    const char* tag = r.status == CheckStatus::kPass   ? "PASS"
                      : r.status == CheckStatus::kSkip ? "SKIP"
                                                       : "FAIL";
    ok = ok && r.status != CheckStatus::kFail;
    out << tag << " " << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    list.push_back({{"name", r.name}, {"status", tag}, {"detail", r.detail}});
  }
  if (!o.out_path.empty()) emit_json(o, {{"k", o.k}, {"checks", list}}, out);
  return ok ? 0 : 3;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tangles, tree-decompositions and their refinements"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--out", o.out_path, "Write JSON here instead of stdout");
  app.add_option("--dot", o.dot_path, "Write the decomposition as DOT");
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.add_option("--max-nodes", o.max_nodes, "Search node budget")->check(CLI::PositiveNumber);

  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", o.graph_path, "Edge-list file")->required();
    sub->add_option("-k", o.k, "Order bound")->required()->check(CLI::PositiveNumber);
    sub->fallthrough();
    return sub;
  };
  auto* tangles = add("tangles", "List the tangles, profiles or blocks of order k");
  tangles->add_option("--family", o.family, "tangle, profile or block");
  auto* decompose = add("decompose", "Distinguish the tangles and refine inessential parts");
  auto* shrink = add("refine-essential", "Also cut essential parts down");
  auto* width = add("width", "Branch-width and whether a k-tangle exists");
  auto* check = add("check", "Run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*tangles) return cmd_tangles(o, out);
    if (*decompose) return cmd_decompose(o, false, out);
    if (*shrink) return cmd_decompose(o, true, out);
    if (*width) return cmd_width(o, out);
    if (*check) return cmd_check(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.error_class());
  }
  return 1;
}

}  // namespace tref
