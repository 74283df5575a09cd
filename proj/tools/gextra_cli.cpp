// gextra: products, exact g-extra connectivity, theorem predictions and
// verification sweeps from the command line.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gextra/corpus.hpp"
#include "gextra/extra_connectivity.hpp"
#include "gextra/formulas.hpp"
#include "gextra/graph_io.hpp"
#include "gextra/products.hpp"
#include "gextra/report.hpp"
#include "gextra/verification.hpp"

using namespace gextra;

namespace {

// A named graph (K4, P3, C5, S3, E2) or a graph6 string.
Graph graph_from_spec(const std::string& spec) {
  try {
    return named_graph(spec);
  } catch (const InputError&) {
    return parse_graph6(spec);
  }
}

struct GraphSource {
  std::string graph;
  std::string input;
  std::string format = "g6";

  void add_to(CLI::App* app) {
    app->add_option("--graph", graph, "Graph name (K4, P3, C5, S3) or graph6 string");
    app->add_option("--input", input, "Read the graph from a file");
    app->add_option("--format", format, "Input format")->check(CLI::IsMember({"g6", "edges"}));
  }

  Graph load() const {
    if (!graph.empty() && !input.empty()) throw InputError("give either --graph or --input, not both");
    if (!graph.empty()) return graph_from_spec(graph);
    if (input.empty()) throw InputError("a graph is required (--graph or --input)");
    const auto format_kind = parse_graph_format(format);
    if (format_kind == GraphFormat::EdgeList) {
      auto parsed = parse_edge_list(read_text_file(input));
      for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
      return std::move(parsed.graph);
    }
    auto graphs = read_graphs(input, format_kind);
    if (graphs.size() != 1) throw InputError(input + ": expected exactly one graph");
    return std::move(graphs.front());
  }
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

std::vector<std::size_t> parse_g_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto dash = item.find('-');
    try {
      if (dash == std::string::npos) {
        out.push_back(std::stoul(item));
      } else {
        const auto lo = std::stoul(item.substr(0, dash));
        const auto hi = std::stoul(item.substr(dash + 1));
        for (auto g = lo; g <= hi; ++g) out.push_back(g);
      }
    } catch (const std::logic_error&) {
      throw InputError("bad g value '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact g-extra connectivity of corona-type and rooted graph products"};
  app.require_subcommand(1);

  std::string construction_name;
  std::vector<std::string> attach_specs;
  std::size_t root = 0;
  std::string out;
  std::size_t budget_cut_size = SearchBudget{}.max_cut_size;
  std::string range_reading = "literal";

  // product
  auto* product_cmd = app.add_subcommand("product", "Build a product graph and export it");
  GraphSource product_src;
  product_src.add_to(product_cmd);
  std::string export_format = "g6";
  product_cmd->add_option("--construction", construction_name)->required();
  product_cmd->add_option("--attach", attach_specs, "H (repeat once per base vertex for generalized_corona)")
      ->required();
  product_cmd->add_option("--root", root, "Root of H for rooted_product");
  product_cmd->add_option("--export", export_format)->check(CLI::IsMember({"g6", "edges", "dot"}));
  product_cmd->add_option("--out", out);

  // exact
  auto* exact_cmd = app.add_subcommand("exact", "One exact oracle query");
  GraphSource exact_src;
  exact_src.add_to(exact_cmd);
  std::size_t g_value = 0;
  std::string mode = "vertex";
  exact_cmd->add_option("--g", g_value)->required();
  exact_cmd->add_option("--mode", mode)->check(CLI::IsMember({"vertex", "edge"}));
  exact_cmd->add_option("--construction", construction_name, "Query the product instead of the graph");
  exact_cmd->add_option("--attach", attach_specs);
  exact_cmd->add_option("--root", root);
  exact_cmd->add_option("--budget-cut-size", budget_cut_size);
  exact_cmd->add_option("--out", out);

  // predict
  auto* predict_cmd = app.add_subcommand("predict", "Evaluate the closed-form prediction");
  GraphSource predict_src;
  predict_src.add_to(predict_cmd);
  predict_cmd->add_option("--construction", construction_name)->required();
  predict_cmd->add_option("--attach", attach_specs)->required();
  predict_cmd->add_option("--root", root);
  predict_cmd->add_option("--g", g_value)->required();
  predict_cmd->add_option("--range-reading", range_reading)->check(CLI::IsMember({"literal", "km+1"}));
  predict_cmd->add_option("--budget-cut-size", budget_cut_size);
  predict_cmd->add_option("--out", out);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Sweep predictions against the oracle");
  std::vector<std::string> verify_constructions;
  std::size_t max_n = 5;
  std::string bases_file;
  std::string bases_format = "g6";
  std::string g_spec = "auto";
  std::size_t jobs = 1;
  verify_cmd->add_option("--construction", verify_constructions, "Default: all six");
  verify_cmd->add_option("--max-n", max_n, "Default base corpus: connected non-complete graphs up to this order");
  verify_cmd->add_option("--input", bases_file, "Base graphs file (overrides --max-n)");
  verify_cmd->add_option("--format", bases_format)->check(CLI::IsMember({"g6", "edges"}));
  verify_cmd->add_option("--attach", attach_specs, "Attachment graphs (default K1 K2 P3 C3)");
  verify_cmd->add_option("--root", root, "Root used for every --attach graph");
  verify_cmd->add_option("--g", g_spec, "'auto' or a list such as 0,1,3-5");
  verify_cmd->add_option("--budget-cut-size", budget_cut_size);
  verify_cmd->add_option("--range-reading", range_reading)->check(CLI::IsMember({"literal", "km+1"}));
  verify_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", out, "Report path (default: stdout)");

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "Emit the base graph corpus as graph6 lines");
  bool all_connected = false;
  corpus_cmd->add_option("--max-n", max_n);
  corpus_cmd->add_flag("--all", all_connected, "Include complete graphs and K2");
  corpus_cmd->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    SearchBudget budget;
    budget.max_cut_size = budget_cut_size;

    auto attachments = [&] {
      std::vector<Graph> hs;
      for (const auto& s : attach_specs) hs.push_back(graph_from_spec(s));
      return hs;
    };

    auto build = [&](Construction c, const Graph& g) {
      auto hs = attachments();
      if (hs.empty()) throw InputError("--attach is required");
      if (c == Construction::GeneralizedCorona && hs.size() > 1) {
        return generalized_corona(GeneralizedCoronaSpec(g, std::move(hs)));
      }
      if (hs.size() != 1) throw InputError("exactly one --attach expected");
      return build_product(c, g, RootedGraph(hs.front(), static_cast<VertexIndex>(root)));
    };

    if (*product_cmd) {
      const Graph p = build(parse_construction(construction_name), product_src.load());
      if (export_format == "dot") {
        emit(to_dot(p, construction_name), out);
      } else if (export_format == "edges") {
        emit(emit_edge_list(p), out);
      } else {
        emit(emit_graph6(p) + "\n", out);
      }
      return 0;
    }

    if (*exact_cmd) {
      Graph host = exact_src.load();
      if (!construction_name.empty()) host = build(parse_construction(construction_name), host);
      const auto q = mode == "edge" ? Quantity::LambdaG : Quantity::KappaG;
      const auto outcome = run_oracle(host, q, g_value, budget);
      Json j;
      j["mode"] = mode;
      j["g"] = g_value;
      j["order"] = host.order();
      j["size"] = host.size();
      j["oracle"] = to_json(outcome);
      j["certificate"] = std::visit(
          [](const auto& c) -> Json {
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, std::monostate>) {
              return nullptr;
            } else {
              return to_json(c);
            }
          },
          outcome.certificate);
      emit(j.dump(2) + "\n", out);
      return 0;
    }

    if (*predict_cmd) {
      const Graph g = predict_src.load();
      const auto c = parse_construction(construction_name);
      FormulaOptions opt;
      opt.range_reading = parse_range_reading(range_reading);
      opt.budget = budget;
      auto hs = attachments();
      std::vector<Prediction> ps;
      if (c == Construction::GeneralizedCorona && hs.size() > 1) {
        ps = predict_generalized_corona(GeneralizedCoronaSpec(g, std::move(hs)), g_value, opt);
      } else {
        if (hs.size() != 1) throw InputError("exactly one --attach expected");
        ps = predict(c, g, RootedGraph(hs.front(), static_cast<VertexIndex>(root)), g_value, opt);
      }
      Json arr = Json::array();
      for (const auto& p : ps) arr.push_back(to_json(p));
      emit(arr.dump(2) + "\n", out);
      return 0;
    }

    if (*verify_cmd) {
      RunConfig config;
      if (!verify_constructions.empty()) {
        config.constructions.clear();
        for (const auto& name : verify_constructions) config.constructions.push_back(parse_construction(name));
      }
      config.base_max_n = max_n;
      if (!bases_file.empty()) {
        config.bases = read_graphs(bases_file, parse_graph_format(bases_format));
        if (config.bases.empty()) throw InputError(bases_file + ": no graphs");
      }
      for (auto& h : attachments()) config.attachments.emplace_back(std::move(h), static_cast<VertexIndex>(root));
      if (g_spec != "auto") config.g_values = parse_g_list(g_spec);
      config.budget = budget;
      config.range_reading = parse_range_reading(range_reading);
      config.jobs = jobs;

      const auto records = run_verification(config);
      emit(render_report(records, config, utc_timestamp()), out);
      for (const auto& [c, n] : summarize(records, config.constructions)) {
        std::cerr << to_string(c) << ": match " << n.match << ", mismatch " << n.mismatch << ", bound_holds "
                  << n.bound_holds << ", bound_violated " << n.bound_violated << ", inapplicable "
                  << n.inapplicable << ", budget_exceeded " << n.budget_exceeded << "\n";
      }
      return 0;
    }

    if (*corpus_cmd) {
      const auto graphs = all_connected ? enumerate_connected_base_graphs(max_n) : default_base_corpus(max_n);
      std::string text;
      for (const auto& g : graphs) text += emit_graph6(g) + "\n";
      emit(text, out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
