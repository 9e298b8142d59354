// ramsey: command-line front end for arrowing, minimality, densities,
// classification, catalog enumeration and the random-graph threshold sweep.
//
// Exit codes: 0 = a verdict was produced (including "unknown"),
//             1 = usage error, 2 = internal failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/ramsey.hpp"

namespace {

using ramsey::Graph;
using ramsey::InvalidArgument;
using Json = ramsey::json::Json;

constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;

std::string first_line(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read graph file '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty() && line != ">>graph6<<") return line;
  }
  throw InvalidArgument("graph file '" + path + "' is empty");
}

Graph parse_inline(const std::string& text) {
  if (ramsey::looks_like_graph_spec(text)) return ramsey::build(text);
  return ramsey::parse_graph6(text);
}

/// A graph argument: `g6:<graph6>`, `spec:<spec>`, `@<path>`/`file:<path>`,
/// or bare text (spec syntax if it parses as such, an existing file, else
/// graph6).
Graph parse_graph_arg(const std::string& arg) {
  auto starts = [&](const char* p) { return arg.rfind(p, 0) == 0; };
  if (starts("g6:")) return ramsey::parse_graph6(arg.substr(3));
  if (starts("spec:")) return ramsey::build(arg.substr(5));
  if (starts("file:")) return parse_inline(first_line(arg.substr(5)));
  if (starts("@")) return parse_inline(first_line(arg.substr(1)));
  if (ramsey::looks_like_graph_spec(arg)) return ramsey::build(arg);
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return parse_inline(first_line(arg));
  return ramsey::parse_graph6(arg);
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("RAMSEY_NODE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("RAMSEY_NODE_BUDGET is not an integer: ") + env);
    }
  }
  return ramsey::kDefaultNodeBudget;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

struct Output {
  std::string format = "json";
  std::string path;

  void write(const Json& doc) const {
    std::ostringstream text;
    if (format == "text") {
      flatten(doc, "", text);
    } else {
      text << doc.dump(2) << "\n";
    }
    emit(text.str());
  }

  void emit(const std::string& s) const {
    if (path.empty()) {
      std::cout << s;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write '" + path + "'");
    out << s;
  }
};

std::vector<ramsey::Rational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<ramsey::Rational> out;
  for (const auto& s : items) out.push_back(ramsey::Rational::parse(s));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramsey arrowing, minimality, density and finiteness toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  std::uint64_t budget = 0;
  int threads = 1;
  app.add_option("--format", output.format, "Output format for documents")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", output.path, "Write output to a file instead of stdout");
  app.add_option("--budget", budget, "Node budget per arrowing search (env RAMSEY_NODE_BUDGET)");
  app.add_option("--threads", threads, "Worker threads for the threshold sweep")
      ->check(CLI::PositiveNumber);

  std::string f_arg, g_arg, h_arg, pair_arg;
  int max_v = 0, max_e = 0;
  bool audit = false;
  std::vector<int> ns;
  std::vector<std::string> cs;
  int samples = 100;
  std::uint64_t seed = 0;

  auto* arrow = app.add_subcommand("arrow", "Decide F -> (G, H)");
  arrow->add_option("F", f_arg)->required();
  arrow->add_option("G", g_arg)->required();
  arrow->add_option("H", h_arg)->required();

  auto* minimal = app.add_subcommand("minimal", "Check Ramsey-minimality of F for (G, H)");
  minimal->add_option("F", f_arg)->required();
  minimal->add_option("G", g_arg)->required();
  minimal->add_option("H", h_arg)->required();

  auto* density = app.add_subcommand("density", "rho, m2 and optionally m2(X, Y)");
  density->add_option("X", f_arg)->required();
  density->add_option("--pair", pair_arg, "Second graph Y for m2(X, Y)");

  auto* classify = app.add_subcommand("classify", "Ramsey-finite / infinite verdict for (G, H)");
  classify->add_option("G", g_arg)->required();
  classify->add_option("H", h_arg)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Ramsey-minimal graphs within bounds");
  enumerate->add_option("G", g_arg)->required();
  enumerate->add_option("H", h_arg)->required();
  enumerate->add_option("--max-v", max_v, "Maximum vertex count")->required();
  enumerate->add_option("--max-e", max_e, "Maximum edge count")->required();
  enumerate->add_flag("--audit", audit, "Add the rho > m2(G,H) audit (cyclic pairs)");

  auto* threshold = app.add_subcommand("threshold", "Monte Carlo sweep of P(G(n,p) -> (G, H))");
  threshold->add_option("G", g_arg)->required();
  threshold->add_option("H", h_arg)->required();
  threshold->add_option("--n", ns, "Vertex counts")->required()->delimiter(',');
  threshold->add_option("--c", cs, "Multipliers c in p = c n^(-1/m2(G,H))")->required()->delimiter(',');
  threshold->add_option("--samples", samples, "Samples per cell");
  threshold->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    ramsey::SearchOptions opts;
    opts.node_budget = budget > 0 ? budget : default_budget();

    if (arrow->parsed()) {
      const Graph f = parse_graph_arg(f_arg), g = parse_graph_arg(g_arg), h = parse_graph_arg(h_arg);
      output.write(ramsey::json::arrow_document(f, g, h, ramsey::arrows(f, g, h, opts)));
    } else if (minimal->parsed()) {
      const Graph f = parse_graph_arg(f_arg), g = parse_graph_arg(g_arg), h = parse_graph_arg(h_arg);
      if (f.isolated_count() > 0) throw InvalidArgument("F must not have isolated vertices");
      output.write(ramsey::json::minimal_document(f, g, h, ramsey::is_ramsey_minimal(f, g, h, opts)));
    } else if (density->parsed()) {
      const Graph x = parse_graph_arg(f_arg);
      if (pair_arg.empty()) {
        output.write(ramsey::json::density_document(x, nullptr, ramsey::density_report(x)));
      } else {
        const Graph y = parse_graph_arg(pair_arg);
        output.write(ramsey::json::density_document(x, &y, ramsey::density_report(x, &y)));
      }
    } else if (classify->parsed()) {
      const Graph g = parse_graph_arg(g_arg), h = parse_graph_arg(h_arg);
      output.write(ramsey::json::classification_document(g, h, ramsey::classify(g, h)));
    } else if (enumerate->parsed()) {
      const Graph g = parse_graph_arg(g_arg), h = parse_graph_arg(h_arg);
      ramsey::SearchBounds bounds{max_v, max_e, opts.node_budget};
      const auto cat = ramsey::enumerate_ramsey_minimal(g, h, bounds);
      Json audit_doc = nullptr;
      if (audit) audit_doc = ramsey::json::audit_json(ramsey::catalog_density_audit(cat));
      output.write(ramsey::json::catalog_document(cat, audit_doc));
    } else if (threshold->parsed()) {
      ramsey::ExperimentConfig cfg;
      cfg.g = parse_graph_arg(g_arg);
      cfg.h = parse_graph_arg(h_arg);
      cfg.ns = ns;
      cfg.cs = parse_rationals(cs);
      cfg.samples = samples;
      cfg.seed = seed;
      cfg.node_budget = opts.node_budget;
      cfg.threads = threads;
      output.emit(ramsey::experiment_csv(ramsey::run_experiment(cfg), seed));
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
