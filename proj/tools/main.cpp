// Command-line front end: validate linkage graphs, compute configuration
// curve genera, dump curve documents, render SVG projections, and run the
// vertex-trace pipeline.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tropgenus/curve_document.hpp"
#include "tropgenus/errors.hpp"
#include "tropgenus/graph_io.hpp"
#include "tropgenus/rigidity.hpp"
#include "tropgenus/svg.hpp"
#include "tropgenus/trace.hpp"

namespace {

using namespace tropgenus;

struct CommonOpts {
  std::string input_path;
  std::string inline_edges;
  std::string base;
  std::string format = "text";
  std::string out_path;
  PipelineConfig pipeline;
};

void add_input_flags(CLI::App* cmd, CommonOpts& opts) {
  auto* input = cmd->add_option("--input", opts.input_path,
                                "graph file (text edge list or JSON)");
  auto* edges = cmd->add_option(
      "--edges", opts.inline_edges,
      "inline edge list, e.g. \"1 2; 2 3; 3 4; 1 4\"");
  input->excludes(edges);
  cmd->add_option("--base", opts.base,
                  "base edge \"u v\" (default: edge {1,2})");
}

void add_run_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--seed", opts.pipeline.rng_seed, "rng seed")
      ->default_val(0);
  cmd->add_option("--weight-bits", opts.pipeline.weight_bits,
                  "weights drawn from [1, 2^bits]")
      ->default_val(24);
  cmd->add_option("--max-restarts", opts.pipeline.max_restarts,
                  "restart attempts before giving up")
      ->default_val(8);
  cmd->add_option("--vertex-budget", opts.pipeline.vertex_budget,
                  "abort traversals beyond this many curve vertices")
      ->default_val(size_t{1'000'000});
  cmd->add_option("--threads", opts.pipeline.threads,
                  "parallel traversal frontier width")
      ->default_val(1);
}

Graph load_graph(const CommonOpts& opts) {
  std::string content;
  if (!opts.input_path.empty()) {
    std::ifstream in(opts.input_path);
    if (!in) fail(ErrorKind::InvalidInput, "cannot open '" + opts.input_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    content = buffer.str();
  } else if (!opts.inline_edges.empty()) {
    content = opts.inline_edges;
    for (char& c : content) {
      if (c == ';' || c == ',') c = '\n';
    }
  } else {
    fail(ErrorKind::InvalidInput, "no graph given; use --input or --edges");
  }
  if (!opts.base.empty()) content = "base " + opts.base + "\n" + content;
  return parse_graph(content);
}

void write_output(const CommonOpts& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_path);
  if (!out) fail(ErrorKind::InvalidInput, "cannot write '" + opts.out_path + "'");
  out << text;
}

std::string genus_report_text(const Graph& g, const GenusReport& r) {
  std::ostringstream out;
  out << "graph: " << g.vertex_count << " vertices, " << g.edge_count()
      << " edges (base " << g.edges[0].first + 1 << "-" << g.edges[0].second + 1
      << ")\n";
  out << "genus: " << r.genus << "\n";
  out << "curve: " << r.vertex_count << " vertices, " << r.bounded_edge_count
      << " bounded edges, " << r.ray_count << " rays\n";
  out << "restarts: " << r.restarts << ", search nodes: " << r.search_nodes
      << ", transversality checks: " << r.transversality_checks << "\n";
  return out.str();
}

nlohmann::ordered_json genus_report_json(const Graph& g, const GenusReport& r) {
  nlohmann::ordered_json doc;
  doc["graph"] = graph_to_json(g);
  doc["genus"] = r.genus;
  auto weights = nlohmann::ordered_json::array();
  for (const Rational& w : r.weights) weights.push_back(to_fraction(w));
  doc["weights"] = std::move(weights);
  doc["curve"] = {{"vertices", r.vertex_count},
                  {"bounded_edges", r.bounded_edge_count},
                  {"rays", r.ray_count}};
  doc["counters"] = {{"restarts", r.restarts},
                     {"search_nodes", r.search_nodes},
                     {"transversality_checks", r.transversality_checks}};
  return doc;
}

std::string curve_dot(const TropicalCurve& curve) {
  std::ostringstream out;
  out << "graph tropical_curve {\n  node [shape=point];\n";
  for (size_t v = 0; v < curve.vertices.size(); ++v) out << "  v" << v << ";\n";
  for (const auto& e : curve.bounded_edges) {
    out << "  v" << e.a << " -- v" << e.b << " [label=\""
        << to_fraction(e.length) << "\"];\n";
  }
  for (size_t i = 0; i < curve.rays.size(); ++i) {
    out << "  r" << i << " [style=invis];\n";
    out << "  v" << curve.rays[i].vertex << " -- r" << i
        << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

int run_validate(const CommonOpts& opts) {
  Graph g = load_graph(opts);
  try {
    OneDofWitness w = validate_one_dof(g);
    if (opts.format == "json") {
      nlohmann::ordered_json doc;
      doc["valid"] = true;
      doc["witness_edge"] = {w.witness_edge.first + 1, w.witness_edge.second + 1};
      write_output(opts, doc.dump(2) + "\n");
    } else {
      std::ostringstream out;
      out << "valid 1-dof linkage; adding edge " << w.witness_edge.first + 1
          << "-" << w.witness_edge.second + 1 << " makes it minimally rigid\n";
      write_output(opts, out.str());
    }
    return 0;
  } catch (const Error& e) {
    if (opts.format == "json") {
      nlohmann::ordered_json doc;
      doc["valid"] = false;
      doc["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
      write_output(opts, doc.dump(2) + "\n");
    } else {
      write_output(opts, std::string("not 1-dof: ") + error_kind_name(e.kind()) +
                             ": " + e.what() + "\n");
    }
    return 1;
  }
}

int run_genus(const CommonOpts& opts) {
  Graph g = load_graph(opts);
  GenusReport r = compute_genus(g, opts.pipeline);
  if (opts.format == "json") {
    write_output(opts, genus_report_json(g, r).dump(2) + "\n");
  } else {
    write_output(opts, genus_report_text(g, r));
  }
  return 0;
}

int run_curve(const CommonOpts& opts, const std::string& dot_path) {
  Graph g = load_graph(opts);
  GenusReport r = compute_genus(g, opts.pipeline);
  write_output(opts, curve_document(g, r).dump(2) + "\n");
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) fail(ErrorKind::InvalidInput, "cannot write '" + dot_path + "'");
    out << curve_dot(r.curve);
  }
  return 0;
}

int run_plot(const CommonOpts& opts, const std::string& projection) {
  Graph g = load_graph(opts);
  GenusReport r = compute_genus(g, opts.pipeline);
  ProjectionSpec spec = parse_projection(projection);
  spec.seed = opts.pipeline.rng_seed;
  write_output(opts, render_svg(r.curve, spec));
  return 0;
}

int run_trace(const CommonOpts& opts, int i, int j, int k) {
  Graph g = load_graph(opts);
  if (i < 1 || j < 1 || k < 1)
    fail(ErrorKind::InvalidInput, "trace vertices are 1-based");
  // The fixed edge becomes the base edge; make_graph rejects non-edges.
  Graph rebased = make_graph(g.vertex_count, g.edges, {i - 1, j - 1});
  TraceProblem tp{rebased, i - 1, j - 1, k - 1};
  TraceReport report = trace_genus(tp, opts.pipeline);

  if (opts.format == "json") {
    nlohmann::ordered_json doc;
    doc["fixed_edge"] = {i, j};
    doc["tracing_vertex"] = k;
    doc["class"] = trace_class_name(report.trace_class);
    auto steps = nlohmann::ordered_json::array();
    for (const auto& s : report.steps) steps.push_back(s.describe());
    doc["simplifications"] = std::move(steps);
    if (report.genus) doc["genus"] = *report.genus;
    write_output(opts, doc.dump(2) + "\n");
    return 0;
  }

  std::ostringstream out;
  out << "trace of vertex " << k << " with fixed edge " << i << "-" << j << "\n";
  for (size_t s = 0; s < report.steps.size(); ++s) {
    out << "step " << s + 1 << ": " << report.steps[s].describe() << "\n";
  }
  switch (report.trace_class) {
    case TraceClass::Finite:
      out << "trace: finite point set (no curve)\n";
      break;
    case TraceClass::Circle:
      out << "trace: circle (genus 0)\n";
      break;
    case TraceClass::Curve:
      out << "trace: curve, genus " << *report.genus << "\n";
      break;
  }
  write_output(opts, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genus of generic configuration curves of 1-dof linkages"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string dot_path, projection = "pca";
  int trace_i = 0, trace_j = 0, trace_k = 0;

  auto* validate = app.add_subcommand("validate", "check the 1-dof property");
  add_input_flags(validate, opts);
  validate->add_option("--format", opts.format, "text|json");
  validate->add_option("--out,-o", opts.out_path, "output path (default stdout)");

  auto* genus_cmd = app.add_subcommand("genus", "compute the curve genus");
  add_input_flags(genus_cmd, opts);
  add_run_flags(genus_cmd, opts);
  genus_cmd->add_option("--format", opts.format, "text|json");
  genus_cmd->add_option("--out,-o", opts.out_path, "output path (default stdout)");

  auto* curve_cmd =
      app.add_subcommand("curve", "write the traversed curve as JSON");
  add_input_flags(curve_cmd, opts);
  add_run_flags(curve_cmd, opts);
  curve_cmd->add_option("--out,-o", opts.out_path, "output path (default stdout)");
  curve_cmd->add_option("--dot", dot_path, "also write a Graphviz DOT file");

  auto* plot_cmd = app.add_subcommand("plot", "render an SVG projection");
  add_input_flags(plot_cmd, opts);
  add_run_flags(plot_cmd, opts);
  plot_cmd->add_option("--project", projection,
                       "projection: pca | random | i,j (1-based coordinates)");
  plot_cmd->add_option("--out,-o", opts.out_path, "output path (default stdout)");

  auto* trace_cmd = app.add_subcommand(
      "trace-genus", "genus of the trace of vertex k with edge {i,j} fixed");
  trace_cmd->add_option("i", trace_i, "fixed edge endpoint")->required();
  trace_cmd->add_option("j", trace_j, "fixed edge endpoint")->required();
  trace_cmd->add_option("k", trace_k, "tracing vertex")->required();
  add_input_flags(trace_cmd, opts);
  add_run_flags(trace_cmd, opts);
  trace_cmd->add_option("--format", opts.format, "text|json");
  trace_cmd->add_option("--out,-o", opts.out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate)) return run_validate(opts);
    if (app.got_subcommand(genus_cmd)) return run_genus(opts);
    if (app.got_subcommand(curve_cmd)) return run_curve(opts, dot_path);
    if (app.got_subcommand(plot_cmd)) return run_plot(opts, projection);
    if (app.got_subcommand(trace_cmd))
      return run_trace(opts, trace_i, trace_j, trace_k);
  } catch (const Error& e) {
    if (opts.format == "json") {
      nlohmann::ordered_json doc;
      doc["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
      std::cerr << doc.dump(2) << "\n";
    } else {
      std::cerr << "error: " << error_kind_name(e.kind()) << ": " << e.what()
                << "\n";
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
