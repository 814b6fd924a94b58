// sgtool: command-line front end for the spatial-graph braid toolkit.
//
// Subcommands: validate, graph-info, smooth, reduce, braid, btilde, closure,
// minimize-s, bounds, render.  Exit codes: 0 success, 1 validation failure,
// 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sg/braid.hpp"
#include "sg/graph.hpp"
#include "sg/render.hpp"
#include "sg/search.hpp"
#include "sg/sliced.hpp"
#include "sg/smoothing.hpp"

using nlohmann::json;

namespace {

struct Cli {
  std::string input, output, svg;
  bool as_json = false;
  bool force = false;
  bool annular = false;
  std::size_t budget = 100000;
  int depth = 12;
  std::string cycle;
  std::vector<std::string> oracle;
  std::vector<std::string> hooks;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

std::string base_dir(const std::string& path) {
  if (path == "-") return ".";
  auto dir = std::filesystem::path(path).parent_path();
  return dir.empty() ? "." : dir.string();
}

void write_output(const Cli& cli, const std::string& text) {
  if (cli.output.empty() || cli.output == "-") {
    std::cout << text;
    return;
  }
  if (!cli.force && cli.output == cli.input)
    throw std::runtime_error("refusing to overwrite the input (use --force)");
  std::ofstream f(cli.output);
  if (!f) throw std::runtime_error("cannot write " + cli.output);
  f << text;
}

std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// --oracle cycle=e1,e5:bridge=4
sg::BridgeOracleEntry parse_oracle(const std::string& text) {
  auto colon = text.find(":bridge=");
  if (text.rfind("cycle=", 0) != 0 || colon == std::string::npos)
    throw std::runtime_error("bad oracle syntax, expected cycle=e1,e2:bridge=N");
  sg::BridgeOracleEntry e;
  e.cycle = split_ids(text.substr(6, colon - 6));
  e.bridge = std::stoi(text.substr(colon + 8));
  return e;
}

sg::SlicedDiagram load_sliced(const Cli& cli) {
  return sg::parse_sliced(read_input(cli.input), base_dir(cli.input));
}

json bounds_json(const sg::BoundsReport& r) {
  return json{{"s_lower", r.s_lower}, {"s_exact", r.s_exact}, {"s_upper", r.s_upper},
              {"b_upper", r.b_upper}, {"b_lower", r.b_lower}, {"notes", r.notes}};
}

json word_json(const sg::GraphBraidWord& w) {
  json letters = json::array();
  for (const auto& t : w.letters) {
    if (t.kind == sg::BraidLetter::Kind::Cross)
      letters.push_back({{"kind", "x"}, {"index", t.index}, {"sign", t.sign}});
    else
      letters.push_back({{"kind", "v"},
                         {"vertex", t.vertex},
                         {"index", t.index},
                         {"in", t.ins},
                         {"out", t.outs}});
  }
  return json{{"name", w.name}, {"strands0", w.strands0}, {"letters", letters}};
}

void maybe_svg(const Cli& cli, const sg::SlicedDiagram& s) {
  if (cli.svg.empty()) return;
  std::ofstream f(cli.svg);
  if (!f) throw std::runtime_error("cannot write " + cli.svg);
  f << sg::render_svg(s, cli.annular);
}

int run(int argc, char** argv) {
  CLI::App app{"spatial-graph braid toolkit"};
  app.require_subcommand(1);
  Cli cli;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cli.input, "input file (- for stdin)")->required();
    sub->add_option("-o,--output", cli.output, "output file");
    sub->add_flag("--json", cli.as_json, "emit JSON");
    sub->add_flag("--force", cli.force, "allow overwriting the input");
    sub->add_option("--svg", cli.svg, "also write an SVG rendering");
    return sub;
  };

  auto* c_validate = add_common(app.add_subcommand("validate", "check a sliced diagram"));
  auto* c_info = add_common(app.add_subcommand("graph-info", "underlying graph facts"));
  auto* c_smooth = add_common(app.add_subcommand("smooth", "orientation-respecting smoothing"));
  auto* c_reduce = add_common(app.add_subcommand("reduce", "replace vertices along a cycle"));
  c_reduce->add_option("--cycle", cli.cycle, "directed cycle as edge ids, comma separated")
      ->required();
  auto* c_braid = add_common(app.add_subcommand("braid", "annular braid word of the diagram"));
  auto* c_btilde = add_common(app.add_subcommand("btilde", "strand maximum of a braid word"));
  auto* c_closure = add_common(app.add_subcommand("closure", "sliced diagram of a braid word"));
  auto* c_min = add_common(app.add_subcommand("minimize-s", "search for a smaller smoothing"));
  c_min->add_option("--budget", cli.budget, "visited-diagram budget");
  c_min->add_option("--depth", cli.depth, "move-depth limit");
  c_min->add_option("--hook", cli.hooks,
                    "tree hooking assignment vertex:edge (repeatable, applied first)");
  auto* c_bounds = add_common(app.add_subcommand("bounds", "braid and smoothing bounds"));
  c_bounds->add_option("--budget", cli.budget, "visited-diagram budget");
  c_bounds->add_option("--depth", cli.depth, "move-depth limit");
  c_bounds->add_option("--oracle", cli.oracle, "cycle=e1,e2:bridge=N (repeatable)");
  auto* c_render = add_common(app.add_subcommand("render", "SVG drawing of the diagram"));
  c_render->add_flag("--annular", cli.annular, "draw the wrapped annular form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_validate->parsed()) {
      auto s = load_sliced(cli);
      auto rep = sg::validate_sliced(s);
      if (cli.as_json) {
        json j{{"ok", rep.ok}, {"event", rep.event_index}, {"message", rep.message}};
        write_output(cli, j.dump() + "\n");
      } else if (rep.ok) {
        write_output(cli, "ok\n");
      }
      if (!rep.ok) {
        if (!cli.as_json) std::cerr << "event " << rep.event_index << ": " << rep.message << "\n";
        return 1;
      }
      maybe_svg(cli, s);
    } else if (c_info->parsed()) {
      std::string text = read_input(cli.input);
      sg::OrientedGraph g;
      if (text.rfind("sliced", 0) == 0)
        g = sg::underlying_graph(sg::parse_sliced(text, base_dir(cli.input)));
      else
        g = sg::parse_graph(text);
      auto prof = sg::degree_profile(g);
      if (cli.as_json) {
        json degrees = json::object();
        for (const auto& [v, d] : prof.degrees)
          degrees[v] = {{"indeg", d.first}, {"outdeg", d.second}};
        json j{{"name", g.name},
               {"vertices", (int)g.vertices.size()},
               {"edges", (int)g.edges.size()},
               {"chi", sg::euler_characteristic(g)},
               {"circulating", sg::is_circulating(g)},
               {"degrees", degrees},
               {"sources", prof.sources},
               {"sinks", prof.sinks}};
        write_output(cli, j.dump() + "\n");
      } else {
        std::ostringstream out;
        out << sg::serialize_graph(g);
        out << "# chi " << sg::euler_characteristic(g)
            << (sg::is_circulating(g) ? " circulating" : " non-circulating") << "\n";
        write_output(cli, out.str());
      }
    } else if (c_smooth->parsed()) {
      auto s = load_sliced(cli);
      auto r = sg::smoothing_report(s);
      if (cli.as_json) {
        json j{{"mu", r.mu},
               {"chi_graph", r.chi_graph},
               {"beta1", r.beta1},
               {"prop2_ok", r.prop_ok},
               {"chi_preserved", r.chi_preserved}};
        write_output(cli, j.dump() + "\n");
      } else {
        std::ostringstream out;
        out << "mu " << r.mu << "\nchi " << r.chi_graph << "\nbeta1 " << r.beta1 << "\n";
        write_output(cli, out.str());
      }
      maybe_svg(cli, s);
    } else if (c_reduce->parsed()) {
      auto s = load_sliced(cli);
      auto d2 = sg::cycle_reduction(s, split_ids(cli.cycle));
      write_output(cli, sg::serialize_sliced(d2));
      maybe_svg(cli, d2);
    } else if (c_braid->parsed()) {
      auto s = load_sliced(cli);
      auto w = sg::braid(s);
      if (cli.as_json) {
        json j = word_json(w);
        j["btilde"] = sg::b_tilde(w);
        write_output(cli, j.dump() + "\n");
      } else {
        write_output(cli, sg::serialize_braidword(w));
      }
    } else if (c_btilde->parsed()) {
      auto w = sg::parse_braidword(read_input(cli.input));
      int b = sg::b_tilde(w);
      if (cli.as_json)
        write_output(cli, json{{"btilde", b}}.dump() + "\n");
      else
        write_output(cli, std::to_string(b) + "\n");
    } else if (c_closure->parsed()) {
      auto w = sg::parse_braidword(read_input(cli.input));
      auto s = sg::closure(w);
      write_output(cli, sg::serialize_sliced(s));
      maybe_svg(cli, s);
    } else if (c_min->parsed()) {
      auto s = load_sliced(cli);
      for (const auto& h : cli.hooks) {
        auto colon = h.find(':');
        if (colon == std::string::npos)
          throw std::runtime_error("bad hook syntax, expected vertex:edge");
        s = sg::hook_trees(s, {{h.substr(0, colon), h.substr(colon + 1)}});
      }
      auto r = sg::minimize_smoothing(s, cli.budget, cli.depth);
      if (cli.as_json) {
        json j{{"mu", r.mu},
               {"visited", r.visited},
               {"exhausted_budget", r.exhausted_budget},
               {"events", (int)r.best.events.size()}};
        write_output(cli, j.dump() + "\n");
      } else if (!cli.output.empty()) {
        write_output(cli, sg::serialize_sliced(r.best));
      } else {
        std::cout << "mu " << r.mu << " visited " << r.visited
                  << (r.exhausted_budget ? " (budget exhausted)" : "") << "\n";
      }
      maybe_svg(cli, r.best);
    } else if (c_bounds->parsed()) {
      auto s = load_sliced(cli);
      std::vector<sg::BridgeOracleEntry> oracle;
      for (const auto& o : cli.oracle) oracle.push_back(parse_oracle(o));
      auto r = sg::bounds(s, cli.budget, cli.depth, oracle);
      if (cli.as_json) {
        write_output(cli, bounds_json(r).dump() + "\n");
      } else {
        std::ostringstream out;
        out << "s in [" << r.s_lower << ", " << r.s_upper << "]"
            << (r.s_exact ? " (exact lower bound)" : "") << "\n";
        out << "b in [" << r.b_lower << ", " << r.b_upper << "]\n";
        for (const auto& note : r.notes) out << "# " << note << "\n";
        write_output(cli, out.str());
      }
    } else if (c_render->parsed()) {
      std::string text = read_input(cli.input);
      sg::SlicedDiagram s;
      if (text.rfind("braidword", 0) == 0)
        s = sg::closure(sg::parse_braidword(text));
      else
        s = sg::parse_sliced(text, base_dir(cli.input));
      std::string svg = sg::render_svg(s, cli.annular);
      if (!cli.svg.empty()) {
        std::ofstream f(cli.svg);
        if (!f) throw std::runtime_error("cannot write " + cli.svg);
        f << svg;
      } else {
        write_output(cli, svg);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
