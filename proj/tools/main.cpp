// sdcay command line: build Cayley graphs, compute signed domination
// numbers, audit the claim registry, export artifacts.
//
// Exit codes: 0 success (audit: all claims Confirmed), 1 audit found a
// Refuted or Partial claim, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "sdcay/auditor.hpp"
#include "sdcay/cayley.hpp"
#include "sdcay/certificates.hpp"
#include "sdcay/domination.hpp"
#include "sdcay/graph.hpp"
#include "sdcay/group.hpp"
#include "sdcay/isomorphism.hpp"

namespace {

using namespace sdcay;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

Graph parse_named_graph(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("graph spec must be kind:n, e.g. cycle:7");
  std::string kind = spec.substr(0, colon);
  int n = std::stoi(spec.substr(colon + 1));
  if (kind == "cycle") return standard_graph(GraphKind::Cycle, n);
  if (kind == "complete") return standard_graph(GraphKind::Complete, n);
  if (kind == "path") return standard_graph(GraphKind::Path, n);
  throw std::invalid_argument("unknown graph kind '" + kind +
                              "' (cycle, complete, path)");
}

struct GraphInput {
  std::string cayley;      // combined group:params:gens
  std::string group;       // group spec
  std::string gens;        // generator list
  std::string named;       // cycle:7 etc.
  std::string file;        // graph text file
  std::string group_json;  // group json file, used with --gens

  void attach(CLI::App* cmd) {
    cmd->add_option("--cayley", cayley, "Cayley spec group:params:gens");
    cmd->add_option("--group", group, "group spec, e.g. cyclic:8 or D8");
    cmd->add_option("--gens", gens, "connection set, element names or indices");
    cmd->add_option("--graph", named, "named graph kind:n (cycle, complete, path)");
    cmd->add_option("--in", file, "graph text file (\"n m\" header + edges)");
    cmd->add_option("--group-json", group_json, "group JSON file, combine with --gens");
  }

  Graph resolve() const {
    if (!cayley.empty()) return build_cayley(parse_cayley_spec(cayley));
    if (!group_json.empty()) {
      FiniteGroup g = group_from_json(read_file(group_json));
      CayleySpec spec{g, parse_generators(g, gens)};
      return build_cayley(spec);
    }
    if (!group.empty()) {
      FiniteGroup g = parse_group_spec(group);
      if (gens.empty())
        throw std::invalid_argument("--group needs --gens");
      CayleySpec spec{g, parse_generators(g, gens)};
      return build_cayley(spec);
    }
    if (!named.empty()) return parse_named_graph(named);
    if (!file.empty()) return graph_from_text(read_file(file));
    throw std::invalid_argument(
        "no graph given; use --cayley, --group/--gens, --graph or --in");
  }
};

int cmd_group(const std::string& name, int list_order, const std::string& from_json,
              const std::string& out, bool json) {
  FiniteGroup g;
  if (!from_json.empty()) {
    g = group_from_json(read_file(from_json));
  } else if (list_order > 0) {
    for (const auto& grp : groups_of_order(list_order)) {
      std::cout << grp.catalog_name << "  order " << grp.order << "  "
                << (grp.is_abelian() ? "abelian" : "nonabelian") << '\n';
    }
    return 0;
  } else if (!name.empty()) {
    g = parse_group_spec(name);
  } else {
    throw std::invalid_argument("use --name, --list-order or --from-json");
  }
  validate_group(g);
  if (!out.empty()) write_file(out, group_to_json(g));
  if (json) {
    std::cout << group_to_json(g);
  } else {
    std::cout << g.catalog_name << ": order " << g.order << ", "
              << (g.is_abelian() ? "abelian" : "nonabelian") << '\n'
              << "elements:";
    for (int i = 0; i < g.order; ++i)
      std::cout << ' ' << g.names[i] << "(o" << element_order(g, i) << ")";
    std::cout << '\n';
  }
  return 0;
}

int cmd_build(const GraphInput& input, const std::string& out,
              const std::string& dot, bool json) {
  Graph g = input.resolve();
  if (!out.empty()) write_file(out, graph_to_text(g));
  if (!dot.empty()) write_file(dot, graph_to_dot(g));
  auto k = regular_degree(g);
  if (json) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["regular"] = k ? nlohmann::ordered_json(*k) : nlohmann::ordered_json(nullptr);
    j["connected"] = is_connected(g);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count();
    if (k) std::cout << " " << *k << "-regular";
    std::cout << (is_connected(g) ? " connected" : " disconnected") << '\n';
  }
  return 0;
}

int cmd_gamma(const GraphInput& input, const std::string& method, bool json) {
  Graph g = input.resolve();
  GammaResult res;
  if (method == "naive")
    res = gamma_naive(g);
  else if (method == "exact" || method == "auto")
    res = gamma_exact(g);
  else
    throw std::invalid_argument("--method must be auto, exact or naive");
  if (json)
    std::cout << gamma_result_to_json(res);
  else
    std::cout << res.gamma << '\n';
  return 0;
}

int cmd_audit(const std::string& claim, int max_order, const std::string& out,
              bool json) {
  ReportDocument doc;
  doc.version = kVersion;
  doc.max_order = max_order;
  if (claim == "all") {
    doc = full_report(max_order);
  } else {
    auto id = claim_id_from_name(claim);
    if (!id) throw std::invalid_argument("unknown claim id '" + claim + "'");
    doc.claims.push_back(audit_claim(*id, max_order));
  }
  std::string serialized = report_to_json(doc);
  if (!out.empty()) write_file(out, serialized);
  if (json) {
    std::cout << serialized;
  } else {
    for (const auto& c : doc.claims) {
      std::cout << claim_id_name(c.claim) << ": " << claim_status_name(c.status)
                << " (scope " << c.scope << ", " << c.instances_checked
                << " instances, " << c.counterexamples.size()
                << " counterexamples)\n";
    }
  }
  return all_confirmed(doc) ? 0 : 1;
}

int cmd_enumerate_cubic(int order, const std::string& groups, bool json) {
  std::vector<std::string> filter;
  if (!groups.empty()) {
    std::stringstream ss(groups);
    std::string item;
    while (std::getline(ss, item, ',')) filter.push_back(item);
  }
  auto classes = enumerate_cubic_cayley_classes(order, filter);
  if (json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& entry : classes) {
      nlohmann::ordered_json c;
      c["n"] = entry.representative.vertex_count();
      c["gamma"] = entry.gamma;
      c["realizations"] = nlohmann::ordered_json::array();
      for (const auto& [group, gens] : entry.realizations) {
        nlohmann::ordered_json r;
        r["group"] = group;
        r["connection_set"] = gens;
        c["realizations"].push_back(std::move(r));
      }
      j.push_back(std::move(c));
    }
    std::cout << j.dump(2) << '\n';
  } else {
    if (classes.empty())
      std::cout << "no cubic Cayley graphs of order " << order
                << " (odd order has no involution)\n";
    for (size_t i = 0; i < classes.size(); ++i) {
      const auto& entry = classes[i];
      const auto& [group, gens] = entry.realizations.front();
      std::cout << "class " << i << ": gamma=" << entry.gamma << ", "
                << entry.realizations.size() << " realizations, rep " << group
                << " { ";
      for (const auto& s : gens) std::cout << s << ' ';
      std::cout << "}\n";
    }
  }
  return 0;
}

int cmd_export(const GraphInput& input, const std::string& txt,
               const std::string& dot) {
  Graph g = input.resolve();
  if (txt.empty() && dot.empty())
    throw std::invalid_argument("export needs --txt or --dot");
  if (!txt.empty()) write_file(txt, graph_to_text(g));
  if (!dot.empty()) write_file(dot, graph_to_dot(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed domination toolkit for Cayley graphs of small groups"};
  app.require_subcommand(1);

  // group
  auto* group_cmd = app.add_subcommand("group", "inspect or export a group");
  std::string g_name, g_from, g_out;
  int g_list = 0;
  bool g_json = false;
  group_cmd->add_option("--name", g_name, "group spec, e.g. cyclic:6 or D8");
  group_cmd->add_option("--list-order", g_list, "list catalog groups of this order");
  group_cmd->add_option("--from-json", g_from, "load and validate a group JSON file");
  group_cmd->add_option("--out", g_out, "write group JSON here");
  group_cmd->add_flag("--json", g_json, "machine output");

  // build
  auto* build_cmd = app.add_subcommand("build", "construct a graph");
  GraphInput b_in;
  b_in.attach(build_cmd);
  std::string b_out, b_dot;
  bool b_json = false;
  build_cmd->add_option("--out", b_out, "write graph text format here");
  build_cmd->add_option("--dot", b_dot, "write DOT here");
  build_cmd->add_flag("--json", b_json, "machine output");

  // gamma
  auto* gamma_cmd = app.add_subcommand("gamma", "compute the signed domination number");
  GraphInput c_in;
  c_in.attach(gamma_cmd);
  std::string c_method = "auto";
  bool c_json = false;
  gamma_cmd->add_option("--method", c_method, "auto | exact | naive");
  gamma_cmd->add_flag("--json", c_json, "machine output");

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "audit the claim registry");
  std::string a_claim = "all", a_out;
  int a_max = 12;
  bool a_json = false;
  audit_cmd->add_option("--claim", a_claim, "claim id or 'all'");
  audit_cmd->add_option("--max-order", a_max, "catalog order bound (2..12)");
  audit_cmd->add_option("--out", a_out, "write report JSON here");
  audit_cmd->add_flag("--json", a_json, "print report JSON to stdout");

  // enumerate-cubic
  auto* cubic_cmd = app.add_subcommand("enumerate-cubic",
                                       "isomorphism classes of cubic Cayley graphs");
  int e_order = 8;
  std::string e_groups;
  bool e_json = false;
  cubic_cmd->add_option("--order", e_order, "group order (even, <= 12)")->required();
  cubic_cmd->add_option("--groups", e_groups, "restrict to these catalog names");
  cubic_cmd->add_flag("--json", e_json, "machine output");

  // export
  auto* export_cmd = app.add_subcommand("export", "convert a graph to text or DOT");
  GraphInput x_in;
  x_in.attach(export_cmd);
  std::string x_txt, x_dot;
  export_cmd->add_option("--txt", x_txt, "write graph text format here");
  export_cmd->add_option("--dot", x_dot, "write DOT here");

  try {
    app.parse(argc, argv);
    if (group_cmd->parsed()) return cmd_group(g_name, g_list, g_from, g_out, g_json);
    if (build_cmd->parsed()) return cmd_build(b_in, b_out, b_dot, b_json);
    if (gamma_cmd->parsed()) return cmd_gamma(c_in, c_method, c_json);
    if (audit_cmd->parsed()) return cmd_audit(a_claim, a_max, a_out, a_json);
    if (cubic_cmd->parsed()) return cmd_enumerate_cubic(e_order, e_groups, e_json);
    if (export_cmd->parsed()) return cmd_export(x_in, x_txt, x_dot);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CertificateError& e) {
    std::cerr << "certificate failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
