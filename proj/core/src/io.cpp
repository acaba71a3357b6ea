#include "augcut/io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "augcut/errors.hpp"

namespace augcut {

namespace {

using json = nlohmann::json;

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

bool skip(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

json weight_json(Weight w) {
  if (w >= std::numeric_limits<std::int64_t>::min() && w <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(w);
  }
  return to_string(w);
}

Weight weight_from(const json& j) {
  if (j.is_string()) return parse_weight(j.get<std::string>());
  if (j.is_number_integer()) return j.get<std::int64_t>();
  throw InputError("expected an integer in JSON");
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({{"u", e.u + 1}, {"v", e.v + 1}, {"w", weight_json(e.w)}});
  return out;
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (skip(line)) continue;
    auto tokens = split(line);
    if (n < 0) {
      if (tokens.size() != 2) fail("expected header 'n m'");
      Weight a = parse_weight(tokens[0]);
      Weight b = parse_weight(tokens[1]);
      if (a < 1 || a > std::numeric_limits<int>::max() / 2 || b < 0 || b > std::numeric_limits<int>::max()) {
        fail("header out of range");
      }
      n = static_cast<long long>(a);
      m = static_cast<long long>(b);
      edges.reserve(m);
      continue;
    }
    if (tokens.size() != 3) fail("expected 'u v w'");
    if (static_cast<long long>(edges.size()) == m) fail("more edge lines than the header announces");
    Weight u = parse_weight(tokens[0]);
    Weight v = parse_weight(tokens[1]);
    Weight w = parse_weight(tokens[2]);
    if (u < 1 || u > n || v < 1 || v > n) fail("vertex id out of range");
    if (w < 1) fail("weight must be positive");
    edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), w});
  }
  if (n < 0) throw InputError("missing header line");
  if (static_cast<long long>(edges.size()) != m) {
    throw InputError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return WeightedGraph::build(static_cast<int>(n), std::move(edges));
}

WeightedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << ' ' << to_string(e.w) << '\n';
}

std::vector<Weight> read_beta(std::istream& in, int n) {
  std::vector<Weight> beta(n, kUnbounded);
  std::vector<char> seen(n, 0);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip(line)) continue;
    auto tokens = split(line);
    if (tokens.size() != 2) throw InputError("bound line " + std::to_string(line_no) + ": expected 'v beta'");
    Weight v = parse_weight(tokens[0]);
    Weight b = parse_weight(tokens[1]);
    if (v < 1 || v > n) throw InputError("bound line " + std::to_string(line_no) + ": vertex out of range");
    if (b < -1) throw InputError("bound line " + std::to_string(line_no) + ": bound must be >= -1");
    if (seen[v - 1]++) throw InputError("bound line " + std::to_string(line_no) + ": vertex listed twice");
    beta[v - 1] = b < 0 ? kUnbounded : b;
  }
  return beta;
}

std::string tree_to_json(const ExtremeSetsTree& tree, bool with_members) {
  const LaminarTree& t = tree.tree;
  json nodes = json::array();
  for (int x = 0; x < t.size(); ++x) {
    json node = {{"id", x}, {"parent", t.nodes[x].parent}, {"delta", weight_json(tree.delta[x])}};
    if (t.is_leaf(x)) node["leaf"] = t.nodes[x].leaf + 1;
    if (with_members) {
      json members = json::array();
      for (Vertex v : t.members(x)) members.push_back(v + 1);
      node["members"] = std::move(members);
    }
    nodes.push_back(std::move(node));
  }
  return json{{"nodes", std::move(nodes)}}.dump();
}

ExtremeSetsTree tree_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed tree JSON: ") + e.what());
  }
  ExtremeSetsTree out;
  try {
    const auto& nodes = doc.at("nodes");
    int size = static_cast<int>(nodes.size());
    out.tree.nodes.resize(size);
    out.delta.resize(size);
    for (const auto& node : nodes) {
      int id = node.at("id").get<int>();
      int parent = node.at("parent").get<int>();
      if (id < 0 || id >= size || parent < -1 || parent >= size) throw InputError("tree node id out of range");
      auto& slot = out.tree.nodes[id];
      slot.parent = parent;
      if (node.contains("leaf")) slot.leaf = node.at("leaf").get<int>() - 1;
      out.delta[id] = weight_from(node.at("delta"));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed tree JSON: ") + e.what());
  }
  for (int x = 0; x < out.tree.size(); ++x) {
    int p = out.tree.nodes[x].parent;
    if (p < 0) {
      if (out.tree.root >= 0) throw InputError("tree JSON has two roots");
      out.tree.root = x;
    } else {
      out.tree.nodes[p].children.push_back(x);
    }
  }
  if (out.tree.root < 0) throw InputError("tree JSON has no root");
  return out;
}

void write_tree_text(std::ostream& out, const ExtremeSetsTree& tree) {
  const LaminarTree& t = tree.tree;
  std::vector<std::pair<int, int>> stack{{t.root, 0}};
  while (!stack.empty()) {
    auto [x, depth] = stack.back();
    stack.pop_back();
    out << std::string(2 * depth, ' ');
    if (t.is_leaf(x)) {
      out << "vertex " << t.nodes[x].leaf + 1;
    } else {
      out << (x == t.root ? "root" : "set") << " {";
      auto members = t.members(x);
      for (std::size_t i = 0; i < members.size(); ++i) out << (i ? " " : "") << members[i] + 1;
      out << '}';
    }
    if (x != t.root) out << " delta " << to_string(tree.delta[x]);
    out << '\n';
    const auto& kids = t.nodes[x].children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back({*it, depth + 1});
  }
}

std::string solution_to_json(const DecaSolution& solution, Weight tau) {
  json out = {{"tau", weight_json(tau)},
              {"total_weight", weight_json(solution.total_weight)},
              {"external_weight", weight_json(solution.external_weight)},
              {"edges", edges_json(solution.edges)}};
  json audit = json::array();
  for (const auto& e : solution.audit) {
    const char* phase = e.phase == EdgePhase::kChain ? "chain" : e.phase == EdgePhase::kFinish ? "finish" : "matching";
    audit.push_back({{"u", e.u + 1}, {"v", e.v + 1}, {"w", weight_json(e.w)}, {"phase", phase}});
  }
  out["audit"] = std::move(audit);
  out["chain"] = {{"batches", solution.chain.batches},
                  {"case1", solution.chain.case1},
                  {"case2", solution.chain.case2},
                  {"case3", solution.chain.case3}};
  if (solution.report) {
    const auto& r = *solution.report;
    json violations = json::array();
    for (Vertex v : r.degree_violations) violations.push_back(v + 1);
    out["verify"] = {{"pass", r.pass},
                     {"min_cut_after", weight_json(r.min_cut_after)},
                     {"degree_violations", violations},
                     {"weight_total", weight_json(r.weight_total)},
                     {"optimal_weight_expected", weight_json(r.optimal_weight_expected)}};
  }
  return out.dump();
}

std::string split_off_to_json(const SplitOffResult& result) {
  json out = {{"steiner_connectivity", weight_json(result.steiner)},
              {"dropped_self_pairs", result.dropped_self_pairs},
              {"edges", edges_json(result.edges)}};
  return out.dump();
}

std::string bench_to_json(const BenchRecord& r) {
  json out = {{"n", r.n},
              {"m", r.m},
              {"seed", r.seed},
              {"repeat", r.repeat},
              {"seconds_tree", r.seconds_tree},
              {"seconds_augment", r.seconds_augment},
              {"flow_calls", r.flow_calls},
              {"max_depth", r.max_depth},
              {"subproblems", r.subproblems},
              {"max_retries", r.max_retries},
              {"attempts", r.attempts},
              {"tau", weight_json(r.tau)},
              {"total_weight", weight_json(r.total_weight)},
              {"verified", r.verified}};
  return out.dump();
}

}  // namespace augcut
