#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "augcut/deca.hpp"
#include "augcut/graph.hpp"
#include "augcut/laminar_tree.hpp"

namespace augcut {

// Graph files: '#' comment lines, a header "n m", then m lines "u v w" with
// 1-based ids and positive weights. Throws InputError on anything else.
WeightedGraph read_graph(std::istream& in);
WeightedGraph parse_graph(const std::string& text);
void write_graph(std::ostream& out, const WeightedGraph& g);

// Degree-bound files: lines "v beta" with 1-based ids, -1 for unbounded.
// Missing vertices are unbounded.
std::vector<Weight> read_beta(std::istream& in, int n);

// {"nodes": [{"id", "parent", "members"?, "delta"}]}, 1-based members.
std::string tree_to_json(const ExtremeSetsTree& tree, bool with_members = true);
ExtremeSetsTree tree_from_json(const std::string& text);
void write_tree_text(std::ostream& out, const ExtremeSetsTree& tree);

std::string solution_to_json(const DecaSolution& solution, Weight tau);
std::string split_off_to_json(const SplitOffResult& result);

struct BenchRecord {
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  int repeat = 0;
  double seconds_tree = 0;
  double seconds_augment = 0;
  std::uint64_t flow_calls = 0;
  int max_depth = 0;
  int subproblems = 0;
  int max_retries = 0;
  std::int64_t attempts = 0;
  Weight tau = 0;
  Weight total_weight = 0;
  bool verified = false;
};
std::string bench_to_json(const BenchRecord& record);

}  // namespace augcut
