#include "augcut/chain.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "augcut/errors.hpp"
#include "augcut/extreme_sets.hpp"

namespace augcut {

namespace {

std::vector<int> parents_of(const LaminarTree& t) {
  std::vector<int> parent(t.size());
  for (int x = 0; x < t.size(); ++x) parent[x] = t.nodes[x].parent;
  return parent;
}

std::vector<Edge> merge_edges(const std::vector<Edge>& edges) {
  std::map<std::pair<Vertex, Vertex>, Weight> acc;
  for (const auto& e : edges) {
    if (e.w <= 0) continue;
    acc[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.w;
  }
  std::vector<Edge> out;
  out.reserve(acc.size());
  for (const auto& [key, w] : acc) out.push_back({key.first, key.second, w});
  return out;
}

}  // namespace

ChainEngine::ChainEngine(const WeightedGraph& g, Weight tau, std::vector<Weight> b,
                         const ExtremeSetsTree& tree, ChainOptions options)
    : g_(&g),
      tau_(tau),
      b_initial_(std::move(b)),
      tree_(&tree),
      options_(std::move(options)),
      pt_(parents_of(tree.tree), tree.delta) {
  int n = g.n();
  const LaminarTree& t = tree.tree;
  if (static_cast<int>(b_initial_.size()) != n) throw InputError("one degree bound per vertex expected");
  Weight b_sum = 0;
  for (Weight x : b_initial_) {
    if (x < 0 || x >= kUnbounded) throw InputError("chain phase needs finite non-negative degrees");
    b_sum += x;
  }
  big_ = 4 * (g.total_weight() + b_sum + 1);

  leaf_of_ = t.leaf_nodes();
  if (static_cast<int>(leaf_of_.size()) != n) throw InputError("tree leaves do not match the graph");
  first_pos_.assign(t.size(), n);
  end_pos_.assign(t.size(), 0);
  vertex_at_.assign(n, 0);
  int next = 0;
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (t.is_leaf(x)) {
      vertex_at_[next] = t.nodes[x].leaf;
      first_pos_[x] = next;
      end_pos_[x] = ++next;
    }
    const auto& kids = t.nodes[x].children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  for (int x : t.postorder()) {
    for (int c : t.nodes[x].children) {
      first_pos_[x] = std::min(first_pos_[x], first_pos_[c]);
      end_pos_[x] = std::max(end_pos_[x], end_pos_[c]);
    }
  }
  std::vector<int> pos_of(n);
  for (int p = 0; p < n; ++p) pos_of[vertex_at_[p]] = p;

  while (vac_cap_ < std::max(n, 1)) vac_cap_ <<= 1;
  vac_max_.assign(2 * vac_cap_, -1);
  deg_f_.assign(n, 0);
  key1_.assign(n, 0);
  b_explicit_ = b_initial_;
  vertex_edges_.assign(n, {});
  for (Vertex v = 0; v < n; ++v) vac_max_[vac_cap_ + pos_of[v]] = b_explicit_[v];
  for (int i = vac_cap_ - 1; i >= 1; --i) vac_max_[i] = std::max(vac_max_[2 * i], vac_max_[2 * i + 1]);

  for (int x : refresh(t.root)) insert_entry(x, order_.end());
  finalize_dirty();
  reestablish_ends();
  repair();
  finalize_dirty();
  stats_.single_set_left = order_.size() == 1;
}

Weight ChainEngine::b_true(Vertex v) const {
  return deg_f_[v] > 0 ? key1_[v] - deg_f_[v] * t_global_ : b_explicit_[v];
}

void ChainEngine::update_vacancy(Vertex v) {
  int i = vac_cap_ + first_pos_[leaf_of_[v]];
  vac_max_[i] = deg_f_[v] == 0 ? b_explicit_[v] : -1;
  for (i >>= 1; i >= 1; i >>= 1) vac_max_[i] = std::max(vac_max_[2 * i], vac_max_[2 * i + 1]);
}

std::pair<Weight, int> ChainEngine::max_vacancy(int lo, int hi) const {
  // Leftmost maximum over positions [lo, hi).
  Weight best = -1;
  int where = -1;
  std::vector<std::tuple<int, int, int>> stack{{1, 0, vac_cap_}};
  while (!stack.empty()) {
    auto [node, l, r] = stack.back();
    stack.pop_back();
    if (r <= lo || hi <= l) continue;
    if (lo <= l && r <= hi) {
      // Pieces come left to right, so the first maximum wins ties.
      if (vac_max_[node] > best) {
        best = vac_max_[node];
        where = node;
      }
      continue;
    }
    int mid = (l + r) / 2;
    stack.push_back({2 * node + 1, mid, r});
    stack.push_back({2 * node, l, mid});
  }
  if (where < 0) return {-1, -1};
  while (where < vac_cap_) where = vac_max_[2 * where] == best ? 2 * where : 2 * where + 1;
  return {best, where - vac_cap_};
}

void ChainEngine::set_degree(Vertex v, int d) {
  Weight b = b_true(v);
  if (deg_f_[v] > 0) q1_[deg_f_[v]].erase({key1_[v], v});
  deg_f_[v] = d;
  if (d > 0) {
    key1_[v] = b + d * t_global_;
    q1_[d].insert({key1_[v], v});
  } else {
    b_explicit_[v] = b;
  }
  update_vacancy(v);
}

int ChainEngine::degree_classes(const Entry& e) const {
  return (e.left_edge >= 0 ? 1 : 0) + (e.right_edge >= 0 ? 1 : 0);
}

Weight ChainEngine::delta_true(const Entry& e) const {
  Weight d = pt_.value(e.node);
  for (int id : {e.left_edge, e.right_edge}) {
    if (id >= 0) d += t_global_ - edges_[id].birth;
  }
  return d;
}

bool ChainEngine::currently_extreme(int node) {
  const LaminarTree& t = tree_->tree;
  if (node == t.root) return false;
  if (t.is_leaf(node)) return true;
  pt_.add_path(node, node, big_);
  Weight below = pt_.min_subtree(node);
  pt_.add_path(node, node, -big_);
  return pt_.value(node) < below;
}

std::vector<int> ChainEngine::refresh(int node) {
  const LaminarTree& t = tree_->tree;
  std::vector<int> out;
  if (currently_extreme(node)) return out;
  std::vector<int> stack(t.nodes[node].children.rbegin(), t.nodes[node].children.rend());
  while (!stack.empty()) {
    int y = stack.back();
    stack.pop_back();
    if (currently_extreme(y)) {
      if (tau_ - pt_.value(y) >= 2) out.push_back(y);
      continue;
    }
    const auto& kids = t.nodes[y].children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

Weight ChainEngine::t3_compute(const Entry& e) {
  int c = degree_classes(e);
  int x = e.node;
  if (c == 0 || tree_->tree.is_leaf(x)) return kWeightMax;
  Weight dx = delta_true(e);
  Weight m[3] = {kWeightMax, kWeightMax, kWeightMax};
  auto real = [&](Weight v, Weight extra) { return v < big_ ? v + extra : kWeightMax; };
  pt_.add_path(x, x, big_);
  if (c == 2) {
    const LiveEdge& right = edges_[e.right_edge];
    const LiveEdge& left = edges_[e.left_edge];
    int la = leaf_of_[right.u];
    int lb = leaf_of_[left.v];
    Weight wr = t_global_ - right.birth;
    Weight wl = t_global_ - left.birth;
    int y = pt_.lca(la, lb);
    m[2] = real(pt_.min_path(y, x), wr + wl);
    pt_.add_path(y, x, big_);
    m[1] = std::min(real(pt_.min_path(la, y), wr), real(pt_.min_path(lb, y), wl));
    pt_.add_path(la, lb, big_);
    m[0] = real(pt_.min_subtree(x), 0);
    pt_.add_path(la, lb, -big_);
    pt_.add_path(y, x, -big_);
  } else {
    bool right_side = e.right_edge >= 0;
    const LiveEdge& only = edges_[right_side ? e.right_edge : e.left_edge];
    int la = leaf_of_[right_side ? only.u : only.v];
    pt_.add_path(la, x, big_);
    m[0] = real(pt_.min_subtree(x), 0);
    pt_.add_path(la, x, -big_);
  }
  pt_.add_path(x, x, -big_);

  Weight best = kWeightMax;
  for (int cl = 0; cl < c; ++cl) {
    if (m[cl] == kWeightMax) continue;
    Weight gap = m[cl] - dx;
    if (gap <= 0) throw DefectError("listed set " + std::to_string(x) + " is no longer extreme");
    best = std::min(best, ceil_div(gap, c - cl));
  }
  return best;
}

Weight ChainEngine::t3_query(int position) {
  if (position < 0 || position >= static_cast<int>(order_.size())) throw InputError("no such listed set");
  auto it = order_.begin();
  std::advance(it, position);
  return t3_compute(entries_[*it]);
}

void ChainEngine::mark_dirty(int entry) {
  unlinked_.push_back(entry);
  if (!entries_[entry].dirty) {
    entries_[entry].dirty = true;
    dirty_.push_back(entry);
  }
}

int ChainEngine::insert_entry(int node, std::list<int>::iterator before) {
  int id = static_cast<int>(entries_.size());
  entries_.push_back({});
  Entry& e = entries_.back();
  e.node = node;
  e.alive = true;
  e.it = order_.insert(before, id);
  mark_dirty(id);
  return id;
}

void ChainEngine::detach(int edge) {
  LiveEdge& e = edges_[edge];
  if (!e.alive) return;
  e.alive = false;
  Weight w = t_global_ - e.birth;
  if (w > 0) {
    int lu = leaf_of_[e.u];
    int lv = leaf_of_[e.v];
    pt_.add_path(lu, lv, w);
    int top = pt_.lca(lu, lv);
    pt_.add_path(top, top, -w);
    materialized_.push_back({std::min(e.u, e.v), std::max(e.u, e.v), w});
  }
  set_degree(e.u, deg_f_[e.u] - 1);
  set_degree(e.v, deg_f_[e.v] - 1);
  for (Vertex v : {e.u, e.v}) {
    auto& list = vertex_edges_[v];
    list.erase(std::remove(list.begin(), list.end(), edge), list.end());
  }
  entries_[e.left].right_edge = -1;
  entries_[e.right].left_edge = -1;
  mark_dirty(e.left);
  mark_dirty(e.right);
}

Vertex ChainEngine::pick_endpoint(int entry, bool right_slot) {
  const Entry& e = entries_[entry];
  Vertex other = -1;
  if (right_slot && e.left_edge >= 0) other = edges_[e.left_edge].v;
  if (!right_slot && e.right_edge >= 0) other = edges_[e.right_edge].u;
  auto [best, pos] = max_vacancy(first_pos_[e.node], end_pos_[e.node]);
  if (best >= 1) return vertex_at_[pos];
  if (other >= 0 && b_true(other) >= 2) return other;
  throw DefectError("listed set " + std::to_string(e.node) + " has no vacant vertex");
}

void ChainEngine::attach(int left, int right) {
  Vertex u = pick_endpoint(left, true);
  Vertex v = pick_endpoint(right, false);
  int id = static_cast<int>(edges_.size());
  edges_.push_back({u, v, left, right, t_global_, true});
  set_degree(u, deg_f_[u] + 1);
  set_degree(v, deg_f_[v] + 1);
  vertex_edges_[u].push_back(id);
  vertex_edges_[v].push_back(id);
  entries_[left].right_edge = id;
  entries_[right].left_edge = id;
  mark_dirty(left);
  mark_dirty(right);
}

void ChainEngine::repair() {
  for (std::size_t i = 0; i < unlinked_.size(); ++i) {
    int id = unlinked_[i];
    if (!entries_[id].alive) continue;
    auto it = entries_[id].it;
    if (it != order_.begin() && entries_[id].left_edge < 0) attach(*std::prev(it), id);
    if (std::next(it) != order_.end() && entries_[id].right_edge < 0) attach(id, *std::next(it));
  }
  unlinked_.clear();
}

void ChainEngine::finalize_dirty() {
  for (int id : dirty_) {
    Entry& e = entries_[id];
    e.dirty = false;
    if (e.cls >= 0) q2_[e.cls].erase({e.key, id});
    if (e.expiry != kWeightMax) t3_.erase({e.expiry, id});
    e.cls = -1;
    e.expiry = kWeightMax;
    if (!e.alive) continue;
    e.cls = degree_classes(e);
    e.key = delta_true(e) - e.cls * t_global_;
    q2_[e.cls].insert({e.key, id});
    Weight t3 = t3_compute(e);
    if (t3 != kWeightMax) {
      e.expiry = t_global_ + t3;
      t3_.insert({e.expiry, id});
    }
  }
  dirty_.clear();
}

void ChainEngine::reestablish_ends() {
  if (order_.size() < 2) return;
  int front = order_.front();
  int back = order_.back();
  std::vector<std::tuple<Weight, int, int, int>> cand;
  for (int c = 0; c < 3; ++c) {
    int taken = 0;
    for (auto it = q2_[c].begin(); it != q2_[c].end() && taken < 2; ++it, ++taken) {
      int id = it->second;
      int is_end = id == front || id == back ? 0 : 1;
      cand.push_back({it->first + c * t_global_, is_end, entries_[id].node, id});
    }
  }
  std::sort(cand.begin(), cand.end());
  int a = std::get<3>(cand[0]);
  int b = std::get<3>(cand[1]);
  int new_front, new_back;
  if (front == a || front == b) {
    new_front = front;
    new_back = front == a ? b : a;
  } else if (back == a || back == b) {
    new_back = back;
    new_front = back == a ? b : a;
  } else {
    new_front = a;
    new_back = b;
  }
  auto move = [&](int id, bool to_front) {
    if ((to_front ? order_.front() : order_.back()) == id) return;
    Entry& e = entries_[id];
    if (e.left_edge >= 0) detach(e.left_edge);
    if (e.right_edge >= 0) detach(e.right_edge);
    if (e.it != order_.begin()) mark_dirty(*std::prev(e.it));
    if (std::next(e.it) != order_.end()) mark_dirty(*std::next(e.it));
    mark_dirty(to_front ? order_.front() : order_.back());
    order_.splice(to_front ? order_.begin() : order_.end(), order_, e.it);
    mark_dirty(id);
  };
  move(new_front, true);
  move(new_back, false);
}

void ChainEngine::remove_entry(int entry) {
  Entry& e = entries_[entry];
  if (e.left_edge >= 0) detach(e.left_edge);
  if (e.right_edge >= 0) detach(e.right_edge);
  auto pos = e.it;
  if (pos != order_.begin()) mark_dirty(*std::prev(pos));
  if (std::next(pos) != order_.end()) mark_dirty(*std::next(pos));
  std::vector<int> replacements = refresh(e.node);
  for (int x : replacements) insert_entry(x, pos);
  order_.erase(pos);
  entries_[entry].alive = false;
  mark_dirty(entry);
}

TValues ChainEngine::compute_t() const {
  TValues out;
  for (int c = 1; c <= 2; ++c) {
    if (!q1_[c].empty()) {
      Weight b = q1_[c].begin()->first - c * t_global_;
      out.t1 = std::min(out.t1, floor_div(b, c));
    }
    if (!q2_[c].empty()) {
      Weight dem = tau_ - (q2_[c].rbegin()->first + c * t_global_);
      Weight t2 = options_.t2_rule == T2Rule::kPrinted ? floor_div(dem, c) : floor_div(dem - 2, c) + 1;
      out.t2 = std::min(out.t2, t2);
    }
  }
  if (!t3_.empty()) out.t3 = t3_.begin()->first - t_global_;
  out.t = std::min({out.t1, out.t2, out.t3});
  return out;
}

void ChainEngine::apply(Weight t) {
  if (t <= 0 || t == kWeightMax) throw DefectError("chain multiplicity " + to_string(t) + " is not positive");
  t_global_ += t;
  ++stats_.batches;

  std::set<int> removed;
  for (int c = 1; c <= 2; ++c) {
    for (auto it = q2_[c].rbegin(); it != q2_[c].rend(); ++it) {
      if (tau_ - (it->first + c * t_global_) >= 2) break;
      if (removed.insert(it->second).second) ++stats_.case2;
    }
  }
  for (auto it = t3_.begin(); it != t3_.end() && it->first <= t_global_; ++it) {
    if (removed.insert(it->second).second) ++stats_.case3;
  }
  std::vector<Vertex> exhausted;
  for (int c = 1; c <= 2; ++c) {
    for (const auto& [key, v] : q1_[c]) {
      if (key - c * t_global_ >= c) break;
      exhausted.push_back(v);
    }
  }
  stats_.case1 += static_cast<int>(exhausted.size());

  for (int id : removed) remove_entry(id);
  for (Vertex v : exhausted) {
    std::vector<int> incident = vertex_edges_[v];
    for (int id : incident) detach(id);
  }
  finalize_dirty();
  if (!removed.empty()) reestablish_ends();
  repair();
  finalize_dirty();
  stats_.single_set_left = order_.size() == 1;
}

ChainResult ChainEngine::run() {
  if (options_.self_check) self_check();
  if (options_.on_batch) options_.on_batch(snapshot());
  while (!done()) {
    apply(compute_t().t);
    if (options_.self_check) self_check();
    if (options_.on_batch) options_.on_batch(snapshot());
  }
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) detach(id);
  finalize_dirty();
  ChainResult out;
  out.edges = merge_edges(materialized_);
  out.b_remaining.resize(g_->n());
  for (Vertex v = 0; v < g_->n(); ++v) out.b_remaining[v] = b_true(v);
  out.stats = stats_;
  return out;
}

std::vector<int> ChainEngine::listed_sets() const {
  std::vector<int> out;
  for (int id : order_) out.push_back(entries_[id].node);
  return out;
}

std::vector<Edge> ChainEngine::chain_edges() const {
  std::vector<Edge> out;
  for (int id : order_) {
    int e = entries_[id].right_edge;
    if (e >= 0) out.push_back({edges_[e].u, edges_[e].v, t_global_ - edges_[e].birth});
  }
  return out;
}

ChainSnapshot ChainEngine::snapshot() const {
  const LaminarTree& t = tree_->tree;
  ChainSnapshot s;
  s.t_global = t_global_;
  s.listed = listed_sets();
  s.live = chain_edges();
  s.materialized = materialized_;
  s.b.resize(g_->n());
  for (Vertex v = 0; v < g_->n(); ++v) s.b[v] = b_true(v);
  std::vector<Weight> extra(t.size(), 0);
  for (const auto& e : s.live) {
    int lu = leaf_of_[e.u];
    int lv = leaf_of_[e.v];
    extra[lu] += e.w;
    extra[lv] += e.w;
    extra[pt_.lca(lu, lv)] -= 2 * e.w;
  }
  for (int x : t.postorder()) {
    for (int c : t.nodes[x].children) extra[x] += extra[c];
  }
  s.delta.resize(t.size());
  for (int x = 0; x < t.size(); ++x) s.delta[x] = pt_.value(x) + extra[x];
  return s;
}

void ChainEngine::self_check() {
  ++stats_.self_checks;
  const LaminarTree& t = tree_->tree;
  ChainSnapshot s = snapshot();
  auto fail = [&](const std::string& what) {
    throw DefectError("chain self-check after batch " + std::to_string(stats_.batches) + ": " + what);
  };
  std::vector<Edge> all = s.materialized;
  all.insert(all.end(), s.live.begin(), s.live.end());
  WeightedGraph h = add_edges(*g_, merge_edges(all));
  std::vector<Weight> delta = subtree_cut_values(h, t);
  for (int x = 0; x < t.size(); ++x) {
    if (delta[x] != s.delta[x]) fail("δ of node " + std::to_string(x) + " drifted");
  }
  std::vector<Weight> used(g_->n(), 0);
  for (const auto& e : all) {
    used[e.u] += e.w;
    used[e.v] += e.w;
  }
  for (Vertex v = 0; v < g_->n(); ++v) {
    if (b_initial_[v] - used[v] != s.b[v]) fail("vacancy of vertex " + std::to_string(v) + " drifted");
    if (s.b[v] < deg_f_[v]) fail("chain endpoint " + std::to_string(v) + " has no vacant degree");
  }

  std::vector<Weight> below(t.size(), kWeightMax);
  std::vector<Weight> b_sum(t.size(), 0);
  for (int x : t.postorder()) {
    if (t.is_leaf(x)) b_sum[x] = s.b[t.nodes[x].leaf];
    for (int c : t.nodes[x].children) {
      below[x] = std::min({below[x], below[c], delta[c]});
      b_sum[x] += b_sum[c];
    }
  }
  std::vector<char> extreme(t.size(), 0);
  for (int x = 0; x < t.size(); ++x) extreme[x] = x != t.root && delta[x] < below[x];
  for (int x = 0; x < t.size(); ++x) {
    if (extreme[x] && b_sum[x] < tau_ - delta[x]) fail("extreme set " + std::to_string(x) + " lacks degree");
  }
  std::vector<int> expected;
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (extreme[x]) {
      if (tau_ - delta[x] >= 2) expected.push_back(x);
      continue;
    }
    for (int c : t.nodes[x].children) stack.push_back(c);
  }
  std::vector<int> listed = s.listed;
  std::sort(expected.begin(), expected.end());
  std::sort(listed.begin(), listed.end());
  if (expected != listed) fail("listed sets differ from the maximal demand-2 extreme sets");
  if (s.listed.size() >= 2) {
    Weight ends = std::max(delta[s.listed.front()], delta[s.listed.back()]);
    for (std::size_t i = 1; i + 1 < s.listed.size(); ++i) {
      if (delta[s.listed[i]] < ends) fail("chain ends are not the two smallest sets");
    }
  }
  for (const auto& e : all) {
    int top = pt_.lca(leaf_of_[e.u], leaf_of_[e.v]);
    if (extreme[top]) fail("an added edge lies inside an extreme set");
  }
  if (g_->n() <= 12) {
    auto now = base_case_extreme_sets(h).node_sets();
    std::vector<std::vector<Vertex>> want;
    for (int x = 0; x < t.size(); ++x) {
      if (extreme[x] || x == t.root) want.push_back(t.members(x));
    }
    std::sort(want.begin(), want.end());
    if (now != want) fail("extreme sets of the augmented graph differ from the tracked ones");
  }
}

ChainResult chain_phase(const WeightedGraph& g, Weight tau, const std::vector<Weight>& b,
                        const ExtremeSetsTree& tree, const ChainOptions& options) {
  return ChainEngine(g, tau, b, tree, options).run();
}

}  // namespace augcut
