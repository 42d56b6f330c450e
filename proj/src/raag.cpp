#include "vsym/raag.hpp"

#include <algorithm>
#include <queue>

#include "vsym/errors.hpp"

namespace vsym {

SimpleGraph::SimpleGraph(std::vector<std::string> labels)
    : labels_(std::move(labels)),
      adj_(labels_.size(), std::vector<char>(labels_.size(), 0)),
      nbrs_(labels_.size()) {}

void SimpleGraph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= size() || b >= size()) throw RangeError("edge endpoint out of range");
  if (a == b) fail_domain("loops are not allowed");
  if (adj_[a][b]) return;
  adj_[a][b] = adj_[b][a] = 1;
  nbrs_[a].insert(std::upper_bound(nbrs_[a].begin(), nbrs_[a].end(), b), b);
  nbrs_[b].insert(std::upper_bound(nbrs_[b].begin(), nbrs_[b].end(), a), a);
  ++edges_;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b : nbrs_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& keep) const {
  std::vector<std::string> labels;
  for (int v : keep) labels.push_back(label(v));
  SimpleGraph h(std::move(labels));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

SimpleGraph pvt_graph(int n) {
  if (n < 2) throw RangeError("pvt_graph needs n >= 2, got " + std::to_string(n));
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      pairs.emplace_back(i, j);
      labels.push_back(std::to_string(i) + "," + std::to_string(j));
    }
  SimpleGraph g(std::move(labels));
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      auto [i, j] = pairs[a];
      auto [k, l] = pairs[b];
      if (i != k && i != l && j != k && j != l) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  return g;
}

std::vector<int> lex_bfs(const SimpleGraph& g) {
  const int n = g.size();
  std::vector<std::vector<int>> label(n);
  std::vector<char> done(n, 0);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && (best < 0 || label[v] > label[best])) best = v;
    done[best] = 1;
    order.push_back(best);
    for (int u : g.neighbours(best))
      if (!done[u]) label[u].push_back(n - step);
  }
  return order;
}

bool verify_peo(const SimpleGraph& g, const std::vector<int>& order) {
  const int n = g.size();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int k = 0; k < n; ++k) {
    if (order[k] < 0 || order[k] >= n || pos[order[k]] >= 0) return false;
    pos[order[k]] = k;
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> later;
    for (int u : g.neighbours(v))
      if (pos[u] > pos[v]) later.push_back(u);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.adjacent(later[a], later[b])) return false;
  }
  return true;
}

bool verify_chordless_cycle(const SimpleGraph& g, const std::vector<int>& cycle) {
  const std::size_t L = cycle.size();
  if (L < 4) return false;
  std::vector<int> sorted(cycle);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int v : cycle)
    if (v < 0 || v >= g.size()) return false;
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i + 1; j < L; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == L - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

namespace {

// Shortest chordless cycle through some vertex v and two non-adjacent
// neighbours a, b: a shortest a-b path avoiding v and the rest of N(v).
std::vector<int> shortest_chordless_cycle(const SimpleGraph& g) {
  const int n = g.size();
  std::vector<int> best;
  for (int v = 0; v < n; ++v) {
    const auto& nv = g.neighbours(v);
    for (std::size_t ia = 0; ia < nv.size(); ++ia)
      for (std::size_t ib = ia + 1; ib < nv.size(); ++ib) {
        const int a = nv[ia], b = nv[ib];
        if (g.adjacent(a, b)) continue;
        std::vector<char> blocked(n, 0);
        blocked[v] = 1;
        for (int u : nv)
          if (u != a && u != b) blocked[u] = 1;
        std::vector<int> parent(n, -1);
        std::queue<int> q;
        q.push(a);
        parent[a] = a;
        while (!q.empty() && parent[b] < 0) {
          const int x = q.front();
          q.pop();
          for (int y : g.neighbours(x))
            if (!blocked[y] && parent[y] < 0) {
              parent[y] = x;
              q.push(y);
            }
        }
        if (parent[b] < 0) continue;
        std::vector<int> cyc{v};
        std::vector<int> path;
        for (int x = b; x != a; x = parent[x]) path.push_back(x);
        path.push_back(a);
        cyc.insert(cyc.end(), path.rbegin(), path.rend());
        if (best.empty() || cyc.size() < best.size()) best = std::move(cyc);
      }
  }
  return best;
}

}  // namespace

ChordalityResult is_chordal(const SimpleGraph& g) {
  ChordalityResult r;
  auto visit = lex_bfs(g);
  std::reverse(visit.begin(), visit.end());
  if (verify_peo(g, visit)) {
    r.elimination_order = std::move(visit);
    return r;
  }
  r.chordal = false;
  r.chordless_cycle = shortest_chordless_cycle(g);
  if (!verify_chordless_cycle(g, r.chordless_cycle))
    throw std::logic_error("lex-BFS rejected the graph but no chordless cycle was found");
  return r;
}

bool pvt_commutator_free(int n) { return is_chordal(pvt_graph(n)).chordal; }

}  // namespace vsym
