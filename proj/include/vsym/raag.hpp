#pragma once
// Commutation graph of PVT_n and chordality testing.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vsym {

class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const { return labels_.at(v); }
  void add_edge(int a, int b);  // rejects loops; repeated edges are ignored
  bool adjacent(int a, int b) const { return adj_[a][b] != 0; }
  const std::vector<int>& neighbours(int v) const { return nbrs_.at(v); }
  std::size_t edge_count() const { return edges_; }
  std::vector<std::pair<int, int>> edges() const;
  /// Induced subgraph on the listed vertices, in the listed order.
  SimpleGraph induced(const std::vector<int>& keep) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<char>> adj_;
  std::vector<std::vector<int>> nbrs_;
  std::size_t edges_ = 0;
};

/// Vertices: pairs {i,j}, lexicographic, labelled "i,j". Edges: disjoint pairs.
SimpleGraph pvt_graph(int n);

struct ChordalityResult {
  bool chordal = true;
  std::vector<int> elimination_order;  // when chordal
  std::vector<int> chordless_cycle;    // when not, length >= 4
};

/// Lex-BFS from vertex 0 with ties to the smaller index.
std::vector<int> lex_bfs(const SimpleGraph& g);
ChordalityResult is_chordal(const SimpleGraph& g);

/// Later neighbours of each vertex in the order form a clique.
bool verify_peo(const SimpleGraph& g, const std::vector<int>& order);
bool verify_chordless_cycle(const SimpleGraph& g, const std::vector<int>& cycle);

bool pvt_commutator_free(int n);

}  // namespace vsym
