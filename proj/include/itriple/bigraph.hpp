#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace itriple {

enum class Side { eta, kappa };

using Edge = std::pair<std::uint32_t, std::uint32_t>;

// Bipartite graph with distinguished parts eta (size a) and kappa (size b).
// Vertices are dense 0-based indices per side; edges are stored sorted and
// duplicate-free, with per-vertex adjacency rows cached.
class BiGraph {
public:
  BiGraph(std::uint32_t a, std::uint32_t b, std::vector<Edge> edges);

  std::uint32_t eta_size() const { return a_; }
  std::uint32_t kappa_size() const { return b_; }
  std::uint64_t edge_count() const { return edges_.size(); }
  const std::vector<Edge> &edges() const { return edges_; }
  const std::vector<std::uint32_t> &eta_neighbors(std::uint32_t v) const;
  const std::vector<std::uint32_t> &kappa_neighbors(std::uint32_t v) const;
  bool has_edge(std::uint32_t i, std::uint32_t j) const;

  friend bool operator==(const BiGraph &x, const BiGraph &y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.edges_ == y.edges_;
  }

private:
  std::uint32_t a_ = 0, b_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> eta_adj_, kappa_adj_;
};

const std::vector<std::uint32_t> &neighbors(const BiGraph &g, Side side, std::uint32_t v);
BiGraph complement(const BiGraph &g);
BiGraph transpose(const BiGraph &g);

// Sorted degree sequences (multisets) of the two sides.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
degree_profile(const BiGraph &g);

bool is_biregular(const BiGraph &g, std::uint32_t r_eta, std::uint32_t r_kappa);

// Line-based text format: header "bipartite <a> <b>", then one "e <i> <j>"
// line per edge in ascending (i, j) order; '#' comments and blank lines are
// ignored on parse.
std::string serialize(const BiGraph &g);
BiGraph parse_bigraph(const std::string &text);

std::string to_dot(const BiGraph &g);

} // namespace itriple
