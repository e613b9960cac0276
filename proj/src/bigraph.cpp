#include "itriple/bigraph.hpp"

#include <algorithm>
#include <sstream>

#include "itriple/errors.hpp"

namespace itriple {

BiGraph::BiGraph(std::uint32_t a, std::uint32_t b, std::vector<Edge> edges)
    : a_(a), b_(b), edges_(std::move(edges)) {
  check(a_ >= 1 && b_ >= 1, Errc::invalid_argument, "graph parts must be nonempty");
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto &[x, y] = edges_[i];
    if (x >= a_ || y >= b_) {
      std::ostringstream msg;
      msg << "edge (" << x << ", " << y << ") out of range for " << a_ << "x" << b_;
      fail(Errc::out_of_range, msg.str());
    }
    if (i > 0 && edges_[i] == edges_[i - 1]) {
      std::ostringstream msg;
      msg << "duplicate edge (" << x << ", " << y << ")";
      fail(Errc::duplicate_edge, msg.str());
    }
  }
  eta_adj_.resize(a_);
  kappa_adj_.resize(b_);
  for (const auto &[x, y] : edges_) {
    eta_adj_[x].push_back(y);
    kappa_adj_[y].push_back(x);
  }
  for (auto &row : kappa_adj_) std::sort(row.begin(), row.end());
}

const std::vector<std::uint32_t> &BiGraph::eta_neighbors(std::uint32_t v) const {
  check(v < a_, Errc::out_of_range, "eta vertex out of range");
  return eta_adj_[v];
}

const std::vector<std::uint32_t> &BiGraph::kappa_neighbors(std::uint32_t v) const {
  check(v < b_, Errc::out_of_range, "kappa vertex out of range");
  return kappa_adj_[v];
}

bool BiGraph::has_edge(std::uint32_t i, std::uint32_t j) const {
  const auto &row = eta_adj_[i];
  return std::binary_search(row.begin(), row.end(), j);
}

const std::vector<std::uint32_t> &neighbors(const BiGraph &g, Side side, std::uint32_t v) {
  return side == Side::eta ? g.eta_neighbors(v) : g.kappa_neighbors(v);
}

BiGraph complement(const BiGraph &g) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.eta_size()) * g.kappa_size() - g.edges().size());
  for (std::uint32_t i = 0; i < g.eta_size(); ++i)
    for (std::uint32_t j = 0; j < g.kappa_size(); ++j)
      if (!g.has_edge(i, j)) edges.emplace_back(i, j);
  return BiGraph(g.eta_size(), g.kappa_size(), std::move(edges));
}

BiGraph transpose(const BiGraph &g) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto &[i, j] : g.edges()) edges.emplace_back(j, i);
  return BiGraph(g.kappa_size(), g.eta_size(), std::move(edges));
}

std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
degree_profile(const BiGraph &g) {
  std::vector<std::uint32_t> de, dk;
  de.reserve(g.eta_size());
  dk.reserve(g.kappa_size());
  for (std::uint32_t i = 0; i < g.eta_size(); ++i)
    de.push_back(static_cast<std::uint32_t>(g.eta_neighbors(i).size()));
  for (std::uint32_t j = 0; j < g.kappa_size(); ++j)
    dk.push_back(static_cast<std::uint32_t>(g.kappa_neighbors(j).size()));
  std::sort(de.begin(), de.end());
  std::sort(dk.begin(), dk.end());
  return {std::move(de), std::move(dk)};
}

bool is_biregular(const BiGraph &g, std::uint32_t r_eta, std::uint32_t r_kappa) {
  for (std::uint32_t i = 0; i < g.eta_size(); ++i)
    if (g.eta_neighbors(i).size() != r_eta) return false;
  for (std::uint32_t j = 0; j < g.kappa_size(); ++j)
    if (g.kappa_neighbors(j).size() != r_kappa) return false;
  return true;
}

std::string serialize(const BiGraph &g) {
  std::ostringstream out;
  out << "bipartite " << g.eta_size() << ' ' << g.kappa_size() << '\n';
  for (const auto &[i, j] : g.edges()) out << "e " << i << ' ' << j << '\n';
  return out.str();
}

BiGraph parse_bigraph(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  std::uint64_t a = 0, b = 0;
  std::vector<Edge> edges;

  auto parse_error = [&](const std::string &what) -> void {
    std::ostringstream msg;
    msg << "line " << lineno << ": " << what;
    fail(Errc::parse_error, msg.str());
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue; // blank line
    if (tok[0] == '#') continue;
    if (!have_header) {
      if (tok != "bipartite") parse_error("expected 'bipartite <a> <b>' header");
      if (!(ls >> a >> b) || a < 1 || b < 1)
        parse_error("header requires two positive part sizes");
      std::string extra;
      if (ls >> extra) parse_error("trailing tokens after header");
      have_header = true;
      continue;
    }
    if (tok != "e") parse_error("expected edge line 'e <i> <j>'");
    std::uint64_t i = 0, j = 0;
    if (!(ls >> i >> j)) parse_error("edge line requires two vertex indices");
    std::string extra;
    if (ls >> extra) parse_error("trailing tokens after edge");
    if (i >= a || j >= b) parse_error("edge endpoint out of range");
    edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
  }
  if (!have_header) {
    lineno = lineno == 0 ? 1 : lineno;
    parse_error("missing 'bipartite' header");
  }
  // Duplicate detection happens in the constructor, but report it as a parse
  // problem with context preserved.
  try {
    return BiGraph(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                   std::move(edges));
  } catch (const Error &e) {
    fail(Errc::parse_error, std::string("invalid graph: ") + e.what());
  }
}

std::string to_dot(const BiGraph &g) {
  std::ostringstream out;
  out << "graph bipartite_graph {\n";
  for (std::uint32_t i = 0; i < g.eta_size(); ++i) out << "  h" << i << ";\n";
  for (std::uint32_t j = 0; j < g.kappa_size(); ++j) out << "  k" << j << ";\n";
  for (const auto &[i, j] : g.edges()) out << "  h" << i << " -- k" << j << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace itriple
