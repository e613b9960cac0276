#include "itriple/autgraph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "itriple/errors.hpp"

namespace itriple {

bool is_automorphism(const BiGraph &g, const BiAut &f) {
  check(f.eta.degree() == g.eta_size() && f.kappa.degree() == g.kappa_size(),
        Errc::degree_mismatch, "automorphism degrees do not match the graph");
  for (const auto &[i, j] : g.edges())
    if (!g.has_edge(f.eta(i), f.kappa(j))) return false;
  return true;
}

Perm combined_perm(const BiAut &f, std::uint32_t a) {
  std::vector<std::uint32_t> img(a + f.kappa.degree());
  for (std::uint32_t i = 0; i < a; ++i) img[i] = f.eta(i);
  for (std::uint32_t j = 0; j < f.kappa.degree(); ++j) img[a + j] = a + f.kappa(j);
  return Perm(std::move(img));
}

namespace {

// Ordered partition of the combined vertex set {0..a+b-1}; eta cells always
// precede kappa cells because refinement splits cells in place.
using Partition = std::vector<std::vector<int>>;

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[y] = x;
  }
};

class AutSearch {
public:
  // In automorphism-only mode (need_canonical = false) a non-first subtree is
  // abandoned as soon as it yields one first-leaf automorphism: that leaf
  // supplies the coset representative orbit-stabilizer needs, and anything
  // else in the subtree is generated by it together with the first subtree's
  // output. Canonical mode keeps the full traversal so the reported form is
  // the true minimum over all leaves.
  AutSearch(const BiGraph &g, std::uint64_t budget, bool need_canonical)
      : g_(g), a_(g.eta_size()), b_(g.kappa_size()), n_(a_ + b_), budget_(budget),
        need_canonical_(need_canonical) {
    adj_.resize(n_);
    for (const auto &[i, j] : g.edges()) {
      adj_[i].push_back(a_ + j);
      adj_[a_ + j].push_back(i);
    }
    for (auto &row : adj_) std::sort(row.begin(), row.end());
  }

  AutAnalysis run() {
    Partition root;
    std::vector<int> eta(a_), kappa(b_);
    for (int i = 0; i < a_; ++i) eta[i] = i;
    for (int j = 0; j < b_; ++j) kappa[j] = a_ + j;
    root.push_back(std::move(eta));
    root.push_back(std::move(kappa));
    refine(root);
    dfs(root, true);
    AutAnalysis out;
    out.generators = std::move(gens_);
    out.canonical = std::move(best_);
    out.nodes = nodes_;
    return out;
  }

private:
  void refine(Partition &p) const {
    std::vector<int> color(n_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t ci = 0; ci < p.size(); ++ci)
        for (int v : p[ci]) color[v] = static_cast<int>(ci);
      Partition next;
      next.reserve(p.size());
      for (const auto &cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        // Split by the multiset of neighbor colors; sub-cells ordered by
        // signature so the split is relabeling-equivariant.
        std::map<std::vector<int>, std::vector<int>> groups;
        for (int v : cell) {
          std::vector<int> sig;
          sig.reserve(adj_[v].size());
          for (int u : adj_[v]) sig.push_back(color[u]);
          std::sort(sig.begin(), sig.end());
          groups[std::move(sig)].push_back(v);
        }
        if (groups.size() == 1) {
          next.push_back(cell);
        } else {
          changed = true;
          for (auto &[sig, vs] : groups) next.push_back(std::move(vs));
        }
      }
      p = std::move(next);
    }
  }

  static bool discrete(const Partition &p, int n) {
    return static_cast<int>(p.size()) == n;
  }

  // First smallest nontrivial cell.
  static std::size_t target_cell(const Partition &p) {
    std::size_t best = p.size();
    std::size_t best_size = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].size() < 2) continue;
      if (best == p.size() || p[i].size() < best_size) {
        best = i;
        best_size = p[i].size();
      }
    }
    return best;
  }

  std::string leaf_bytes(const std::vector<int> &lab) const {
    std::string bytes;
    bytes.reserve(8 + static_cast<std::size_t>(a_) * ((b_ + 7) / 8));
    for (int part : {a_, b_})
      for (int shift = 24; shift >= 0; shift -= 8)
        bytes.push_back(static_cast<char>((part >> shift) & 0xff));
    int row_bytes = (b_ + 7) / 8;
    for (int i = 0; i < a_; ++i) {
      std::string row(row_bytes, '\0');
      for (int j = 0; j < b_; ++j)
        if (g_.has_edge(lab[i], lab[a_ + j] - a_))
          row[j / 8] |= static_cast<char>(1 << (7 - j % 8));
      bytes += row;
    }
    return bytes;
  }

  void record_automorphism(const std::vector<int> &lab) {
    std::vector<std::uint32_t> ie(a_), ik(b_);
    for (int i = 0; i < a_; ++i) ie[lab[i]] = (*first_lab_)[i];
    for (int j = 0; j < b_; ++j) ik[lab[a_ + j] - a_] = (*first_lab_)[a_ + j] - a_;
    BiAut f{Perm(std::move(ie)), Perm(std::move(ik))};
    if (f.eta.is_identity() && f.kappa.is_identity()) return;
    check(is_automorphism(g_, f), Errc::internal_check,
          "leaf comparison produced a non-automorphism");
    if (gen_keys_.insert(f).second) gens_.push_back(std::move(f));
  }

  void handle_leaf(const Partition &p) {
    std::vector<int> lab(n_);
    for (int i = 0; i < n_; ++i) lab[i] = p[i][0];
    std::string bytes = leaf_bytes(lab);
    if (!first_lab_) {
      first_lab_ = lab;
      first_bytes_ = bytes;
      best_ = std::move(bytes);
      return;
    }
    if (bytes == first_bytes_) {
      record_automorphism(lab);
      if (!need_canonical_) unwind_ = true;
    }
    if (need_canonical_ && bytes < best_) best_ = std::move(bytes);
  }

  bool fixes_prefix(const BiAut &f) const {
    for (int v : prefix_) {
      int image = v < a_ ? static_cast<int>(f.eta(v)) : a_ + static_cast<int>(f.kappa(v - a_));
      if (image != v) return false;
    }
    return true;
  }

  // Orbits under the found generators that fix the current individualized
  // prefix pointwise (a subgroup of the true prefix stabilizer; pruning with
  // it is sound for both the generator search and the minimal leaf).
  void rebuild_orbits(DisjointSet &ds) const {
    ds = DisjointSet(n_);
    for (const BiAut &f : gens_) {
      if (!fixes_prefix(f)) continue;
      for (int v = 0; v < a_; ++v) ds.unite(v, f.eta(v));
      for (int v = 0; v < b_; ++v) ds.unite(a_ + v, a_ + f.kappa(v));
    }
  }

  void dfs(const Partition &p, bool on_first_path) {
    if (++nodes_ > budget_)
      fail(Errc::budget_exceeded, "automorphism search budget exceeded");
    if (discrete(p, n_)) {
      handle_leaf(p);
      return;
    }
    std::size_t ti = target_cell(p);
    const std::vector<int> cell = p[ti];
    std::vector<int> tried;
    DisjointSet ds(0);
    std::size_t ds_gens = SIZE_MAX; // generator count the orbit cache reflects
    bool first_child = true;
    for (int v : cell) {
      if (ds_gens != gens_.size()) {
        rebuild_orbits(ds);
        ds_gens = gens_.size();
      }
      bool skip = false;
      for (int u : tried)
        if (ds.find(u) == ds.find(v)) {
          skip = true;
          break;
        }
      if (skip) continue;
      tried.push_back(v);

      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != ti) {
          child.push_back(p[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        rest.reserve(cell.size() - 1);
        for (int u : cell)
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      refine(child);
      prefix_.push_back(v);
      dfs(child, on_first_path && first_child);
      prefix_.pop_back();
      first_child = false;
      if (unwind_) {
        // Unwind stops at the node where the search left the first path: its
        // current child is a non-first subtree for which one representative
        // automorphism is now known.
        if (!on_first_path) return;
        unwind_ = false;
      }
    }
  }

  const BiGraph &g_;
  int a_, b_, n_;
  std::uint64_t budget_, nodes_ = 0;
  bool need_canonical_;
  bool unwind_ = false;
  std::vector<std::vector<int>> adj_;
  std::vector<BiAut> gens_;
  std::set<BiAut> gen_keys_;
  std::optional<std::vector<int>> first_lab_;
  std::string first_bytes_;
  std::string best_;
  std::vector<int> prefix_;
};

} // namespace

AutAnalysis analyze_graph(const BiGraph &g, std::uint64_t node_budget) {
  return AutSearch(g, node_budget, true).run();
}

std::vector<BiAut> automorphism_generators(const BiGraph &g, std::uint64_t node_budget) {
  return AutSearch(g, node_budget, false).run().generators;
}

u64 aut_order(const BiGraph &g, std::uint64_t node_budget, u64 cap) {
  auto gens = automorphism_generators(g, node_budget);
  std::vector<Perm> combined;
  combined.reserve(gens.size());
  for (const BiAut &f : gens) combined.push_back(combined_perm(f, g.eta_size()));
  return PermGroup::closure(g.eta_size() + g.kappa_size(), std::move(combined), cap).order();
}

std::string canonical_certificate(const BiGraph &g, std::uint64_t node_budget) {
  return analyze_graph(g, node_budget).canonical;
}

std::string certificate_digest(const std::string &certificate) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : certificate) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) out << ((h >> shift) & 0xf);
  return out.str();
}

std::vector<std::vector<Edge>> edge_orbits_under(const BiGraph &g,
                                                 const std::vector<BiAut> &gens) {
  const auto &edges = g.edges();
  std::map<Edge, int> edge_index;
  for (std::size_t i = 0; i < edges.size(); ++i)
    edge_index[edges[i]] = static_cast<int>(i);

  DisjointSet ds(static_cast<int>(edges.size()));
  for (const BiAut &f : gens) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      Edge image{f.eta(edges[i].first), f.kappa(edges[i].second)};
      auto it = edge_index.find(image);
      check(it != edge_index.end(), Errc::internal_check,
            "generator does not preserve the edge set");
      ds.unite(static_cast<int>(i), it->second);
    }
  }
  std::map<int, std::vector<Edge>> by_root;
  for (std::size_t i = 0; i < edges.size(); ++i)
    by_root[ds.find(static_cast<int>(i))].push_back(edges[i]);
  std::vector<std::vector<Edge>> orbits;
  orbits.reserve(by_root.size());
  for (auto &[root, orbit] : by_root) orbits.push_back(std::move(orbit));
  // Edges were visited in ascending order, so each orbit is sorted; order
  // orbits by their least edge.
  std::sort(orbits.begin(), orbits.end(),
            [](const auto &x, const auto &y) { return x.front() < y.front(); });
  return orbits;
}

std::vector<std::vector<Edge>> edge_orbits(const BiGraph &g, std::uint64_t node_budget) {
  return edge_orbits_under(g, automorphism_generators(g, node_budget));
}

bool is_edge_transitive(const BiGraph &g, std::uint64_t node_budget) {
  if (g.edges().empty()) return false;
  return edge_orbits(g, node_budget).size() == 1;
}

std::vector<BiAut> brute_force_aut(const BiGraph &g) {
  check(g.eta_size() <= 6 && g.kappa_size() <= 6, Errc::invalid_argument,
        "brute_force_aut limited to sides of at most 6");
  std::vector<std::uint32_t> pe(g.eta_size()), pk(g.kappa_size());
  for (std::uint32_t i = 0; i < g.eta_size(); ++i) pe[i] = i;
  std::vector<BiAut> out;
  do {
    for (std::uint32_t j = 0; j < g.kappa_size(); ++j) pk[j] = j;
    do {
      BiAut f{Perm(pe), Perm(pk)};
      if (is_automorphism(g, f)) out.push_back(std::move(f));
    } while (std::next_permutation(pk.begin(), pk.end()));
  } while (std::next_permutation(pe.begin(), pe.end()));
  return out;
}

} // namespace itriple
