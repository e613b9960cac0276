#include "itriple/realize.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "itriple/errors.hpp"
#include "itriple/numtheory.hpp"

namespace itriple {

LabeledCIG coset_intersection_graph(const GroupTriple &t, u64 cap) {
  validate_group_triple(t);
  check(t.G.order() <= cap, Errc::cap_exceeded, "group order exceeds cap");
  const auto &elems = t.G.elements();
  std::unordered_map<Perm, std::uint32_t, PermHash> elem_index;
  elem_index.reserve(elems.size());
  for (std::uint32_t i = 0; i < elems.size(); ++i) elem_index[elems[i]] = i;

  // Left cosets by representative scan: the next representative is the first
  // element (in the group's deterministic order) not yet covered.
  auto assign_cosets = [&](const PermGroup &sub, std::vector<std::uint32_t> &coset_of,
                           std::vector<Perm> &reps) {
    coset_of.assign(elems.size(), UINT32_MAX);
    for (std::uint32_t gi = 0; gi < elems.size(); ++gi) {
      if (coset_of[gi] != UINT32_MAX) continue;
      std::uint32_t id = static_cast<std::uint32_t>(reps.size());
      reps.push_back(elems[gi]);
      for (const Perm &h : sub.elements()) {
        auto it = elem_index.find(compose(elems[gi], h));
        check(it != elem_index.end(), Errc::internal_check, "subgroup element outside group");
        coset_of[it->second] = id;
      }
    }
  };

  LabeledCIG out{BiGraph(1, 1, {{0, 0}}), {}, {}, {}};
  std::vector<std::uint32_t> eta_of, kappa_of;
  assign_cosets(t.H, eta_of, out.eta_labels);
  assign_cosets(t.K, kappa_of, out.kappa_labels);
  u64 a = out.eta_labels.size();
  u64 b = out.kappa_labels.size();

  // (yH, zK) is an edge iff the cosets meet; each element witnesses the edge
  // of its own pair, and the first witness labels the edge (it represents a
  // coset of H ∩ K).
  std::map<Edge, Perm> edge_label;
  for (std::uint32_t gi = 0; gi < elems.size(); ++gi)
    edge_label.try_emplace(Edge{eta_of[gi], kappa_of[gi]}, elems[gi]);

  std::vector<Edge> edges;
  std::vector<Perm> labels;
  edges.reserve(edge_label.size());
  for (auto &[e, rep] : edge_label) {
    edges.push_back(e);
    labels.push_back(rep);
  }
  out.graph = BiGraph(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                      std::move(edges));
  out.edge_labels = std::move(labels);

  // The canonical bijection G/(H∩K) -> E and the forced coset degrees are
  // theorems about this construction; violations are bugs, not input errors.
  PermGroup meet = subgroup_intersection(t.H, t.K, cap);
  u64 c = t.G.order() / meet.order();
  check(out.graph.edge_count() == c, Errc::internal_check,
        "coset graph edge count differs from [G : H ∩ K]");
  check(is_biregular(out.graph, static_cast<std::uint32_t>(t.H.order() / meet.order()),
                     static_cast<std::uint32_t>(t.K.order() / meet.order())),
        Errc::internal_check, "coset graph degrees differ from the coset indices");
  return out;
}

BiGraph complete_bipartite(std::uint32_t a, std::uint32_t b) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(a) * b);
  for (std::uint32_t i = 0; i < a; ++i)
    for (std::uint32_t j = 0; j < b; ++j) edges.emplace_back(i, j);
  return BiGraph(a, b, std::move(edges));
}

BiGraph perfect_matching(std::uint32_t n) {
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) edges.emplace_back(i, i);
  return BiGraph(n, n, std::move(edges));
}

BiGraph matching_complement(std::uint32_t n) {
  check(n >= 2, Errc::invalid_argument, "matching_complement requires n >= 2");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (i != j) edges.emplace_back(i, j);
  return BiGraph(n, n, std::move(edges));
}

BiGraph pair_block_complement(std::uint32_t n, u64 l) {
  check(n >= 3, Errc::invalid_argument, "pair_block_complement requires n >= 3");
  check(l >= 1, Errc::invalid_argument, "pair_block_complement requires l >= 1");
  if ((2 * l) % (n - 1) != 0)
    fail(Errc::divisibility_violated, "pair_block_complement requires (n-1) | 2l");
  u64 copies = 2 * l / (n - 1);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  u64 b = checked_mul(copies, pairs.size());
  check(b == checked_mul(n, l), Errc::internal_check, "pair block count mismatch");
  check(b <= UINT32_MAX, Errc::cap_exceeded, "pair block graph too large");

  // Kappa vertex p*copies + s is copy s of pair p; the graph joins each eta
  // vertex to every pair-copy *not* containing it.
  std::vector<Edge> edges;
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t p = 0; p < pairs.size(); ++p) {
      if (pairs[p].first == v || pairs[p].second == v) continue;
      for (u64 s = 0; s < copies; ++s)
        edges.emplace_back(v, static_cast<std::uint32_t>(p * copies + s));
    }
  return BiGraph(n, static_cast<std::uint32_t>(b), std::move(edges));
}

BiGraph p_subsets_graph(std::uint32_t n, std::uint32_t p, u64 mult) {
  check(p >= 1 && p <= n, Errc::invalid_argument, "p_subsets_graph requires 1 <= p <= n");
  check(mult >= 1, Errc::invalid_argument, "p_subsets_graph requires mult >= 1");
  std::vector<std::vector<std::uint32_t>> subsets;
  std::vector<std::uint32_t> cur(p);
  for (std::uint32_t i = 0; i < p; ++i) cur[i] = i;
  while (true) {
    subsets.push_back(cur);
    int i = static_cast<int>(p) - 1;
    while (i >= 0 && cur[i] == n - p + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (std::uint32_t j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  u64 b = checked_mul(subsets.size(), mult);
  check(b <= UINT32_MAX, Errc::cap_exceeded, "p-subset graph too large");
  std::vector<Edge> edges;
  for (std::uint32_t si = 0; si < subsets.size(); ++si)
    for (std::uint32_t v : subsets[si])
      for (u64 s = 0; s < mult; ++s)
        edges.emplace_back(v, static_cast<std::uint32_t>(si * mult + s));
  return BiGraph(n, static_cast<std::uint32_t>(b), std::move(edges));
}

namespace {

unsigned inverse_mod(unsigned x, unsigned q) {
  for (unsigned t = 1; t < q; ++t)
    if (x * t % q == 1) return t;
  fail(Errc::internal_check, "no modular inverse (q not prime?)");
}

unsigned rank_mod(std::vector<std::vector<unsigned>> rows, unsigned n, unsigned q) {
  unsigned rank = 0;
  for (unsigned col = 0; col < n && rank < rows.size(); ++col) {
    unsigned pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    unsigned inv = inverse_mod(rows[rank][col], q);
    for (unsigned j = col; j < n; ++j) rows[rank][j] = rows[rank][j] * inv % q;
    for (unsigned r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      unsigned factor = rows[r][col];
      for (unsigned j = col; j < n; ++j)
        rows[r][j] = (rows[r][j] + (q - factor) * rows[rank][j]) % q;
    }
    ++rank;
  }
  return rank;
}

} // namespace

std::vector<std::vector<std::uint8_t>> enumerate_subspaces(u64 q, unsigned n, unsigned d) {
  check(is_prime(q), Errc::non_prime_field, "subspace enumeration requires prime q");
  check(d >= 1 && d <= n, Errc::invalid_argument, "enumerate_subspaces requires 1 <= d <= n");

  // Reduced row-echelon bases: choose pivot columns, then fill the free
  // entries; this gives exactly one basis per subspace.
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<unsigned> pivots(d);
  for (unsigned i = 0; i < d; ++i) pivots[i] = i;
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (unsigned p : pivots) is_pivot[p] = true;
    std::vector<std::pair<unsigned, unsigned>> free_pos; // (row, col), row-major
    for (unsigned r = 0; r < d; ++r)
      for (unsigned col = pivots[r] + 1; col < n; ++col)
        if (!is_pivot[col]) free_pos.emplace_back(r, col);

    std::vector<std::uint8_t> mat(static_cast<std::size_t>(d) * n, 0);
    for (unsigned r = 0; r < d; ++r) mat[r * n + pivots[r]] = 1;
    std::vector<unsigned> digits(free_pos.size(), 0);
    while (true) {
      out.push_back(mat);
      std::size_t k = 0;
      while (k < digits.size()) {
        auto [r, col] = free_pos[k];
        if (digits[k] + 1 < q) {
          ++digits[k];
          mat[r * n + col] = static_cast<std::uint8_t>(digits[k]);
          break;
        }
        digits[k] = 0;
        mat[r * n + col] = 0;
        ++k;
      }
      if (k == digits.size()) break;
    }

    int i = static_cast<int>(d) - 1;
    while (i >= 0 && pivots[i] == n - d + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (unsigned j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  check(out.size() == q_binomial(n, d, q), Errc::internal_check,
        "subspace enumeration count differs from the Gaussian binomial");
  return out;
}

BiGraph subspace_complement_graph(u64 q, unsigned n, unsigned d, u64 max_side) {
  check(is_prime(q), Errc::non_prime_field, "subspace_complement_graph requires prime q");
  check(d >= 1 && d < n, Errc::invalid_argument, "requires 0 < d < n");
  u64 side = q_binomial(n, d, q);
  check(side <= max_side, Errc::cap_exceeded, "subspace count exceeds size bound");

  auto eta = enumerate_subspaces(q, n, d);
  auto kappa = enumerate_subspaces(q, n, n - d);

  auto rows_of = [&](const std::vector<std::uint8_t> &mat, unsigned count) {
    std::vector<std::vector<unsigned>> rows(count, std::vector<unsigned>(n));
    for (unsigned r = 0; r < count; ++r)
      for (unsigned col = 0; col < n; ++col) rows[r][col] = mat[r * n + col];
    return rows;
  };

  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < eta.size(); ++i) {
    auto base = rows_of(eta[i], d);
    for (std::uint32_t j = 0; j < kappa.size(); ++j) {
      auto stacked = base;
      auto extra = rows_of(kappa[j], n - d);
      stacked.insert(stacked.end(), extra.begin(), extra.end());
      if (rank_mod(std::move(stacked), n, static_cast<unsigned>(q)) == n)
        edges.emplace_back(i, j);
    }
  }
  return BiGraph(static_cast<std::uint32_t>(eta.size()),
                 static_cast<std::uint32_t>(kappa.size()), std::move(edges));
}

BiGraph tensor_product(const BiGraph &g1, const BiGraph &g2) {
  u64 a = checked_mul(g1.eta_size(), g2.eta_size());
  u64 b = checked_mul(g1.kappa_size(), g2.kappa_size());
  check(a <= UINT32_MAX && b <= UINT32_MAX, Errc::cap_exceeded, "product graph too large");
  std::vector<Edge> edges;
  edges.reserve(g1.edges().size() * g2.edges().size());
  for (const auto &[i1, j1] : g1.edges())
    for (const auto &[i2, j2] : g2.edges())
      edges.emplace_back(i1 * g2.eta_size() + i2, j1 * g2.kappa_size() + j2);
  return BiGraph(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                 std::move(edges));
}

GroupTriple lemma_ab_triple(unsigned a, unsigned b, u64 cap) {
  PermGroup za = cyclic_group(a, cap);
  PermGroup zb = cyclic_group(b, cap);
  GroupTriple ta{za, trivial_group(za.degree()), za}; // (a, 1, a)
  GroupTriple tb{zb, zb, trivial_group(zb.degree())}; // (1, b, b)
  return direct_product(ta, tb, cap);
}

GroupTriple stabilizer_pair_triple(const PermGroup &G, u64 cap) {
  check(G.degree() >= 2, Errc::invalid_argument, "stabilizer pair needs two points");
  return GroupTriple{G, stabilizer(G, 0, cap), stabilizer(G, 1, cap)};
}

GroupTriple s4_sylow_triple(u64 cap) {
  PermGroup s4 = symmetric_group(4, cap);
  PermGroup h = subgroup_generated(s4, {Perm::from_cycles(4, {{0, 1, 2}})}, cap);
  PermGroup k = subgroup_generated(s4, {Perm::from_cycles(4, {{0, 1, 3}})}, cap);
  return GroupTriple{s4, h, k};
}

GroupTriple s5_two_subsets_triple(u64 cap) {
  PermGroup s5 = symmetric_group(5, cap);
  PermGroup g2 = induced_action_on_ksubsets(s5, 2, cap);
  std::uint32_t h_point = ksubset_index(5, {0, 1});
  std::uint32_t k_point = ksubset_index(5, {2, 3});
  return GroupTriple{g2, stabilizer(g2, h_point, cap), stabilizer(g2, k_point, cap)};
}

} // namespace itriple
