#include "itriple/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <map>
#include <sstream>

#include "itriple/errors.hpp"

namespace itriple {

Perm::Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t y : img_) {
    check(y < img_.size() && !seen[y], Errc::invalid_argument,
          "permutation image table is not a bijection");
    seen[y] = true;
  }
}

Perm Perm::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> img(degree);
  for (std::uint32_t i = 0; i < degree; ++i) img[i] = i;
  return Perm(std::move(img));
}

Perm Perm::from_cycles(std::uint32_t degree,
                       const std::vector<std::vector<std::uint32_t>> &cycles) {
  std::vector<std::uint32_t> img(degree);
  for (std::uint32_t i = 0; i < degree; ++i) img[i] = i;
  for (const auto &cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      std::uint32_t from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      check(from < degree && to < degree, Errc::out_of_range, "cycle point out of range");
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(img_.size());
  for (std::uint32_t i = 0; i < img_.size(); ++i) inv[img_[i]] = i;
  return Perm(std::move(inv));
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(img_.size(), false);
  bool any = false;
  for (std::uint32_t i = 0; i < img_.size(); ++i) {
    if (done[i] || img_[i] == i) continue;
    out << '(';
    std::uint32_t x = i;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = img_[x];
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

Perm compose(const Perm &p, const Perm &q) {
  check(p.degree() == q.degree(), Errc::degree_mismatch, "compose: degree mismatch");
  std::vector<std::uint32_t> img(p.degree());
  for (std::uint32_t i = 0; i < p.degree(); ++i) img[i] = p(q(i));
  return Perm(std::move(img));
}

std::size_t PermHash::operator()(const Perm &p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t x : p.images()) {
    h ^= x + 1;
    h *= 1099511628211ull;
  }
  return h;
}

PermGroup PermGroup::closure(std::uint32_t degree, std::vector<Perm> generators, u64 cap) {
  check(cap >= 1, Errc::invalid_argument, "closure cap must be positive");
  for (const Perm &g : generators)
    check(g.degree() == degree, Errc::degree_mismatch, "generator degree mismatch");

  PermGroup grp;
  grp.degree_ = degree;
  grp.gens_ = std::move(generators);

  std::deque<std::uint32_t> queue;
  grp.elems_.push_back(Perm::identity(degree));
  grp.index_.insert(grp.elems_.back());
  queue.push_back(0);
  while (!queue.empty()) {
    Perm current = grp.elems_[queue.front()];
    queue.pop_front();
    for (const Perm &g : grp.gens_) {
      Perm next = compose(current, g);
      if (grp.index_.count(next)) continue;
      if (grp.elems_.size() + 1 > cap)
        fail(Errc::cap_exceeded, "group closure exceeds element cap");
      grp.elems_.push_back(next);
      grp.index_.insert(std::move(next));
      queue.push_back(static_cast<std::uint32_t>(grp.elems_.size() - 1));
    }
  }
  return grp;
}

PermGroup PermGroup::from_elements(std::uint32_t degree, const std::vector<Perm> &elements,
                                   u64 cap) {
  std::unordered_set<Perm, PermHash> want(elements.begin(), elements.end());
  std::vector<Perm> gens;
  PermGroup grp = closure(degree, {}, cap);
  for (const Perm &e : elements) {
    check(e.degree() == degree, Errc::degree_mismatch, "element degree mismatch");
    if (grp.contains(e)) continue;
    gens.push_back(e);
    grp = closure(degree, gens, cap);
  }
  check(grp.order() == want.size(), Errc::internal_check,
        "element set is not closed under the group operations");
  for (const Perm &e : grp.elements())
    check(want.count(e) != 0, Errc::internal_check,
          "element set is not closed under the group operations");
  return grp;
}

bool PermGroup::is_subgroup_of(const PermGroup &other) const {
  if (degree_ != other.degree_) return false;
  for (const Perm &e : elems_)
    if (!other.contains(e)) return false;
  return true;
}

std::string to_string(const Triple &t) {
  std::ostringstream out;
  out << '(' << t.a << ", " << t.b << ", " << t.c << ')';
  return out.str();
}

void validate_group_triple(const GroupTriple &t) {
  check(t.G.degree() == t.H.degree() && t.G.degree() == t.K.degree(),
        Errc::degree_mismatch, "group triple degrees differ");
  check(t.H.is_subgroup_of(t.G), Errc::not_in_group, "H is not a subgroup of G");
  check(t.K.is_subgroup_of(t.G), Errc::not_in_group, "K is not a subgroup of G");
}

Triple triple_indices(const GroupTriple &t) {
  validate_group_triple(t);
  PermGroup meet = subgroup_intersection(t.H, t.K, t.G.order());
  return Triple{t.G.order() / t.H.order(), t.G.order() / t.K.order(),
                t.G.order() / meet.order()};
}

PermGroup trivial_group(std::uint32_t degree) { return PermGroup::closure(degree, {}, 1); }

PermGroup symmetric_group(unsigned n, u64 cap) {
  check(n >= 1, Errc::invalid_argument, "symmetric_group requires n >= 1");
  if (n > 8) fail(Errc::cap_exceeded, "symmetric_group limited to n <= 8");
  if (n == 1) return trivial_group(1);
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}})};
  if (n >= 3) {
    std::vector<std::uint32_t> cyc(n);
    for (unsigned i = 0; i < n; ++i) cyc[i] = i;
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return PermGroup::closure(n, std::move(gens), cap);
}

PermGroup cyclic_group(unsigned n, u64 cap) {
  check(n >= 1, Errc::invalid_argument, "cyclic_group requires n >= 1");
  if (n == 1) return trivial_group(1);
  std::vector<std::uint32_t> cyc(n);
  for (unsigned i = 0; i < n; ++i) cyc[i] = i;
  return PermGroup::closure(n, {Perm::from_cycles(n, {cyc})}, cap);
}

PermGroup subgroup_generated(const PermGroup &G, const std::vector<Perm> &gens, u64 cap) {
  for (const Perm &g : gens)
    check(G.contains(g), Errc::not_in_group, "generator is not an element of the group");
  return PermGroup::closure(G.degree(), gens, cap);
}

PermGroup subgroup_intersection(const PermGroup &H, const PermGroup &K, u64 cap) {
  check(H.degree() == K.degree(), Errc::degree_mismatch,
        "subgroup_intersection: degree mismatch");
  const PermGroup &small = H.order() <= K.order() ? H : K;
  const PermGroup &large = H.order() <= K.order() ? K : H;
  std::vector<Perm> common;
  for (const Perm &e : small.elements())
    if (large.contains(e)) common.push_back(e);
  return PermGroup::from_elements(H.degree(), common, cap);
}

PermGroup stabilizer(const PermGroup &G, std::uint32_t point, u64 cap) {
  check(point < G.degree(), Errc::out_of_range, "stabilizer point out of range");
  std::vector<Perm> fixed;
  for (const Perm &e : G.elements())
    if (e(point) == point) fixed.push_back(e);
  return PermGroup::from_elements(G.degree(), fixed, cap);
}

std::vector<std::uint32_t> orbit_of(const PermGroup &G, std::uint32_t point) {
  check(point < G.degree(), Errc::out_of_range, "orbit point out of range");
  std::vector<bool> seen(G.degree(), false);
  std::vector<std::uint32_t> orb;
  for (const Perm &e : G.elements()) {
    std::uint32_t y = e(point);
    if (!seen[y]) {
      seen[y] = true;
      orb.push_back(y);
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

namespace {

Perm embed_left(const Perm &p, std::uint32_t total) {
  std::vector<std::uint32_t> img(total);
  for (std::uint32_t i = 0; i < total; ++i) img[i] = i < p.degree() ? p(i) : i;
  return Perm(std::move(img));
}

Perm embed_right(const Perm &p, std::uint32_t offset, std::uint32_t total) {
  std::vector<std::uint32_t> img(total);
  for (std::uint32_t i = 0; i < total; ++i)
    img[i] = i < offset ? i : offset + p(i - offset);
  return Perm(std::move(img));
}

PermGroup embedded_product(const PermGroup &A, const PermGroup &B, std::uint32_t offset,
                           std::uint32_t total, u64 cap) {
  std::vector<Perm> gens;
  for (const Perm &g : A.generators()) gens.push_back(embed_left(g, total));
  for (const Perm &g : B.generators()) gens.push_back(embed_right(g, offset, total));
  PermGroup grp = PermGroup::closure(total, std::move(gens), cap);
  check(grp.order() == checked_mul(A.order(), B.order()), Errc::internal_check,
        "direct product closure has unexpected order");
  return grp;
}

} // namespace

GroupTriple direct_product(const GroupTriple &t1, const GroupTriple &t2, u64 cap) {
  validate_group_triple(t1);
  validate_group_triple(t2);
  u64 product_order = checked_mul(t1.G.order(), t2.G.order());
  check(product_order <= cap, Errc::cap_exceeded, "direct product order exceeds cap");
  std::uint32_t offset = t1.G.degree();
  std::uint32_t total = offset + t2.G.degree();
  GroupTriple out;
  out.G = embedded_product(t1.G, t2.G, offset, total, cap);
  out.H = embedded_product(t1.H, t2.H, offset, total, cap);
  out.K = embedded_product(t1.K, t2.K, offset, total, cap);
  return out;
}

GroupTriple semidirect_affine(unsigned n, unsigned p, u64 cap) {
  check(n >= 2, Errc::invalid_argument, "semidirect_affine requires n >= 2");
  check(is_prime(p), Errc::invalid_argument, "semidirect_affine requires p prime");
  if (euler_phi(n) % p != 0)
    fail(Errc::no_such_unit, "no unit of order p modulo n: p does not divide phi(n)");

  // Smallest unit of multiplicative order exactly p; exists by Cauchy's
  // theorem applied to (Z/n)*.
  u64 u = 0;
  for (u64 cand = 2; cand < n; ++cand) {
    if (std::gcd(cand, static_cast<u64>(n)) != 1) continue;
    if (multiplicative_order(cand, n) == p) {
      u = cand;
      break;
    }
  }
  check(u != 0, Errc::internal_check, "unit of order p not found despite p | phi(n)");

  std::vector<std::uint32_t> shift(n), mult(n);
  for (unsigned x = 0; x < n; ++x) {
    shift[x] = (x + 1) % n;
    mult[x] = static_cast<std::uint32_t>((u * x) % n);
  }
  PermGroup G = PermGroup::closure(n, {Perm(std::move(shift)), Perm(std::move(mult))}, cap);
  check(G.order() == checked_mul(n, p), Errc::internal_check,
        "affine group has unexpected order");
  GroupTriple t{G, stabilizer(G, 0, cap), stabilizer(G, 1, cap)};
  return t;
}

std::uint32_t ksubset_index(std::uint32_t degree, std::vector<std::uint32_t> subset) {
  std::sort(subset.begin(), subset.end());
  // Lexicographic rank among sorted k-subsets of {0..degree-1}.
  u64 rank = 0;
  std::uint32_t prev = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::uint32_t v = prev; v < subset[i]; ++v)
      rank += binomial(degree - 1 - v, subset.size() - 1 - i);
    prev = subset[i] + 1;
  }
  return static_cast<std::uint32_t>(rank);
}

PermGroup induced_action_on_ksubsets(const PermGroup &G, unsigned k, u64 cap) {
  check(k >= 1 && k <= G.degree(), Errc::invalid_argument,
        "induced action requires 1 <= k <= degree");
  u64 m = binomial(G.degree(), k);
  check(m <= cap, Errc::cap_exceeded, "number of k-subsets exceeds cap");

  std::vector<std::vector<std::uint32_t>> subsets;
  std::vector<std::uint32_t> cur(k);
  for (unsigned i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    subsets.push_back(cur);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && cur[i] == G.degree() - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (unsigned j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  check(subsets.size() == m, Errc::internal_check, "k-subset enumeration miscount");

  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = i;

  std::vector<Perm> induced;
  for (const Perm &g : G.generators()) {
    std::vector<std::uint32_t> img(subsets.size());
    for (std::uint32_t i = 0; i < subsets.size(); ++i) {
      std::vector<std::uint32_t> image;
      image.reserve(k);
      for (std::uint32_t x : subsets[i]) image.push_back(g(x));
      std::sort(image.begin(), image.end());
      img[i] = index.at(image);
    }
    induced.push_back(Perm(std::move(img)));
  }
  return PermGroup::closure(static_cast<std::uint32_t>(m), std::move(induced), cap);
}

} // namespace itriple
