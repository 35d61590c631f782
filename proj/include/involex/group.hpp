#ifndef INVOLEX_GROUP_HPP_
#define INVOLEX_GROUP_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "involex/element_set.hpp"
#include "involex/enumerator.hpp"
#include "involex/error.hpp"
#include "involex/presentation.hpp"

namespace involex {

// Largest group the engine will materialize.
inline constexpr std::size_t kMaxGroupOrder = std::size_t{1} << 12;

// A finite group given by its full Cayley table. Element 0 is the identity.
// Immutable once constructed.
class ConcreteGroup {
 public:
  ConcreteGroup() : ConcreteGroup(trivial()) {}

  // Builds a group from a row-major multiplication table. The table must
  // have identity 0 and the generators must generate the whole group;
  // associativity is the caller's responsibility (see verify_associativity).
  static ConcreteGroup from_table(std::size_t order, std::vector<std::uint16_t> table,
                                  std::vector<Elem> generators,
                                  std::vector<std::string> generator_names = {}) {
    if (order == 0 || order > kMaxGroupOrder) {
      throw BoundError("group order " + std::to_string(order) + " outside 1.." +
                       std::to_string(kMaxGroupOrder));
    }
    if (table.size() != order * order) throw PreconditionError("table size mismatch");
    ConcreteGroup g{Tag{}};
    g.order_ = order;
    g.table_ = std::move(table);
    g.generators_ = std::move(generators);
    g.names_ = std::move(generator_names);
    if (g.names_.empty()) {
      for (std::size_t i = 0; i < g.generators_.size(); ++i) {
        g.names_.push_back("g" + std::to_string(i + 1));
      }
    }
    if (g.names_.size() != g.generators_.size()) {
      throw PreconditionError("one name per generator required");
    }
    g.finish();
    return g;
  }

  static ConcreteGroup trivial() {
    ConcreteGroup g(Tag{});
    g.order_ = 1;
    g.table_ = {0};
    g.finish();
    return g;
  }

  std::size_t order() const noexcept { return order_; }
  static constexpr Elem identity() noexcept { return 0; }

  Elem mul(Elem x, Elem y) const noexcept { return table_[x * order_ + y]; }
  Elem inv(Elem x) const noexcept { return inverse_[x]; }
  // g x g^-1
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv(g)); }
  // [x,y] = x^-1 y^-1 x y
  Elem commutator(Elem x, Elem y) const noexcept {
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }
  Elem pow(Elem x, long long k) const noexcept {
    if (k < 0) {
      x = inv(x);
      k = -k;
    }
    k %= static_cast<long long>(element_order(x));
    Elem r = 0;
    for (long long i = 0; i < k; ++i) r = mul(r, x);
    return r;
  }

  std::span<const Elem> generators() const noexcept { return generators_; }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  std::uint32_t element_order(Elem x) const noexcept { return orders_[x]; }
  const std::vector<std::uint32_t>& element_orders() const noexcept { return orders_; }

  // Shortest word for x over the generators (positions into generators()),
  // following the breadth-first spanning tree.
  std::vector<std::size_t> word(Elem x) const {
    std::vector<std::size_t> w;
    while (x != 0) {
      w.push_back(tree_gen_[x]);
      x = tree_parent_[x];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }
  // Spanning tree: x = tree_parent(x) * generators()[tree_generator(x)].
  Elem tree_parent(Elem x) const noexcept { return tree_parent_[x]; }
  std::size_t tree_generator(Elem x) const noexcept { return tree_gen_[x]; }
  // Elements in breadth-first discovery order from the identity.
  const std::vector<Elem>& bfs_order() const noexcept { return bfs_; }

  std::string format(Elem x) const {
    Word w;
    for (std::size_t g : word(x)) w.letters.push_back(static_cast<int>(g + 1));
    return format_word(w, names_);
  }

  bool is_abelian() const noexcept {
    for (Elem a : generators_) {
      for (Elem b : generators_) {
        if (mul(a, b) != mul(b, a)) return false;
      }
    }
    return true;
  }

  bool is_two_group() const noexcept { return std::has_single_bit(order_); }

  const std::vector<std::uint16_t>& table() const noexcept { return table_; }

 private:
  struct Tag {};
  explicit ConcreteGroup(Tag) {}

  void finish() {
    const std::size_t n = order_;
    for (std::size_t x = 0; x < n; ++x) {
      if (table_[x] != x || table_[x * n] != x) {
        throw PreconditionError("element 0 is not the identity of the table");
      }
    }
    inverse_.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      bool found = false;
      for (std::size_t y = 0; y < n && !found; ++y) {
        if (table_[x * n + y] == 0) {
          inverse_[x] = static_cast<Elem>(y);
          found = true;
        }
      }
      if (!found) throw PreconditionError("element without inverse in table");
    }
    orders_.assign(n, 1);
    for (std::size_t x = 1; x < n; ++x) {
      Elem p = static_cast<Elem>(x);
      std::uint32_t k = 1;
      while (p != 0) {
        p = mul(p, static_cast<Elem>(x));
        if (++k > n) throw PreconditionError("table is not a group (element of unbounded order)");
      }
      orders_[x] = k;
    }
    for (Elem g : generators_) {
      if (g >= n) throw PreconditionError("generator index out of range");
    }
    tree_parent_.assign(n, 0);
    tree_gen_.assign(n, 0);
    ElementSet seen(n);
    seen.insert(0);
    bfs_ = {0};
    for (std::size_t i = 0; i < bfs_.size(); ++i) {
      const Elem x = bfs_[i];
      for (std::size_t k = 0; k < generators_.size(); ++k) {
        const Elem y = mul(x, generators_[k]);
        if (seen.add(y)) {
          tree_parent_[y] = x;
          tree_gen_[y] = k;
          bfs_.push_back(y);
        }
      }
    }
    if (bfs_.size() != n) throw PreconditionError("generators do not generate the group");
  }

  std::size_t order_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<Elem> generators_;
  std::vector<std::string> names_;
  std::vector<Elem> tree_parent_;
  std::vector<std::size_t> tree_gen_;
  std::vector<Elem> bfs_;
};

// Builds a group from permutations generating a regular action on n points.
// Elements are numbered breadth-first over the generators in order.
inline ConcreteGroup from_permutations(const std::vector<Permutation>& gens, std::size_t n,
                                       std::vector<std::string> names = {}) {
  if (n == 0) throw PreconditionError("permutations must act on at least one point");
  if (n > kMaxGroupOrder) {
    throw BoundError("closure bound of " + std::to_string(kMaxGroupOrder) + " elements exceeded");
  }
  for (const auto& g : gens) {
    if (g.size() != n) throw PreconditionError("permutation degree mismatch");
  }
  // In a regular group an element is determined by the image of point 0.
  std::vector<Permutation> elems{Permutation(n)};
  for (std::size_t i = 0; i < n; ++i) elems[0][i] = static_cast<std::uint32_t>(i);
  std::vector<std::int64_t> by_point(n, -1);
  by_point[0] = 0;
  std::vector<Elem> gen_index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation y(n);
      for (std::size_t p = 0; p < n; ++p) y[p] = gens[k][elems[i][p]];
      const std::int64_t known = by_point[y[0]];
      if (known >= 0) {
        if (elems[static_cast<std::size_t>(known)] != y) {
          throw PreconditionError("permutation action is not regular");
        }
        if (i == 0) gen_index.push_back(static_cast<Elem>(known));
        continue;
      }
      by_point[y[0]] = static_cast<std::int64_t>(elems.size());
      if (i == 0) gen_index.push_back(static_cast<Elem>(elems.size()));
      elems.push_back(std::move(y));
    }
  }
  if (elems.size() != n) throw PreconditionError("permutation action is not regular (intransitive)");
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint32_t px = elems[x][0];
    for (std::size_t y = 0; y < n; ++y) {
      table[x * n + y] = static_cast<std::uint16_t>(by_point[elems[y][px]]);
    }
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < gens.size(); ++i) names.push_back("g" + std::to_string(i + 1));
  }
  return ConcreteGroup::from_table(n, std::move(table), std::move(gen_index), std::move(names));
}

// Presentation -> coset table -> regular permutations -> Cayley table.
inline ConcreteGroup concretize(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets) {
  const CosetTable t = enumerate_cosets(p, std::min(max_cosets, kMaxGroupOrder));
  if (p.num_generators() == 0) return ConcreteGroup::trivial();
  return from_permutations(regular_generators(t), t.n_cosets, p.generator_names);
}

struct Subgroup {
  ElementSet members;
  std::vector<Elem> generator_witness;

  std::size_t size() const { return members.count(); }
  bool contains(Elem x) const { return members.contains(x); }
  std::vector<Elem> elements() const { return members.elements(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

// Smallest subset containing `seed` that is closed under `mul`, in a finite
// structure with `order` elements and identity 0. Generators that enlarged
// the subgroup are appended to `used` when given.
template <class Mul>
ElementSet closure_by(std::size_t order, Mul&& mul, std::span<const Elem> seed,
                      std::vector<Elem>* used = nullptr) {
  ElementSet members(order);
  members.insert(0);
  std::vector<Elem> list{0};
  std::vector<Elem> gens;
  for (Elem s : seed) {
    if (members.contains(s)) continue;
    gens.push_back(s);
    if (used) used->push_back(s);
    // Re-walk every element against the enlarged generator list.
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (Elem g : gens) {
        const Elem y = mul(list[i], g);
        if (members.add(y)) list.push_back(y);
      }
    }
  }
  return members;
}

inline Subgroup closure(const ConcreteGroup& G, std::span<const Elem> seed) {
  for (Elem s : seed) {
    if (s >= G.order()) throw PreconditionError("seed index out of range");
  }
  Subgroup h;
  h.members = closure_by(G.order(), [&G](Elem a, Elem b) { return G.mul(a, b); }, seed,
                         &h.generator_witness);
  return h;
}

inline Subgroup whole_group(const ConcreteGroup& G) {
  return Subgroup{ElementSet::full(G.order()), std::vector<Elem>(G.generators().begin(), G.generators().end())};
}

inline Subgroup trivial_subgroup(const ConcreteGroup& G) { return closure(G, {}); }

inline bool is_subgroup(const ConcreteGroup& G, const ElementSet& s) {
  if (!s.contains(0)) return false;
  const auto elems = s.elements();
  for (Elem x : elems) {
    if (!s.contains(G.inv(x))) return false;
    for (Elem y : elems) {
      if (!s.contains(G.mul(x, y))) return false;
    }
  }
  return true;
}

inline bool is_normal(const ConcreteGroup& G, const Subgroup& N) {
  for (Elem g : G.generators()) {
    for (Elem x : N.elements()) {
      if (!N.contains(G.conj(g, x))) return false;
    }
  }
  return true;
}

inline std::vector<Elem> involutions(const ConcreteGroup& G) {
  std::vector<Elem> out;
  for (Elem x = 0; x < G.order(); ++x) {
    if (G.element_order(x) == 2) out.push_back(x);
  }
  return out;
}

inline Subgroup involution_generated_subgroup(const ConcreteGroup& G) {
  return closure(G, involutions(G));
}

inline Subgroup derived_subgroup(const ConcreteGroup& G) {
  ElementSet comms(G.order());
  std::vector<Elem> seed;
  for (Elem x = 0; x < G.order(); ++x) {
    for (Elem y = 0; y < G.order(); ++y) {
      const Elem c = G.commutator(x, y);
      if (comms.add(c)) seed.push_back(c);
    }
  }
  return closure(G, seed);
}

inline Subgroup center(const ConcreteGroup& G) {
  Subgroup z{ElementSet(G.order()), {}};
  for (Elem x = 0; x < G.order(); ++x) {
    bool central = true;
    for (Elem g : G.generators()) central = central && G.mul(x, g) == G.mul(g, x);
    if (central) z.members.insert(x);
  }
  return z;
}

inline void require_two_group(const ConcreteGroup& G) {
  if (!G.is_two_group()) {
    throw PreconditionError("group of order " + std::to_string(G.order()) + " is not a 2-group");
  }
}

// For a 2-group the Frattini subgroup is generated by squares and commutators.
inline Subgroup frattini_subgroup(const ConcreteGroup& G) {
  require_two_group(G);
  ElementSet seen(G.order());
  std::vector<Elem> seed;
  for (Elem x = 0; x < G.order(); ++x) {
    const Elem sq = G.mul(x, x);
    if (seen.add(sq)) seed.push_back(sq);
    for (Elem y = 0; y < G.order(); ++y) {
      const Elem c = G.commutator(x, y);
      if (seen.add(c)) seed.push_back(c);
    }
  }
  return closure(G, seed);
}

// Burnside basis: a minimal generating set of a 2-group, picked greedily in
// element order.
inline std::vector<Elem> minimal_generating_set(const ConcreteGroup& G) {
  const Subgroup phi = frattini_subgroup(G);
  std::vector<Elem> basis;
  std::vector<Elem> seed = phi.elements();
  ElementSet span = closure(G, seed).members;
  for (Elem x = 1; x < G.order() && span.count() < G.order(); ++x) {
    if (span.contains(x)) continue;
    basis.push_back(x);
    seed.push_back(x);
    span = closure(G, seed).members;
  }
  return basis;
}

// Coordinates of every element in G/Phi(G) = GF(2)^rank, relative to a
// Burnside basis; bit i is the coefficient of basis element i.
struct FrattiniCoordinates {
  std::size_t rank = 0;
  std::vector<Elem> basis;
  std::vector<std::uint32_t> coords;
};

inline FrattiniCoordinates frattini_coordinates(const ConcreteGroup& G) {
  FrattiniCoordinates fc;
  const Subgroup phi = frattini_subgroup(G);
  fc.basis = minimal_generating_set(G);
  fc.rank = fc.basis.size();
  fc.coords.assign(G.order(), 0);
  const auto phi_elems = phi.elements();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << fc.rank); ++mask) {
    Elem rep = 0;
    for (std::size_t i = 0; i < fc.rank; ++i) {
      if (mask >> i & 1u) rep = G.mul(rep, fc.basis[i]);
    }
    for (Elem f : phi_elems) fc.coords[G.mul(rep, f)] = mask;
  }
  return fc;
}

// The preimages of all 2^r - 1 hyperplanes of G/Phi(G), ordered by the
// defining functional read as an integer.
inline std::vector<Subgroup> maximal_subgroups(const ConcreteGroup& G) {
  const FrattiniCoordinates fc = frattini_coordinates(G);
  std::vector<Subgroup> out;
  for (std::uint32_t f = 1; f < (std::uint32_t{1} << fc.rank); ++f) {
    Subgroup m{ElementSet(G.order()), {}};
    for (Elem x = 0; x < G.order(); ++x) {
      if (std::popcount(f & fc.coords[x]) % 2 == 0) m.members.insert(x);
    }
    out.push_back(std::move(m));
  }
  return out;
}

struct Quotient {
  ConcreteGroup group;
  std::vector<Elem> projection;  // element of G -> coset index
};

// G/N with N itself as element 0 and cosets numbered by their first member.
inline Quotient quotient(const ConcreteGroup& G, const Subgroup& N) {
  if (!is_subgroup(G, N.members) || !is_normal(G, N)) {
    throw PreconditionError("quotient requires a normal subgroup");
  }
  const std::size_t n = G.order();
  const auto n_elems = N.elements();
  std::vector<Elem> proj(n, static_cast<Elem>(-1));
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (proj[x] != static_cast<Elem>(-1)) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : n_elems) proj[G.mul(x, m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<std::uint16_t> table(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      table[i * q + j] = static_cast<std::uint16_t>(proj[G.mul(reps[i], reps[j])]);
    }
  }
  std::vector<Elem> gens;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < G.generators().size(); ++k) {
    const Elem img = proj[G.generators()[k]];
    if (img == 0 || std::find(gens.begin(), gens.end(), img) != gens.end()) continue;
    gens.push_back(img);
    names.push_back(G.generator_names()[k]);
  }
  return Quotient{ConcreteGroup::from_table(q, std::move(table), std::move(gens), std::move(names)),
                  std::move(proj)};
}

struct SubgroupGroup {
  ConcreteGroup group;
  std::vector<Elem> embedding;  // subgroup element index -> element of G
};

// Materializes H <= G as a group in its own right, generated by `gens`
// (a Burnside basis of H when none is given).
inline SubgroupGroup subgroup_as_group(const ConcreteGroup& G, const Subgroup& H,
                                       std::vector<Elem> gens = {}) {
  const auto elems = H.elements();
  const std::size_t n = elems.size();
  std::vector<Elem> local(G.order(), static_cast<Elem>(-1));
  for (std::size_t i = 0; i < n; ++i) local[elems[i]] = static_cast<Elem>(i);
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = static_cast<std::uint16_t>(local[G.mul(elems[i], elems[j])]);
    }
  }
  std::vector<Elem> local_gens;
  if (gens.empty()) {
    std::vector<Elem> every;
    for (std::size_t i = 1; i < n; ++i) every.push_back(static_cast<Elem>(i));
    const ConcreteGroup all = ConcreteGroup::from_table(n, table, every);
    if (all.is_two_group()) {
      local_gens = minimal_generating_set(all);
    } else {
      closure_by(n, [&all](Elem a, Elem b) { return all.mul(a, b); }, every, &local_gens);
    }
  } else {
    for (Elem g : gens) {
      if (!H.contains(g)) throw PreconditionError("generator outside the subgroup");
      local_gens.push_back(local[g]);
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < local_gens.size(); ++i) names.push_back("x" + std::to_string(i + 1));
  return SubgroupGroup{ConcreteGroup::from_table(n, std::move(table), std::move(local_gens), std::move(names)),
                       elems};
}

// Elementary divisors of an abelian group, ascending. Uses the fact that the
// number of cyclic factors of order >= p^k is log_p |G[p^k]| / |G[p^(k-1)]|,
// where G[m] is the set of elements killed by m.
inline std::vector<std::size_t> abelian_invariants(const ConcreteGroup& G) {
  if (!G.is_abelian()) throw PreconditionError("abelian_invariants requires an abelian group");
  std::vector<std::size_t> out;
  std::size_t rest = G.order();
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    // counts[k] = |G[p^k]|
    std::vector<std::size_t> counts{1};
    for (std::size_t pk = p;; pk *= p) {
      std::size_t c = 0;
      for (Elem x = 0; x < G.order(); ++x) c += (pk % G.element_order(x) == 0) ? 1 : 0;
      counts.push_back(c);
      if (c == counts[counts.size() - 2]) {
        counts.pop_back();
        break;
      }
    }
    auto logp = [p](std::size_t v) {
      std::size_t e = 0;
      while (v > 1) {
        v /= p;
        ++e;
      }
      return e;
    };
    // at_least[k] = number of cyclic factors of order >= p^k
    std::vector<std::size_t> at_least(counts.size() + 1, 0);
    for (std::size_t k = 1; k < counts.size(); ++k) at_least[k] = logp(counts[k] / counts[k - 1]);
    std::size_t pk = p;
    for (std::size_t k = 1; k < counts.size(); ++k, pk *= p) {
      const std::size_t exactly = at_least[k] - at_least[k + 1];
      for (std::size_t i = 0; i < exactly; ++i) out.push_back(pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Elements of order dividing 2 in an abelian group.
inline Subgroup omega(const ConcreteGroup& A) {
  if (!A.is_abelian()) throw PreconditionError("omega is defined here for abelian groups only");
  Subgroup s{ElementSet(A.order()), {}};
  for (Elem x = 0; x < A.order(); ++x) {
    if (A.element_order(x) <= 2) s.members.insert(x);
  }
  return s;
}

// Exhaustive associativity check for |G| <= exhaustive_limit, otherwise a
// fixed-seed sample of `samples` triples.
inline bool verify_associativity(const ConcreteGroup& G, std::size_t exhaustive_limit = 256,
                                 std::size_t samples = 200000) {
  const auto n = static_cast<Elem>(G.order());
  if (G.order() <= exhaustive_limit) {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        const Elem xy = G.mul(x, y);
        for (Elem z = 0; z < n; ++z) {
          if (G.mul(xy, z) != G.mul(x, G.mul(y, z))) return false;
        }
      }
    }
    return true;
  }
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<Elem> pick(0, n - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const Elem x = pick(rng), y = pick(rng), z = pick(rng);
    if (G.mul(G.mul(x, y), z) != G.mul(x, G.mul(y, z))) return false;
  }
  return true;
}

}  // namespace involex

#endif  // INVOLEX_GROUP_HPP_
