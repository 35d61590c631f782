#ifndef INVOLEX_STARCHECK_HPP_
#define INVOLEX_STARCHECK_HPP_

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "involex/element_set.hpp"
#include "involex/error.hpp"
#include "involex/families.hpp"
#include "involex/group.hpp"
#include "involex/morphisms.hpp"

namespace involex {

inline constexpr std::size_t kDefaultStarMaxOrder = std::size_t{1} << 9;

// Index-2 extension datum: Gamma = <G, t> with t x t^-1 = alpha(x), t^2 = h.
struct ExtensionSpec {
  GroupMap alpha;
  Elem h = 0;
};

// alpha(h) = h and alpha o alpha = (x -> h x h^-1), checked on generators.
inline bool is_compatible(const ConcreteGroup& G, const GroupMap& alpha, Elem h) {
  if (alpha(h) != h) return false;
  for (Elem g : G.generators()) {
    if (alpha(alpha(g)) != G.conj(h, g)) return false;
  }
  return true;
}

inline std::vector<ExtensionSpec> compatible_extension_specs(const ConcreteGroup& G,
                                                             const std::vector<GroupMap>& auts) {
  std::vector<ExtensionSpec> out;
  for (const GroupMap& a : auts) {
    for (Elem h = 0; h < G.order(); ++h) {
      if (is_compatible(G, a, h)) out.push_back(ExtensionSpec{a, h});
    }
  }
  return out;
}

// Multiplication in Gamma without materializing its table. Element (g, e) is
// stored as g + e*|G|.
class ExtensionArithmetic {
 public:
  ExtensionArithmetic(const ConcreteGroup& G, const ExtensionSpec& spec) : G_(G), spec_(spec) {}

  std::size_t order() const noexcept { return 2 * G_.order(); }

  Elem operator()(Elem x, Elem y) const noexcept {
    const auto n = static_cast<Elem>(G_.order());
    const Elem g1 = x % n, g2 = y % n;
    const bool e1 = x >= n, e2 = y >= n;
    Elem g = G_.mul(g1, e1 ? spec_.alpha(g2) : g2);
    if (e1 && e2) g = G_.mul(g, spec_.h);
    return g + ((e1 != e2) ? n : 0);
  }

  // (g,1) squares to g alpha(g) h.
  bool outer_is_involution(Elem g) const noexcept {
    return G_.mul(G_.mul(g, spec_.alpha(g)), spec_.h) == 0;
  }

  std::vector<Elem> involutions() const {
    std::vector<Elem> out;
    const auto n = static_cast<Elem>(G_.order());
    for (Elem g = 1; g < n; ++g) {
      if (G_.element_order(g) == 2) out.push_back(g);
    }
    for (Elem g = 0; g < n; ++g) {
      if (outer_is_involution(g)) out.push_back(g + n);
    }
    return out;
  }

 private:
  const ConcreteGroup& G_;
  const ExtensionSpec& spec_;
};

struct Extension {
  ConcreteGroup gamma;
  GroupMap embedding;
};

inline Extension build_extension(const ConcreteGroup& G, const ExtensionSpec& spec) {
  if (spec.alpha.images.size() != G.order() || !spec.alpha.is_bijective(G.order()) ||
      !is_homomorphism(G, G, spec.alpha)) {
    throw PreconditionError("extension datum alpha is not an automorphism");
  }
  if (!is_compatible(G, spec.alpha, spec.h)) {
    throw PreconditionError("extension datum violates alpha(h) = h or alpha^2 = conj(h)");
  }
  const ExtensionArithmetic ext(G, spec);
  const std::size_t n2 = ext.order();
  std::vector<std::uint16_t> table(n2 * n2);
  for (Elem x = 0; x < n2; ++x) {
    for (Elem y = 0; y < n2; ++y) table[x * n2 + y] = static_cast<std::uint16_t>(ext(x, y));
  }
  std::vector<Elem> gens(G.generators().begin(), G.generators().end());
  gens.push_back(static_cast<Elem>(G.order()));
  std::vector<std::string> names = G.generator_names();
  names.push_back("t");
  Extension out{ConcreteGroup::from_table(n2, std::move(table), std::move(gens), std::move(names)), {}};
  if (!verify_associativity(out.gamma)) throw Error("extension table is not associative");
  out.embedding.images.resize(G.order());
  for (Elem x = 0; x < G.order(); ++x) out.embedding.images[x] = x;
  out.embedding.generator_images.assign(G.generators().begin(), G.generators().end());
  return out;
}

struct StarOptions {
  std::size_t max_order = kDefaultStarMaxOrder;
};

// Defaults, with INVOLEX_MAX_ORDER overriding the order bound.
inline StarOptions default_star_options() {
  StarOptions o;
  if (const char* env = std::getenv("INVOLEX_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) o.max_order = static_cast<std::size_t>(v);
  }
  return o;
}

struct StarReport {
  bool satisfies = false;
  std::optional<ExtensionSpec> witness;
  std::size_t extensions_tried = 0;
  std::size_t automorphisms_examined = 0;
  // |<involutions of Gamma>| -> number of extensions tried with that value
  std::map<std::size_t, std::size_t> involution_subgroup_orders;
};

// Decides whether G is an index-2 subgroup of a group generated by
// involutions. Every index-2 overgroup is realized by some compatible
// (alpha, h), so trying them all in order decides the property. The search
// streams automorphisms and stops at the first witness.
inline StarReport satisfies_star(const ConcreteGroup& G, const StarOptions& options = default_star_options()) {
  if (G.order() > options.max_order) {
    throw BoundError("satisfies_star limited to order " + std::to_string(options.max_order) +
                     " (set INVOLEX_MAX_ORDER to raise)");
  }
  StarReport report;
  const auto n = static_cast<Elem>(G.order());
  for_each_automorphism(G, [&](GroupMap alpha) {
    ++report.automorphisms_examined;
    for (Elem h = 0; h < n; ++h) {
      if (!is_compatible(G, alpha, h)) continue;
      ExtensionSpec spec{alpha, h};
      const ExtensionArithmetic ext(G, spec);
      ++report.extensions_tried;
      const auto invs = ext.involutions();
      std::size_t reached = G.order();  // without outer involutions, stays inside G
      bool has_outer = !invs.empty() && invs.back() >= n;
      if (has_outer) {
        reached = closure_by(ext.order(), ext, invs).count();
      } else {
        reached = closure(G, invs).size();
      }
      ++report.involution_subgroup_orders[reached];
      if (reached == ext.order()) {
        report.satisfies = true;
        report.witness = std::move(spec);
        return false;
      }
    }
    return true;
  });
  if (report.witness) {
    // Re-derive the verdict on the materialized extension.
    const Extension e = build_extension(G, *report.witness);
    if (involution_generated_subgroup(e.gamma).size() != e.gamma.order()) {
      throw Error("internal: witness extension is not generated by involutions");
    }
  }
  return report;
}

inline std::string format_witness(const ConcreteGroup& G, const ExtensionSpec& spec) {
  return "t x t^-1 = alpha(x) with alpha: " + format_map(spec.alpha, G, G) + "; t^2 = " + G.format(spec.h);
}

// Whether some automorphism of G induces g N -> g^-1 N on the abelian
// quotient G/N.
inline bool exists_inverting_automorphism(const ConcreteGroup& G, const Subgroup& N,
                                          const std::vector<GroupMap>& auts) {
  const Quotient q = quotient(G, N);
  if (!q.group.is_abelian()) throw PreconditionError("G/N must be abelian");
  for (const GroupMap& a : auts) {
    bool inverts = true;
    for (Elem g = 0; g < G.order() && inverts; ++g) {
      inverts = q.projection[a(g)] == q.group.inv(q.projection[g]);
    }
    if (inverts) return true;
  }
  return false;
}

// For abelian A of index 2 in B: Omega(A) * I = A, where I is the set of
// elements of A inverted by some element of B \ A.
inline bool lemma5_decomposition_holds(const ConcreteGroup& B, const Subgroup& A) {
  if (!is_subgroup(B, A.members) || 2 * A.size() != B.order()) {
    throw PreconditionError("A must be a subgroup of index 2 in B");
  }
  const auto a_elems = A.elements();
  for (Elem x : a_elems) {
    for (Elem y : a_elems) {
      if (B.mul(x, y) != B.mul(y, x)) throw PreconditionError("A must be abelian");
    }
  }
  if (involution_generated_subgroup(B).size() != B.order()) {
    throw PreconditionError("B must be generated by involutions");
  }
  ElementSet omega_a(B.order());
  for (Elem x : a_elems) {
    if (B.element_order(x) <= 2) omega_a.insert(x);
  }
  ElementSet inverted(B.order());
  for (Elem x : a_elems) {
    for (Elem y = 0; y < B.order(); ++y) {
      if (A.contains(y)) continue;
      if (B.conj(y, x) == B.inv(x)) {
        inverted.insert(x);
        break;
      }
    }
  }
  if (!is_subgroup(B, inverted)) throw Error("inverted elements do not form a subgroup");
  ElementSet product(B.order());
  for (Elem x : omega_a.elements()) {
    for (Elem y : inverted.elements()) product.insert(B.mul(x, y));
  }
  return product == A.members;
}

struct Lemma1Check {
  bool holds = false;
  bool quotient_satisfies = false;
  bool group_satisfies = false;
};

// Consistency check of characteristic-quotient propagation on one instance:
// if G/N fails the property then so must G.
inline Lemma1Check check_lemma1_propagation_detailed(const ConcreteGroup& G, const Subgroup& N,
                                                     const StarOptions& options = default_star_options()) {
  const auto auts = enumerate_automorphisms(G);
  if (!is_characteristic(G, N, auts)) throw PreconditionError("N is not characteristic in G");
  Lemma1Check c;
  c.quotient_satisfies = satisfies_star(quotient(G, N).group, options).satisfies;
  c.group_satisfies = satisfies_star(G, options).satisfies;
  c.holds = c.quotient_satisfies || !c.group_satisfies;
  return c;
}

inline bool check_lemma1_propagation(const ConcreteGroup& G, const Subgroup& N,
                                     const StarOptions& options = default_star_options()) {
  return check_lemma1_propagation_detailed(G, N, options).holds;
}

// The proof-chain obstruction for G(m,n) with N = <a^4>, and (within the
// order bound) the direct decision for comparison.
struct FamilyObstruction {
  std::size_t m = 0, n = 0;
  bool n_characteristic = false;
  bool quotient_abelian = false;
  bool omega_in_frattini = false;
  bool inverting_automorphism_exists = true;
  bool obstruction_applies = false;
  std::optional<bool> direct_satisfies;  // empty when the direct check was skipped

  bool agrees() const noexcept { return !direct_satisfies || *direct_satisfies != obstruction_applies; }
};

inline FamilyObstruction analyze_family(std::size_t m, std::size_t n, bool cross_check = true,
                                        const StarOptions& options = default_star_options()) {
  check_gmn_parameters(m, n);
  FamilyObstruction r;
  r.m = m;
  r.n = n;
  const ConcreteGroup G = make_group(FamilySpec::gmn(m, n));
  const Subgroup N = closure(G, std::vector<Elem>{G.pow(G.generators()[0], 4)});
  const auto auts = enumerate_automorphisms(G);
  r.n_characteristic = is_characteristic(G, N, auts);
  const Quotient q = quotient(G, N);
  r.quotient_abelian = q.group.is_abelian();
  if (r.quotient_abelian) {
    r.omega_in_frattini = omega(q.group).members.is_subset_of(frattini_subgroup(q.group).members);
    r.inverting_automorphism_exists = exists_inverting_automorphism(G, N, auts);
  }
  r.obstruction_applies =
      r.n_characteristic && r.quotient_abelian && r.omega_in_frattini && !r.inverting_automorphism_exists;
  if (cross_check && G.order() <= options.max_order) {
    r.direct_satisfies = satisfies_star(G, options).satisfies;
  }
  return r;
}

// True when the obstruction shows G(m,n) fails the property. Throws if the
// direct decision (run when within bounds) disagrees.
inline bool theorem_family_fails(std::size_t m, std::size_t n,
                                 const StarOptions& options = default_star_options()) {
  const FamilyObstruction r = analyze_family(m, n, true, options);
  if (!r.agrees()) {
    throw Error("obstruction and direct decision disagree for G(" + std::to_string(m) + "," +
                std::to_string(n) + ")");
  }
  return r.obstruction_applies;
}

}  // namespace involex

#endif  // INVOLEX_STARCHECK_HPP_
