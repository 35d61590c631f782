#ifndef INVOLEX_FAMILIES_HPP_
#define INVOLEX_FAMILIES_HPP_

#include <bit>
#include <cstddef>
#include <string>
#include <vector>

#include "involex/error.hpp"
#include "involex/group.hpp"
#include "involex/presentation.hpp"

namespace involex {

enum class FamilyKind {
  gmn,
  cyclic,
  dihedral,
  generalized_quaternion,
  semidihedral,
  abelian_of_type,
  direct_product,
};

// A named family member. Orders are given as group orders (dihedral(16) has
// order 16). `factors` is used by direct_product only.
struct FamilySpec {
  FamilyKind kind = FamilyKind::cyclic;
  std::vector<std::size_t> parameters;
  std::vector<FamilySpec> factors;

  static FamilySpec gmn(std::size_t m, std::size_t n) { return {FamilyKind::gmn, {m, n}, {}}; }
  static FamilySpec cyclic(std::size_t n) { return {FamilyKind::cyclic, {n}, {}}; }
  static FamilySpec dihedral(std::size_t n) { return {FamilyKind::dihedral, {n}, {}}; }
  static FamilySpec quaternion(std::size_t n) { return {FamilyKind::generalized_quaternion, {n}, {}}; }
  static FamilySpec semidihedral(std::size_t n) { return {FamilyKind::semidihedral, {n}, {}}; }
  static FamilySpec abelian(std::vector<std::size_t> type) {
    return {FamilyKind::abelian_of_type, std::move(type), {}};
  }
  static FamilySpec product(std::vector<FamilySpec> factors) {
    return {FamilyKind::direct_product, {}, std::move(factors)};
  }
};

inline bool power_of_two(std::size_t v) { return std::has_single_bit(v); }

// Rejects parameters outside m, n powers of 2, m >= 16, n >= 4, m <= 4n.
inline void check_gmn_parameters(std::size_t m, std::size_t n) {
  if (!power_of_two(m) || !power_of_two(n)) {
    throw PreconditionError("G(m,n) requires m and n to be powers of 2 (got m=" + std::to_string(m) +
                            ", n=" + std::to_string(n) + ")");
  }
  if (m < 16) throw PreconditionError("G(m,n) requires m >= 16 (got m=" + std::to_string(m) + ")");
  if (n < 4) throw PreconditionError("G(m,n) requires n >= 4 (got n=" + std::to_string(n) + ")");
  if (m > 4 * n) {
    throw PreconditionError("G(m,n) requires m <= 4n (got m=" + std::to_string(m) +
                            ", n=" + std::to_string(n) + ")");
  }
}

namespace detail {

inline std::size_t single_parameter(const FamilySpec& spec, const char* what, std::size_t min_order) {
  if (spec.parameters.size() != 1) {
    throw PreconditionError(std::string(what) + " takes exactly one parameter (the group order)");
  }
  const std::size_t n = spec.parameters[0];
  if (!power_of_two(n) || n < min_order) {
    throw PreconditionError(std::string(what) + " order must be a power of 2 and at least " +
                            std::to_string(min_order) + " (got " + std::to_string(n) + ")");
  }
  return n;
}

inline std::string num(std::size_t v) { return std::to_string(v); }

}  // namespace detail

inline std::string family_name(const FamilySpec& spec) {
  using detail::num;
  const auto& p = spec.parameters;
  switch (spec.kind) {
    case FamilyKind::gmn:
      return "G(" + num(p.at(0)) + "," + num(p.at(1)) + ")";
    case FamilyKind::cyclic:
      return "C" + num(p.at(0));
    case FamilyKind::dihedral:
      return "D" + num(p.at(0));
    case FamilyKind::generalized_quaternion:
      return "Q" + num(p.at(0));
    case FamilyKind::semidihedral:
      return "SD" + num(p.at(0));
    case FamilyKind::abelian_of_type: {
      if (p.empty()) return "C1";
      std::string out;
      for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "xC" : "C") + num(p[i]);
      return out;
    }
    case FamilyKind::direct_product: {
      std::string out;
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        out += (i ? "x" : "") + family_name(spec.factors[i]);
      }
      return out;
    }
  }
  return "?";
}

// Standard presentation text for a family member.
inline std::string presentation_text(const FamilySpec& spec) {
  using detail::num;
  switch (spec.kind) {
    case FamilyKind::gmn: {
      if (spec.parameters.size() != 2) throw PreconditionError("gmn takes parameters m n");
      const std::size_t m = spec.parameters[0], n = spec.parameters[1];
      check_gmn_parameters(m, n);
      return "<a,b | a^" + num(m) + ", b^" + num(n) + ", [b,a]=a^4>";
    }
    case FamilyKind::cyclic: {
      const std::size_t n = detail::single_parameter(spec, "cyclic", 1);
      return "<a | a^" + num(n) + ">";
    }
    case FamilyKind::dihedral: {
      const std::size_t n = detail::single_parameter(spec, "dihedral", 4);
      return "<r,s | r^" + num(n / 2) + ", s^2, (rs)^2>";
    }
    case FamilyKind::generalized_quaternion: {
      const std::size_t n = detail::single_parameter(spec, "quaternion", 8);
      return "<x,y | x^" + num(n / 2) + ", y^2=x^" + num(n / 4) + ", y^-1 x y = x^-1>";
    }
    case FamilyKind::semidihedral: {
      const std::size_t n = detail::single_parameter(spec, "semidihedral", 16);
      return "<r,s | r^" + num(n / 2) + ", s^2, s r s = r^" + num(n / 4 - 1) + ">";
    }
    case FamilyKind::abelian_of_type: {
      const auto& t = spec.parameters;
      if (t.empty()) return "<a | a>";
      if (t.size() > kMaxGenerators) throw PreconditionError("too many abelian factors");
      std::string gens, rels;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (!power_of_two(t[i]) || t[i] < 2) {
          throw PreconditionError("abelian factor orders must be powers of 2 and at least 2");
        }
        const std::string g(1, static_cast<char>('a' + i));
        gens += (i ? "," : "") + g;
        rels += (i ? ", " : "") + g + "^" + num(t[i]);
      }
      for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
          rels += std::string(", [") + static_cast<char>('a' + i) + "," + static_cast<char>('a' + j) + "]";
        }
      }
      return "<" + gens + " | " + rels + ">";
    }
    case FamilyKind::direct_product:
      break;
  }
  throw PreconditionError("direct products have no single presentation text; use make_presentation");
}

inline Presentation make_presentation(const FamilySpec& spec);

namespace detail {

inline Presentation direct_product_presentation(const FamilySpec& spec) {
  if (spec.factors.empty()) throw PreconditionError("direct product needs at least one factor");
  Presentation out;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (const FamilySpec& f : spec.factors) {
    const Presentation p = make_presentation(f);
    const std::size_t offset = out.generator_names.size();
    if (offset + p.num_generators() > kMaxGenerators) {
      throw PreconditionError("direct product would exceed " + std::to_string(kMaxGenerators) + " generators");
    }
    for (std::size_t i = 0; i < p.num_generators(); ++i) {
      out.generator_names.push_back(std::string(1, static_cast<char>('a' + offset + i)));
    }
    for (const Word& r : p.relators) {
      Word shifted = r;
      for (int& l : shifted.letters) l += (l > 0 ? 1 : -1) * static_cast<int>(offset);
      out.relators.push_back(shifted);
    }
    ranges.emplace_back(offset, offset + p.num_generators());
  }
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    for (std::size_t j = i + 1; j < ranges.size(); ++j) {
      for (std::size_t x = ranges[i].first; x < ranges[i].second; ++x) {
        for (std::size_t y = ranges[j].first; y < ranges[j].second; ++y) {
          out.relators.push_back(word_commutator(Word{{static_cast<int>(x + 1)}}, Word{{static_cast<int>(y + 1)}}));
        }
      }
    }
  }
  return out;
}

}  // namespace detail

inline Presentation make_presentation(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::direct_product) return detail::direct_product_presentation(spec);
  return parse_presentation(presentation_text(spec));
}

inline ConcreteGroup make_group(const FamilySpec& spec) { return concretize(make_presentation(spec)); }

// Structural facts about G(m,n): order mn, derived subgroup <a^4> cyclic of
// order m/4, abelianization with invariants {4, n}.
struct Lemma2Report {
  std::size_t m = 0, n = 0;
  std::size_t order = 0;
  std::size_t derived_order = 0;
  bool derived_is_a4 = false;
  bool derived_cyclic = false;
  std::vector<std::size_t> abelianization;
  std::vector<std::string> failures;

  bool holds() const noexcept { return failures.empty(); }
};

inline Lemma2Report verify_lemma2(std::size_t m, std::size_t n) {
  check_gmn_parameters(m, n);
  if (m * n > (std::size_t{1} << 10)) throw BoundError("verify_lemma2 limited to mn <= 1024");
  Lemma2Report r;
  r.m = m;
  r.n = n;
  const ConcreteGroup G = make_group(FamilySpec::gmn(m, n));
  r.order = G.order();
  if (r.order != m * n) {
    r.failures.push_back("order is " + std::to_string(r.order) + ", expected mn = " + std::to_string(m * n));
  }
  const Subgroup derived = derived_subgroup(G);
  r.derived_order = derived.size();
  const Elem a = G.generators()[0];
  const Elem a4 = G.pow(a, 4);
  r.derived_is_a4 = derived == closure(G, std::vector<Elem>{a4});
  r.derived_cyclic = G.element_order(a4) == r.derived_order;
  if (!r.derived_is_a4) r.failures.push_back("G' differs from <a^4>");
  if (!r.derived_cyclic) r.failures.push_back("G' is not cyclic");
  if (r.derived_order != m / 4) {
    r.failures.push_back("|G'| is " + std::to_string(r.derived_order) + ", expected m/4 = " + std::to_string(m / 4));
  }
  r.abelianization = abelian_invariants(quotient(G, derived).group);
  std::vector<std::size_t> want{4, n};
  std::sort(want.begin(), want.end());
  if (r.abelianization != want) r.failures.push_back("G/G' invariants differ from {4, n}");
  return r;
}

}  // namespace involex

#endif  // INVOLEX_FAMILIES_HPP_
