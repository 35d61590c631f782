#ifndef INVOLEX_MORPHISMS_HPP_
#define INVOLEX_MORPHISMS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "involex/element_set.hpp"
#include "involex/error.hpp"
#include "involex/group.hpp"

namespace involex {

inline constexpr std::size_t kMaxMorphismOrder = std::size_t{1} << 10;
inline constexpr std::size_t kMaxAutomorphismGenerators = 4;

// A homomorphism stored as a total table of images. Groups are passed to the
// operations that need them; the map itself is a plain value.
struct GroupMap {
  std::vector<Elem> images;            // source element -> target element
  std::vector<Elem> generator_images;  // images of the source's generators

  Elem operator()(Elem x) const { return images[x]; }
  std::size_t source_order() const noexcept { return images.size(); }

  bool is_bijective(std::size_t target_order) const {
    if (images.size() != target_order) return false;
    ElementSet hit(target_order);
    for (Elem y : images) {
      if (!hit.add(y)) return false;
    }
    return true;
  }

  friend bool operator==(const GroupMap& a, const GroupMap& b) { return a.images == b.images; }
};

inline GroupMap identity_map(const ConcreteGroup& G) {
  GroupMap f;
  f.images.resize(G.order());
  for (Elem x = 0; x < G.order(); ++x) f.images[x] = x;
  f.generator_images.assign(G.generators().begin(), G.generators().end());
  return f;
}

// (f o g)(x) = f(g(x)). `source` is the source group of g.
inline GroupMap compose(const GroupMap& f, const GroupMap& g, const ConcreteGroup& source) {
  GroupMap out;
  out.images.resize(g.images.size());
  for (std::size_t x = 0; x < g.images.size(); ++x) out.images[x] = f.images[g.images[x]];
  for (Elem s : source.generators()) out.generator_images.push_back(out.images[s]);
  return out;
}

inline GroupMap inverse_map(const GroupMap& f, const ConcreteGroup& G) {
  GroupMap out;
  out.images.resize(f.images.size());
  for (std::size_t x = 0; x < f.images.size(); ++x) out.images[f.images[x]] = static_cast<Elem>(x);
  for (Elem s : G.generators()) out.generator_images.push_back(out.images[s]);
  return out;
}

// Exhaustive check of f(xy) = f(x)f(y).
inline bool is_homomorphism(const ConcreteGroup& G, const ConcreteGroup& H, const GroupMap& f) {
  if (f.images.size() != G.order() || f.images[0] != 0) return false;
  for (Elem y : f.images) {
    if (y >= H.order()) return false;
  }
  for (Elem x = 0; x < G.order(); ++x) {
    for (Elem y = 0; y < G.order(); ++y) {
      if (f.images[G.mul(x, y)] != H.mul(f.images[x], f.images[y])) return false;
    }
  }
  return true;
}

namespace detail {

// Backtracking over images of G's generators. At depth j the assignment is
// extended over the subgroup generated by the first j generators; any
// inconsistency (or a collision, when injective) prunes the branch.
template <class Visit>
class HomSearch {
 public:
  HomSearch(const ConcreteGroup& G, const ConcreteGroup& H,
            std::vector<std::vector<Elem>> candidates, bool injective, Visit& visit)
      : G_(G), H_(H), candidates_(std::move(candidates)), injective_(injective), visit_(visit) {
    chosen_.resize(G.generators().size());
  }

  // Returns false if the visitor asked to stop.
  bool run() { return descend(0); }

 private:
  bool extend(std::size_t depth, std::vector<Elem>& img) {
    const std::size_t n = G_.order();
    constexpr Elem kUnset = static_cast<Elem>(-1);
    img.assign(n, kUnset);
    img[0] = 0;
    ElementSet hit(H_.order());
    hit.insert(0);
    queue_.assign(1, 0);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const Elem x = queue_[i];
      for (std::size_t k = 0; k < depth; ++k) {
        const Elem y = G_.mul(x, G_.generators()[k]);
        const Elem want = H_.mul(img[x], chosen_[k]);
        if (img[y] == kUnset) {
          if (injective_ && !hit.add(want)) return false;
          img[y] = want;
          queue_.push_back(y);
        } else if (img[y] != want) {
          return false;
        }
      }
    }
    return true;
  }

  bool descend(std::size_t depth) {
    const std::size_t k = G_.generators().size();
    if (depth == k) {
      GroupMap f;
      if (!extend(depth, f.images)) return true;
      f.generator_images = chosen_;
      return visit_(std::move(f));
    }
    for (Elem c : candidates_[depth]) {
      chosen_[depth] = c;
      if (depth + 1 < k && !extend(depth + 1, scratch_)) continue;
      if (!descend(depth + 1)) return false;
    }
    return true;
  }

  const ConcreteGroup& G_;
  const ConcreteGroup& H_;
  std::vector<std::vector<Elem>> candidates_;
  bool injective_;
  Visit& visit_;
  std::vector<Elem> chosen_;
  std::vector<Elem> scratch_;
  std::vector<Elem> queue_;
};

inline std::vector<std::vector<Elem>> order_matched_candidates(const ConcreteGroup& G,
                                                               const ConcreteGroup& H) {
  std::vector<std::vector<Elem>> out;
  for (Elem g : G.generators()) {
    std::vector<Elem> c;
    for (Elem y = 0; y < H.order(); ++y) {
      if (H.element_order(y) == G.element_order(g)) c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

// Extends a generator assignment to a homomorphism G -> H if one exists.
inline std::optional<GroupMap> hom_from_generator_images(const ConcreteGroup& G,
                                                         const ConcreteGroup& H,
                                                         const std::vector<Elem>& images) {
  if (images.size() != G.generators().size()) {
    throw PreconditionError("one image per generator required");
  }
  std::vector<std::vector<Elem>> cands;
  for (Elem y : images) {
    if (y >= H.order()) throw PreconditionError("image index out of range");
    cands.push_back({y});
  }
  std::optional<GroupMap> found;
  auto visit = [&found](GroupMap f) {
    found = std::move(f);
    return false;
  };
  detail::HomSearch<decltype(visit)>(G, H, std::move(cands), false, visit).run();
  return found;
}

// Streams every automorphism of G in lexicographic order of generator-image
// tuples. `visit(GroupMap)` returns false to stop early.
template <class Visit>
void for_each_automorphism(const ConcreteGroup& G, Visit&& visit) {
  if (G.order() > kMaxMorphismOrder) {
    throw BoundError("automorphism search limited to order " + std::to_string(kMaxMorphismOrder));
  }
  detail::HomSearch<std::remove_reference_t<Visit>>(G, G, detail::order_matched_candidates(G, G), true,
                                                    visit)
      .run();
}

inline std::vector<GroupMap> enumerate_automorphisms(const ConcreteGroup& G) {
  if (G.generators().size() > kMaxAutomorphismGenerators) {
    throw BoundError("automorphism enumeration supports at most " +
                     std::to_string(kMaxAutomorphismGenerators) + " generators");
  }
  std::vector<GroupMap> out;
  for_each_automorphism(G, [&out](GroupMap f) {
    out.push_back(std::move(f));
    return true;
  });
  return out;
}

struct Fingerprint {
  std::size_t order = 0;
  std::map<std::uint32_t, std::size_t> order_histogram;
  bool abelian = false;
  std::size_t derived_order = 0;
  std::size_t center_order = 0;
  std::optional<std::size_t> frattini_rank;  // 2-groups only
  std::size_t square_image_size = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const ConcreteGroup& G) {
  Fingerprint fp;
  fp.order = G.order();
  for (Elem x = 0; x < G.order(); ++x) ++fp.order_histogram[G.element_order(x)];
  fp.abelian = G.is_abelian();
  fp.derived_order = fp.abelian ? 1 : derived_subgroup(G).size();
  fp.center_order = center(G).size();
  if (G.is_two_group()) fp.frattini_rank = minimal_generating_set(G).size();
  ElementSet squares(G.order());
  for (Elem x = 0; x < G.order(); ++x) squares.insert(G.mul(x, x));
  fp.square_image_size = squares.count();
  return fp;
}

inline std::string format_fingerprint(const Fingerprint& fp) {
  std::string out = "order " + std::to_string(fp.order) + "; element orders {";
  bool first = true;
  for (const auto& [ord, count] : fp.order_histogram) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(ord) + ":" + std::to_string(count);
  }
  out += "}; ";
  out += fp.abelian ? "abelian" : "nonabelian";
  out += "; |G'| " + std::to_string(fp.derived_order);
  out += "; |Z| " + std::to_string(fp.center_order);
  if (fp.frattini_rank) out += "; rank " + std::to_string(*fp.frattini_rank);
  out += "; |squares| " + std::to_string(fp.square_image_size);
  return out;
}

// Searches for an isomorphism G -> H, pre-screening with fingerprints.
inline std::optional<GroupMap> are_isomorphic(const ConcreteGroup& G, const ConcreteGroup& H) {
  if (G.order() > kMaxMorphismOrder || H.order() > kMaxMorphismOrder) {
    throw BoundError("isomorphism testing limited to order " + std::to_string(kMaxMorphismOrder));
  }
  if (G.order() != H.order()) return std::nullopt;
  if (!(fingerprint(G) == fingerprint(H))) return std::nullopt;
  std::optional<GroupMap> found;
  auto visit = [&found](GroupMap f) {
    found = std::move(f);
    return false;
  };
  detail::HomSearch<decltype(visit)>(G, H, detail::order_matched_candidates(G, H), true, visit).run();
  return found;
}

inline bool maps_onto(const GroupMap& f, const Subgroup& N) {
  for (Elem x : N.elements()) {
    if (!N.contains(f(x))) return false;
  }
  return true;  // injective, so into implies onto
}

// True iff every automorphism in `auts` maps N onto itself.
inline bool is_characteristic(const ConcreteGroup& G, const Subgroup& N,
                              const std::vector<GroupMap>& auts) {
  (void)G;
  for (const GroupMap& a : auts) {
    if (!maps_onto(a, N)) return false;
  }
  return true;
}

// Automorphisms of order dividing 2.
inline std::vector<GroupMap> involutory_automorphisms(const ConcreteGroup& G,
                                                      const std::vector<GroupMap>& auts) {
  std::vector<GroupMap> out;
  for (const GroupMap& a : auts) {
    bool ok = true;
    for (Elem g : G.generators()) ok = ok && a(a(g)) == g;
    if (ok) out.push_back(a);
  }
  return out;
}

// {x : alpha(x) = x^-1} for an involutory automorphism of an abelian group.
// Throws if the set is not a subgroup, which would contradict commutativity.
inline std::vector<Elem> inverted_set(const ConcreteGroup& A, const GroupMap& alpha) {
  if (!A.is_abelian()) throw PreconditionError("inverted_set requires an abelian group");
  if (alpha.images.size() != A.order() || !alpha.is_bijective(A.order()) ||
      !is_homomorphism(A, A, alpha)) {
    throw PreconditionError("alpha is not an automorphism");
  }
  for (Elem x = 0; x < A.order(); ++x) {
    if (alpha(alpha(x)) != x) throw PreconditionError("alpha does not square to the identity");
  }
  ElementSet s(A.order());
  for (Elem x = 0; x < A.order(); ++x) {
    if (alpha(x) == A.inv(x)) s.insert(x);
  }
  if (!is_subgroup(A, s)) throw Error("inverted set is not a subgroup");
  return s.elements();
}

// Renders a map by the images of the source generators, e.g. `a -> a^3, b -> b`.
inline std::string format_map(const GroupMap& f, const ConcreteGroup& source, const ConcreteGroup& target) {
  std::string out;
  for (std::size_t k = 0; k < source.generators().size(); ++k) {
    if (k) out += ", ";
    out += source.generator_names()[k] + " -> " + target.format(f(source.generators()[k]));
  }
  return out;
}

}  // namespace involex

#endif  // INVOLEX_MORPHISMS_HPP_
