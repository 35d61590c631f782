#ifndef INVOLEX_ENUMERATOR_HPP_
#define INVOLEX_ENUMERATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "involex/error.hpp"
#include "involex/presentation.hpp"

namespace involex {

inline constexpr std::size_t kDefaultMaxCosets = std::size_t{1} << 20;

using Permutation = std::vector<std::uint32_t>;

// Coset table over the trivial subgroup. Column 2i holds the action of
// generator i, column 2i+1 the action of its inverse. Row 0 is the identity.
struct CosetTable {
  std::size_t num_generators = 0;
  std::size_t n_cosets = 0;
  std::vector<std::int32_t> rows;  // n_cosets * 2 * num_generators, -1 = undefined

  std::size_t columns() const noexcept { return 2 * num_generators; }
  std::int32_t entry(std::size_t coset, std::size_t column) const {
    return rows[coset * columns() + column];
  }
  bool complete() const {
    for (std::int32_t v : rows) {
      if (v < 0) return false;
    }
    return true;
  }

  friend bool operator==(const CosetTable&, const CosetTable&) = default;
};

namespace detail {

inline std::size_t letter_column(int letter) {
  const auto g = static_cast<std::size_t>(std::abs(letter) - 1);
  return 2 * g + (letter < 0 ? 1 : 0);
}

// Felsch-style enumeration: always define the first undefined table entry,
// then close every relator cycle through each new edge before defining again.
class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, std::size_t max_cosets)
      : ncols_(2 * p.num_generators()), max_cosets_(max_cosets) {
    for (const Word& r : p.relators) {
      std::vector<std::size_t> cols;
      for (int l : r.letters) cols.push_back(letter_column(l));
      relators_.push_back(cols);
    }
    // Cyclic conjugates of every relator and of its inverse, bucketed by
    // first column, so a deduction on (c, x) scans exactly the cycles through
    // that edge.
    by_first_.resize(ncols_);
    for (const auto& r : relators_) {
      std::vector<std::size_t> inv(r.rbegin(), r.rend());
      const std::vector<std::size_t>& inv_ref = inv;
      for (auto& x : inv) x ^= 1;
      for (const auto* w : {&r, &inv_ref}) {
        for (std::size_t s = 0; s < w->size(); ++s) {
          std::vector<std::size_t> rot(w->begin() + static_cast<std::ptrdiff_t>(s), w->end());
          rot.insert(rot.end(), w->begin(), w->begin() + static_cast<std::ptrdiff_t>(s));
          auto& bucket = by_first_[rot.front()];
          bool seen = false;
          for (const auto& e : bucket) seen = seen || e == rot;
          if (!seen) bucket.push_back(std::move(rot));
        }
      }
    }
  }

  CosetTable run() {
    new_coset();
    for (;;) {
      for (std::size_t c = 0; c < parent_.size(); ++c) {
        for (std::size_t x = 0; x < ncols_ && alive(c); ++x) {
          if (at(c, x) >= 0) continue;
          const std::int32_t d = new_coset();
          set(static_cast<std::int32_t>(c), x, d);
          deductions_.emplace_back(static_cast<std::int32_t>(c), x);
          process_deductions();
        }
      }
      // Safety net: a complete table must close every relator at every coset.
      if (full_scan_is_clean()) break;
    }
    return compact();
  }

 private:
  std::int32_t& at(std::size_t c, std::size_t x) { return table_[c * ncols_ + x]; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

  std::int32_t new_coset() {
    if (live_ + 1 > max_cosets_) {
      throw OverflowError("coset enumeration exceeded " + std::to_string(max_cosets_) +
                          " cosets (group too large or infinite)");
    }
    const auto id = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(id);
    table_.resize(table_.size() + ncols_, -1);
    ++live_;
    return id;
  }

  void set(std::int32_t c, std::size_t x, std::int32_t d) {
    at(static_cast<std::size_t>(c), x) = d;
    at(static_cast<std::size_t>(d), x ^ 1) = c;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const std::int32_t next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b, std::vector<std::int32_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::vector<std::int32_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::int32_t e = queue[i];
      for (std::size_t x = 0; x < ncols_; ++x) {
        const std::int32_t f = at(static_cast<std::size_t>(e), x);
        if (f < 0) continue;
        at(static_cast<std::size_t>(f), x ^ 1) = -1;
        const std::int32_t e1 = rep(e);
        const std::int32_t f1 = rep(f);
        if (at(static_cast<std::size_t>(e1), x) >= 0) {
          merge(f1, at(static_cast<std::size_t>(e1), x), queue);
        } else if (at(static_cast<std::size_t>(f1), x ^ 1) >= 0) {
          merge(e1, at(static_cast<std::size_t>(f1), x ^ 1), queue);
        } else {
          set(e1, x, f1);
          deductions_.emplace_back(e1, x);
        }
      }
    }
  }

  // Traces w from c in both directions without defining anything; fills a
  // single gap or records a coincidence.
  void scan(std::int32_t c, const std::vector<std::size_t>& w) {
    std::int32_t f = c;
    std::size_t i = 0;
    const std::size_t len = w.size();
    while (i < len && at(static_cast<std::size_t>(f), w[i]) >= 0) {
      f = at(static_cast<std::size_t>(f), w[i]);
      ++i;
    }
    if (i == len) {
      if (f != c) coincidence(f, c);
      return;
    }
    std::int32_t b = c;
    std::size_t j = len;
    while (j > i && at(static_cast<std::size_t>(b), w[j - 1] ^ 1) >= 0) {
      b = at(static_cast<std::size_t>(b), w[j - 1] ^ 1);
      --j;
    }
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      set(f, w[i], b);
      deductions_.emplace_back(f, w[i]);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(static_cast<std::size_t>(c))) continue;
      for (const auto& w : by_first_[x]) {
        if (!alive(static_cast<std::size_t>(c))) break;
        scan(c, w);
      }
    }
  }

  bool full_scan_is_clean() {
    bool clean = true;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < ncols_; ++x) {
        if (at(c, x) < 0) clean = false;
      }
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        std::int32_t f = static_cast<std::int32_t>(c);
        bool traced = true;
        for (std::size_t x : r) {
          f = at(static_cast<std::size_t>(f), x);
          if (f < 0) {
            traced = false;
            break;
          }
        }
        if (traced && f == static_cast<std::int32_t>(c)) continue;
        clean = false;
        scan(static_cast<std::int32_t>(c), r);
        process_deductions();
      }
    }
    return clean;
  }

  CosetTable compact() {
    std::vector<std::int32_t> renumber(parent_.size(), -1);
    std::int32_t next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (alive(c)) renumber[c] = next++;
    }
    CosetTable t;
    t.num_generators = ncols_ / 2;
    t.n_cosets = static_cast<std::size_t>(next);
    t.rows.reserve(t.n_cosets * ncols_);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < ncols_; ++x) {
        t.rows.push_back(renumber[static_cast<std::size_t>(at(c, x))]);
      }
    }
    return t;
  }

  std::size_t ncols_;
  std::size_t max_cosets_;
  std::size_t live_ = 0;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::vector<std::vector<std::size_t>>> by_first_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::pair<std::int32_t, std::size_t>> deductions_;
};

}  // namespace detail

// Enumerates the cosets of the trivial subgroup, so a successful run yields
// the regular representation and `n_cosets` is the group order.
inline CosetTable enumerate_cosets(const Presentation& p,
                                   std::size_t max_cosets = kDefaultMaxCosets) {
  if (max_cosets == 0) throw PreconditionError("max_cosets must be positive");
  if (p.relators.empty()) {
    throw PreconditionError("presentation has no relators; the group is not finite");
  }
  if (p.num_generators() == 0) {
    CosetTable t;
    t.n_cosets = 1;
    return t;
  }
  return detail::CosetEnumerator(p, max_cosets).run();
}

// One permutation of the cosets per generator (right action).
inline std::vector<Permutation> regular_generators(const CosetTable& t) {
  if (!t.complete()) throw PreconditionError("coset table is incomplete");
  std::vector<Permutation> perms(t.num_generators, Permutation(t.n_cosets));
  for (std::size_t g = 0; g < t.num_generators; ++g) {
    for (std::size_t c = 0; c < t.n_cosets; ++c) {
      perms[g][c] = static_cast<std::uint32_t>(t.entry(c, 2 * g));
    }
  }
  return perms;
}

}  // namespace involex

#endif  // INVOLEX_ENUMERATOR_HPP_
