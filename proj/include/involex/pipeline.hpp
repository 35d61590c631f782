#ifndef INVOLEX_PIPELINE_HPP_
#define INVOLEX_PIPELINE_HPP_

#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "involex/error.hpp"
#include "involex/group.hpp"
#include "involex/morphisms.hpp"
#include "involex/presentation.hpp"
#include "involex/starcheck.hpp"

namespace involex {

struct CatalogEntry {
  std::string name;
  Presentation presentation;
  std::size_t line = 0;
};

struct Catalog {
  std::vector<CatalogEntry> entries;

  bool empty() const noexcept { return entries.empty(); }
  std::size_t size() const noexcept { return entries.size(); }
};

// One stanza per line: `group NAME <gens | rels>`. `#` starts a comment.
inline Catalog parse_catalog(std::string_view text) {
  Catalog c;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t i = 0;
    auto skip = [&] {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    skip();
    if (i == line.size()) continue;
    if (line.substr(i, 5) != "group" || i + 5 >= line.size() ||
        !std::isspace(static_cast<unsigned char>(line[i + 5]))) {
      throw ParseError("expected `group NAME <presentation>`", line_no, i + 1);
    }
    i += 5;
    skip();
    const std::size_t name_start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '<') ++i;
    std::string name(line.substr(name_start, i - name_start));
    if (name.empty()) throw ParseError("missing group name", line_no, name_start + 1);
    for (const auto& e : c.entries) {
      if (e.name == name) {
        throw ParseError("duplicate group name '" + name + "' (first defined on line " +
                             std::to_string(e.line) + ")",
                         line_no, name_start + 1);
      }
    }
    skip();
    try {
      Presentation p = parse_presentation(line.substr(i), line_no, i + 1);
      c.entries.push_back(CatalogEntry{std::move(name), std::move(p), line_no});
    } catch (const ParseError& e) {
      throw ParseError("in group '" + name + "': " + e.what(), e.line(), e.column());
    }
    if (end == text.size()) break;
  }
  return c;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Catalog load_catalog(const std::string& path) { return parse_catalog(read_file(path)); }

inline std::string format_catalog(const Catalog& c) {
  std::string out;
  for (const auto& e : c.entries) out += "group " + e.name + " " + format_presentation(e.presentation) + "\n";
  return out;
}

struct SurveyRow {
  std::string name;
  std::optional<std::size_t> order;
  std::optional<bool> satisfies_star;
  std::string witness;
  std::vector<std::string> obstructions;
  std::string error;
};

struct SurveyReport {
  std::vector<SurveyRow> rows;
  std::size_t satisfying = 0;
  std::size_t failing = 0;
  std::size_t errors = 0;
};

inline SurveyRow survey_entry(const CatalogEntry& entry, const StarOptions& options) {
  SurveyRow row;
  row.name = entry.name;
  try {
    const ConcreteGroup G = concretize(entry.presentation);
    row.order = G.order();
    const StarReport r = satisfies_star(G, options);
    row.satisfies_star = r.satisfies;
    if (r.witness) {
      row.witness = format_witness(G, *r.witness);
    } else {
      std::string largest = "none";
      if (!r.involution_subgroup_orders.empty()) {
        largest = std::to_string(r.involution_subgroup_orders.rbegin()->first);
      }
      row.obstructions.push_back("exhaustive: " + std::to_string(r.extensions_tried) +
                                 " compatible extensions over " + std::to_string(r.automorphisms_examined) +
                                 " automorphisms, none generated by involutions (largest involution subgroup " +
                                 largest + " of " + std::to_string(2 * G.order()) + ")");
    }
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

inline SurveyReport run_star_survey(const Catalog& c, const StarOptions& options = default_star_options()) {
  SurveyReport report;
  for (const auto& entry : c.entries) {
    SurveyRow row = survey_entry(entry, options);
    if (!row.error.empty()) {
      ++report.errors;
    } else if (*row.satisfies_star) {
      ++report.satisfying;
    } else {
      ++report.failing;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

inline std::string format_survey(const SurveyReport& r) {
  std::ostringstream out;
  out << "name\torder\tproperty\tdetail\n";
  for (const auto& row : r.rows) {
    out << row.name << '\t' << (row.order ? std::to_string(*row.order) : "-") << '\t';
    if (!row.error.empty()) {
      out << "ERROR\t" << row.error;
    } else if (*row.satisfies_star) {
      out << "satisfies\t" << row.witness;
    } else {
      out << "FAILS\t";
      for (std::size_t i = 0; i < row.obstructions.size(); ++i) out << (i ? "; " : "") << row.obstructions[i];
    }
    out << '\n';
  }
  out << "total " << r.rows.size() << ": " << r.satisfying << " satisfy, " << r.failing << " fail, " << r.errors
      << " errors\n";
  return out.str();
}

inline nlohmann::ordered_json survey_json(const SurveyReport& r) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json e;
    e["name"] = row.name;
    e["order"] = row.order ? nlohmann::ordered_json(*row.order) : nlohmann::ordered_json(nullptr);
    e["satisfies_star"] =
        row.satisfies_star ? nlohmann::ordered_json(*row.satisfies_star) : nlohmann::ordered_json(nullptr);
    e["witness"] = row.witness.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(row.witness);
    e["obstructions"] = row.obstructions;
    if (!row.error.empty()) e["error"] = row.error;
    entries.push_back(std::move(e));
  }
  nlohmann::ordered_json doc;
  doc["entries"] = std::move(entries);
  doc["totals"] = {{"entries", r.rows.size()},
                   {"satisfying", r.satisfying},
                   {"failing", r.failing},
                   {"errors", r.errors}};
  return doc;
}

// Classes of groups up to isomorphism: fingerprint buckets, then pairwise
// isomorphism tests inside a bucket.
class IsomorphismClasses {
 public:
  // Index of the class of G, creating a new class if needed.
  std::size_t add(const ConcreteGroup& G, const std::string& label) {
    const Fingerprint fp = fingerprint(G);
    if (auto found = find(G, fp)) return *found;
    buckets_[fp].push_back(reps_.size());
    reps_.push_back(G);
    labels_.push_back(label);
    return reps_.size() - 1;
  }

  std::optional<std::size_t> find(const ConcreteGroup& G) const { return find(G, fingerprint(G)); }

  std::size_t size() const noexcept { return reps_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }

 private:
  std::optional<std::size_t> find(const ConcreteGroup& G, const Fingerprint& fp) const {
    const auto it = buckets_.find(fp);
    if (it == buckets_.end()) return std::nullopt;
    for (std::size_t i : it->second) {
      if (are_isomorphic(G, reps_[i])) return i;
    }
    return std::nullopt;
  }

  std::map<Fingerprint, std::vector<std::size_t>> buckets_;
  std::vector<ConcreteGroup> reps_;
  std::vector<std::string> labels_;
};

struct SearchReport {
  std::size_t big_entries = 0;
  std::size_t big_concretized = 0;
  std::vector<std::string> involution_generated;
  std::size_t maximal_subgroups = 0;
  std::vector<std::string> classes;  // label: first big group and maximal subgroup index
  std::size_t small_entries = 0;
  std::size_t small_concretized = 0;
  std::vector<std::string> matched;
  std::vector<std::string> unmatched;
  std::vector<std::string> errors;
  std::vector<std::string> caveats;
};

// Census method: keep the big groups generated by involutions, collect their
// maximal subgroups up to isomorphism, and report the small groups that do
// not occur. An unmatched group fails the property only if the big catalog
// contains every group of order 2k; matched groups certainly satisfy it.
inline SearchReport run_maximal_subgroup_search(const Catalog& big, const Catalog& small) {
  SearchReport r;
  r.big_entries = big.size();
  r.small_entries = small.size();

  std::vector<std::pair<std::string, ConcreteGroup>> small_groups;
  std::optional<std::size_t> k;
  for (const auto& e : small.entries) {
    try {
      ConcreteGroup G = concretize(e.presentation);
      if (k && *k != G.order()) {
        throw PreconditionError("order mismatch: small catalog mixes orders " + std::to_string(*k) + " and " +
                                std::to_string(G.order()) + " ('" + e.name + "')");
      }
      k = G.order();
      small_groups.emplace_back(e.name, std::move(G));
    } catch (const PreconditionError&) {
      throw;
    } catch (const Error& ex) {
      r.errors.push_back(e.name + ": " + ex.what());
    }
  }
  r.small_concretized = small_groups.size();

  IsomorphismClasses classes;
  std::optional<std::size_t> big_order;
  for (const auto& e : big.entries) {
    std::optional<ConcreteGroup> G;
    try {
      G = concretize(e.presentation);
    } catch (const Error& ex) {
      r.errors.push_back(e.name + ": " + ex.what());
      continue;
    }
    if ((k && G->order() != 2 * *k) || (big_order && *big_order != G->order())) {
      throw PreconditionError("order mismatch: big entry '" + e.name + "' has order " + std::to_string(G->order()) +
                              (k ? ", expected " + std::to_string(2 * *k) : std::string()));
    }
    big_order = G->order();
    ++r.big_concretized;
    if (involution_generated_subgroup(*G).size() != G->order()) continue;
    r.involution_generated.push_back(e.name);
    const auto maxes = maximal_subgroups(*G);
    for (std::size_t i = 0; i < maxes.size(); ++i) {
      ++r.maximal_subgroups;
      const std::string label = e.name + "/M" + std::to_string(i + 1);
      const std::size_t before = classes.size();
      classes.add(subgroup_as_group(*G, maxes[i]).group, label);
      if (classes.size() > before) r.classes.push_back(label);
    }
  }

  for (const auto& [name, G] : small_groups) {
    if (classes.find(G)) {
      r.matched.push_back(name);
    } else {
      r.unmatched.push_back(name);
    }
  }
  r.caveats.push_back(
      "necessary-condition method: unmatched groups fail the property only if the big catalog lists every group of "
      "twice their order; star-check is authoritative");
  if (big.empty()) r.caveats.push_back("big catalog is empty, so every small group is unmatched (vacuous)");
  return r;
}

inline std::string format_search(const SearchReport& r) {
  auto join = [](const std::vector<std::string>& v) {
    if (v.empty()) return std::string("(none)");
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
    return out;
  };
  std::ostringstream out;
  out << "big catalog: " << r.big_entries << " entries, " << r.big_concretized << " concretized\n";
  out << "generated by involutions: " << r.involution_generated.size() << " (" << join(r.involution_generated)
      << ")\n";
  out << "maximal subgroups collected: " << r.maximal_subgroups << "\n";
  out << "isomorphism classes: " << r.classes.size() << " (" << join(r.classes) << ")\n";
  out << "small catalog: " << r.small_entries << " entries, " << r.small_concretized << " concretized\n";
  out << "matched: " << r.matched.size() << " (" << join(r.matched) << ")\n";
  out << "unmatched: " << r.unmatched.size() << " (" << join(r.unmatched) << ")\n";
  for (const auto& e : r.errors) out << "error: " << e << "\n";
  for (const auto& c : r.caveats) out << "caveat: " << c << "\n";
  return out.str();
}

inline nlohmann::ordered_json search_json(const SearchReport& r) {
  nlohmann::ordered_json doc;
  doc["big_entries"] = r.big_entries;
  doc["big_concretized"] = r.big_concretized;
  doc["involution_generated"] = r.involution_generated;
  doc["maximal_subgroups"] = r.maximal_subgroups;
  doc["classes"] = r.classes;
  doc["small_entries"] = r.small_entries;
  doc["small_concretized"] = r.small_concretized;
  doc["matched"] = r.matched;
  doc["unmatched"] = r.unmatched;
  doc["errors"] = r.errors;
  doc["caveats"] = r.caveats;
  return doc;
}

}  // namespace involex

#endif  // INVOLEX_PIPELINE_HPP_
