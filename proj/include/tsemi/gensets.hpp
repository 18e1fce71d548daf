#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "tsemi/error.hpp"
#include "tsemi/greens.hpp"
#include "tsemi/semigroup.hpp"
#include "tsemi/transform.hpp"

namespace tsemi {

struct GenSetReport {
  std::vector<Transformation> generating_set;
  std::size_t size = 0;
  bool is_irredundant = false;
  std::size_t semigroup_size = 0;
  std::string algorithm;      // "greedy" | "smallgen"
  std::string element_order;  // "descending" | "ascending" | "given"
};

constexpr std::size_t kDefaultRankCeiling = 64;
constexpr std::size_t kDefaultEnumCeiling = 32;

/// True iff no proper subset of `generators` generates the same semigroup.
/// A single generator is always irredundant (the semigroup is nonempty).
inline bool is_irredundant(const std::vector<Transformation>& generators) {
  if (generators.empty()) {
    throw invalid_input_error("is_irredundant requires a nonempty set");
  }
  if (generators.size() == 1) {
    return true;
  }
  const std::size_t full = closure(generators).size();
  for (std::size_t skip = 0; skip < generators.size(); ++skip) {
    std::vector<Transformation> rest;
    rest.reserve(generators.size() - 1);
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (i != skip) {
        rest.push_back(generators[i]);
      }
    }
    if (closure(rest).size() == full) {
      return false;
    }
  }
  return true;
}

/// Algorithm "Greedy": scan the element list in order, adding s whenever
/// s is not generated by the elements picked so far.  The input must be the
/// full element set of a semigroup (closed under composition), in any order.
inline GenSetReport greedy(const std::vector<Transformation>& element_list,
                           std::string element_order = "given") {
  if (element_list.empty()) {
    throw invalid_input_error("greedy requires a nonempty element list");
  }
  std::unordered_set<Transformation, TransformationHash> set(
      element_list.begin(), element_list.end());
  if (set.size() != element_list.size()) {
    throw invalid_input_error("greedy input contains duplicate elements");
  }
  for (const auto& a : element_list) {
    for (const auto& b : element_list) {
      if (set.count(compose(a, b)) == 0) {
        throw invalid_input_error(
            "greedy input is not closed under composition");
      }
    }
  }

  GenSetReport report;
  report.algorithm = "greedy";
  report.element_order = std::move(element_order);
  report.semigroup_size = element_list.size();
  std::optional<SemigroupTable> table;
  for (const auto& s : element_list) {
    if (!table.has_value()) {
      report.generating_set.push_back(s);
      table = closure({s});
    } else if (!table->contains(s)) {
      report.generating_set.push_back(s);
      extend(*table, s);
    }
  }
  report.size = report.generating_set.size();
  report.is_irredundant = is_irredundant(report.generating_set);
  return report;
}

/// Algorithm "SmallGeneratingSet": Greedy over the elements ordered by
/// J-class, maximal classes first by default.
inline GenSetReport small_generating_set(
    const SemigroupTable& table, Direction direction = Direction::descending) {
  auto ordered = ordered_elements(table, d_classes(table), direction);
  auto report = greedy(ordered, direction == Direction::descending
                                    ? "descending"
                                    : "ascending");
  report.algorithm = "smallgen";
  return report;
}

/// Sufficient condition for ubiquity: rank(x*y*z) < rank(y) for every
/// triple (x, y, z) from the set, repetitions included.
inline bool satisfies_sufficient_condition(
    const std::vector<Transformation>& generators) {
  if (generators.empty()) {
    throw invalid_input_error(
        "satisfies_sufficient_condition requires a nonempty set");
  }
  const std::size_t degree = generators[0].degree();
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw invalid_input_error("generators must share one degree");
    }
  }
  for (const auto& x : generators) {
    for (const auto& y : generators) {
      const Transformation xy = compose(x, y);
      const std::size_t ry = rank(y);
      for (const auto& z : generators) {
        if (rank(compose(xy, z)) >= ry) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Exact rank of the semigroup: the least m such that some m-subset of the
/// element set generates it.  Exhaustive (with closure-based pruning); the
/// element count must not exceed `ceiling`.
inline std::size_t semigroup_rank(const SemigroupTable& table,
                                  std::size_t ceiling = kDefaultRankCeiling) {
  if (table.size() > ceiling) {
    throw resource_limit_error("semigroup_rank ceiling exceeded: " +
                               std::to_string(table.size()) + " elements > " +
                               std::to_string(ceiling));
  }
  std::vector<Transformation> elements = table.elements;
  std::sort(elements.begin(), elements.end());
  const std::size_t target = elements.size();

  // DFS for one generating set of size exactly m, smallest m first.  Any
  // inclusion-minimal generating set, taken in increasing element order,
  // never picks an element inside the closure of its prefix, so pruning on
  // that is lossless.
  struct Walker {
    const std::vector<Transformation>& elements;
    std::size_t target;
    std::size_t m;
    std::vector<Transformation> chosen;

    bool walk(std::size_t first, const SemigroupTable* generated) {
      for (std::size_t i = first; i < elements.size(); ++i) {
        if (generated != nullptr && generated->contains(elements[i])) {
          continue;
        }
        chosen.push_back(elements[i]);
        const SemigroupTable t = closure(chosen);
        bool done = t.size() == target;
        if (!done && chosen.size() < m) {
          done = walk(i + 1, &t);
        }
        chosen.pop_back();
        if (done) {
          return true;
        }
      }
      return false;
    }
  };
  for (std::size_t m = 1; m <= target; ++m) {
    Walker w{elements, target, m, {}};
    if (w.walk(0, nullptr)) {
      return m;
    }
  }
  return target;
}

/// All irredundant generating sets of the semigroup, each sorted, the list
/// sorted lexicographically.  Exhaustive; throws above `ceiling` elements.
inline std::vector<std::vector<Transformation>>
enumerate_irredundant_generating_sets(const SemigroupTable& table,
                                      std::size_t ceiling = kDefaultEnumCeiling) {
  if (table.size() > ceiling) {
    throw resource_limit_error(
        "irredundant enumeration ceiling exceeded: " +
        std::to_string(table.size()) + " elements > " + std::to_string(ceiling));
  }
  std::vector<Transformation> elements = table.elements;
  std::sort(elements.begin(), elements.end());
  const std::size_t target = elements.size();

  std::vector<std::vector<Transformation>> found;
  struct Walker {
    const std::vector<Transformation>& elements;
    std::size_t target;
    std::vector<std::vector<Transformation>>& found;
    std::vector<Transformation> chosen;

    void walk(std::size_t first, const SemigroupTable* generated) {
      for (std::size_t i = first; i < elements.size(); ++i) {
        if (generated != nullptr && generated->contains(elements[i])) {
          continue;  // a set containing a generated element is redundant
        }
        chosen.push_back(elements[i]);
        const SemigroupTable t = closure(chosen);
        if (t.size() == target) {
          if (is_irredundant(chosen)) {
            found.push_back(chosen);
          }
          // supersets of a generating set cannot be irredundant
        } else {
          walk(i + 1, &t);
        }
        chosen.pop_back();
      }
    }
  };
  Walker w{elements, target, found, {}};
  w.walk(0, nullptr);
  std::sort(found.begin(), found.end());
  return found;
}

/// True iff every irredundant generating set has the same cardinality.
inline bool is_ubiquitous(const SemigroupTable& table,
                          std::size_t ceiling = kDefaultEnumCeiling) {
  const auto sets = enumerate_irredundant_generating_sets(table, ceiling);
  for (const auto& s : sets) {
    if (s.size() != sets.front().size()) {
      return false;
    }
  }
  return true;
}

}  // namespace tsemi
