#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tsemi/error.hpp"
#include "tsemi/transform.hpp"

namespace tsemi {

/// The semigroup generated by a finite set of transformations, enumerated
/// with full left/right Cayley edges and one witnessing word per element.
///
/// Discovery order is breadth-first by word length; within a layer products
/// are taken generator-major (generator index first, then parent discovery
/// order), which makes the element list fully deterministic.
struct SemigroupTable {
  std::vector<Transformation> generators;
  std::vector<Transformation> elements;  // discovery order
  std::unordered_map<Transformation, std::uint32_t, TransformationHash> index;
  // right_edges[e][g] = index of elements[e] * generators[g]
  // left_edges[e][g]  = index of generators[g] * elements[e]
  std::vector<std::vector<std::uint32_t>> right_edges;
  std::vector<std::vector<std::uint32_t>> left_edges;
  // words[e] evaluates left-to-right to elements[e]; entries are generator
  // indices
  std::vector<std::vector<std::uint32_t>> words;
  std::size_t degree = 0;

  std::size_t size() const { return elements.size(); }

  bool contains(const Transformation& f) const {
    return f.degree() == degree && index.count(f) > 0;
  }

  std::uint32_t position(const Transformation& f) const {
    auto it = index.find(f);
    if (it == index.end()) {
      throw invalid_input_error("element not in semigroup table: " +
                                to_literal(f));
    }
    return it->second;
  }
};

namespace detail {

// Completes the table: computes missing right-product columns layer by
// layer (appending newly discovered elements), then refills the left edges.
// Rows are extended generator-major so that a fresh closure discovers
// elements breadth-first with the documented tie-break.
inline void complete_table(SemigroupTable& table) {
  const std::size_t k = table.generators.size();
  std::vector<std::uint32_t> layer;
  for (std::uint32_t i = 0; i < table.elements.size(); ++i) {
    if (table.right_edges[i].size() < k) {
      layer.push_back(i);
    }
  }
  while (!layer.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t g = 0; g < k; ++g) {
      for (std::uint32_t e : layer) {
        if (table.right_edges[e].size() > g) {
          continue;  // column filled on a previous closure pass
        }
        Transformation prod = compose(table.elements[e], table.generators[g]);
        auto it = table.index.find(prod);
        std::uint32_t pos;
        if (it == table.index.end()) {
          pos = static_cast<std::uint32_t>(table.elements.size());
          table.index.emplace(prod, pos);
          table.elements.push_back(std::move(prod));
          table.right_edges.emplace_back();
          std::vector<std::uint32_t> w = table.words[e];
          w.push_back(g);
          table.words.push_back(std::move(w));
          next.push_back(pos);
        } else {
          pos = it->second;
        }
        table.right_edges[e].push_back(pos);
      }
    }
    layer = std::move(next);
  }
  table.left_edges.assign(table.elements.size(),
                          std::vector<std::uint32_t>(k, 0));
  for (std::uint32_t g = 0; g < k; ++g) {
    for (std::uint32_t e = 0; e < table.elements.size(); ++e) {
      table.left_edges[e][g] =
          table.index.at(compose(table.generators[g], table.elements[e]));
    }
  }
}

}  // namespace detail

inline SemigroupTable closure(const std::vector<Transformation>& generators) {
  if (generators.empty()) {
    throw invalid_input_error("closure requires at least one generator");
  }
  SemigroupTable table;
  table.degree = generators[0].degree();
  for (const auto& g : generators) {
    if (g.degree() != table.degree) {
      throw invalid_input_error("generators must share one degree");
    }
  }
  table.generators = generators;
  for (std::uint32_t g = 0; g < generators.size(); ++g) {
    if (table.index.emplace(generators[g], table.elements.size()).second) {
      table.elements.push_back(generators[g]);
      table.right_edges.emplace_back();
      table.words.push_back({g});
    }
  }
  detail::complete_table(table);
  return table;
}

/// Adjoins a further generator to an existing table and re-closes.  The
/// element set becomes closure(generators + {g}); discovery order of the old
/// elements is preserved.
inline void extend(SemigroupTable& table, const Transformation& g) {
  if (g.degree() != table.degree) {
    throw invalid_input_error("generators must share one degree");
  }
  const auto gi = static_cast<std::uint32_t>(table.generators.size());
  table.generators.push_back(g);
  if (table.index.emplace(g, table.elements.size()).second) {
    table.elements.push_back(g);
    table.right_edges.emplace_back();
    table.words.push_back({gi});
  }
  detail::complete_table(table);
}

/// Decides x <= y in the J-preorder, i.e. x in S^1 y S^1, by breadth-first
/// search from y over left and right Cayley edges (the identity action is
/// the start node itself).
inline bool principal_ideal_membership(const SemigroupTable& table,
                                       const Transformation& x,
                                       const Transformation& y) {
  const std::uint32_t target = table.position(x);
  const std::uint32_t start = table.position(y);
  if (target == start) {
    return true;
  }
  std::vector<bool> seen(table.size(), false);
  std::vector<std::uint32_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t u : queue) {
      for (std::size_t g = 0; g < table.generators.size(); ++g) {
        for (std::uint32_t v : {table.right_edges[u][g], table.left_edges[u][g]}) {
          if (!seen[v]) {
            if (v == target) {
              return true;
            }
            seen[v] = true;
            next.push_back(v);
          }
        }
      }
    }
    queue = std::move(next);
  }
  return false;
}

}  // namespace tsemi
