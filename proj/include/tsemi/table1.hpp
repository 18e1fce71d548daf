#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <thread>
#include <vector>

#include "tsemi/gensets.hpp"
#include "tsemi/greens.hpp"
#include "tsemi/semigroup.hpp"
#include "tsemi/transform.hpp"

namespace tsemi {

namespace t3 {

// Dense tables over the 27 transformations of degree 3, indexed in
// lexicographic order of the image tuples.
struct Tables {
  std::vector<Transformation> all;           // 27 transformations
  std::array<std::array<std::uint8_t, 27>, 27> mult;  // product indices
  std::vector<std::array<std::uint8_t, 27>> conj;     // one map per perm of S_3

  Tables() {
    for (Transformation::point_type a = 0; a < 3; ++a) {
      for (Transformation::point_type b = 0; b < 3; ++b) {
        for (Transformation::point_type c = 0; c < 3; ++c) {
          all.push_back(Transformation({a, b, c}));
        }
      }
    }
    auto index_of = [&](const Transformation& t) {
      return static_cast<std::uint8_t>(t[0] * 9 + t[1] * 3 + t[2]);
    };
    for (int a = 0; a < 27; ++a) {
      for (int b = 0; b < 27; ++b) {
        mult[a][b] = index_of(compose(all[a], all[b]));
      }
    }
    for (const auto& p : all) {
      if (!is_permutation(p)) {
        continue;
      }
      std::array<std::uint8_t, 27> map{};
      for (int a = 0; a < 27; ++a) {
        map[a] = index_of(conjugate(all[a], p));
      }
      conj.push_back(map);
    }
  }

  static const Tables& instance() {
    static const Tables tables;
    return tables;
  }
};

using ElementSet = std::vector<std::uint8_t>;  // sorted indices into all[]

inline ElementSet close_set(const Tables& tb, ElementSet seed) {
  std::array<bool, 27> in{};
  std::vector<std::uint8_t> members;
  std::vector<std::uint8_t> todo;
  for (auto e : seed) {
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
      todo.push_back(e);
    }
  }
  // every element popped from todo is multiplied against all members known
  // at that point (index loop, safe under growth)
  while (!todo.empty()) {
    const auto a = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto b = members[i];
      for (auto c : {tb.mult[a][b], tb.mult[b][a]}) {
        if (!in[c]) {
          in[c] = true;
          members.push_back(c);
          todo.push_back(c);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

/// Lexicographically least image of the element set under the 6
/// conjugations by S_3.
inline ElementSet canonical_form(const Tables& tb, const ElementSet& set) {
  ElementSet best;
  for (const auto& map : tb.conj) {
    ElementSet img;
    img.reserve(set.size());
    for (auto e : set) {
      img.push_back(map[e]);
    }
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) {
      best = std::move(img);
    }
  }
  return best;
}

}  // namespace t3

/// All nonempty subsemigroups of T_3 up to conjugation, one canonical
/// representative per class (the lexicographically least element set in its
/// class), listed in lexicographic order of (size, element set).
///
/// Depth-first extension: start from every singleton closure, repeatedly
/// adjoin one outside element and re-close, deduplicating states by
/// canonical form.  Since conjugation commutes with closure, exploring only
/// canonical representatives still reaches every class.
inline std::vector<std::vector<Transformation>> enumerate_subsemigroups_T3() {
  const auto& tb = t3::Tables::instance();
  std::set<t3::ElementSet> seen;
  std::vector<t3::ElementSet> stack;
  for (std::uint8_t a = 0; a < 27; ++a) {
    auto c = t3::canonical_form(tb, t3::close_set(tb, {a}));
    if (seen.insert(c).second) {
      stack.push_back(c);
    }
  }
  while (!stack.empty()) {
    const t3::ElementSet s = std::move(stack.back());
    stack.pop_back();
    for (std::uint8_t e = 0; e < 27; ++e) {
      if (std::binary_search(s.begin(), s.end(), e)) {
        continue;
      }
      t3::ElementSet seed = s;
      seed.push_back(e);
      auto c = t3::canonical_form(tb, t3::close_set(tb, std::move(seed)));
      if (seen.insert(c).second) {
        stack.push_back(c);
      }
    }
  }
  std::vector<t3::ElementSet> ordered(seen.begin(), seen.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const t3::ElementSet& a, const t3::ElementSet& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  std::vector<std::vector<Transformation>> out;
  out.reserve(ordered.size());
  for (const auto& s : ordered) {
    std::vector<Transformation> rep;
    rep.reserve(s.size());
    for (auto e : s) {
      rep.push_back(tb.all[e]);
    }
    out.push_back(std::move(rep));
  }
  return out;
}

struct Table1Row {
  std::size_t rank = 0;
  std::map<std::size_t, std::size_t> output_size_histogram;
  std::size_t class_count = 0;
};

struct Table1Cell {
  std::size_t rank;
  std::size_t output_size;
  long computed;
  long reference;  // -1 where the reference grid has no cell
};

struct Table1Report {
  std::vector<Table1Row> rows;  // keyed by semigroup rank, ascending
  std::size_t total_classes = 0;
  Direction direction = Direction::descending;
  double mean_output_size = 0.0;
  std::vector<Table1Cell> reference_diff;
};

/// Published reference grid for the rank x output-size histogram over the
/// 282 subsemigroup classes of degree 3 (rows: rank 1..5, columns: output
/// size 1..7).  The tool reports a diff against it rather than asserting
/// it; see README for the rank-convention caveat.
inline const std::array<std::array<long, 7>, 5>& table1_reference_grid() {
  static const std::array<std::array<long, 7>, 5> grid = {{
      {7, 3, 1, 0, 0, 0, 0},
      {0, 32, 25, 11, 3, 1, 0},
      {0, 0, 38, 50, 23, 9, 2},
      {0, 0, 0, 23, 28, 6, 6},
      {0, 0, 0, 0, 5, 7, 2},
  }};
  return grid;
}

/// Per-class rank and SmallGeneratingSet output size over every
/// subsemigroup class of T_3, aggregated by rank.
inline Table1Report table1(Direction direction = Direction::descending,
                           int workers = 1) {
  const auto classes = enumerate_subsemigroups_T3();
  std::vector<std::pair<std::size_t, std::size_t>> per_class(classes.size());
  workers = std::max(1, workers);

  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const SemigroupTable table = closure(classes[i]);
      per_class[i] = {semigroup_rank(table),
                      small_generating_set(table, direction).size};
    }
  };
  if (workers == 1) {
    work(0, classes.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (classes.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::size_t lo = std::min(classes.size(), chunk * w);
      const std::size_t hi = std::min(classes.size(), lo + chunk);
      pool.emplace_back(work, lo, hi);
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  Table1Report report;
  report.direction = direction;
  report.total_classes = classes.size();
  std::map<std::size_t, Table1Row> rows;
  double total_output = 0.0;
  for (auto [rank_value, output] : per_class) {
    auto& row = rows[rank_value];
    row.rank = rank_value;
    row.output_size_histogram[output] += 1;
    row.class_count += 1;
    total_output += static_cast<double>(output);
  }
  for (auto& kv : rows) {
    report.rows.push_back(kv.second);
  }
  report.mean_output_size = total_output / static_cast<double>(classes.size());

  const auto& ref = table1_reference_grid();
  std::set<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 1; r <= 5; ++r) {
    for (std::size_t o = 1; o <= 7; ++o) {
      cells.insert({r, o});
    }
  }
  for (const auto& row : report.rows) {
    for (const auto& kv : row.output_size_histogram) {
      cells.insert({row.rank, kv.first});
    }
  }
  for (auto [r, o] : cells) {
    long computed = 0;
    for (const auto& row : report.rows) {
      if (row.rank == r) {
        auto it = row.output_size_histogram.find(o);
        computed = it == row.output_size_histogram.end()
                       ? 0
                       : static_cast<long>(it->second);
      }
    }
    const long reference =
        (r >= 1 && r <= 5 && o >= 1 && o <= 7) ? ref[r - 1][o - 1] : -1;
    report.reference_diff.push_back({r, o, computed, reference});
  }
  return report;
}

}  // namespace tsemi
