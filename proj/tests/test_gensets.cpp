#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "tsemi/gensets.hpp"

using namespace tsemi;
using testutil::all_transformations;

namespace {
Transformation t(const std::string& lit) { return parse_transformation(lit); }

std::set<Transformation> as_set(const std::vector<Transformation>& v) {
  return {v.begin(), v.end()};
}
}  // namespace

TEST_CASE("greedy on a cyclic group depends on the list order") {
  const auto cyc = closure({t("[2,3,1]")});  // {c, c^2, id}
  // identity first: Greedy picks the identity, then the 3-cycle
  std::vector<Transformation> id_first = {t("[1,2,3]"), t("[2,3,1]"),
                                          t("[3,1,2]")};
  const auto r1 = greedy(id_first);
  CHECK(r1.size == 2);
  CHECK(r1.generating_set ==
        std::vector<Transformation>{t("[1,2,3]"), t("[2,3,1]")});
  CHECK(!r1.is_irredundant);
  CHECK(r1.semigroup_size == 3);

  // generator first: done in one pick
  std::vector<Transformation> gen_first = {t("[2,3,1]"), t("[1,2,3]"),
                                           t("[3,1,2]")};
  const auto r2 = greedy(gen_first);
  CHECK(r2.size == 1);
  CHECK(r2.is_irredundant);
}

TEST_CASE("greedy trivial cases and validation") {
  const auto r = greedy({t("[1,1,1]")});
  CHECK(r.size == 1);
  CHECK(r.generating_set.front() == t("[1,1,1]"));
  CHECK(r.is_irredundant);

  CHECK_THROWS_AS(greedy({}), invalid_input_error);
  // not closed: the 3-cycle alone, without its square
  CHECK_THROWS_AS(greedy({t("[2,3,1]"), t("[1,2,3]")}), invalid_input_error);
  // duplicates rejected
  CHECK_THROWS_AS(greedy({t("[1,1,1]"), t("[1,1,1]")}), invalid_input_error);
}

TEST_CASE("greedy output always generates the input set") {
  auto rng = testutil::test_rng(808);
  const auto all4 = all_transformations(4);
  for (int trial = 0; trial < 15; ++trial) {
    const auto table = closure({all4[rng.below(256)], all4[rng.below(256)]});
    const auto report = greedy(table.elements);
    CHECK(as_set(closure(report.generating_set).elements) ==
          as_set(table.elements));
    CHECK(report.semigroup_size == table.size());
  }
}

TEST_CASE("small_generating_set examples") {
  const auto full = closure({t("[2,1,3]"), t("[2,3,1]"), t("[1,1,3]")});
  const auto r = small_generating_set(full);
  // The identity is lexicographically first in the maximal class, so greedy
  // picks it, two more permutations to finish S_3, and one rank-2 map:
  // output 4 against rank 3.
  CHECK(r.size == 4);
  CHECK(r.generating_set.front() == t("[1,2,3]"));
  CHECK(semigroup_rank(full) == 3);
  CHECK(r.algorithm == "smallgen");
  CHECK(r.element_order == "descending");
  CHECK(as_set(closure(r.generating_set).elements) == as_set(full.elements));

  // a group degenerates to greedy over lexicographic order
  const auto cyc = closure({t("[2,3,1]")});
  const auto rg = small_generating_set(cyc);
  CHECK(rg.size == 2);  // identity is lexicographically first
  CHECK(!rg.is_irredundant);

  // all three constants: every element is needed
  const auto band = closure({t("[1,1,1]"), t("[2,2,2]"), t("[3,3,3]")});
  CHECK(band.size() == 3);
  const auto rb = small_generating_set(band);
  CHECK(rb.size == 3);
  CHECK(rb.is_irredundant);
}

TEST_CASE("is_irredundant") {
  CHECK(!is_irredundant({t("[1,2,3]"), t("[2,3,1]")}));
  CHECK(is_irredundant({t("[2,3,1]")}));
  CHECK(is_irredundant({t("[2,1,3]"), t("[2,3,1]"), t("[1,1,3]")}));
  CHECK_THROWS_AS(is_irredundant({}), invalid_input_error);
}

TEST_CASE("semigroup_rank") {
  CHECK(semigroup_rank(closure({t("[2,3,1]")})) == 1);
  CHECK(semigroup_rank(closure({t("[2,1,3]"), t("[2,3,1]"), t("[1,1,3]")})) ==
        3);
  CHECK(semigroup_rank(closure(
            {t("[1,1,1]"), t("[2,2,2]"), t("[3,3,3]")})) == 3);
  // ceiling
  const auto t4 = closure({t("[2,1,3,4]"), t("[2,3,4,1]"), t("[1,1,3,4]")});
  CHECK(t4.size() == 256);
  CHECK_THROWS_AS(semigroup_rank(t4), resource_limit_error);
  CHECK_THROWS_AS(semigroup_rank(t4, 100), resource_limit_error);
}

TEST_CASE("semigroup_rank agrees with an unpruned subset search") {
  auto rng = testutil::test_rng(2024);
  const auto all3 = all_transformations(3);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 20; ++trial) {
    const auto table = closure({all3[rng.below(27)], all3[rng.below(27)]});
    if (table.size() > 12) {
      continue;
    }
    ++checked;
    // oracle: iterate all subsets by bitmask, ascending popcount
    std::vector<Transformation> els = table.elements;
    std::size_t best = els.size();
    for (std::uint32_t mask = 1; mask < (1u << els.size()); ++mask) {
      const auto pop = static_cast<std::size_t>(__builtin_popcount(mask));
      if (pop >= best) {
        continue;
      }
      std::vector<Transformation> sub;
      for (std::size_t i = 0; i < els.size(); ++i) {
        if (mask & (1u << i)) {
          sub.push_back(els[i]);
        }
      }
      if (closure(sub).size() == table.size()) {
        best = pop;
      }
    }
    CHECK(semigroup_rank(table) == best);
  }
  CHECK(checked == 20);
}

TEST_CASE("satisfies_sufficient_condition") {
  // any set containing a permutation fails: rank(x^3) = rank(x)
  CHECK(!satisfies_sufficient_condition({t("[2,3,1]"), t("[1,1,2]")}));
  // a constant alone fails: rank(x x x) = 1 = rank(x)
  CHECK(!satisfies_sufficient_condition({t("[1,1,1]")}));
  CHECK_THROWS_AS(satisfies_sufficient_condition({}), invalid_input_error);

  // brute-force oracle over all triples for a mixed example
  const std::vector<Transformation> pair = {t("[1,1,2]"), t("[2,2,3]")};
  bool oracle = true;
  for (const auto& x : pair) {
    for (const auto& y : pair) {
      for (const auto& z : pair) {
        oracle = oracle &&
                 rank(compose(compose(x, y), z)) < rank(y);
      }
    }
  }
  CHECK(satisfies_sufficient_condition(pair) == oracle);

  // and on random pairs of T_4, against the same oracle
  auto rng = testutil::test_rng(606);
  const auto all4 = all_transformations(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::vector<Transformation> xs = {all4[rng.below(256)],
                                            all4[rng.below(256)]};
    bool expect = true;
    for (const auto& x : xs) {
      for (const auto& y : xs) {
        for (const auto& z : xs) {
          expect = expect && rank(compose(compose(x, y), z)) < rank(y);
        }
      }
    }
    CHECK(satisfies_sufficient_condition(xs) == expect);
  }
}

TEST_CASE("enumerate_irredundant_generating_sets") {
  const auto cyc = closure({t("[2,3,1]")});
  const auto sets = enumerate_irredundant_generating_sets(cyc);
  REQUIRE(sets.size() == 2);
  CHECK(sets[0] == std::vector<Transformation>{t("[2,3,1]")});
  CHECK(sets[1] == std::vector<Transformation>{t("[3,1,2]")});

  const auto band = closure({t("[1,1,1]"), t("[2,2,2]"), t("[3,3,3]")});
  const auto bsets = enumerate_irredundant_generating_sets(band);
  REQUIRE(bsets.size() == 1);
  CHECK(bsets[0].size() == 3);

  const auto trivial = closure({t("[1,1,1]")});
  const auto tsets = enumerate_irredundant_generating_sets(trivial);
  REQUIRE(tsets.size() == 1);
  CHECK(tsets[0] == std::vector<Transformation>{t("[1,1,1]")});

  const auto t4 = closure({t("[2,1,3,4]"), t("[2,3,4,1]"), t("[1,1,3,4]")});
  CHECK_THROWS_AS(enumerate_irredundant_generating_sets(t4),
                  resource_limit_error);
}

TEST_CASE("every enumerated irredundant set is irredundant and generates") {
  auto rng = testutil::test_rng(9000);
  const auto all3 = all_transformations(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto table = closure({all3[rng.below(27)], all3[rng.below(27)]});
    const auto sets = enumerate_irredundant_generating_sets(table);
    CHECK(!sets.empty());
    std::set<std::vector<Transformation>> dedup(sets.begin(), sets.end());
    CHECK(dedup.size() == sets.size());
    std::size_t smallest = table.size() + 1;
    for (const auto& s : sets) {
      CHECK(is_irredundant(s));
      CHECK(closure(s).size() == table.size());
      smallest = std::min(smallest, s.size());
    }
    // the minimum over irredundant sets is the rank
    CHECK(smallest == semigroup_rank(table));
  }
}

TEST_CASE("is_ubiquitous") {
  CHECK(is_ubiquitous(closure({t("[2,3,1]")})));
  CHECK(is_ubiquitous(closure({t("[1,1,1]")})));

  // cyclic group of order 4 on 4 points, validated against the enumeration
  const auto c4 = closure({t("[2,3,4,1]")});
  REQUIRE(c4.size() == 4);
  const auto sets = enumerate_irredundant_generating_sets(c4);
  std::set<std::size_t> sizes;
  for (const auto& s : sets) {
    sizes.insert(s.size());
  }
  CHECK(is_ubiquitous(c4) == (sizes.size() == 1));

  // the full monoid T_3, validated against the enumeration
  const auto full = closure({t("[2,1,3]"), t("[2,3,1]"), t("[1,1,3]")});
  const auto fsets = enumerate_irredundant_generating_sets(full);
  std::set<std::size_t> fsizes;
  for (const auto& s : fsets) {
    fsizes.insert(s.size());
  }
  CHECK(is_ubiquitous(full) == (fsizes.size() == 1));
}

TEST_CASE("rank never exceeds greedy or smallgen output sizes") {
  auto rng = testutil::test_rng(123);
  const auto all3 = all_transformations(3);
  for (int trial = 0; trial < 15; ++trial) {
    const auto table = closure({all3[rng.below(27)], all3[rng.below(27)]});
    const auto r = semigroup_rank(table);
    CHECK(r <= greedy(table.elements).size);
    CHECK(r <= small_generating_set(table, Direction::descending).size);
    CHECK(r <= small_generating_set(table, Direction::ascending).size);
  }
}

TEST_CASE(
    "rank-drop generating pairs at degree 3: smallgen is irredundant and "
    "smallest, the semigroup ubiquitous") {
  // Exhaustive over all 729 ordered pairs of T_3 used as generating sets.
  const auto all3 = all_transformations(3);
  int satisfied = 0;
  for (const auto& a : all3) {
    for (const auto& b : all3) {
      const std::vector<Transformation> gens = {a, b};
      if (!satisfies_sufficient_condition(gens)) {
        continue;
      }
      ++satisfied;
      const auto table = closure(gens);
      const auto report = small_generating_set(table);
      CHECK(report.is_irredundant);
      CHECK(report.size == semigroup_rank(table));
      CHECK(is_ubiquitous(table));
    }
  }
  CHECK(satisfied > 0);  // the condition is satisfiable at degree 3
}

TEST_CASE("elements of a maximal class use at most one factor from it") {
  // On condition-satisfying tables, stored words of elements in a maximal
  // class contain at most one generator letter from that class.
  auto rng = testutil::test_rng(404);
  int tables_checked = 0;
  for (int trial = 0; trial < 400 && tables_checked < 20; ++trial) {
    const std::size_t n = 4 + rng.below(2);
    const std::vector<Transformation> gens = {random_transformation(n, rng),
                                              random_transformation(n, rng)};
    if (!satisfies_sufficient_condition(gens)) {
      continue;
    }
    ++tables_checked;
    const auto table = closure(gens);
    const auto d = d_classes(table);
    for (std::size_t e = 0; e < table.size(); ++e) {
      bool maximal = true;
      for (std::uint32_t c = 0; c < d.class_count() && maximal; ++c) {
        maximal = !d.less(d.class_of[e], c);
      }
      if (!maximal) {
        continue;
      }
      std::size_t in_class = 0;
      for (auto letter : table.words[e]) {
        const auto pos = table.position(table.generators[letter]);
        if (d.class_of[pos] == d.class_of[e]) {
          ++in_class;
        }
      }
      CHECK(in_class <= 1);
    }
  }
  CHECK(tables_checked > 0);
}
