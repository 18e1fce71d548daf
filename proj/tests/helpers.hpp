#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "tsemi/montecarlo.hpp"
#include "tsemi/transform.hpp"

// Shared test utilities: exhaustive universes, naive closure (the oracle
// used against the Cayley-table machinery), and partition enumeration.

namespace testutil {

using tsemi::Transformation;

inline std::vector<Transformation> all_transformations(std::size_t n) {
  std::vector<Transformation> out;
  std::vector<Transformation::point_type> im(n, 0);
  while (true) {
    out.push_back(Transformation(im));
    std::size_t i = n;
    while (i > 0 && im[i - 1] == n - 1) {
      im[i - 1] = 0;
      --i;
    }
    if (i == 0) {
      return out;
    }
    ++im[i - 1];
  }
}

inline std::vector<Transformation> all_permutations(std::size_t n) {
  std::vector<Transformation> out;
  for (const auto& t : all_transformations(n)) {
    if (tsemi::is_permutation(t)) {
      out.push_back(t);
    }
  }
  return out;
}

// Plain pairwise-product saturation, no Cayley bookkeeping.
inline std::set<Transformation> naive_closure(
    const std::vector<Transformation>& gens) {
  std::set<Transformation> s(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Transformation> fresh;
    for (const auto& a : s) {
      for (const auto& b : s) {
        Transformation p = compose(a, b);
        if (s.count(p) == 0) {
          fresh.push_back(std::move(p));
        }
      }
    }
    for (auto& p : fresh) {
      grew |= s.insert(std::move(p)).second;
    }
  }
  return s;
}

// All partitions of {0..n-1} into exactly r nonempty blocks, each block
// sorted, blocks by least element (restricted-growth-string enumeration).
inline std::vector<std::vector<std::vector<int>>> partitions_into(
    std::size_t n, std::size_t r) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::size_t> assign(n, 0);
  auto emit = [&]() {
    const std::size_t blocks =
        *std::max_element(assign.begin(), assign.end()) + 1;
    if (blocks != r) {
      return;
    }
    std::vector<std::vector<int>> part(blocks);
    for (std::size_t i = 0; i < n; ++i) {
      part[assign[i]].push_back(static_cast<int>(i));
    }
    out.push_back(std::move(part));
  };
  if (n == 0) {
    if (r == 0) {
      out.push_back({});
    }
    return out;
  }
  // restricted growth: assign[0] = 0, assign[i] <= max(prefix) + 1
  auto walk = [&](auto&& self, std::size_t i, std::size_t maxv) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (std::size_t v = 0; v <= maxv + 1; ++v) {
      assign[i] = v;
      self(self, i + 1, std::max(maxv, v));
    }
  };
  assign[0] = 0;
  walk(walk, 1, 0);
  return out;
}

inline tsemi::SplitMix64 test_rng(std::uint64_t seed) {
  return tsemi::SplitMix64::stream(seed, 0);
}

}  // namespace testutil
