#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "tsemi/error.hpp"
#include "tsemi/gensets.hpp"
#include "tsemi/transform.hpp"

namespace tsemi {

/// splitmix64: the per-sample stream generator.  Every sample i derives its
/// own stream from (seed, i), so success counts are independent of how the
/// samples are split across workers.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from {0, ..., n-1}, exact (rejection sampling).
  std::uint32_t below(std::uint32_t n) {
    const std::uint64_t threshold = -std::uint64_t(n) % n;
    while (true) {
      const std::uint64_t r = next();
      if (r >= threshold) {
        return static_cast<std::uint32_t>(r % n);
      }
    }
  }

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix{seed ^ (0x9e3779b97f4a7c15ULL * (index + 1))};
    return SplitMix64{mix.next()};
  }
};

inline Transformation random_transformation(std::size_t n, SplitMix64& rng) {
  if (n == 0) {
    throw invalid_input_error("degree must be positive");
  }
  std::vector<Transformation::point_type> im(n);
  for (auto& v : im) {
    v = static_cast<Transformation::point_type>(
        rng.below(static_cast<std::uint32_t>(n)));
  }
  return Transformation(std::move(im));
}

enum class Quantity { G, T, V, Suff };

inline std::string quantity_name(Quantity q) {
  switch (q) {
    case Quantity::G: return "G";
    case Quantity::T: return "T";
    case Quantity::V: return "V";
    default: return "SUFF";
  }
}

struct Estimate {
  std::string quantity;
  std::size_t n = 0;
  std::size_t k = 0;  // generator count, SUFF only (0 otherwise)
  std::uint64_t samples = 0;
  std::uint64_t successes = 0;
  double p_hat = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  std::uint64_t seed = 0;
  std::string rng = "splitmix64";
  std::string interval = "normal";
  int workers = 1;
};

namespace detail {

inline void fill_interval(Estimate& e, bool wilson) {
  const double m = static_cast<double>(e.samples);
  const double p = static_cast<double>(e.successes) / m;
  e.p_hat = p;
  const double z = 1.959963984540054;  // 95% two-sided normal quantile
  if (wilson) {
    e.interval = "wilson";
    const double denom = 1.0 + z * z / m;
    const double centre = p + z * z / (2.0 * m);
    const double half = z * std::sqrt(p * (1.0 - p) / m + z * z / (4.0 * m * m));
    e.ci95_low = std::max(0.0, (centre - half) / denom);
    e.ci95_high = std::min(1.0, (centre + half) / denom);
  } else {
    const double half = z * std::sqrt(p * (1.0 - p) / m);
    e.ci95_low = std::max(0.0, p - half);
    e.ci95_high = std::min(1.0, p + half);
  }
}

// Runs `samples` per-sample trials over `workers` threads; trial(i, rng)
// reports success.  Deterministic for a fixed seed regardless of workers.
template <typename Trial>
inline std::uint64_t count_successes(std::uint64_t samples, std::uint64_t seed,
                                     int workers, Trial&& trial) {
  workers = std::max(1, workers);
  if (workers == 1) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
      SplitMix64 rng = SplitMix64::stream(seed, i);
      hits += trial(rng) ? 1 : 0;
    }
    return hits;
  }
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (samples + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
      const std::uint64_t hi = std::min(samples, lo + chunk);
      std::uint64_t hits = 0;
      for (std::uint64_t i = lo; i < hi; ++i) {
        SplitMix64 rng = SplitMix64::stream(seed, i);
        hits += trial(rng) ? 1 : 0;
      }
      partial[static_cast<std::size_t>(w)] = hits;
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  std::uint64_t total = 0;
  for (auto h : partial) {
    total += h;
  }
  return total;
}

}  // namespace detail

/// Monte Carlo estimate of G_n (random <x> is a group), T_n
/// (rank(x*y*x) = rank(y)) or V_n (rank(x*y*z) = rank(y)), with a 95%
/// confidence interval.
inline Estimate estimate(Quantity quantity, std::size_t n,
                         std::uint64_t samples, std::uint64_t seed,
                         int workers = 1, bool wilson = false) {
  if (samples < 1) {
    throw invalid_input_error("estimate requires samples >= 1");
  }
  if (quantity == Quantity::Suff) {
    throw invalid_input_error("use estimate_sufficient for SUFF");
  }
  Estimate e;
  e.quantity = quantity_name(quantity);
  e.n = n;
  e.samples = samples;
  e.seed = seed;
  e.workers = std::max(1, workers);
  auto trial = [quantity, n](SplitMix64& rng) {
    switch (quantity) {
      case Quantity::G: {
        const Transformation x = random_transformation(n, rng);
        return is_group_generator(x);
      }
      case Quantity::T: {
        const Transformation x = random_transformation(n, rng);
        const Transformation y = random_transformation(n, rng);
        return rank(compose(compose(x, y), x)) == rank(y);
      }
      default: {
        const Transformation x = random_transformation(n, rng);
        const Transformation y = random_transformation(n, rng);
        const Transformation z = random_transformation(n, rng);
        return rank(compose(compose(x, y), z)) == rank(y);
      }
    }
  };
  e.successes = detail::count_successes(samples, seed, e.workers, trial);
  detail::fill_interval(e, wilson);
  return e;
}

/// Monte Carlo estimate of the probability that k uniform transformations
/// satisfy the rank-drop condition rank(xyz) < rank(y) on all triples.
/// This event implies ubiquity, so the estimate lower-bounds the ubiquity
/// probability eventwise.
inline Estimate estimate_sufficient(std::size_t n, std::size_t k,
                                    std::uint64_t samples, std::uint64_t seed,
                                    int workers = 1, bool wilson = false) {
  if (samples < 1 || k < 1) {
    throw invalid_input_error("estimate_sufficient requires samples, k >= 1");
  }
  Estimate e;
  e.quantity = "SUFF";
  e.n = n;
  e.k = k;
  e.samples = samples;
  e.seed = seed;
  e.workers = std::max(1, workers);
  auto trial = [n, k](SplitMix64& rng) {
    std::vector<Transformation> xs;
    xs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      xs.push_back(random_transformation(n, rng));
    }
    return satisfies_sufficient_condition(xs);
  };
  e.successes = detail::count_successes(samples, seed, e.workers, trial);
  detail::fill_interval(e, wilson);
  return e;
}

}  // namespace tsemi
