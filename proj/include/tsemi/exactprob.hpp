#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "tsemi/error.hpp"
#include "tsemi/rational.hpp"
#include "tsemi/transform.hpp"

namespace tsemi {

// Default ceiling on the number of tuples a brute-force evaluation may
// iterate (n^n, n^2n, n^3n for G, T, V): allows G up to n = 7, T up to
// n = 4, V up to n = 3.
constexpr std::uint64_t kDefaultBruteBudget = 2'000'000;

inline BigInt factorial(long n) {
  if (n < 0) {
    throw invalid_input_error("factorial of a negative number");
  }
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

/// C(n, k); 0 for k outside [0, n].
inline BigInt binomial(long n, long k) {
  if (n < 0) {
    throw invalid_input_error("binomial with negative n");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

/// Stirling number of the second kind: partitions of an n-set into k
/// nonempty blocks, by the standard recurrence.  stirling2(0,0) == 1.
inline BigInt stirling2(long n, long k) {
  if (n < 0 || k < 0 || k > n) {
    throw invalid_input_error("stirling2 requires 0 <= k <= n");
  }
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (long i = 1; i <= n; ++i) {
    for (long j = std::min<long>(i, k); j >= 1; --j) {
      row[j] = row[j - 1] + j * row[j];
    }
    row[0] = 0;
  }
  return row[k];
}

inline BigInt int_pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

namespace detail {

// Binomials, Stirling numbers, factorials and small powers up to n, built
// once per formula evaluation and discarded after.
struct CombTables {
  std::vector<std::vector<BigInt>> choose;  // choose[a][b], a,b in [0, n]
  std::vector<std::vector<BigInt>> st2;     // st2[a][b]
  std::vector<BigInt> fact;                 // fact[a]
  std::vector<std::vector<BigInt>> power;   // power[b][e], b,e in [0, n]

  explicit CombTables(long n) {
    const auto m = static_cast<std::size_t>(n) + 1;
    choose.assign(m, std::vector<BigInt>(m, 0));
    st2.assign(m, std::vector<BigInt>(m, 0));
    fact.assign(m, 1);
    power.assign(m, std::vector<BigInt>(m, 1));
    for (std::size_t a = 0; a < m; ++a) {
      choose[a][0] = 1;
      for (std::size_t b = 1; b <= a; ++b) {
        choose[a][b] = choose[a - 1][b - 1] + (b <= a - 1 ? choose[a - 1][b] : 0);
      }
      st2[a][0] = (a == 0);
      for (std::size_t b = 1; b <= a; ++b) {
        st2[a][b] = st2[a - 1][b - 1] + static_cast<long>(b) * st2[a - 1][b];
      }
      if (a > 0) {
        fact[a] = fact[a - 1] * static_cast<long>(a);
      }
      for (std::size_t e = 1; e < m; ++e) {
        power[a][e] = power[a][e - 1] * static_cast<long>(a);
      }
    }
  }
};

}  // namespace detail

/// Probability that a uniformly random x in T_n generates a group:
/// (n!/n^n) * sum_{k=0}^{n-1} (n-k)^k / k!, evaluated exactly.
inline BigRational exact_G(long n) {
  if (n < 1) {
    throw invalid_input_error("exact_G requires n >= 1");
  }
  const BigInt nfact = factorial(n);
  BigInt num = 0;
  for (long k = 0; k <= n - 1; ++k) {
    // (n-k)^k * n!/k!
    num += int_pow(BigInt(n - k), static_cast<unsigned long>(k)) *
           (nfact / factorial(k));
  }
  return BigRational(num, int_pow(BigInt(n), static_cast<unsigned long>(n)));
}

/// Probability that rank(x*y*x) = rank(y) for uniform x, y in T_n, via the
/// double-sum form (no iteration over set partitions):
///   n^-2n sum_r C(n,r) r! sum_k S(r,k) k! k^(n-r)
///          sum_{s=k}^{n+k-r} C(n,s) S(n-s, r-k) C(s,k) k^(s-k).
inline BigRational exact_T(long n) {
  if (n < 1) {
    throw invalid_input_error("exact_T requires n >= 1");
  }
  const detail::CombTables tb(n);
  BigInt num = 0;
  for (long r = 1; r <= n; ++r) {
    BigInt r_sum = 0;
    for (long k = 1; k <= r; ++k) {
      BigInt inner = 0;
      for (long s = k; s <= n + k - r; ++s) {
        inner += tb.choose[n][s] * tb.st2[n - s][r - k] * tb.choose[s][k] *
                 tb.power[k][s - k];
      }
      r_sum += tb.st2[r][k] * tb.fact[k] * tb.power[k][n - r] * inner;
    }
    num += tb.choose[n][r] * tb.fact[r] * r_sum;
  }
  return BigRational(num, int_pow(BigInt(n), static_cast<unsigned long>(2 * n)));
}

/// Probability that rank(x*y*z) = rank(y) for uniform x, y, z in T_n:
///   n^-3n sum_r sum_k sum_t S(n,r) C(n,r) r! C(n,k) k! S(r,t) t! t^(n-r)
///          sum_{s=t}^{n+t-k} C(n,s) S(n-s, k-t) C(s,t) t^(s-t)
/// where r = rank(x), k = rank(z), t = rank(y) <= min(r, k).  r and k range
/// independently over 1..n.
inline BigRational exact_V(long n) {
  if (n < 1) {
    throw invalid_input_error("exact_V requires n >= 1");
  }
  const detail::CombTables tb(n);
  BigInt num = 0;
  for (long r = 1; r <= n; ++r) {
    const BigInt x_count = tb.st2[n][r] * tb.choose[n][r] * tb.fact[r];
    for (long k = 1; k <= n; ++k) {
      const BigInt z_shape = tb.choose[n][k] * tb.fact[k];
      for (long t = 1; t <= std::min(r, k); ++t) {
        BigInt inner = 0;
        for (long s = t; s <= n + t - k; ++s) {
          inner += tb.choose[n][s] * tb.st2[n - s][k - t] * tb.choose[s][t] *
                   tb.power[t][s - t];
        }
        num += x_count * z_shape * tb.st2[r][t] * tb.fact[t] *
               tb.power[t][n - r] * inner;
      }
    }
  }
  return BigRational(num, int_pow(BigInt(n), static_cast<unsigned long>(3 * n)));
}

/// Exact lower bound 1 - k G_n - k(k-1) T_n - k(k-1)(k-2) V_n for the
/// probability that k uniform transformations satisfy the rank-drop
/// condition (hence generate an ubiquitous semigroup).  May be negative for
/// small n; returned as-is.
inline BigRational bound_P(long n, long k) {
  if (n < 1 || k < 1) {
    throw invalid_input_error("bound_P requires n >= 1 and k >= 1");
  }
  const BigRational g = exact_G(n);
  const BigRational t = exact_T(n);
  const BigRational v = exact_V(n);
  const BigRational kk{k};
  const BigRational k1{k - 1};
  const BigRational k2{k - 2};
  return BigRational(1) - kk * g - kk * k1 * t - kk * k1 * k2 * v;
}

namespace detail {

// Iterates all n^n image tuples of degree n in lexicographic order.
template <typename Fn>
inline void for_each_transformation(long n, Fn&& fn) {
  std::vector<Transformation::point_type> im(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(im);
    long i = n - 1;
    while (i >= 0 && im[i] == n - 1) {
      im[i] = 0;
      --i;
    }
    if (i < 0) {
      return;
    }
    ++im[i];
  }
}

inline std::size_t tuple_rank(const std::vector<Transformation::point_type>& im) {
  unsigned mask = 0;
  for (auto v : im) {
    mask |= 1u << v;
  }
  return static_cast<std::size_t>(__builtin_popcount(mask));
}

inline void check_budget(long n, long copies, std::uint64_t budget,
                         const char* what) {
  long double total = 1.0L;
  for (long i = 0; i < n * copies; ++i) {
    total *= static_cast<long double>(n);
    if (total > static_cast<long double>(budget)) {
      throw resource_limit_error(std::string(what) +
                                 " brute force exceeds the iteration budget "
                                 "at n = " +
                                 std::to_string(n));
    }
  }
}

}  // namespace detail

/// Exhaustive count of x in T_n with <x> a group, as an exact rational.
inline BigRational brute_force_G(long n,
                                 std::uint64_t budget = kDefaultBruteBudget) {
  if (n < 1) {
    throw invalid_input_error("brute_force_G requires n >= 1");
  }
  detail::check_budget(n, 1, budget, "G");
  std::uint64_t hits = 0;
  detail::for_each_transformation(n, [&](const auto& im) {
    // bijective on its image <=> rank(x^2) == rank(x)
    std::vector<Transformation::point_type> sq(im.size());
    for (std::size_t i = 0; i < im.size(); ++i) {
      sq[i] = im[im[i]];
    }
    if (detail::tuple_rank(sq) == detail::tuple_rank(im)) {
      ++hits;
    }
  });
  return BigRational(BigInt(static_cast<unsigned long>(hits)),
                     int_pow(BigInt(n), static_cast<unsigned long>(n)));
}

/// Exhaustive count of pairs with rank(x*y*x) = rank(y).
inline BigRational brute_force_T(long n,
                                 std::uint64_t budget = kDefaultBruteBudget) {
  if (n < 1) {
    throw invalid_input_error("brute_force_T requires n >= 1");
  }
  detail::check_budget(n, 2, budget, "T");
  std::vector<std::vector<Transformation::point_type>> all;
  detail::for_each_transformation(n, [&](const auto& im) { all.push_back(im); });
  std::uint64_t hits = 0;
  std::vector<Transformation::point_type> xyx(static_cast<std::size_t>(n));
  for (const auto& x : all) {
    for (const auto& y : all) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        xyx[i] = x[y[x[i]]];
      }
      if (detail::tuple_rank(xyx) == detail::tuple_rank(y)) {
        ++hits;
      }
    }
  }
  return BigRational(BigInt(static_cast<unsigned long>(hits)),
                     int_pow(BigInt(n), static_cast<unsigned long>(2 * n)));
}

/// Exhaustive count of triples with rank(x*y*z) = rank(y).
inline BigRational brute_force_V(long n,
                                 std::uint64_t budget = kDefaultBruteBudget) {
  if (n < 1) {
    throw invalid_input_error("brute_force_V requires n >= 1");
  }
  detail::check_budget(n, 3, budget, "V");
  std::vector<std::vector<Transformation::point_type>> all;
  detail::for_each_transformation(n, [&](const auto& im) { all.push_back(im); });
  std::uint64_t hits = 0;
  std::vector<Transformation::point_type> xy(static_cast<std::size_t>(n));
  std::vector<Transformation::point_type> xyz(static_cast<std::size_t>(n));
  for (const auto& x : all) {
    for (const auto& y : all) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        xy[i] = y[x[i]];
      }
      const std::size_t ry = detail::tuple_rank(y);
      for (const auto& z : all) {
        for (std::size_t i = 0; i < xy.size(); ++i) {
          xyz[i] = z[xy[i]];
        }
        if (detail::tuple_rank(xyz) == ry) {
          ++hits;
        }
      }
    }
  }
  return BigRational(BigInt(static_cast<unsigned long>(hits)),
                     int_pow(BigInt(n), static_cast<unsigned long>(3 * n)));
}

}  // namespace tsemi
