#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "tsemi/error.hpp"

namespace tsemi {

/// Lambert W on the positive reals: the unique w > 0 with w e^w = x.
/// Halley iteration from a log-based initial guess; the residual
/// |w e^w - x| is driven below 1e-15 * max(1, x) (contract: 1e-12).
inline double lambert_w(double x) {
  if (!(x > 0.0)) {
    throw invalid_input_error("lambert_w requires x > 0");
  }
  double w = x < 1.0 ? x * (1.0 - x) : std::log(x);
  if (w <= 0.0) {
    w = 1e-9;
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) <= 1e-15 * std::max(1.0, x)) {
      break;
    }
    const double fp = ew * (w + 1.0);
    const double fpp = ew * (w + 2.0);
    w -= f / (fp - f * fpp / (2.0 * fp));
  }
  return w;
}

/// The omega constant W(1), satisfying omega * e^omega = 1.
inline double omega() { return lambert_w(1.0); }

/// F(x) = x log(x^-1 - 1) + x on (0,1); unique maximum omega at
/// x = omega/(1+omega).
inline double F_single(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw invalid_input_error("F_single requires 0 < x < 1");
  }
  return x * std::log(1.0 / x - 1.0) + x;
}

/// lim log(G_n)/n = omega - 1 (the exponential decay rate of G_n).
inline double decay_rate_G() { return omega() - 1.0; }

namespace detail {

// b^e with the continuous-extension conventions 0^0 = 1 and 0^(e>0) = 0,
// as a log-space term (0 or -inf respectively).
inline double log_power_term(double b, double e) {
  if (b <= 0.0) {
    return e == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  return e * std::log(b);
}

}  // namespace detail

/// F1(x) = x^{2(1-x)} / (1-x)^{2(1-x)} on [0,1]; F1(0) = 0, F1(1) = 1.
inline double F1(double x) {
  const double e = 2.0 * (1.0 - x);
  return std::exp(detail::log_power_term(x, e) -
                  detail::log_power_term(1.0 - x, e));
}

/// F2(x,y) = y^{1-2xy} / (e^{x(1+y)} (1-y)^{2x(1-y)}) on [0,1]^2.
inline double F2(double x, double y) {
  return std::exp(detail::log_power_term(y, 1.0 - 2.0 * x * y) -
                  x * (1.0 + y) -
                  detail::log_power_term(1.0 - y, 2.0 * x * (1.0 - y)));
}

/// F3(y) = -1 - y - 2(1-y)log(1-y) - 2y log y; satisfies
/// dF2/dx = F2 * F3(y), and F3 < 0 on [0,1].
inline double F3(double y) {
  return -1.0 - y - 2.0 * detail::log_power_term(1.0 - y, 1.0 - y) -
         2.0 * detail::log_power_term(y, y);
}

/// F(x,y) = F1(x) * F2(x,y), the two-variable decay bound for T_n.
inline double F_two_var(double x, double y) {
  return std::exp(detail::log_power_term(x, 2.0 * (1.0 - x)) +
                  detail::log_power_term(y, 1.0 - 2.0 * x * y) -
                  x * (1.0 + y) -
                  detail::log_power_term(1.0 - x, 2.0 * (1.0 - x)) -
                  detail::log_power_term(1.0 - y, 2.0 * x * (1.0 - y)));
}

/// G(x,y,z), the three-variable decay bound for V_n, on
/// {0 <= z <= min(x,y), x,y in [0,1]} with continuous boundary extensions.
inline double G_three_var(double x, double y, double z) {
  if (z > x || z > y || x > 1.0 || y > 1.0 || x < 0.0 || y < 0.0 || z < 0.0) {
    throw invalid_input_error("G_three_var requires 0 <= z <= min(x,y) <= 1");
  }
  return std::exp(detail::log_power_term(x, 1.0 - x) +
                  detail::log_power_term(y, 1.0 - y) +
                  detail::log_power_term(z, 1.0 - 2.0 * z) - (x + y + z) -
                  detail::log_power_term(1.0 - x, 2.0 * (1.0 - x)) -
                  detail::log_power_term(1.0 - y, 2.0 * (1.0 - y)) -
                  detail::log_power_term(x - z, x - z) -
                  detail::log_power_term(y - z, y - z));
}

/// x0 = 1/(1 + W(e^-1)), the stationary point of F1 (> 0.78).
inline double F1_argmax() { return 1.0 / (1.0 + lambert_w(std::exp(-1.0))); }

/// y0 = 1/(1 + W(e^-1/2})), the stationary point of y -> F2(1/2, y).
inline double F2_half_argmax() {
  return 1.0 / (1.0 + lambert_w(std::exp(-0.5)));
}

struct StationaryPointG {
  double alpha;  // common value of the first two coordinates
  double gamma;  // third coordinate
};

/// The unique stationary point (alpha, alpha, gamma) of G.  alpha solves
///   e a / (e a^2 - e^{1/a}(1-a)^2)
///     + 2 log(e^{1/a}(1-a)^2 / (e a^2 - e^{1/a}(1-a)^2)) = 1
/// on (0.587, 1); the left-hand side is strictly decreasing there, so a
/// plain bisection is reliable.  gamma = alpha - e^{1/alpha}(1-alpha)^2 /
/// (e alpha).
inline StationaryPointG stationary_point_G() {
  const double e = std::exp(1.0);
  auto gamma_of = [&](double a) {
    return a - std::exp(1.0 / a) * (1.0 - a) * (1.0 - a) / (e * a);
  };
  auto lhs = [&](double a) {
    const double u = std::exp(1.0 / a) * (1.0 - a) * (1.0 - a);
    const double d = e * a * a - u;
    return e * a / d + 2.0 * std::log(u / d) - 1.0;
  };
  double lo = 0.588, hi = 0.999;
  if (!(lhs(lo) > 0.0 && lhs(hi) < 0.0)) {
    throw numeric_error("stationary_point_G: root not bracketed");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (lhs(mid) > 0.0 ? lo : hi) = mid;
  }
  const double alpha = 0.5 * (lo + hi);
  return {alpha, gamma_of(alpha)};
}

struct BoundEval {
  std::string function_id;        // F1d | F1 | F2 | F3 | F2var | G3var
  std::array<double, 3> argmax{};  // meaningful entries per arity
  int arity = 1;
  double max_value = 0.0;
  int grid_resolution = 0;
  bool refined = false;
};

namespace detail {

// One round of coordinate-wise golden-section refinement inside +-1 grid
// cell of the argmax.
template <typename Fn>
inline void golden_refine(Fn&& value_at, std::array<double, 3>& arg, int arity,
                          double step, double& best) {
  constexpr double kInvPhi = 0.6180339887498949;
  for (int pass = 0; pass < 3; ++pass) {
    for (int c = 0; c < arity; ++c) {
      double lo = arg[c] - step, hi = arg[c] + step;
      double x1 = hi - kInvPhi * (hi - lo);
      double x2 = lo + kInvPhi * (hi - lo);
      for (int it = 0; it < 40; ++it) {
        auto probe = [&](double v) {
          auto a = arg;
          a[c] = v;
          return value_at(a);
        };
        if (probe(x1) < probe(x2)) {
          lo = x1;
          x1 = x2;
          x2 = lo + kInvPhi * (hi - lo);
        } else {
          hi = x2;
          x2 = x1;
          x1 = hi - kInvPhi * (hi - lo);
        }
      }
      auto a = arg;
      a[c] = 0.5 * (lo + hi);
      const double v = value_at(a);
      if (v > best) {
        best = v;
        arg = a;
      }
    }
  }
}

}  // namespace detail

/// Maximum of F(x,y) over the unit square on a (resolution+1)^2 grid,
/// optionally refined around the grid argmax.
inline BoundEval grid_max_F_two_var(int resolution, bool refine = false) {
  BoundEval out;
  out.function_id = "F2var";
  out.arity = 2;
  out.grid_resolution = resolution;
  const double h = 1.0 / resolution;
  for (int i = 0; i <= resolution; ++i) {
    const double x = i * h;
    for (int j = 0; j <= resolution; ++j) {
      const double y = j * h;
      const double v = F_two_var(x, y);
      if (v > out.max_value) {
        out.max_value = v;
        out.argmax = {x, y, 0.0};
      }
    }
  }
  if (refine) {
    out.refined = true;
    auto val = [](const std::array<double, 3>& a) {
      const double x = std::clamp(a[0], 0.0, 1.0);
      const double y = std::clamp(a[1], 0.0, 1.0);
      return F_two_var(x, y);
    };
    detail::golden_refine(val, out.argmax, 2, h, out.max_value);
  }
  return out;
}

/// Maximum of G over the constrained cube {z <= min(x,y)} on a grid with
/// the given per-axis resolution.
inline BoundEval grid_max_G_three_var(int resolution, bool refine = false) {
  BoundEval out;
  out.function_id = "G3var";
  out.arity = 3;
  out.grid_resolution = resolution;
  const double h = 1.0 / resolution;
  for (int i = 0; i <= resolution; ++i) {
    const double x = i * h;
    for (int j = 0; j <= resolution; ++j) {
      const double y = j * h;
      const int zmax = std::min(i, j);
      for (int l = 0; l <= zmax; ++l) {
        const double v = G_three_var(x, y, l * h);
        if (v > out.max_value) {
          out.max_value = v;
          out.argmax = {x, y, l * h};
        }
      }
    }
  }
  if (refine) {
    out.refined = true;
    auto val = [](const std::array<double, 3>& a) {
      const double x = std::clamp(a[0], 0.0, 1.0);
      const double y = std::clamp(a[1], 0.0, 1.0);
      const double z = std::clamp(a[2], 0.0, std::min(x, y));
      return G_three_var(x, y, z);
    };
    detail::golden_refine(val, out.argmax, 3, h, out.max_value);
  }
  return out;
}

/// Maximum of F(x) = x log(x^-1 - 1) + x over a grid of the open interval.
inline BoundEval grid_max_F_single(int resolution, bool refine = false) {
  BoundEval out;
  out.function_id = "F1d";
  out.arity = 1;
  out.grid_resolution = resolution;
  out.max_value = -std::numeric_limits<double>::infinity();
  const double h = 1.0 / resolution;
  for (int i = 1; i < resolution; ++i) {
    const double v = F_single(i * h);
    if (v > out.max_value) {
      out.max_value = v;
      out.argmax = {i * h, 0.0, 0.0};
    }
  }
  if (refine) {
    out.refined = true;
    auto val = [](const std::array<double, 3>& a) {
      const double x = std::clamp(a[0], 1e-12, 1.0 - 1e-12);
      return F_single(x);
    };
    detail::golden_refine(val, out.argmax, 1, h, out.max_value);
  }
  return out;
}

}  // namespace tsemi
