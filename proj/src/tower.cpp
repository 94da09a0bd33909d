#include "transfinite/tower.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "transfinite/errors.hpp"

namespace transfinite {

namespace {

constexpr double kDivergenceCeiling = 1e100;
constexpr uint64_t kOscillationWarmup = 200;
constexpr double kInternalTol = 1e-12;

// Root of f(y) = y*ln(x) - ln(y) on [lo, hi], where f changes sign.
double bisect_then_newton(double x, double lo, double hi) {
  const double lnx = std::log(x);
  auto f = [&](double y) { return y * lnx - std::log(y); };
  bool rising = f(hi) > f(lo);
  for (int i = 0; i < 200 && hi - lo > kInternalTol * std::max(1.0, lo); ++i) {
    double mid = 0.5 * (lo + hi);
    if ((f(mid) > 0) == rising) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  double y = 0.5 * (lo + hi);
  for (int i = 0; i < 8; ++i) {
    double fy = f(y);
    double fp = lnx - 1.0 / y;
    if (fp == 0) break;
    double next = y - fy / fp;
    if (!(next > 0) || !std::isfinite(next)) break;
    y = next;
  }
  return y;
}

}  // namespace

FixedPoints fixed_points(double x) {
  if (!(x > TowerDomain::lower) || !(x <= TowerDomain::upper)) {
    throw OutOfDomain("fixed points of y = x^y exist for e^(-e) < x <= e^(1/e)");
  }
  if (x == 1.0) return FixedPoints{1.0, std::nullopt};
  if (x < 1.0) {
    // f is strictly decreasing: one root in (0, 1).
    return FixedPoints{bisect_then_newton(x, 1e-9, 1.0), std::nullopt};
  }
  const double lnx = std::log(x);
  const double y_min = 1.0 / lnx;  // minimum of f; both roots straddle it
  double stable = bisect_then_newton(x, 1e-9, y_min);
  double hi = y_min;
  auto f = [&](double y) { return y * lnx - std::log(y); };
  while (f(hi) <= 0 && hi < 1e300) hi *= 2;
  double unstable = bisect_then_newton(x, y_min, hi);
  if (stable > unstable) std::swap(stable, unstable);
  return FixedPoints{stable, unstable};
}

TowerOutcome iterate_tower(double x, uint64_t max_iter, double tol) {
  if (!(x > 0)) throw DomainError("tower iteration requires x > 0");
  TowerOutcome out;
  out.iterates.push_back(x);
  double y = x;
  for (uint64_t n = 1; n < max_iter; ++n) {
    double next = std::pow(x, y);
    out.iterates.push_back(next);
    if (next > kDivergenceCeiling || !std::isfinite(next)) {
      out.kind = TowerOutcome::Kind::Diverged;
      return out;
    }
    if (std::abs(next - y) < tol) {
      out.kind = TowerOutcome::Kind::Converged;
      out.value = next;
      if (x > TowerDomain::lower && x <= TowerDomain::upper) {
        out.fixed_points = fixed_points(x);
      }
      return out;
    }
    y = next;
    // Past the warm-up, test whether the even and odd subsequences have
    // settled onto distinct limits (a 2-cycle). Near the lower boundary
    // the map's slope is close to -1 and iterates alternate while still
    // heading to a single limit, so the subsequence limits are compared
    // after geometric (Aitken) extrapolation rather than raw.
    if (n >= kOscillationWarmup && n % 2 == 0 && out.iterates.size() >= 7) {
      auto aitken = [](double v1, double v2, double v3) {
        double d1 = v2 - v1, d2 = v3 - v2;
        double denom = d2 - d1;
        if (denom == 0.0) return v3;
        return v3 - d2 * d2 / denom;
      };
      size_t m = out.iterates.size();
      double e1 = out.iterates[m - 5], e2 = out.iterates[m - 3], e3 = out.iterates[m - 1];
      double o1 = out.iterates[m - 6], o2 = out.iterates[m - 4], o3 = out.iterates[m - 2];
      double gap = std::abs(e3 - o3);
      bool settled = std::abs(e3 - e2) < tol && std::abs(o3 - o2) < tol;
      bool deep = std::abs(e3 - e2) < 1e-2 * gap && std::abs(o3 - o2) < 1e-2 * gap;
      if (settled && deep) {
        double even_limit = aitken(e1, e2, e3);
        double odd_limit = aitken(o1, o2, o3);
        if (std::abs(even_limit - odd_limit) > 10 * tol) {
          out.kind = TowerOutcome::Kind::Oscillating;
          out.cycle_lo = std::min(even_limit, odd_limit);
          out.cycle_hi = std::max(even_limit, odd_limit);
          return out;
        }
      }
    }
  }
  // Cap reached without a verdict; report divergence-by-budget.
  out.kind = TowerOutcome::Kind::Diverged;
  return out;
}

double inverse_map(double y) {
  if (!(y > 0)) throw DomainError("inverse map requires y > 0");
  return std::pow(y, 1.0 / y);
}

std::vector<double> tower_chain(double x0, uint64_t depth) {
  std::vector<double> out;
  double x = x0;
  for (uint64_t i = 0; i < depth; ++i) {
    if (!(x > TowerDomain::lower) || !(x <= TowerDomain::upper)) {
      throw LeftDomain("chain value " + std::to_string(x) +
                       " left the convergence interval at step " +
                       std::to_string(i + 1));
    }
    x = fixed_points(x).stable;
    out.push_back(x);
  }
  return out;
}

std::vector<Figure1Row> figure1_data(const std::vector<double>& x_grid) {
  std::vector<Figure1Row> rows;
  rows.reserve(x_grid.size());
  for (double x : x_grid) {
    Figure1Row row{x, std::nullopt, std::nullopt, false};
    if (x > TowerDomain::lower && x <= TowerDomain::upper) {
      FixedPoints fp = fixed_points(x);
      row.y_stable = fp.stable;
      row.y_unstable = fp.unstable;
    }
    if (x > 0) {
      row.converged = iterate_tower(x).kind == TowerOutcome::Kind::Converged;
    }
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(),
            [](const Figure1Row& a, const Figure1Row& b) { return a.x < b.x; });
  return rows;
}

std::string figure1_csv(const std::vector<Figure1Row>& rows) {
  std::string out = "x,y_stable,y_unstable,converged\n";
  char buf[64];
  auto cell = [&](std::optional<double> v) {
    if (!v) return std::string();
    std::snprintf(buf, sizeof buf, "%.9g", *v);
    return std::string(buf);
  };
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.9g", r.x);
    out += buf;
    out += "," + cell(r.y_stable) + "," + cell(r.y_unstable) + ",";
    out += r.converged ? "true" : "false";
    out += "\n";
  }
  return out;
}

}  // namespace transfinite
