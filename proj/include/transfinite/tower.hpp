#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace transfinite {

/// Convergence interval of the infinite power tower x^x^x^...
struct TowerDomain {
  static constexpr double lower = 0.06598803584531254;  // e^(-e)
  static constexpr double upper = 1.4446678610097661;   // e^(1/e)
};

struct FixedPoints {
  double stable;
  std::optional<double> unstable;  // present only for 1 < x <= e^(1/e)
};

/// Outcome of iterating y_{n+1} = x^{y_n} from y_1 = x.
struct TowerOutcome {
  enum class Kind { Converged, Diverged, Oscillating };
  Kind kind;
  double value = 0;         // Converged: the limit
  double cycle_lo = 0;      // Oscillating: the two subsequence limits
  double cycle_hi = 0;
  std::vector<double> iterates;
  std::optional<FixedPoints> fixed_points;
};

/// Iterates the tower map and classifies the result. Throws DomainError
/// for x <= 0.
TowerOutcome iterate_tower(double x, uint64_t max_iter = 20000, double tol = 1e-10);

/// Both solutions of y = x^y by bracketed bisection with a Newton
/// polish; the stable root is below e, the unstable above. Throws
/// OutOfDomain for x outside (e^(-e), e^(1/e)].
FixedPoints fixed_points(double x);

/// x = y^(1/y), the inverse of the stable branch. Throws DomainError
/// for y <= 0.
double inverse_map(double y);

/// Repeatedly applies x -> stable fixed point of y = x^y, `depth`
/// times. Throws LeftDomain when an intermediate value exits the
/// convergence interval before the requested depth is reached.
std::vector<double> tower_chain(double x0, uint64_t depth);

struct Figure1Row {
  double x;
  std::optional<double> y_stable;
  std::optional<double> y_unstable;
  bool converged;
};

/// One row per grid point; out-of-domain points keep empty branches and
/// converged=false rather than failing.
std::vector<Figure1Row> figure1_data(const std::vector<double>& x_grid);

/// CSV with header x,y_stable,y_unstable,converged; empty cells for
/// missing branches.
std::string figure1_csv(const std::vector<Figure1Row>& rows);

}  // namespace transfinite
