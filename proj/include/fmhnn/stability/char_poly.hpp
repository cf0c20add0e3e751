#pragma once

#include <complex>
#include <vector>

#include "fmhnn/models/two_neuron.hpp"

namespace fmhnn::stability {

/// Reduced quadratic lambda^2 - tau lambda + eta of the equilibrium-family
/// Jacobian (the full characteristic polynomial is lambda times this factor).
/// tau is the trace and eta the determinant of the upper-left 2x2 block.
struct CharPoly2N {
  double tau = 0.0;
  double eta = 0.0;
};

[[nodiscard]] CharPoly2N char_poly_two_neuron(const models::FmhnnParams& p, double delta);

/// {0} joined with the two roots of the reduced quadratic.
[[nodiscard]] std::vector<std::complex<double>> eigenvalues_at_equilibrium(
    const models::FmhnnParams& p, double delta);

enum class Verdict { stable, marginal, unstable };

/// Sector test |arg(lambda)| > alpha*pi/2 over all eigenvalues.
/// Zero eigenvalues (|lambda| below an absolute/relative tolerance) are
/// excluded from the strict test and make the verdict at best marginal.
[[nodiscard]] Verdict matignon_check(const std::vector<std::complex<double>>& eigs, double alpha);

enum class CriticalKind { value, stable_for_all, unstable_for_all };

/// Largest order at which the sector condition still holds:
/// (2/pi) * min over nonzero eigenvalues of |arg(lambda)|, clamped to the
/// stable_for_all flag when the minimum is >= pi/2 and to unstable_for_all
/// when some nonzero eigenvalue sits on the positive real axis.
struct CriticalAlpha {
  CriticalKind kind = CriticalKind::value;
  double alpha = 0.0;
};

[[nodiscard]] CriticalAlpha critical_alpha(const std::vector<std::complex<double>>& eigs);

enum class RegionCase { case1, case2, case3, case4, case5 };

struct RegionReport {
  RegionCase region;
  Verdict verdict;
};

/// Region classification over the (eta, tau) signs and the quadratic-root
/// criterion. Requires k != 0 (the published case boundaries live on the
/// delta/k axis). Case 4's verdict tests cos(alpha pi/2) > tau / (2 sqrt(eta)).
[[nodiscard]] RegionReport classify_region(const models::FmhnnParams& p, double delta,
                                           double alpha);

[[nodiscard]] const char* to_string(Verdict v);
[[nodiscard]] const char* to_string(RegionCase c);

/// L = ||A|| + ||B|| + phi_cap * ||K|| in the operator 2-norm, with
/// A the leak/flux matrix, B the connection-weight matrix, and K the
/// memristor coupling matrix.
[[nodiscard]] double lipschitz_bound(const models::FmhnnParams& p, double phi_cap);

}  // namespace fmhnn::stability
