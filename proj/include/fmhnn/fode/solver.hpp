#pragma once

#include "fmhnn/fode/types.hpp"

namespace fmhnn::fode {

/// Adams-Bashforth-Moulton predictor-corrector for Caputo systems
/// D^alpha x = f(t, x), x(0) = x0, on the uniform grid t_j = j h.
///
/// Product-rectangle predictor, product-trapezoidal corrector, full memory.
/// cfg.corrector_iterations re-evaluates f at the corrected state (PECE for 1,
/// PE(CE)^m for m). At alpha = 1 the scheme is the classical second-order
/// Adams (Heun) method.
[[nodiscard]] Trajectory solve_abm(const SystemDef& system, const Eigen::VectorXd& x0,
                                   const FractionalOrder& order, const SolverConfig& cfg);

}  // namespace fmhnn::fode
