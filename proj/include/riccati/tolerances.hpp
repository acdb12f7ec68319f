#pragma once

// Numerical thresholds shared by every module. The relative ones are scaled
// by (1 + ‖M‖) at the call site.
namespace riccati::tol {

inline constexpr double herm_rel = 1e-10;
inline constexpr double eig_rel = 1e-11;
inline constexpr double res = 1e-9;
inline constexpr double spec = 1e-8;
inline constexpr double cert = 1e-9;

// Successive contour estimates must agree to this, relative to 1 + ‖X‖.
inline constexpr double quad = 1e-12;
// Fixed-point stopping threshold, relative to 1 + ‖X_k‖.
inline constexpr double fix = 1e-12;

inline constexpr int quad_min_nodes = 16;
inline constexpr int quad_max_nodes = 4096;
inline constexpr int fix_max_iter = 500;
inline constexpr double fix_blowup = 1e6;

inline double herm(double norm) { return herm_rel * (1.0 + norm); }
inline double eig(double norm) { return eig_rel * (1.0 + norm); }

}  // namespace riccati::tol
