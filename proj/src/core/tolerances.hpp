#pragma once

namespace rank2sep::tol {

// Structural tolerances (state invariants). Double-precision eigensolves on
// the dimensions this library targets keep errors well below these.
inline constexpr double norm = 1e-9;
inline constexpr double orth = 1e-9;
inline constexpr double herm = 1e-9;
inline constexpr double psd = 1e-9;
inline constexpr double unitary = 1e-9;

// Rank detection threshold for eigenvalue truncation.
inline constexpr double extract = 1e-9;

// Decision tolerances: criterion residuals, pure-state separability,
// PPT eigenvalue floor.
inline constexpr double decide = 1e-8;
inline constexpr double pure_sep = 1e-8;
inline constexpr double ppt = 1e-9;

}  // namespace rank2sep::tol
