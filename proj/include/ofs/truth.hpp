#ifndef OFS_TRUTH_HPP
#define OFS_TRUTH_HPP

#include <algorithm>
#include <cmath>

namespace ofs {

/// Truth values are plain doubles confined to [0,1]. Equality and order
/// decisions go through the global tolerance `kEps`; lattice operations
/// (min/max) stay exact.
using truth = double;

inline constexpr truth kEps = 1e-9;

// Resolution floor for the delta searches in tnorm.hpp.
inline constexpr truth kDeltaFloor = 0x1p-40;

// Verification grid step used by uniform_delta.
inline constexpr truth kDeltaGrid = 0x1p-10;

inline bool eq(truth a, truth b) { return std::fabs(a - b) <= kEps; }

/// a <= b up to tolerance.
inline bool leq(truth a, truth b) { return a <= b + kEps; }

/// a < b with a definite margin.
inline bool lt(truth a, truth b) { return a < b - kEps; }

inline truth clamp01(truth a) { return std::min(1.0, std::max(0.0, a)); }

inline bool in_unit(truth a) { return a >= -kEps && a <= 1.0 + kEps; }

} // namespace ofs

#endif // OFS_TRUTH_HPP
