#ifndef OFS_DIAGONAL_HPP
#define OFS_DIAGONAL_HPP

#include <stdexcept>

#include "ofs/tnorm.hpp"
#include "ofs/truth.hpp"

namespace ofs {

/// An arrow of the diagonal quantaloid over a divisible quantale: a value
/// alpha <= min(src, dst) between the truth-value objects src and dst.
struct DiagArrow {
  truth src = 0.0;
  truth dst = 0.0;
  truth value = 0.0;
};

inline DiagArrow make_arrow(truth src, truth dst, truth value) {
  if (!leq(value, std::min(src, dst)))
    throw std::invalid_argument("diagonal arrow: value exceeds min(src, dst)");
  return DiagArrow{src, dst, value};
}

inline DiagArrow unit_arrow(truth a) { return DiagArrow{a, a, a}; }

/// beta o alpha = beta & (b -> alpha), where b is the shared middle object.
inline DiagArrow compose(const TNorm& t, const DiagArrow& beta, const DiagArrow& alpha) {
  if (!eq(alpha.dst, beta.src))
    throw std::invalid_argument("compose: middle objects do not match");
  return DiagArrow{alpha.src, beta.dst, t.tensor(beta.value, t.residuum(beta.src, alpha.value))};
}

/// Largest beta in hom(b, c) with compose(beta, alpha) <= gamma, for
/// alpha: a -> b and gamma: a -> c. The closed form follows from the
/// adjunction between tensor and residuum, clamped into the hom-set.
inline DiagArrow left_residual(const TNorm& t, const DiagArrow& gamma, const DiagArrow& alpha) {
  if (!eq(gamma.src, alpha.src))
    throw std::invalid_argument("left_residual: source objects do not match");
  const truth b = alpha.dst;
  const truth c = gamma.dst;
  const truth v = std::min({b, c, t.residuum(t.residuum(b, alpha.value), gamma.value)});
  return DiagArrow{b, c, v};
}

/// Largest alpha in hom(a, b) with compose(beta, alpha) <= gamma, for
/// beta: b -> c and gamma: a -> c. Equals b & (beta -> gamma) clamped into
/// the hom-set; maximality rests on divisibility.
inline DiagArrow right_residual(const TNorm& t, const DiagArrow& beta, const DiagArrow& gamma) {
  if (!eq(beta.dst, gamma.dst))
    throw std::invalid_argument("right_residual: target objects do not match");
  const truth a = gamma.src;
  const truth b = beta.src;
  const truth v = std::min({a, b, t.tensor(b, t.residuum(beta.value, gamma.value))});
  return DiagArrow{a, b, v};
}

} // namespace ofs

#endif // OFS_DIAGONAL_HPP
