#ifndef OFS_TNORM_HPP
#define OFS_TNORM_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ofs/truth.hpp"

namespace ofs {

enum class TNormKind { Godel, Lukasiewicz, Product, OrdinalSum };

enum class PieceKind { Lukasiewicz, Product };

/// One summand of an ordinal sum: a rescaled copy of the Lukasiewicz or
/// product t-norm living on [lo, hi].
struct Piece {
  truth lo = 0.0;
  truth hi = 1.0;
  PieceKind kind = PieceKind::Lukasiewicz;
};

/// A continuous t-norm on [0,1] together with its residuum.
///
/// The three base kinds use their closed forms:
///   Godel        a & b = min(a,b),        a -> b = (a <= b ? 1 : b)
///   Lukasiewicz  a & b = max(a+b-1, 0),   a -> b = min(1-a+b, 1)
///   Product      a & b = a*b,             a -> b = (a <= b ? 1 : b/a)
///
/// An ordinal sum evaluates by affine rescaling onto the piece containing
/// both arguments and falls back to min elsewhere; its residuum is computed
/// by case analysis (same piece: rescaled piece residuum; a <= b: 1;
/// otherwise: b). Idempotents of an ordinal sum are exactly the points
/// outside all piece interiors.
class TNorm {
public:
  static TNorm godel() { return TNorm(TNormKind::Godel); }
  static TNorm lukasiewicz() { return TNorm(TNormKind::Lukasiewicz); }
  static TNorm product() { return TNorm(TNormKind::Product); }

  /// Pieces must be sorted, with 0 <= lo < hi <= 1 and disjoint interiors.
  static TNorm ordinal_sum(std::vector<Piece> pieces) {
    truth prev_hi = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const Piece& p = pieces[i];
      if (!(p.lo >= 0.0 && p.lo < p.hi && p.hi <= 1.0))
        throw std::invalid_argument("ordinal sum: piece must satisfy 0 <= lo < hi <= 1");
      if (i > 0 && p.lo < prev_hi)
        throw std::invalid_argument("ordinal sum: pieces must be sorted with disjoint interiors");
      prev_hi = p.hi;
    }
    TNorm t(TNormKind::OrdinalSum);
    t.pieces_ = std::move(pieces);
    return t;
  }

  TNormKind kind() const { return kind_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  truth tensor(truth a, truth b) const {
    switch (kind_) {
      case TNormKind::Godel: return std::min(a, b);
      case TNormKind::Lukasiewicz: return luk_tensor(a, b);
      case TNormKind::Product: return a * b;
      case TNormKind::OrdinalSum: {
        if (const Piece* p = common_piece(a, b)) {
          const truth w = p->hi - p->lo;
          const truth x = (a - p->lo) / w;
          const truth y = (b - p->lo) / w;
          const truth z = p->kind == PieceKind::Lukasiewicz ? luk_tensor(x, y) : x * y;
          return p->lo + w * z;
        }
        return std::min(a, b);
      }
    }
    return 0.0; // unreachable
  }

  /// Largest c with tensor(a, c) <= b.
  truth residuum(truth a, truth b) const {
    if (a <= b) return 1.0;
    switch (kind_) {
      case TNormKind::Godel: return b;
      case TNormKind::Lukasiewicz: return luk_residuum(a, b);
      case TNormKind::Product: return a > 0.0 ? b / a : 1.0;
      case TNormKind::OrdinalSum: {
        if (const Piece* p = common_piece(a, b)) {
          const truth w = p->hi - p->lo;
          const truth x = (a - p->lo) / w;
          const truth y = (b - p->lo) / w;
          const truth z = p->kind == PieceKind::Lukasiewicz ? luk_residuum(x, y)
                                                            : (x > 0.0 ? y / x : 1.0);
          return p->lo + w * z;
        }
        return b;
      }
    }
    return 1.0; // unreachable
  }

  bool is_idempotent(truth a) const { return eq(tensor(a, a), a); }

  /// For non-idempotent a, the bracketing pair (a_minus, a_plus): the largest
  /// idempotent below a and the least idempotent above it. The open interval
  /// between them carries no idempotent at all.
  std::pair<truth, truth> idempotent_bracket(truth a) const {
    if (is_idempotent(a))
      throw std::invalid_argument("idempotent_bracket: input is idempotent");
    if (kind_ == TNormKind::Lukasiewicz || kind_ == TNormKind::Product)
      return {0.0, 1.0};
    for (const Piece& p : pieces_)
      if (p.lo < a && a < p.hi) return {p.lo, p.hi};
    throw std::logic_error("idempotent_bracket: no piece interior contains the input");
  }

  /// True when some a in (0,1) is idempotent. Decidable from the structure:
  /// only a single piece covering all of [0,1] leaves (0,1) idempotent-free.
  bool has_nontrivial_idempotent() const {
    switch (kind_) {
      case TNormKind::Godel: return true;
      case TNormKind::Lukasiewicz:
      case TNormKind::Product: return false;
      case TNormKind::OrdinalSum:
        return !(pieces_.size() == 1 && pieces_[0].lo == 0.0 && pieces_[0].hi == 1.0);
    }
    return false; // unreachable
  }

  /// Finds delta > 0 with  tensor(a, residuum(a - delta, b)) < min(a,b) + eps
  /// by halving from delta = a downward and re-checking the inequality at
  /// every step. Existence is guaranteed for continuous t-norms; running out
  /// of resolution signals a tolerance misconfiguration.
  truth shrink_delta(truth a, truth b, truth eps) const {
    if (!(eps > 0.0)) throw std::invalid_argument("shrink_delta: eps must be positive");
    const truth target = std::min(a, b) + eps;
    truth delta = a > 0.0 ? a : 0.5;
    while (delta >= kDeltaFloor) {
      if (tensor(a, residuum(std::max(a - delta, 0.0), b)) < target) return delta;
      delta *= 0.5;
    }
    throw std::runtime_error("shrink_delta: no delta found above resolution floor");
  }

  /// Finds delta > 0 with  tensor(residuum(a + delta, a - delta), c - delta)
  /// >= c - eps  for every c on the [0, a] grid of step kDeltaGrid (a + delta
  /// clamped to 1, c - delta to 0). Smaller deltas only help, so halving from
  /// eps converges onto a witness.
  truth uniform_delta(truth a, truth eps) const {
    if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("uniform_delta: a must lie in (0,1]");
    if (!(eps > 0.0)) throw std::invalid_argument("uniform_delta: eps must be positive");
    truth delta = eps;
    while (delta >= kDeltaFloor) {
      if (uniform_delta_holds(a, eps, delta)) return delta;
      delta *= 0.5;
    }
    throw std::runtime_error("uniform_delta: no delta found above resolution floor");
  }

  bool uniform_delta_holds(truth a, truth eps, truth delta) const {
    const truth r = residuum(std::min(a + delta, 1.0), std::max(a - delta, 0.0));
    for (truth c = 0.0; c < a + kDeltaGrid; c += kDeltaGrid) {
      const truth cc = std::min(c, a);
      if (tensor(r, std::max(cc - delta, 0.0)) < cc - eps) return false;
      if (cc >= a) break;
    }
    return true;
  }

  std::string name() const {
    switch (kind_) {
      case TNormKind::Godel: return "godel";
      case TNormKind::Lukasiewicz: return "lukasiewicz";
      case TNormKind::Product: return "product";
      case TNormKind::OrdinalSum: return "ordinal_sum";
    }
    return "?";
  }

  friend bool operator==(const TNorm& s, const TNorm& t) {
    if (s.kind_ != t.kind_ || s.pieces_.size() != t.pieces_.size()) return false;
    for (std::size_t i = 0; i < s.pieces_.size(); ++i)
      if (s.pieces_[i].lo != t.pieces_[i].lo || s.pieces_[i].hi != t.pieces_[i].hi ||
          s.pieces_[i].kind != t.pieces_[i].kind)
        return false;
    return true;
  }

private:
  explicit TNorm(TNormKind kind) : kind_(kind) {}

  static truth luk_tensor(truth a, truth b) { return std::max(a + b - 1.0, 0.0); }
  static truth luk_residuum(truth a, truth b) { return std::min(1.0 - a + b, 1.0); }

  const Piece* common_piece(truth a, truth b) const {
    for (const Piece& p : pieces_)
      if (p.lo <= a && a <= p.hi && p.lo <= b && b <= p.hi) return &p;
    return nullptr;
  }

  TNormKind kind_;
  std::vector<Piece> pieces_;
};

} // namespace ofs

#endif // OFS_TNORM_HPP
