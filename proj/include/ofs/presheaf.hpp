#ifndef OFS_PRESHEAF_HPP
#define OFS_PRESHEAF_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ofs/category.hpp"
#include "ofs/diagonal.hpp"

namespace ofs {

/// A weight (presheaf) on a category: a type plus one value per object with
///   values[i] <= min(type[i], wtype)
///   tensor(residuum(type[j], values[j]), hom[i][j]) <= values[i]
struct Weight {
  truth wtype = 0.0;
  std::vector<truth> values;
};

/// A coweight (co-presheaf): same bounds, transposed compatibility law
///   tensor(residuum(type[i], hom[i][j]), values[i]) <= values[j]
struct Coweight {
  truth wtype = 0.0;
  std::vector<truth> values;
};

/// A distributor from a category to itself, as a square matrix of values.
struct Distributor {
  std::vector<std::vector<truth>> values;
};

inline void require_over(const DQCategory& c, const Weight& w) {
  if (w.values.size() != c.size())
    throw std::invalid_argument("weight does not match category size");
}

inline void require_over(const DQCategory& c, const Coweight& w) {
  if (w.values.size() != c.size())
    throw std::invalid_argument("coweight does not match category size");
}

inline ValidationReport validate(const DQCategory& c, const Weight& w) {
  ValidationReport r;
  const std::size_t n = c.size();
  if (w.values.size() != n) {
    r.violations.push_back({"weight", "shape", {}, truth(w.values.size()), truth(n)});
    return r;
  }
  if (!in_unit(w.wtype)) r.violations.push_back({"weight", "type range", {}, w.wtype, 1.0});
  for (std::size_t i = 0; i < n; ++i) {
    const truth bound = std::min(c.types[i], w.wtype);
    if (!in_unit(w.values[i]) || !leq(w.values[i], bound))
      r.violations.push_back({"weight", "(1) value bound", {static_cast<int>(i)}, w.values[i], bound});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const truth lhs = c.tnorm.tensor(c.tnorm.residuum(c.types[j], w.values[j]), c.hom[i][j]);
      if (!leq(lhs, w.values[i]))
        r.violations.push_back({"weight", "(3) compatibility",
                                {static_cast<int>(i), static_cast<int>(j)}, lhs, w.values[i]});
    }
  return r;
}

inline ValidationReport validate(const DQCategory& c, const Coweight& w) {
  ValidationReport r;
  const std::size_t n = c.size();
  if (w.values.size() != n) {
    r.violations.push_back({"coweight", "shape", {}, truth(w.values.size()), truth(n)});
    return r;
  }
  if (!in_unit(w.wtype)) r.violations.push_back({"coweight", "type range", {}, w.wtype, 1.0});
  for (std::size_t i = 0; i < n; ++i) {
    const truth bound = std::min(c.types[i], w.wtype);
    if (!in_unit(w.values[i]) || !leq(w.values[i], bound))
      r.violations.push_back({"coweight", "(1) value bound", {static_cast<int>(i)}, w.values[i], bound});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const truth lhs = c.tnorm.tensor(c.tnorm.residuum(c.types[i], c.hom[i][j]), w.values[i]);
      if (!leq(lhs, w.values[j]))
        r.violations.push_back({"coweight", "(2) compatibility",
                                {static_cast<int>(i), static_cast<int>(j)}, lhs, w.values[j]});
    }
  return r;
}

/// Validates a self-distributor against both hom actions.
inline ValidationReport validate(const DQCategory& c, const Distributor& d) {
  ValidationReport r;
  const std::size_t n = c.size();
  if (d.values.size() != n) {
    r.violations.push_back({"distributor", "shape", {}, truth(d.values.size()), truth(n)});
    return r;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d.values[i].size() != n) {
      r.violations.push_back({"distributor", "shape", {static_cast<int>(i)}, truth(d.values[i].size()), truth(n)});
      return r;
    }
    for (std::size_t j = 0; j < n; ++j) {
      const truth bound = std::min(c.types[i], c.types[j]);
      if (!leq(d.values[i][j], bound))
        r.violations.push_back({"distributor", "(1) value bound",
                                {static_cast<int>(i), static_cast<int>(j)}, d.values[i][j], bound});
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        // action on the right leg: hom(y,z) o d(x,y) <= d(x,z)
        const truth right = c.tnorm.tensor(c.tnorm.residuum(c.types[y], c.hom[y][z]), d.values[x][y]);
        if (!leq(right, d.values[x][z]))
          r.violations.push_back({"distributor", "(2) right action",
                                  {static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)},
                                  right, d.values[x][z]});
        // action on the left leg: d(y,z) o hom(x,y) <= d(x,z)
        const truth left = c.tnorm.tensor(c.tnorm.residuum(c.types[y], d.values[y][z]), c.hom[x][y]);
        if (!leq(left, d.values[x][z]))
          r.violations.push_back({"distributor", "(3) left action",
                                  {static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)},
                                  left, d.values[x][z]});
      }
  return r;
}

/// phi o psi: the single value of the composite through the carrier,
/// max over objects of tensor(residuum(type[i], phi[i]), psi[i]).
inline truth compose_wc(const DQCategory& c, const Weight& phi, const Coweight& psi) {
  require_over(c, phi);
  require_over(c, psi);
  truth best = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i)
    best = std::max(best, c.tnorm.tensor(c.tnorm.residuum(c.types[i], phi.values[i]), psi.values[i]));
  return best;
}

/// psi o phi: the self-distributor with entries
/// tensor(residuum(a, psi[j]), phi[i]) for the common type a.
inline Distributor compose_cw(const DQCategory& c, const Coweight& psi, const Weight& phi) {
  require_over(c, phi);
  require_over(c, psi);
  if (!eq(phi.wtype, psi.wtype))
    throw std::invalid_argument("compose_cw: weight and coweight types differ");
  const truth a = phi.wtype;
  Distributor d;
  d.values.assign(c.size(), std::vector<truth>(c.size(), 0.0));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      d.values[i][j] = c.tnorm.tensor(c.tnorm.residuum(a, psi.values[j]), phi.values[i]);
  return d;
}

inline bool distributor_below_hom(const DQCategory& c, const Distributor& d) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (!leq(d.values[i][j], c.hom[i][j])) return false;
  return true;
}

/// The presheaf hom P(phi, varphi) =
/// min(t(varphi), min over x of tensor(residuum(phi[x], varphi[x]), t(phi))).
inline truth phom(const DQCategory& c, const Weight& phi, const Weight& varphi) {
  require_over(c, phi);
  require_over(c, varphi);
  truth acc = varphi.wtype;
  for (std::size_t i = 0; i < c.size(); ++i)
    acc = std::min(acc, c.tnorm.tensor(c.tnorm.residuum(phi.values[i], varphi.values[i]), phi.wtype));
  return acc;
}

/// The representable weight at x: column x of the hom matrix, type type[x].
inline Weight yoneda(const DQCategory& c, std::size_t x) {
  if (x >= c.size()) throw std::invalid_argument("yoneda: unknown object");
  Weight w;
  w.wtype = c.types[x];
  w.values.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) w.values[i] = c.hom[i][x];
  return w;
}

/// The corepresentable coweight at x: row x of the hom matrix, type type[x].
inline Coweight co_yoneda(const DQCategory& c, std::size_t x) {
  if (x >= c.size()) throw std::invalid_argument("co_yoneda: unknown object");
  Coweight w;
  w.wtype = c.types[x];
  w.values = c.hom[x];
  return w;
}

inline Weight trivial_weight(const DQCategory& c) {
  return Weight{0.0, std::vector<truth>(c.size(), 0.0)};
}

/// All supremum witnesses of phi: objects x0 of type t(phi) whose hom row
/// realizes phom(phi, yoneda(-)). Suprema are unique only up to
/// hom-equivalence, so every witness is reported.
inline std::vector<std::size_t> supremum(const DQCategory& c, const Weight& phi) {
  require_over(c, phi);
  std::vector<truth> target(c.size());
  for (std::size_t y = 0; y < c.size(); ++y) target[y] = phom(c, phi, yoneda(c, y));
  std::vector<std::size_t> witnesses;
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (!eq(c.types[x], phi.wtype)) continue;
    bool all = true;
    for (std::size_t y = 0; y < c.size() && all; ++y) all = eq(c.hom[x][y], target[y]);
    if (all) witnesses.push_back(x);
  }
  return witnesses;
}

/// The largest coweight psi with psi o phi <= hom: pointwise the diagonal
/// left residual of hom[x][y] by phi[x], met over x. Any left adjoint of phi
/// is bounded by this candidate.
inline Coweight canonical_left_adjoint(const DQCategory& c, const Weight& phi) {
  require_over(c, phi);
  const truth a = phi.wtype;
  Coweight psi;
  psi.wtype = a;
  psi.values.assign(c.size(), 0.0);
  for (std::size_t y = 0; y < c.size(); ++y) {
    truth v = std::min(a, c.types[y]);
    for (std::size_t x = 0; x < c.size(); ++x)
      v = std::min(v, c.tnorm.residuum(c.tnorm.residuum(a, phi.values[x]), c.hom[x][y]));
    psi.values[y] = v;
  }
  return psi;
}

/// The top element of the coweights of type b: x -> min(b, type[x]).
inline Coweight top_coweight(const DQCategory& c, truth b) {
  Coweight w;
  w.wtype = b;
  w.values.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) w.values[i] = std::min(b, c.types[i]);
  return w;
}

/// Clamps a raw vector into the type bounds and applies one transitive
/// raising pass; one pass is a fixpoint because hom is transitive.
inline Coweight coweight_closure(const DQCategory& c, truth b, const std::vector<truth>& raw) {
  if (raw.size() != c.size()) throw std::invalid_argument("coweight_closure: size mismatch");
  Coweight w;
  w.wtype = b;
  w.values.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    w.values[i] = std::min({clamp01(raw[i]), b, c.types[i]});
  std::vector<truth> raised = w.values;
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t i = 0; i < c.size(); ++i)
      raised[j] = std::max(raised[j],
                           c.tnorm.tensor(c.tnorm.residuum(c.types[i], c.hom[i][j]), w.values[i]));
  w.values = std::move(raised);
  return w;
}

/// Mirror of coweight_closure for weights, using the equivalent form
/// tensor(residuum(type[j], hom[i][j]), values[j]) of the compatibility law.
inline Weight weight_closure(const DQCategory& c, truth a, const std::vector<truth>& raw) {
  if (raw.size() != c.size()) throw std::invalid_argument("weight_closure: size mismatch");
  Weight w;
  w.wtype = a;
  w.values.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    w.values[i] = std::min({clamp01(raw[i]), a, c.types[i]});
  std::vector<truth> raised = w.values;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      raised[i] = std::max(raised[i],
                           c.tnorm.tensor(c.tnorm.residuum(c.types[j], c.hom[i][j]), w.values[j]));
  w.values = std::move(raised);
  return w;
}

/// Cuts a weight down to type a. The clamp of a valid weight is valid.
inline Weight clamp_weight(const Weight& w, truth a) {
  Weight out;
  out.wtype = a;
  out.values.resize(w.values.size());
  for (std::size_t i = 0; i < w.values.size(); ++i) out.values[i] = std::min(w.values[i], a);
  return out;
}

/// Pointwise meet of two coweights of a common type. Valid because the
/// underlying lattice is a frame and both compatibility laws are preserved
/// under min.
inline Coweight coweight_meet(const Coweight& u, const Coweight& v) {
  if (u.values.size() != v.values.size() || !eq(u.wtype, v.wtype))
    throw std::invalid_argument("coweight_meet: incompatible coweights");
  Coweight w;
  w.wtype = std::min(u.wtype, v.wtype);
  w.values.resize(u.values.size());
  for (std::size_t i = 0; i < u.values.size(); ++i)
    w.values[i] = std::min(u.values[i], v.values[i]);
  return w;
}

// ---------------------------------------------------------------------------
// Named constructions
// ---------------------------------------------------------------------------

struct CounterexampleInstance {
  DQCategory category;
  Weight phi;
  Coweight psi;
};

/// The two-object category hom = [[b,0],[0,0]] together with the weight
/// phi = (a, 0) of type a and its left adjoint psi = (a, 0). Requires a
/// idempotent with 0 < a < b < 1; phi is then Cauchy but is generated by no
/// net, and the category is Yoneda complete yet not Cauchy complete.
inline CounterexampleInstance idempotent_counterexample(const TNorm& t, truth a, truth b) {
  if (!t.is_idempotent(a))
    throw std::invalid_argument("idempotent_counterexample: a must be idempotent");
  if (!(0.0 < a && a < b && b < 1.0))
    throw std::invalid_argument("idempotent_counterexample: need 0 < a < b < 1");
  CounterexampleInstance inst;
  inst.category.tnorm = t;
  inst.category.objects = {"x", "y"};
  inst.category.types = {b, 0.0};
  inst.category.hom = {{b, 0.0}, {0.0, 0.0}};
  require_valid(inst.category);
  inst.phi = Weight{a, {a, 0.0}};
  inst.psi = Coweight{a, {a, 0.0}};
  ValidationReport rw = validate(inst.category, inst.phi);
  ValidationReport rc = validate(inst.category, inst.psi);
  if (!rw.ok()) throw ValidationError(std::move(rw));
  if (!rc.ok()) throw ValidationError(std::move(rc));
  return inst;
}

/// Companion weight for residuum_grid_category: value 1 at the bottom grid
/// point and the idempotent a everywhere else, type 1.
inline Weight residuum_grid_weight(const DQCategory& grid, const TNorm& t, truth a) {
  if (!t.is_idempotent(a) || !(0.0 < a && a < 1.0))
    throw std::invalid_argument("residuum_grid_weight: a must be a nontrivial idempotent");
  Weight w;
  w.wtype = 1.0;
  w.values.assign(grid.size(), a);
  w.values[0] = 1.0;
  ValidationReport r = validate(grid, w);
  if (!r.ok()) throw ValidationError(std::move(r));
  return w;
}

} // namespace ofs

#endif // OFS_PRESHEAF_HPP
