#ifndef OFS_NETS_HPP
#define OFS_NETS_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "ofs/presheaf.hpp"

namespace ofs {

/// Eventually periodic sequences stand in for nets over arbitrary directed
/// sets. On a finite carrier this loses nothing: the hom values of any net
/// take finitely many values, so the doubly indexed nets in the Cauchy
/// definitions order-converge exactly when they are eventually constant, and
/// the tail behavior is fully determined by the set S of objects the net
/// visits cofinally. Every such S is realized by a sequence cycling through
/// S, hence classification, generated (co)weights, Yoneda limits and
/// bilimits of general nets are all captured by prefix + cycle data. The
/// simulation oracle in the test suite exercises this reduction directly.
///
/// Backward Cauchy nets (reversed index pairs) are not modelled separately:
/// on a finite carrier their defining net sweeps the same value set
/// {hom[s][t] : s,t in S}, so the notion collapses into the biCauchy test
/// below.
struct EPSequence {
  std::vector<std::size_t> prefix;
  std::vector<std::size_t> cycle; // nonempty

  /// The set of objects visited cofinally.
  std::vector<std::size_t> cycle_set() const {
    std::set<std::size_t> s(cycle.begin(), cycle.end());
    return {s.begin(), s.end()};
  }
};

inline void require_over(const DQCategory& c, const EPSequence& s) {
  if (s.cycle.empty()) throw std::invalid_argument("sequence cycle must be nonempty");
  for (std::size_t i : s.prefix)
    if (i >= c.size()) throw std::invalid_argument("sequence prefix index out of range");
  for (std::size_t i : s.cycle)
    if (i >= c.size()) throw std::invalid_argument("sequence cycle index out of range");
}

struct NetClass {
  bool forward_cauchy = false;
  bool bicauchy = false;
  std::optional<truth> net_type;
};

/// Classifies a sequence. The forward pairs and the unrestricted pairs both
/// sweep out the full set {hom[s][t] : s,t in S} cofinally, so forward
/// Cauchy and biCauchy coincide here and both amount to that set being a
/// single value. The type exists when the self-homs on S agree.
inline NetClass classify_net(const DQCategory& c, const EPSequence& s) {
  require_over(c, s);
  const std::vector<std::size_t> S = s.cycle_set();
  NetClass out;
  bool constant = true;
  const truth a = c.hom[S[0]][S[0]];
  for (std::size_t u : S)
    for (std::size_t v : S)
      if (!eq(c.hom[u][v], a)) constant = false;
  out.forward_cauchy = constant;
  out.bicauchy = constant;
  if (constant) {
    out.net_type = a;
    return out;
  }
  bool same_type = true;
  for (std::size_t u : S)
    if (!eq(c.types[u], c.types[S[0]])) same_type = false;
  if (same_type) out.net_type = c.types[S[0]];
  return out;
}

/// The weight generated by the sequence: x -> min over cofinal objects s of
/// hom[x][s], with the net type as weight type. The prefix never matters.
inline Weight generated_weight(const DQCategory& c, const EPSequence& s) {
  const NetClass nc = classify_net(c, s);
  if (!nc.net_type) throw std::invalid_argument("generated_weight: sequence has no type");
  Weight w;
  w.wtype = *nc.net_type;
  w.values.assign(c.size(), 1.0);
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t u : s.cycle_set())
      w.values[x] = std::min(w.values[x], c.hom[x][u]);
  return w;
}

/// Dual of generated_weight: x -> min over cofinal s of hom[s][x].
inline Coweight generated_coweight(const DQCategory& c, const EPSequence& s) {
  const NetClass nc = classify_net(c, s);
  if (!nc.net_type) throw std::invalid_argument("generated_coweight: sequence has no type");
  Coweight w;
  w.wtype = *nc.net_type;
  w.values.assign(c.size(), 1.0);
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t u : s.cycle_set())
      w.values[x] = std::min(w.values[x], c.hom[u][x]);
  return w;
}

/// x is a Yoneda limit when its self-hom matches the net type and its hom
/// row realizes the generated coweight.
inline bool is_yoneda_limit(const DQCategory& c, const EPSequence& s, std::size_t x) {
  const NetClass nc = classify_net(c, s);
  if (!nc.net_type) throw std::invalid_argument("is_yoneda_limit: sequence has no type");
  if (x >= c.size()) throw std::invalid_argument("is_yoneda_limit: unknown object");
  if (!eq(c.hom[x][x], *nc.net_type)) return false;
  const Coweight psi = generated_coweight(c, s);
  for (std::size_t y = 0; y < c.size(); ++y)
    if (!eq(c.hom[x][y], psi.values[y])) return false;
  return true;
}

/// x is a bilimit when self-hom, incoming tail minima, outgoing tail minima
/// and the tail self-hom minimum all agree.
inline bool is_bilimit(const DQCategory& c, const EPSequence& s, std::size_t x) {
  const NetClass nc = classify_net(c, s);
  if (!nc.net_type) throw std::invalid_argument("is_bilimit: sequence has no type");
  if (x >= c.size()) throw std::invalid_argument("is_bilimit: unknown object");
  truth in = 1.0, out = 1.0, self = 1.0;
  for (std::size_t u : s.cycle_set()) {
    in = std::min(in, c.hom[u][x]);
    out = std::min(out, c.hom[x][u]);
    self = std::min(self, c.hom[u][u]);
  }
  return eq(c.hom[x][x], in) && eq(c.hom[x][x], out) && eq(c.hom[x][x], self);
}

/// The weak hypothesis "forward distances collapse onto self-distances":
/// lim over nu >= mu of (p(x_mu, x_nu) - p(x_mu, x_mu)) = 0, evaluated on
/// the cycle set. Whenever this holds the sequence is forward Cauchy in the
/// encoded category.
inline bool weak_fc_criterion(const PartialMetricSpace& x, const EPSequence& s) {
  if (s.cycle.empty()) throw std::invalid_argument("sequence cycle must be nonempty");
  for (std::size_t i : s.prefix)
    if (i >= x.size()) throw std::invalid_argument("sequence prefix index out of range");
  for (std::size_t i : s.cycle)
    if (i >= x.size()) throw std::invalid_argument("sequence cycle index out of range");
  for (std::size_t u : s.cycle_set())
    for (std::size_t v : s.cycle_set())
      if (!eq(pm_sub(x.p[u][v], x.p[u][u]), 0.0)) return false;
  return true;
}

} // namespace ofs

#endif // OFS_NETS_HPP
