#ifndef OFS_GENERATE_HPP
#define OFS_GENERATE_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "ofs/classify.hpp"

namespace ofs {

/// Seeded random category: grid-valued types, raw homs below the type
/// bounds, then the transitive-raising closure. Each raising hop multiplies
/// by a factor below the unit, so path composites only shrink with length
/// and the sweep reaches its fixpoint on finite carriers. With probability
/// one half a constant block is planted first so that nets and generated
/// weights have something nontrivial to find.
inline DQCategory random_category(const TNorm& t, std::size_t n, std::uint64_t seed,
                                  int grid = 16) {
  if (n == 0) throw std::invalid_argument("random_category: need at least one object");
  std::mt19937_64 rng(mix_seed(seed, 0xca7ULL));
  DQCategory c;
  c.tnorm = t;
  c.objects = default_names(n);
  c.types.resize(n);
  for (auto& v : c.types) v = draw_grid(rng, grid);
  c.hom.assign(n, std::vector<truth>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c.hom[i][j] = i == j ? c.types[i] : draw_grid_below(rng, grid, std::min(c.types[i], c.types[j]));

  if (n >= 2 && rng() % 2 == 0) {
    const std::size_t size = 2 + draw_index(rng, std::min<std::size_t>(n, 3) - 1);
    std::vector<std::size_t> members;
    while (members.size() < size) {
      const std::size_t x = draw_index(rng, n);
      bool dup = false;
      for (std::size_t m : members) dup |= m == x;
      if (!dup) members.push_back(x);
    }
    const truth level = draw_grid(rng, grid);
    for (std::size_t u : members) {
      c.types[u] = level;
      for (std::size_t v : members) c.hom[u][v] = level;
    }
    for (std::size_t u : members)
      for (std::size_t z = 0; z < n; ++z)
        if (u != z) {
          c.hom[u][z] = std::min(c.hom[u][z], std::min(c.types[u], c.types[z]));
          c.hom[z][u] = std::min(c.hom[z][u], std::min(c.types[u], c.types[z]));
        }
  }

  for (int sweep = 0; sweep < 64; ++sweep) {
    truth delta = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const truth lift = t.tensor(t.residuum(c.types[j], c.hom[j][k]), c.hom[i][j]);
          if (lift > c.hom[i][k]) {
            delta = std::max(delta, lift - c.hom[i][k]);
            c.hom[i][k] = lift;
          }
        }
    if (delta <= 1e-15) break;
  }
  require_valid(c);
  return c;
}

inline Weight random_weight(const DQCategory& c, std::uint64_t seed, int grid = 16) {
  std::mt19937_64 rng(mix_seed(seed, 0x3e1ULL));
  const truth a = draw_grid(rng, grid);
  std::vector<truth> raw(c.size());
  for (auto& v : raw) v = draw_grid(rng, grid);
  return weight_closure(c, a, raw);
}

inline Coweight random_coweight(const DQCategory& c, std::uint64_t seed, int grid = 16) {
  std::mt19937_64 rng(mix_seed(seed, 0xc03ULL));
  const truth b = draw_grid(rng, grid);
  std::vector<truth> raw(c.size());
  for (auto& v : raw) v = draw_grid(rng, grid);
  return coweight_closure(c, b, raw);
}

inline EPSequence random_sequence(const DQCategory& c, std::uint64_t seed) {
  if (c.size() == 0) throw std::invalid_argument("random_sequence: empty category");
  std::mt19937_64 rng(mix_seed(seed, 0x5e9ULL));
  EPSequence s;
  const std::size_t plen = draw_index(rng, 3);
  const std::size_t clen = 1 + draw_index(rng, 4);
  for (std::size_t i = 0; i < plen; ++i) s.prefix.push_back(draw_index(rng, c.size()));
  for (std::size_t i = 0; i < clen; ++i) s.cycle.push_back(draw_index(rng, c.size()));
  return s;
}

/// The t-norm pool used by the seeded generators and the test suites.
inline std::vector<TNorm> standard_tnorms() {
  return {TNorm::godel(), TNorm::lukasiewicz(), TNorm::product(),
          TNorm::ordinal_sum({{0.0, 0.5, PieceKind::Lukasiewicz}, {0.5, 1.0, PieceKind::Product}}),
          TNorm::ordinal_sum({{0.1, 0.4, PieceKind::Product}, {0.6, 0.9, PieceKind::Lukasiewicz}})};
}

} // namespace ofs

#endif // OFS_GENERATE_HPP
