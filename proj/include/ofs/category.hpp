#ifndef OFS_CATEGORY_HPP
#define OFS_CATEGORY_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ofs/tnorm.hpp"
#include "ofs/truth.hpp"

namespace ofs {

/// A finite ordered fuzzy set: objects carry a membership degree (their
/// type, the diagonal of the hom matrix) and hom[i][j] measures the degree
/// to which object i precedes object j. The three axioms:
///   (i)   hom[i][j] <= min(type[i], type[j])
///   (ii)  hom[i][i]  = type[i]
///   (iii) tensor(residuum(type[j], hom[j][k]), hom[i][j]) <= hom[i][k]
struct DQCategory {
  TNorm tnorm = TNorm::godel();
  std::vector<std::string> objects;
  std::vector<truth> types;
  std::vector<std::vector<truth>> hom;

  std::size_t size() const { return objects.size(); }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == name) return static_cast<int>(i);
    return -1;
  }
};

struct Violation {
  std::string component; // "category", "pms", "weight", ...
  std::string condition; // which axiom failed
  std::vector<int> indices;
  truth lhs = 0.0;
  truth rhs = 0.0;

  std::string describe() const {
    std::ostringstream os;
    os << component << " " << condition << " at (";
    for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
    os << "): lhs=" << lhs << " rhs=" << rhs;
    return os.str();
  }
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }

  std::string describe() const {
    if (ok()) return "valid";
    std::ostringstream os;
    for (const Violation& v : violations) os << v.describe() << "\n";
    return os.str();
  }
};

class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(ValidationReport report)
      : std::runtime_error("validation failed:\n" + report.describe()),
        report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

private:
  ValidationReport report_;
};

/// Checks the three axioms and reports every violated pair/triple with both
/// sides of the failed inequality. An empty report means the instance is a
/// well-formed category.
inline ValidationReport validate(const DQCategory& c) {
  ValidationReport r;
  const std::size_t n = c.size();
  if (c.types.size() != n || c.hom.size() != n) {
    r.violations.push_back({"category", "shape", {}, truth(c.types.size()), truth(n)});
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (c.hom[i].size() != n) {
      r.violations.push_back({"category", "shape", {static_cast<int>(i)}, truth(c.hom[i].size()), truth(n)});
      return r;
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_unit(c.types[i]))
      r.violations.push_back({"category", "type range", {static_cast<int>(i)}, c.types[i], 1.0});
    if (!eq(c.hom[i][i], c.types[i]))
      r.violations.push_back({"category", "(ii) reflexivity", {static_cast<int>(i)}, c.hom[i][i], c.types[i]});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!in_unit(c.hom[i][j]))
        r.violations.push_back({"category", "hom range", {static_cast<int>(i), static_cast<int>(j)}, c.hom[i][j], 1.0});
      const truth bound = std::min(c.types[i], c.types[j]);
      if (!leq(c.hom[i][j], bound))
        r.violations.push_back({"category", "(i) hom bound", {static_cast<int>(i), static_cast<int>(j)}, c.hom[i][j], bound});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const truth lhs = c.tnorm.tensor(c.tnorm.residuum(c.types[j], c.hom[j][k]), c.hom[i][j]);
        if (!leq(lhs, c.hom[i][k]))
          r.violations.push_back({"category", "(iii) transitivity",
                                  {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)},
                                  lhs, c.hom[i][k]});
      }
  return r;
}

inline void require_valid(const DQCategory& c) {
  ValidationReport r = validate(c);
  if (!r.ok()) throw ValidationError(std::move(r));
}

inline std::vector<std::string> default_names(std::size_t n, const std::string& stem = "x") {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

/// Category on the given truth values with hom(x, y) = min(x, y).
inline DQCategory min_category(const TNorm& t, const std::vector<truth>& values) {
  DQCategory c;
  c.tnorm = t;
  c.objects = default_names(values.size());
  c.types = values;
  c.hom.assign(values.size(), std::vector<truth>(values.size(), 0.0));
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = 0; j < values.size(); ++j)
      c.hom[i][j] = std::min(values[i], values[j]);
  require_valid(c);
  return c;
}

/// Global category on the grid {0, 1/n, ..., 1} with hom(x, y) = x -> y and
/// all types 1 (see residuum_grid_weight for the companion weight).
inline DQCategory residuum_grid_category(const TNorm& t, int n) {
  if (n < 1) throw std::invalid_argument("residuum_grid_category: n must be positive");
  DQCategory c;
  c.tnorm = t;
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  c.objects = default_names(m, "g");
  c.types.assign(m, 1.0);
  c.hom.assign(m, std::vector<truth>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      c.hom[i][j] = t.residuum(truth(i) / n, truth(j) / n);
  require_valid(c);
  return c;
}

// ---------------------------------------------------------------------------
// Generalized partial metric spaces
// ---------------------------------------------------------------------------

inline constexpr truth kInfiniteDistance = std::numeric_limits<truth>::infinity();

/// Distance subtraction under the convention infinity - infinity = 0.
inline truth pm_sub(truth a, truth b) {
  if (std::isinf(a) && std::isinf(b)) return 0.0;
  return a - b;
}

/// A metric-like structure in [0, infinity] where self-distance may be
/// nonzero: p[i][i], p[j][j] <= p[i][j] and the shifted triangle inequality
/// p[j][k] + (p[i][j] - p[j][j]) >= p[i][k]. Infinite distances are stored
/// as IEEE infinity.
struct PartialMetricSpace {
  std::vector<std::string> objects;
  std::vector<std::vector<truth>> p;

  std::size_t size() const { return objects.size(); }

  bool bounded() const {
    for (const auto& row : p)
      for (truth v : row)
        if (!(v <= 1.0 + kEps)) return false;
    return true;
  }
};

inline ValidationReport validate(const PartialMetricSpace& x) {
  ValidationReport r;
  const std::size_t n = x.size();
  if (x.p.size() != n) {
    r.violations.push_back({"pms", "shape", {}, truth(x.p.size()), truth(n)});
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (x.p[i].size() != n) {
      r.violations.push_back({"pms", "shape", {static_cast<int>(i)}, truth(x.p[i].size()), truth(n)});
      return r;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(x.p[i][j] >= -kEps))
        r.violations.push_back({"pms", "range", {static_cast<int>(i), static_cast<int>(j)}, x.p[i][j], 0.0});
      if (!leq(x.p[i][i], x.p[i][j]) || !leq(x.p[j][j], x.p[i][j]))
        r.violations.push_back({"pms", "(1) self-distance bound",
                                {static_cast<int>(i), static_cast<int>(j)},
                                std::max(x.p[i][i], x.p[j][j]), x.p[i][j]});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const truth lhs = x.p[j][k] + pm_sub(x.p[i][j], x.p[j][j]);
        if (!(lhs >= x.p[i][k] - kEps) && !(std::isinf(lhs) && std::isinf(x.p[i][k])))
          r.violations.push_back({"pms", "(2) triangle",
                                  {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)},
                                  lhs, x.p[i][k]});
      }
  return r;
}

inline void require_valid(const PartialMetricSpace& x) {
  ValidationReport r = validate(x);
  if (!r.ok()) throw ValidationError(std::move(r));
}

/// Lukasiewicz categories and bounded partial metric spaces are two views of
/// the same data, exchanged by p = 1 - hom.
inline PartialMetricSpace to_pms(const DQCategory& c) {
  if (c.tnorm.kind() != TNormKind::Lukasiewicz)
    throw std::invalid_argument("to_pms: category must carry the Lukasiewicz t-norm");
  PartialMetricSpace x;
  x.objects = c.objects;
  x.p.assign(c.size(), std::vector<truth>(c.size(), 0.0));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      x.p[i][j] = 1.0 - c.hom[i][j];
  return x;
}

inline DQCategory from_pms(const PartialMetricSpace& x) {
  if (!x.bounded()) throw std::invalid_argument("from_pms: partial metric space must be bounded");
  DQCategory c;
  c.tnorm = TNorm::lukasiewicz();
  c.objects = x.objects;
  c.types.assign(x.size(), 0.0);
  c.hom.assign(x.size(), std::vector<truth>(x.size(), 0.0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) c.hom[i][j] = 1.0 - x.p[i][j];
    c.types[i] = c.hom[i][i];
  }
  return c;
}

} // namespace ofs

#endif // OFS_CATEGORY_HPP
