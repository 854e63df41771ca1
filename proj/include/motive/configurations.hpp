#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motive/errors.hpp"
#include "motive/l_polynomial.hpp"

namespace motive {

struct ConfigComponent {
  std::string name;
  LPolynomial cls;
};

namespace detail {
inline std::string subset_display(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (mask & (1u << i)) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}
}  // namespace detail

// A configuration of components with prescribed iterated intersections.
// Subsets of components are keyed by bitmask (bit k = component k+1).
// The map stores a class for a nonempty intersection and nullopt for an
// empty one; a subset missing from the map is legal only when some stored
// sub-subset is already empty, in which case it is treated as empty too.
// The intersections themselves are supplied by the caller; nothing here
// infers geometry.
class Configuration {
 public:
  static constexpr int max_components = 20;

  using IntersectionMap = std::map<std::uint32_t, std::optional<LPolynomial>>;

  Configuration() = default;

  static Configuration make(std::vector<ConfigComponent> components, IntersectionMap intersections) {
    const int m = static_cast<int>(components.size());
    if (m > max_components) {
      throw DomainError("configuration has " + std::to_string(m) + " components; the cap is " +
                        std::to_string(max_components));
    }
    const std::uint32_t full = m == 0 ? 0u : ((m == 32 ? 0u : (1u << m)) - 1u);
    for (const auto& [mask, cls] : intersections) {
      if (mask & ~full) {
        throw DomainError("intersection subset " + detail::subset_display(mask) +
                          " references a component out of range");
      }
      if (__builtin_popcount(mask) < 2) {
        throw DomainError("intersection subsets must have at least two components, got " +
                          detail::subset_display(mask));
      }
    }
    Configuration c;
    c.components_ = std::move(components);
    c.intersections_ = std::move(intersections);
    return c;
  }

  int component_count() const { return static_cast<int>(components_.size()); }
  const std::vector<ConfigComponent>& components() const { return components_; }
  const IntersectionMap& intersections() const { return intersections_; }

 private:
  std::vector<ConfigComponent> components_;
  IntersectionMap intersections_;
};

struct ConfigurationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

namespace detail {
struct ConfigAnalysis {
  ConfigurationReport report;
  // Usable classes for subsets with >= 2 components; derived-empty subsets
  // are simply absent here.
  std::map<std::uint32_t, const LPolynomial*> effective;
};

inline ConfigAnalysis analyze_configuration(const Configuration& c) {
  ConfigAnalysis out;
  const int m = c.component_count();
  const std::uint32_t limit = m == 0 ? 1u : (1u << m);
  std::vector<char> derived_empty(limit, 0);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    bool empty_below = false;
    for (int b = 0; b < m && !empty_below; ++b) {
      const std::uint32_t bit = 1u << b;
      if ((mask & bit) && __builtin_popcount(mask ^ bit) >= 2 && derived_empty[mask ^ bit]) {
        empty_below = true;
      }
    }
    auto it = c.intersections().find(mask);
    if (it == c.intersections().end()) {
      if (empty_below) {
        derived_empty[mask] = 1;
      } else {
        out.report.valid = false;
        out.report.violations.push_back("missing intersection data for subset " + subset_display(mask));
      }
    } else if (!it->second.has_value()) {
      derived_empty[mask] = 1;
    } else {
      if (empty_below) {
        out.report.valid = false;
        out.report.violations.push_back("subset " + subset_display(mask) +
                                        " has a class although a sub-intersection is empty");
        derived_empty[mask] = 1;
      } else {
        out.effective.emplace(mask, &*it->second);
      }
    }
  }
  return out;
}
}  // namespace detail

inline ConfigurationReport validate_configuration(const Configuration& c) {
  return detail::analyze_configuration(c).report;
}

// Inclusion-exclusion over all nonempty subsets of components; an empty
// intersection contributes zero. This is the Grothendieck-ring class of the
// union of the components.
inline LPolynomial union_class(const Configuration& c) {
  detail::ConfigAnalysis analysis = detail::analyze_configuration(c);
  if (!analysis.report.valid) {
    std::string msg = "configuration is invalid:";
    for (const std::string& v : analysis.report.violations) msg += "\n  " + v;
    throw DomainError(msg);
  }
  LPolynomial out;
  for (int i = 0; i < c.component_count(); ++i) out = out + c.components()[static_cast<std::size_t>(i)].cls;
  for (const auto& [mask, cls] : analysis.effective) {
    const int sign = (__builtin_popcount(mask) % 2 == 0) ? -1 : 1;
    out = sign > 0 ? out + *cls : out - *cls;
  }
  return out;
}

}  // namespace motive
