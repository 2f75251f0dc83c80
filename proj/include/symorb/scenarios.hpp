#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "symorb/groebner.hpp"
#include "symorb/report.hpp"

namespace symorb {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct ScenarioContext {
  std::uint64_t seed = kDefaultSeed;
  GroebnerOptions options;
};

/// A pinned computation together with its expected outcome. The report's
/// verdict is true iff the observed outcome matches.
struct Scenario {
  std::string name;
  std::string description;
  bool slow = false;
  std::function<VerdictReport(const ScenarioContext&)> run;
};

const std::vector<Scenario>& scenarios();
/// nullptr for unknown names.
const Scenario* find_scenario(std::string_view name);

/// The eight-element lex basis of (S4.e_3^2), integer-normalized.
std::vector<std::string> expected_e32_s4_basis();

}  // namespace symorb
