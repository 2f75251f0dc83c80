#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "symorb/field.hpp"
#include "symorb/monomial.hpp"
#include "symorb/polynomial.hpp"

namespace symorb {

/// target = sum coefficient * multiplier * generator.
struct LinearCombination {
  struct Entry {
    Scalar coefficient;
    Monomial multiplier;
    Polynomial generator;
  };

  Polynomial target;
  std::vector<Entry> entries;
};

/// A nonzero point at which every generator vanishes. Polynomials listed in
/// `nonvanishing` must not vanish there.
struct WitnessPoint {
  std::vector<Scalar> point;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> nonvanishing;
  std::string description;
};

/// element = sum quotients[i] * basis[i] + remainder, with the remainder
/// reduced with respect to the leading monomials of the basis.
struct NormalFormTrace {
  std::string label;
  MonomialOrder order = MonomialOrder::GrevLex;
  Polynomial element;
  std::vector<Polynomial> basis;
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

struct TextCertificate {
  std::string text;
};

using Certificate = std::variant<LinearCombination, WitnessPoint, NormalFormTrace, TextCertificate>;

struct VerdictReport {
  std::string claim_id;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool verdict = false;
  std::vector<Certificate> certificates;
  std::vector<std::string> notes;

  VerdictReport& param(std::string key, std::string value);
  VerdictReport& note(std::string text);
  /// Value of a parameter, empty when absent.
  std::string parameter(const std::string& key) const;
};

/// Rechecks a certificate by direct polynomial arithmetic and evaluation.
bool reverify(const Certificate& certificate);
bool reverify(const VerdictReport& report);

struct GenericityReport {
  struct Probe {
    std::string label;
    std::vector<long> coefficients;
    bool success = false;
  };

  std::vector<Monomial> support;
  std::string group;
  std::string property;
  std::string field;
  std::uint64_t seed = 0;
  long coeff_box = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  /// Failing coefficient vectors in trial order.
  std::vector<std::vector<long>> failures;
  std::vector<Probe> probes;
  std::vector<std::string> notes;
};

enum class ReportFormat { Human, Machine };

ReportFormat parse_report_format(std::string_view text);

std::string format_report(const VerdictReport& report, ReportFormat format);
std::string format_report(const GenericityReport& report, ReportFormat format);

}  // namespace symorb
