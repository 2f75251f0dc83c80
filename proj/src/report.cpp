#include "symorb/report.hpp"

#include <sstream>

#include "symorb/errors.hpp"

namespace symorb {

VerdictReport& VerdictReport::param(std::string key, std::string value) {
  parameters.emplace_back(std::move(key), std::move(value));
  return *this;
}

VerdictReport& VerdictReport::note(std::string text) {
  notes.push_back(std::move(text));
  return *this;
}

std::string VerdictReport::parameter(const std::string& key) const {
  for (const auto& [k, v] : parameters) {
    if (k == key) return v;
  }
  return {};
}

namespace {

bool reverify_one(const LinearCombination& c) {
  Polynomial sum(c.target.field(), c.target.nvars());
  for (const auto& e : c.entries) sum += e.generator.mul_term(e.multiplier, e.coefficient);
  return sum == c.target;
}

bool reverify_one(const WitnessPoint& w) {
  if (w.point.empty()) return false;
  bool nonzero = false;
  for (const auto& s : w.point) nonzero = nonzero || !s.is_zero();
  if (!nonzero) return false;
  for (const auto& g : w.generators) {
    if (!evaluate(g, w.point).is_zero()) return false;
  }
  for (const auto& g : w.nonvanishing) {
    if (evaluate(g, w.point).is_zero()) return false;
  }
  return true;
}

bool reverify_one(const NormalFormTrace& t) {
  if (t.basis.size() != t.quotients.size()) return false;
  Polynomial sum = t.remainder;
  std::vector<Monomial> leads;
  for (std::size_t i = 0; i < t.basis.size(); ++i) {
    sum += t.quotients[i] * t.basis[i];
    if (t.basis[i].is_zero()) return false;
    const auto terms = t.basis[i].terms();
    Monomial lead = terms[0].monomial;
    for (const auto& term : terms) {
      if (compare(t.order, term.monomial, lead) > 0) lead = term.monomial;
    }
    leads.push_back(lead);
  }
  if (!(sum == t.element)) return false;
  for (const auto& term : t.remainder.terms()) {
    for (const auto& l : leads) {
      if (l.divides(term.monomial)) return false;
    }
  }
  return true;
}

bool reverify_one(const TextCertificate&) { return true; }

std::string join_point(const std::vector<Scalar>& point) {
  std::string out;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ',';
    out += point[i].to_string();
  }
  return out;
}

std::string join_longs(const std::vector<long>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string kind_name(const Certificate& c) {
  switch (c.index()) {
    case 0: return "linear_combination";
    case 1: return "witness";
    case 2: return "normal_form_trace";
    default: return "text";
  }
}

void human_certificate(std::ostream& os, const Certificate& cert) {
  if (const auto* c = std::get_if<LinearCombination>(&cert)) {
    os << "  target: " << format_polynomial(c->target) << '\n';
    for (const auto& e : c->entries) {
      os << "    + (" << e.coefficient.to_string() << ") * " << e.multiplier.to_string() << " * ("
         << format_polynomial(e.generator) << ")\n";
    }
  } else if (const auto* w = std::get_if<WitnessPoint>(&cert)) {
    os << "  point: (" << join_point(w->point) << ")\n";
    if (!w->description.empty()) os << "  " << w->description << '\n';
    os << "  vanishes on " << w->generators.size() << " generator(s)\n";
    for (const auto& g : w->nonvanishing) os << "  nonzero at point: " << format_polynomial(g) << '\n';
  } else if (const auto* t = std::get_if<NormalFormTrace>(&cert)) {
    os << "  " << t->label << '\n';
    os << "  element: " << format_polynomial(t->element, t->order) << '\n';
    os << "  basis size " << t->basis.size() << " (" << to_string(t->order) << ")\n";
    os << "  remainder: " << format_polynomial(t->remainder, t->order) << '\n';
  } else {
    os << "  " << std::get<TextCertificate>(cert).text << '\n';
  }
}

void machine_certificate(std::ostream& os, const std::string& prefix, const Certificate& cert) {
  os << prefix << "kind=" << kind_name(cert) << '\n';
  if (const auto* c = std::get_if<LinearCombination>(&cert)) {
    os << prefix << "target=" << format_polynomial(c->target) << '\n';
    os << prefix << "entries=" << c->entries.size() << '\n';
    for (std::size_t i = 0; i < c->entries.size(); ++i) {
      const auto& e = c->entries[i];
      os << prefix << "entry." << i << '=' << e.coefficient.to_string() << ';' << e.multiplier.to_string()
         << ';' << format_polynomial(e.generator) << '\n';
    }
  } else if (const auto* w = std::get_if<WitnessPoint>(&cert)) {
    os << prefix << "point=" << join_point(w->point) << '\n';
    os << prefix << "description=" << w->description << '\n';
    os << prefix << "generators=" << w->generators.size() << '\n';
    for (std::size_t i = 0; i < w->nonvanishing.size(); ++i) {
      os << prefix << "nonvanishing." << i << '=' << format_polynomial(w->nonvanishing[i]) << '\n';
    }
  } else if (const auto* t = std::get_if<NormalFormTrace>(&cert)) {
    os << prefix << "label=" << t->label << '\n';
    os << prefix << "order=" << to_string(t->order) << '\n';
    os << prefix << "element=" << format_polynomial(t->element, t->order) << '\n';
    os << prefix << "basis=" << t->basis.size() << '\n';
    for (std::size_t i = 0; i < t->basis.size(); ++i) {
      os << prefix << "basis." << i << '=' << format_polynomial(t->basis[i], t->order) << '\n';
      os << prefix << "quotient." << i << '=' << format_polynomial(t->quotients[i], t->order) << '\n';
    }
    os << prefix << "remainder=" << format_polynomial(t->remainder, t->order) << '\n';
  } else {
    os << prefix << "text=" << std::get<TextCertificate>(cert).text << '\n';
  }
}

}  // namespace

bool reverify(const Certificate& certificate) {
  return std::visit([](const auto& c) { return reverify_one(c); }, certificate);
}

bool reverify(const VerdictReport& report) {
  for (const auto& c : report.certificates) {
    if (!reverify(c)) return false;
  }
  return true;
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "human") return ReportFormat::Human;
  if (text == "machine") return ReportFormat::Machine;
  throw ParseError("unknown report format '" + std::string(text) + "'", 0);
}

std::string format_report(const VerdictReport& report, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Human) {
    os << "claim: " << report.claim_id << '\n';
    for (const auto& [k, v] : report.parameters) os << "  " << k << " = " << v << '\n';
    os << "verdict: " << (report.verdict ? "true" : "false") << '\n';
    for (std::size_t i = 0; i < report.certificates.size(); ++i) {
      os << "certificate " << i + 1 << " (" << kind_name(report.certificates[i]) << "):\n";
      human_certificate(os, report.certificates[i]);
    }
    for (const auto& n : report.notes) os << "note: " << n << '\n';
    return os.str();
  }
  os << "schema=symorb.verdict/1\n";
  os << "claim=" << report.claim_id << '\n';
  for (const auto& [k, v] : report.parameters) os << "param." << k << '=' << v << '\n';
  os << "verdict=" << (report.verdict ? "true" : "false") << '\n';
  os << "certificates=" << report.certificates.size() << '\n';
  for (std::size_t i = 0; i < report.certificates.size(); ++i) {
    machine_certificate(os, "certificate." + std::to_string(i) + '.', report.certificates[i]);
  }
  os << "notes=" << report.notes.size() << '\n';
  for (std::size_t i = 0; i < report.notes.size(); ++i) os << "note." << i << '=' << report.notes[i] << '\n';
  return os.str();
}

std::string format_report(const GenericityReport& report, ReportFormat format) {
  std::ostringstream os;
  std::string support;
  for (std::size_t i = 0; i < report.support.size(); ++i) {
    if (i) support += format == ReportFormat::Human ? ", " : ";";
    support += report.support[i].to_string();
  }
  if (format == ReportFormat::Human) {
    os << "genericity: " << report.property << '\n';
    os << "  support = {" << support << "}\n";
    os << "  group = " << report.group << '\n';
    os << "  field = " << report.field << '\n';
    os << "  seed = " << report.seed << '\n';
    os << "  coefficient box = [-" << report.coeff_box << ", " << report.coeff_box << "] \\ {0}\n";
    os << "successes: " << report.successes << " / " << report.trials << '\n';
    for (const auto& f : report.failures) os << "failure: (" << join_longs(f) << ")\n";
    for (const auto& p : report.probes) {
      os << "probe " << p.label << " (" << join_longs(p.coefficients) << "): "
         << (p.success ? "success" : "failure") << '\n';
    }
    for (const auto& n : report.notes) os << "note: " << n << '\n';
    return os.str();
  }
  os << "schema=symorb.genericity/1\n";
  os << "property=" << report.property << '\n';
  os << "support=" << support << '\n';
  os << "group=" << report.group << '\n';
  os << "field=" << report.field << '\n';
  os << "seed=" << report.seed << '\n';
  os << "coeff_box=" << report.coeff_box << '\n';
  os << "trials=" << report.trials << '\n';
  os << "successes=" << report.successes << '\n';
  os << "failures=" << report.failures.size() << '\n';
  for (std::size_t i = 0; i < report.failures.size(); ++i) {
    os << "failure." << i << '=' << join_longs(report.failures[i]) << '\n';
  }
  os << "probes=" << report.probes.size() << '\n';
  for (std::size_t i = 0; i < report.probes.size(); ++i) {
    const auto& p = report.probes[i];
    os << "probe." << i << ".label=" << p.label << '\n';
    os << "probe." << i << ".coefficients=" << join_longs(p.coefficients) << '\n';
    os << "probe." << i << ".success=" << (p.success ? "true" : "false") << '\n';
  }
  os << "notes=" << report.notes.size() << '\n';
  for (std::size_t i = 0; i < report.notes.size(); ++i) os << "note." << i << '=' << report.notes[i] << '\n';
  return os.str();
}

}  // namespace symorb
