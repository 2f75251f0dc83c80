#include "symorb/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "symorb/combinatorics.hpp"
#include "symorb/errors.hpp"
#include "symorb/scenarios.hpp"

namespace symorb::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

struct Common {
  std::string field = "Q";
  std::size_t nvars = 0;
  std::string order = "grevlex";
  std::string format = "human";
  std::size_t budget = 1'000'000;
  double time_limit = 60.0;

  FieldSpec field_spec() const { return FieldSpec::parse(field); }
  MonomialOrder monomial_order() const { return parse_monomial_order(order); }
  ReportFormat report_format() const { return parse_report_format(format); }
  GroebnerOptions options() const {
    GroebnerOptions o;
    o.max_pairs = budget;
    o.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(time_limit));
    return o;
  }
};

void add_common(CLI::App* app, Common& c, bool nvars_alias_n) {
  app->add_option("--field", c.field, "coefficient field: Q or F<p>")->capture_default_str();
  if (nvars_alias_n) {
    app->add_option("--nvars,--n", c.nvars, "number of variables (default: group degree)");
  } else {
    app->add_option("--nvars", c.nvars, "number of variables (default: group degree)");
  }
  app->add_option("--order", c.order, "monomial order")
      ->check(CLI::IsMember({"lex", "grevlex"}))
      ->capture_default_str();
  app->add_option("--format", c.format, "report format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  app->add_option("--budget", c.budget, "maximal number of S-pairs")->capture_default_str();
  app->add_option("--time-limit", c.time_limit, "wall-clock budget in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int verdict_code(bool verdict) { return verdict ? kTrue : kFalse; }

int emit(std::ostream& out, const VerdictReport& report, const Common& c) {
  out << format_report(report, c.report_format());
  return verdict_code(report.verdict);
}

void emit_list(std::ostream& out, const Common& c, const std::string& schema,
               const std::vector<std::pair<std::string, std::string>>& header, const std::string& key,
               const std::vector<std::string>& items) {
  if (c.report_format() == ReportFormat::Machine) {
    out << "schema=" << schema << '\n';
    for (const auto& [k, v] : header) out << k << '=' << v << '\n';
    out << key << '=' << items.size() << '\n';
    for (std::size_t i = 0; i < items.size(); ++i) out << key << '.' << i << '=' << items[i] << '\n';
    return;
  }
  for (const auto& [k, v] : header) out << k << ": " << v << '\n';
  out << key << ": " << items.size() << '\n';
  for (const auto& item : items) out << "  " << item << '\n';
}

// ---------------------------------------------------------------------------

int cmd_orbit(std::ostream& out, const Common& c, const std::string& spec) {
  const auto ideal = parse_ideal_spec(spec, c.nvars, c.field_spec());
  std::vector<std::string> items;
  for (const auto& g : ideal.generators()) items.push_back(format_polynomial(g, c.monomial_order()));
  emit_list(out, c, "symorb.orbit/1",
            {{"ideal", ideal.descriptor()}, {"field", ideal.field().to_string()},
             {"group_order", std::to_string(ideal.group().order())}},
            "generators", items);
  return kTrue;
}

int cmd_gb(std::ostream& out, const Common& c, const std::string& spec) {
  const auto ideal = parse_ideal_spec(spec, c.nvars, c.field_spec());
  const auto basis = buchberger(ideal.generators(), c.monomial_order(), c.options());
  std::vector<std::string> items;
  for (const auto& g : basis.basis()) items.push_back(format_primitive(g, c.monomial_order()));
  emit_list(out, c, "symorb.gb/1",
            {{"ideal", ideal.descriptor()},
             {"field", ideal.field().to_string()},
             {"order", to_string(c.monomial_order())},
             {"pairs_reduced", std::to_string(basis.stats().pairs_reduced)}},
            "basis", items);
  return kTrue;
}

int cmd_member(std::ostream& out, const Common& c, const std::string& poly, const std::string& spec,
               const std::string& method) {
  const auto ideal = parse_ideal_spec(spec, c.nvars, c.field_spec());
  const auto f = parse_polynomial_arg(poly, ideal.nvars(), ideal.field());
  if (method == "graded") return emit(out, graded_member(f, ideal), c);

  GroebnerOptions opts = c.options();
  if (ideal.homogeneous() && f.is_homogeneous() && !f.is_zero()) opts.degree_bound = *f.total_degree();
  const auto basis = buchberger(ideal.generators(), c.monomial_order(), opts);
  auto division = divide(f, basis);
  VerdictReport report;
  report.claim_id = "ideal_member";
  report.param("field", ideal.field().to_string())
      .param("nvars", std::to_string(ideal.nvars()))
      .param("ideal", ideal.descriptor())
      .param("target", format_polynomial(f))
      .param("order", to_string(c.monomial_order()))
      .param("basis_size", std::to_string(basis.basis().size()));
  if (basis.degree_bound()) report.note("basis truncated at degree " + std::to_string(*basis.degree_bound()));
  report.verdict = division.remainder.is_zero();
  report.certificates.emplace_back(NormalFormTrace{"normal form", basis.order(), f, basis.basis(),
                                                   std::move(division.quotients),
                                                   std::move(division.remainder)});
  return emit(out, report, c);
}

int cmd_radical_member(std::ostream& out, const Common& c, const std::string& poly, const std::string& spec) {
  const auto ideal = parse_ideal_spec(spec, c.nvars, c.field_spec());
  const auto f = parse_polynomial_arg(poly, ideal.nvars(), ideal.field());
  const auto opts = c.options();
  VerdictReport report;
  report.claim_id = "radical_member";
  report.param("field", ideal.field().to_string())
      .param("nvars", std::to_string(ideal.nvars()))
      .param("ideal", ideal.descriptor())
      .param("target", format_polynomial(f));
  report.verdict = radical_member(f, ideal.generators(), opts);
  if (report.verdict) {
    if (auto cert = radical_power_certificate(f, ideal, 8, opts)) {
      report.param("power", std::to_string(cert->first));
      report.certificates.push_back(std::move(cert->second));
    } else {
      report.certificates.emplace_back(TextCertificate{"1 lies in (I, 1 - t*f) by a Groebner basis computation"});
    }
  } else if (auto w = witness_against(ideal, f)) {
    report.certificates.emplace_back(std::move(w->witness));
  } else {
    report.note("no witness point found in the search pool");
  }
  return emit(out, report, c);
}

struct VerifyArgs {
  std::string claim;
  std::string poly;
  std::string ideal;
  std::string other;
  std::string group;
  unsigned n = 0;
  unsigned d = 0;
  long a = -1;
  unsigned k = 0;
  std::size_t N = 0;
};

int cmd_verify(std::ostream& out, const Common& c, const VerifyArgs& v) {
  const FieldSpec field = c.field_spec();
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw DomainError("this claim needs " + what);
  };
  if (v.claim == "squarefree") {
    need(!v.poly.empty() && v.N > 0, "--poly and --N");
    const std::size_t nvars = c.nvars ? c.nvars : v.N;
    return emit(out, verify_squarefree_theorem(parse_polynomial_arg(v.poly, nvars, field), v.N, c.options()), c);
  }
  if (v.claim == "elimination") {
    need(v.n > 0 && v.d > 0, "--n and --d");
    return emit(out, verify_elimination_identity(v.n, v.d, field), c);
  }
  if (v.claim == "telescoping") {
    need(v.n > 0 && v.d > 0, "--n and --d");
    const std::size_t N = v.N ? v.N : v.n + v.d;
    const auto cert = telescoping_certificate(v.n, v.d, N, field);
    VerdictReport report;
    report.claim_id = "telescoping";
    report.param("n", std::to_string(v.n)).param("d", std::to_string(v.d)).param("N", std::to_string(N));
    report.param("f", format_polynomial(cert.product));
    for (std::size_t i = 1; i < cert.chain.size(); ++i) {
      report.param("f" + std::to_string(i), format_polynomial(cert.chain[i]));
    }
    report.verdict = verify_telescoping(cert, v.n, v.d);
    if (N <= 8) {
      const OrbitIdeal ideal({elementary_symmetric(N, v.n, v.d, field)}, PermGroup::symmetric(N));
      GroebnerOptions opts = c.options();
      opts.degree_bound = v.d;
      const auto basis = buchberger(ideal.generators(), MonomialOrder::GrevLex, opts);
      auto division = divide(cert.product, basis);
      report.verdict = report.verdict && division.remainder.is_zero();
      report.certificates.emplace_back(NormalFormTrace{"telescoping product", basis.order(), cert.product,
                                                       basis.basis(), std::move(division.quotients),
                                                       std::move(division.remainder)});
    }
    return emit(out, report, c);
  }
  if (v.claim == "radical-orbit") {
    need(!v.ideal.empty() && v.k > 0, "--ideal and --k");
    return emit(out, radical_orbit_equality(parse_ideal_spec(v.ideal, c.nvars, field), v.k, c.options()), c);
  }
  if (v.claim == "rank-condition") {
    need(!v.poly.empty() && !v.group.empty(), "--poly and --group");
    const auto group = PermGroup::parse(v.group, c.nvars);
    return emit(out, rank_condition(parse_polynomial_arg(v.poly, group.degree(), field), group), c);
  }
  if (v.claim == "ideal-equal") {
    need(!v.ideal.empty() && !v.other.empty(), "--ideal and --other");
    const auto lhs = parse_ideal_spec(v.ideal, c.nvars, field);
    const auto rhs = parse_ideal_spec(v.other, lhs.nvars(), field);
    return emit(out, ideal_equal(lhs, rhs, c.monomial_order(), c.options()), c);
  }
  if (v.claim == "witness") {
    need(!v.ideal.empty(), "--ideal");
    const auto ideal = parse_ideal_spec(v.ideal, c.nvars, field);
    VerdictReport report;
    report.claim_id = "monomial_free_witness";
    report.param("field", field.to_string()).param("ideal", ideal.descriptor());
    if (auto w = monomial_free_witness(ideal)) {
      report.verdict = true;
      report.param("stage", std::string(1, w->stage)).param("torus", w->torus ? "true" : "false");
      if (w->stage == 'b') report.param("e", std::to_string(w->e));
      report.certificates.emplace_back(std::move(w->witness));
    } else {
      report.note("none found; this is not a proof that no witness exists");
    }
    return emit(out, report, c);
  }
  if (v.claim == "lemma") {
    need(v.n > 0 && v.d > 0 && v.a >= 0, "--n, --d and --a");
    const Scalar value = lemma_identity_value(v.n, v.d, v.a);
    const Scalar expected =
        v.a == static_cast<long>(v.d) ? Scalar(FieldSpec::rationals(), binomial(v.n, v.d)) : Scalar::zero({});
    VerdictReport report;
    report.claim_id = "lemma_identity";
    report.param("n", std::to_string(v.n))
        .param("d", std::to_string(v.d))
        .param("a", std::to_string(v.a))
        .param("value", value.to_string())
        .param("expected", expected.to_string());
    report.verdict = value == expected;
    return emit(out, report, c);
  }
  throw DomainError("unknown claim '" + v.claim + "'");
}

struct SampleArgs {
  std::string support;
  std::string group;
  std::string property = "irrelevant_radical";
  unsigned k = 0;
  std::size_t trials = 20;
  long coeff_box = 9;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> probes;
};

int cmd_sample(std::ostream& out, const Common& c, const SampleArgs& s) {
  const FieldSpec field = c.field_spec();
  auto group = PermGroup::parse(s.group, c.nvars);
  if (c.nvars && group.degree() != c.nvars) throw DomainError("group degree differs from --nvars");
  const auto f = parse_polynomial_arg(s.support, group.degree(), field);
  GenericitySpec spec{.support = SupportSet::of(f), .group = std::move(group)};
  spec.field = field;
  spec.trials = s.trials;
  spec.coeff_box = s.coeff_box;
  spec.seed = s.seed;
  spec.options = c.options();
  if (s.property == "irrelevant_radical") {
    spec.property = GenericProperty::IrrelevantRadical;
  } else if (s.property == "monomial_ideal") {
    spec.property = GenericProperty::MonomialIdeal;
  } else {
    spec.property = GenericProperty::RadicalOrbit;
    spec.k = s.k ? s.k : static_cast<unsigned>(analyze_support(spec.support).k_min_positive);
  }
  for (const auto& p : s.probes) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw ParseError("probe must look like label=c1,c2,...", 0);
    std::vector<long> coeffs;
    for (const auto& part : split(std::string_view(p).substr(eq + 1), ',')) {
      try {
        std::size_t used = 0;
        coeffs.push_back(std::stol(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::logic_error&) {
        throw ParseError("bad probe coefficient '" + part + "'", eq + 1);
      }
    }
    spec.probes.emplace_back(p.substr(0, eq), std::move(coeffs));
  }
  const auto report = sample_genericity(spec);
  out << format_report(report, c.report_format());
  return kTrue;
}

int cmd_repro(std::ostream& out, const Common& c, const std::string& name, bool list, std::uint64_t seed) {
  if (list) {
    for (const auto& s : scenarios()) {
      out << s.name << (s.slow ? " [slow]" : "") << "  " << s.description << '\n';
    }
    return kTrue;
  }
  const Scenario* scenario = find_scenario(name);
  if (!scenario) throw DomainError("unknown scenario '" + name + "' (see repro --list)");
  ScenarioContext ctx{seed, c.options()};
  auto report = scenario->run(ctx);
  report.parameters.insert(report.parameters.begin(), {"scenario", scenario->name});
  report.note("expected outcome " + std::string(report.verdict ? "reproduced" : "NOT reproduced"));
  return emit(out, report, c);
}

}  // namespace

Polynomial parse_polynomial_arg(std::string_view text, std::size_t nvars, FieldSpec field) {
  const std::string t = trim(text);
  if (t.size() > 3 && t.starts_with("e(") && t.back() == ')') {
    const auto parts = split(std::string_view(t).substr(2, t.size() - 3), ',');
    if (parts.size() != 2) throw ParseError("e(n,d) needs two arguments", 2);
    std::size_t n = 0;
    unsigned d = 0;
    try {
      n = std::stoul(parts[0]);
      d = static_cast<unsigned>(std::stoul(parts[1]));
    } catch (const std::logic_error&) {
      throw ParseError("bad argument in '" + t + "'", 2);
    }
    if (n > nvars) throw DomainError("e(" + parts[0] + "," + parts[1] + ") needs at least " + parts[0] + " variables");
    return elementary_symmetric(nvars, n, d, field);
  }
  return parse_polynomial(t, nvars, field);
}

OrbitIdeal parse_ideal_spec(std::string_view spec, std::size_t nvars, FieldSpec field) {
  if (spec.starts_with("list:")) {
    if (nvars == 0) throw DomainError("list: ideals need --nvars");
    std::vector<Polynomial> seeds;
    for (const auto& p : split(spec.substr(5), ';')) seeds.push_back(parse_polynomial_arg(p, nvars, field));
    return OrbitIdeal(std::move(seeds), PermGroup::generated(nvars, {}));
  }
  if (!spec.starts_with("orbit:")) throw ParseError("ideal must start with 'orbit:' or 'list:'", 0);
  std::string_view rest = spec.substr(6);
  const std::size_t search_from = rest.starts_with("gens:") ? 5 : 0;
  const std::size_t colon = rest.find(':', search_from);
  if (colon == std::string_view::npos) throw ParseError("expected orbit:<group>:<polynomial>", spec.size());
  const auto group = PermGroup::parse(rest.substr(0, colon), nvars);
  if (nvars != 0 && group.degree() != nvars) {
    throw DomainError("group " + group.descriptor() + " has degree " + std::to_string(group.degree()) +
                      " but " + std::to_string(nvars) + " variables were requested");
  }
  std::vector<Polynomial> seeds;
  for (const auto& p : split(rest.substr(colon + 1), ';')) {
    seeds.push_back(parse_polynomial_arg(p, group.degree(), field));
  }
  return OrbitIdeal(std::move(seeds), group);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric orbit ideals: construction, membership and verification", "symorb"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expanded help");

  Common common;
  std::string poly;
  std::string ideal;
  std::string method = "groebner";

  auto* orbit_cmd = app.add_subcommand("orbit", "list the generators of an orbit ideal");
  add_common(orbit_cmd, common, true);
  orbit_cmd->add_option("--ideal", ideal, "ideal specification")->required();

  auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis");
  add_common(gb_cmd, common, true);
  gb_cmd->add_option("--ideal", ideal, "ideal specification")->required();

  auto* member_cmd = app.add_subcommand("member", "ideal membership");
  add_common(member_cmd, common, true);
  member_cmd->add_option("polynomial", poly, "target polynomial")->required();
  member_cmd->add_option("--ideal", ideal, "ideal specification")->required();
  member_cmd->add_option("--method", method, "decision procedure")
      ->check(CLI::IsMember({"groebner", "graded"}))
      ->capture_default_str();

  auto* radical_cmd = app.add_subcommand("radical-member", "radical membership");
  add_common(radical_cmd, common, true);
  radical_cmd->add_option("polynomial", poly, "target polynomial")->required();
  radical_cmd->add_option("--ideal", ideal, "ideal specification")->required();

  unsigned elim_n = 0;
  unsigned elim_d = 0;
  auto* elim_cmd = app.add_subcommand("eliminate", "elimination coefficients and identity");
  add_common(elim_cmd, common, false);
  elim_cmd->add_option("--n", elim_n, "number of variables of e_n^d")->required();
  elim_cmd->add_option("--d", elim_d, "degree of e_n^d")->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "verify one claim");
  add_common(verify_cmd, common, false);
  verify_cmd
      ->add_option("claim", verify.claim,
                   "squarefree | elimination | telescoping | radical-orbit | rank-condition | ideal-equal | "
                   "witness | lemma")
      ->required();
  verify_cmd->add_option("--poly", verify.poly, "polynomial argument");
  verify_cmd->add_option("--ideal", verify.ideal, "ideal specification");
  verify_cmd->add_option("--other", verify.other, "second ideal specification");
  verify_cmd->add_option("--group", verify.group, "S<N>, C<N> or gens:<cycles>");
  verify_cmd->add_option("--n", verify.n, "n");
  verify_cmd->add_option("--d", verify.d, "d");
  verify_cmd->add_option("--a", verify.a, "a");
  verify_cmd->add_option("--k", verify.k, "k");
  verify_cmd->add_option("--N", verify.N, "ambient number of variables");

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample-genericity", "sample random coefficients on a support");
  add_common(sample_cmd, common, true);
  sample_cmd->add_option("--support", sample.support, "polynomial whose support is sampled")->required();
  sample_cmd->add_option("--group", sample.group, "S<N>, C<N> or gens:<cycles>")->required();
  sample_cmd->add_option("--property", sample.property, "property to test")
      ->check(CLI::IsMember({"irrelevant_radical", "monomial_ideal", "radical_orbit"}))
      ->capture_default_str();
  sample_cmd->add_option("--k", sample.k, "k for radical_orbit (default: from the support)");
  sample_cmd->add_option("--trials", sample.trials, "number of random trials")->capture_default_str();
  sample_cmd->add_option("--coeff-box", sample.coeff_box, "coefficients drawn from [-B,B] \\ {0}")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sample_cmd->add_option("--seed", sample.seed, "random seed")->capture_default_str();
  sample_cmd->add_option("--probe", sample.probes, "deterministic vector label=c1,c2,...");

  std::string scenario;
  bool list = false;
  std::uint64_t repro_seed = kDefaultSeed;
  auto* repro_cmd = app.add_subcommand("repro", "run a pinned scenario");
  add_common(repro_cmd, common, false);
  repro_cmd->add_option("scenario", scenario, "scenario name");
  repro_cmd->add_flag("--list", list, "list the scenarios");
  repro_cmd->add_option("--seed", repro_seed, "random seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "symorb: " << e.what() << '\n';
    return kUsage;
  }
  if (repro_cmd->parsed() && !list && scenario.empty()) {
    err << "symorb: repro needs a scenario name or --list\n";
    return kUsage;
  }

  try {
    if (orbit_cmd->parsed()) return cmd_orbit(out, common, ideal);
    if (gb_cmd->parsed()) return cmd_gb(out, common, ideal);
    if (member_cmd->parsed()) return cmd_member(out, common, poly, ideal, method);
    if (radical_cmd->parsed()) return cmd_radical_member(out, common, poly, ideal);
    if (elim_cmd->parsed()) return emit(out, verify_elimination_identity(elim_n, elim_d, common.field_spec()), common);
    if (verify_cmd->parsed()) return cmd_verify(out, common, verify);
    if (sample_cmd->parsed()) return cmd_sample(out, common, sample);
    if (repro_cmd->parsed()) return cmd_repro(out, common, scenario, list, repro_seed);
  } catch (const BudgetExceeded& e) {
    err << "symorb: budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const ParseError& e) {
    err << "symorb: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "symorb: error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "symorb: internal error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace symorb::cli
