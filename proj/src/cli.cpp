#include "splitqm/cli.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "splitqm/acceptance.hpp"
#include "splitqm/automorphisms.hpp"
#include "splitqm/config.hpp"
#include "splitqm/counting.hpp"
#include "splitqm/errors.hpp"

namespace splitqm {

namespace {

using Report = nlohmann::ordered_json;

struct CommonOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<std::size_t> depth;
  std::string format = "table";
};

// Loaded configuration plus the command-line overrides.
struct Context {
  Config config;
  bool has_config = false;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t depth = 0;

  WordSampler sampler(std::string_view name) const {
    return WordSampler(config.splitting, config.sampler.length, config.sampler.exponent, child_seed(seed, name));
  }
};

Context make_context(const CommonOptions& o, bool config_required) {
  Context c;
  if (!o.config.empty()) {
    c.config = load_config(o.config);
    c.has_config = true;
  } else if (config_required) {
    throw CLI::RequiredError("--config");
  }
  c.seed = o.seed.value_or(c.config.seed);
  c.samples = o.samples.value_or(c.config.sampler.samples);
  c.depth = o.depth.value_or(c.config.sampler.depth);
  return c;
}

std::string num(double x) { return fmt::format("{:.12g}", x); }

std::string scalar_text(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + scalar_text(x);
    return s;
  }
  return v.dump();
}

void flatten(const Report& doc, const std::string& prefix, std::vector<std::pair<std::string, const Report*>>& rows) {
  for (const auto& [key, value] : doc.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, name, rows);
    } else {
      rows.emplace_back(name, &value);
    }
  }
}

bool is_table(const Report& v) { return v.is_array() && !v.empty() && v.front().is_object(); }

void print_table(const std::string& name, const Report& rows, std::ostream& out) {
  std::vector<std::string> columns;
  for (const auto& [key, value] : rows.front().items()) columns.push_back(key);
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      line.push_back(row.contains(columns[i]) ? scalar_text(row[columns[i]]) : "-");
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  out << name << ":\n";
  auto emit_line = [&](const std::vector<std::string>& line) {
    std::string text = " ";
    for (std::size_t i = 0; i < line.size(); ++i) text += " " + fmt::format("{:<{}}", line[i], width[i]);
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << "\n";
  };
  emit_line(columns);
  for (const auto& line : cells) emit_line(line);
}

void emit(const Report& doc, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << doc.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, const Report*>> rows;
  flatten(doc, "", rows);
  std::size_t key_width = 0;
  for (const auto& [key, value] : rows) {
    if (!is_table(*value)) key_width = std::max(key_width, key.size());
  }
  for (const auto& [key, value] : rows) {
    if (is_table(*value)) {
      print_table(key, *value, out);
    } else {
      out << fmt::format("{:<{}}  {}\n", key + ":", key_width + 1, scalar_text(*value));
    }
  }
}

template <class Map>
const typename Map::mapped_type& pick(const Map& named, const std::string& name, const std::string& section) {
  if (name.empty()) {
    if (named.size() == 1) return named.begin()->second;
    std::string names;
    for (const auto& [key, value] : named) names += (names.empty() ? "" : ", ") + key;
    throw ConfigError("/" + section, named.empty() ? "no entries" : "several entries (" + names + "); choose one by name");
  }
  const auto it = named.find(name);
  if (it == named.end()) throw ConfigError("/" + section + "/" + name, "no such entry");
  return it->second;
}

std::vector<Word> parse_words(const Splitting& s, const std::vector<std::string>& texts) {
  std::vector<Word> words;
  for (const auto& t : texts) words.push_back(parse_word(s, t));
  return words;
}

// Command results: the report and whether an identity failed.
struct Outcome {
  Report report = Report::object();
  bool violation = false;
};

Outcome cmd_eval(const Context& c, const std::string& qm, const std::string& word_text) {
  const SplitQM& f = pick(c.config.quasimorphisms, qm, "quasimorphisms");
  const Word g = parse_words(f.splitting(), {word_text}).front();
  Outcome o;
  o.report["word"] = format_word(f.splitting(), g);
  o.report["value"] = to_string(eval_split(f, g));
  return o;
}

Report defect_report(const SplitQM& f, WordSampler& sampler, std::size_t samples, std::size_t junctions,
                     bool& violation) {
  Report r = Report::object();
  const Splitting& s = f.splitting();
  const SplitDefect d = split_defect_detail(f);
  const Rational sampled = sampled_defect_with_junctions(f, sampler, samples, junctions);
  const GromovNormReport g = gromov_norm(f);
  r["splitting"] = s.name();
  r["factor_defect_A"] = to_string(d.on_a.value);
  r["factor_defect_B"] = to_string(d.on_b.value);
  r["split_defect"] = to_string(d.value);
  r["sampled_defect"] = to_string(sampled);
  r["sampled_pairs"] = samples + (d.value > 0 ? junctions : 0);
  r["gromov_norm"] = to_string(g.value);
  if (g.witness) {
    r["witness_g"] = format_word(s, g.witness->g);
    r["witness_h"] = format_word(s, g.witness->h);
    r["witness_gap"] = to_string(g.witness->gap);
  }
  const bool sample_ok = sampled <= d.value && (junctions == 0 || sampled == d.value);
  const bool norm_ok = g.value == d.value && (d.value == 0 || (g.witness && g.witness->gap == 2 * d.value));
  violation = violation || !sample_ok || !norm_ok;
  r["status"] = sample_ok && norm_ok ? "ok" : "violation";
  return r;
}

Outcome cmd_defect(const Context& c, const std::string& qm) {
  const SplitQM& f = pick(c.config.quasimorphisms, qm, "quasimorphisms");
  WordSampler sampler = c.sampler("defect");
  Outcome o;
  o.report = defect_report(f, sampler, c.samples, c.config.sampler.junctions, o.violation);
  return o;
}

Outcome cmd_homogenize(const Context& c, const std::string& qm, const std::vector<std::string>& texts) {
  const SplitQM& f = pick(c.config.quasimorphisms, qm, "quasimorphisms");
  const Splitting& s = f.splitting();
  WordSampler sampler = c.sampler("homogenize");
  const bool listed = !texts.empty();
  std::vector<Word> words = parse_words(s, texts);
  if (!listed) {
    for (std::size_t i = 0; i < c.samples; ++i) words.push_back(sampler.next());
  }
  Outcome o;
  Report rows = Report::array();
  std::size_t checks = 0;
  for (const Word& g : words) {
    const Rational hg = homogenize_eval(f, g);
    bool ok = true;
    for (int n = -4; n <= 4; ++n, ++checks) ok = ok && homogenize_eval(f, power(s, g, n)) == n * hg;
    for (int i = 0; i < 10; ++i, ++checks) ok = ok && homogenize_eval(f, conjugate(s, sampler.next(), g)) == hg;
    o.violation = o.violation || !ok;
    if (listed || !ok) {
      Report row = Report::object();
      row["word"] = format_word(s, g);
      row["f"] = to_string(eval_split(f, g));
      row["homogenized"] = to_string(hg);
      row["identities"] = ok ? "ok" : "violation";
      rows.push_back(row);
    }
  }
  o.report["words"] = words.size();
  o.report["identities_checked"] = checks;
  if (!rows.empty()) o.report["values"] = rows;
  o.report["status"] = o.violation ? "violation" : "ok";
  return o;
}

Outcome cmd_decompose(const Context& c, const std::string& qm, const std::vector<std::string>& texts) {
  const SplitQM& f = pick(c.config.quasimorphisms, qm, "quasimorphisms");
  const Splitting& s = f.splitting();
  const bool listed = !texts.empty();
  std::vector<Word> words = parse_words(s, texts);
  if (!listed) {
    WordSampler sampler = c.sampler("decompose");
    for (std::size_t i = 0; i < c.samples; ++i) words.push_back(sampler.next());
  }
  Outcome o;
  Report rows = Report::array();
  for (const Word& g : words) {
    const Rational counted = counting_combination(f, g);
    const Rational boundary = boundary_terms(f, g);
    const Rational residual = counted - (eval_split(f, g) - boundary);
    o.violation = o.violation || residual != 0;
    if (listed || residual != 0) {
      Report row = Report::object();
      row["word"] = format_word(s, g);
      row["f"] = to_string(eval_split(f, g));
      row["counting"] = to_string(counted);
      row["boundary"] = to_string(boundary);
      row["residual"] = to_string(residual);
      rows.push_back(row);
    }
  }
  o.report["words"] = words.size();
  if (!rows.empty()) o.report["terms"] = rows;
  o.report["status"] = o.violation ? "violation" : "ok";
  return o;
}

Outcome cmd_tau_check(const Context& c, const std::string& qm, std::int64_t n, std::size_t length,
                      std::int64_t exponent) {
  const SplitQM& f = pick(c.config.quasimorphisms, qm, "quasimorphisms");
  if (n == 0) throw std::invalid_argument("n must be non-zero");
  const auto words = all_words(f.splitting(), length, exponent);
  const FixedPointReport r = check_fixed_point(f, n, words);
  Outcome o;
  o.report["n"] = n;
  o.report["factor_A_periodic"] = r.factor_a_periodic;
  o.report["factor_B_zero"] = r.factor_b_zero;
  o.report["fixed"] = r.condition_holds();
  o.report["words_verified"] = r.verified;
  o.report["commutator_deviation"] = to_string(r.commutator_deviation);
  if (r.witness) {
    const ViolationWitness& w = *r.witness;
    o.report["witness_word"] = format_word(f.splitting(), w.word);
    o.report["forced_b"] = to_string(w.forced_b);
    o.report["excess"] = to_string(w.excess);
    Report growth = Report::array();
    for (std::size_t l = 0; l < w.raw_growth.size(); ++l) {
      growth.push_back({{"l", l + 1}, {"deviation", to_string(w.raw_growth[l])}, {"excess", to_string(w.excess_growth[l])}});
    }
    o.report["growth"] = growth;
  }
  return o;
}

Vector default_vector(const ModuleAction& m) {
  if (m.is_regular()) return Vector::indicator(Word{});
  Vector::Dense e(m.finite().dim, Rational(0));
  if (!e.empty()) e[0] = 1;
  return Vector::dense(std::move(e));
}

Report growth_rows(const WitnessReport& w) {
  Report rows = Report::array();
  for (std::size_t n = 0; n < w.norms.size(); ++n) {
    rows.push_back({{"n", n}, {"norm", num(w.norms[n])}, {"expected", num(w.expected_norms[n])}});
  }
  return rows;
}

Outcome cmd_qc_growth(const Context& c, std::int64_t prime, std::int64_t other, std::int64_t steps, bool literal) {
  if (!c.config.action) throw ConfigError("/action", "missing; qc-growth needs an action");
  const ModuleAction& m = *c.config.action;
  const Vector v = c.config.vector ? *c.config.vector : default_vector(m);
  const WitnessReport pp = prime_power_witness(m, prime, other, v, steps,
                                               literal ? PrefixConvention::BThenWord : PrefixConvention::WordThenB);
  const WitnessReport st =
      staircase_witness(m, v, steps, literal ? PrefixConvention::WordOnly : PrefixConvention::WordThenB);
  Outcome o;
  o.report["convention"] = literal ? "literal" : "prefix-inverse";
  o.report["norm_p"] = num(m.designated_p());
  o.report["prime_power_growth"] = pp.growth_holds;
  o.report["other_prime_vanishes"] = pp.other_prime_vanishes;
  o.report["prime_power"] = growth_rows(pp);
  o.report["staircase_growth"] = st.growth_holds;
  o.report["staircase"] = growth_rows(st);
  Report defects = Report::array();
  for (const auto& [name, f] : c.config.cocycles) {
    const QCDefect d = split_qc_defect(f, m.designated_p());
    defects.push_back({{"cocycle", name}, {"defect", d.exact ? to_string(*d.exact) : num(d.value)}});
  }
  if (!defects.empty()) o.report["cocycle_defects"] = defects;
  o.violation = !pp.holds() || !st.growth_holds;
  o.report["status"] = o.violation ? "violation" : "ok";
  return o;
}

Outcome cmd_defect_space(const Context& c) {
  DefectSpaceSettings settings;
  if (c.config.defect_space) {
    settings = *c.config.defect_space;
  } else {
    for (int k = -2; k <= 2; ++k) settings.values.emplace_back(k, 2);
  }
  if (settings.carriers.empty() && settings.sequences.empty()) {
    for (std::int64_t n = 2; n <= 8; ++n) settings.carriers.push_back(n);
    settings.sequences = {{3, 6}, {3, 12}};
  }
  Outcome o;
  Report carriers = Report::array();
  for (std::int64_t n : settings.carriers) {
    const auto vectors = all_alternating_vectors(FactorDescriptor::cyclic(n), settings.values);
    bool bound = true, sandwich = true;
    Rational largest = 0;
    for (const auto& f : vectors) {
      bound = bound && order_bound_check(f).holds;
      sandwich = sandwich && norm_equivalence_holds(f);
      largest = std::max(largest, defect_norm(f));
    }
    const bool zero_space = n != 2 || (vectors.size() == 1 && vectors.front().is_zero());
    o.violation = o.violation || !bound || !sandwich || !zero_space;
    Report row = {{"carrier", fmt::format("Z/{}", n)}, {"vectors", vectors.size()}, {"max_norm", to_string(largest)},
                  {"order_bound", bound}, {"sandwich", sandwich}};
    if (n == 2) row["zero_space"] = zero_space;
    carriers.push_back(row);
  }
  if (!carriers.empty()) o.report["carriers"] = carriers;
  Report sequences = Report::array();
  for (const auto& [k, n] : settings.sequences) {
    const std::int64_t q = n / k;
    const ShortExactSequence ses{cyclic_hom(k, n, q), cyclic_hom(n, q, 1)};
    validate(ses);
    const auto on_kernel = all_alternating_vectors(FactorDescriptor::cyclic(k), settings.values);
    const auto on_quotient = all_alternating_vectors(FactorDescriptor::cyclic(q), settings.values);
    bool subgroup = true, pullback = true, joint = true;
    for (const auto& f : on_kernel) {
      subgroup = subgroup && defect_norm(embed_subgroup(f, ses.inclusion)) == defect_norm(f);
      for (const auto& g : on_quotient) {
        joint = joint && defect_norm(ses_embed(f, g, ses)) == std::max(defect_norm(f), defect_norm(g));
      }
    }
    for (const auto& g : on_quotient) pullback = pullback && defect_norm(pullback_quotient(g, ses.projection)) == defect_norm(g);
    o.violation = o.violation || !subgroup || !pullback || !joint;
    sequences.push_back({{"sequence", fmt::format("Z/{} -> Z/{} -> Z/{}", k, n, q)},
                         {"subgroup", subgroup},
                         {"pullback", pullback},
                         {"joint", joint}});
  }
  if (!sequences.empty()) o.report["isometries"] = sequences;
  o.report["status"] = o.violation ? "violation" : "ok";
  return o;
}

std::string defect_text(const QRDefect& d) { return d.exact ? to_string(*d.exact) : num(d.value); }

FactorHom sample_hom(const MetricGroup& target, const FactorDescriptor& d, std::mt19937_64& rng) {
  if (d.kind() == FactorKind::FiniteTable) {
    throw std::invalid_argument("sampling representations needs Z or Z/n factors");
  }
  const std::int64_t order = d.kind() == FactorKind::Cyclic ? d.modulus() : 0;
  if (target.kind() == MetricKind::Circle) {
    if (order > 0) return {circle_element(Rational(std::uniform_int_distribution<std::int64_t>(0, order - 1)(rng), order)), {}};
    return {circle_element(Rational(std::uniform_int_distribution<std::int64_t>(0, (1 << 16) - 1)(rng), 1 << 16)), {}};
  }
  const std::size_t n = target.dimension();
  FactorHom hom;
  if (order > 0) {
    // Conjugate of a diagonal matrix of order-th roots of unity.
    std::uniform_int_distribution<std::int64_t> root(0, order - 1);
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      diag(i, i) = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(root(rng)) / static_cast<double>(order));
    }
    const Eigen::MatrixXcd u = unitary_exp(random_hermitian(n, std::numbers::pi, rng));
    // Member products: a bare * here also sees the Rational overloads.
    const Eigen::MatrixXcd conjugated = u.lazyProduct(diag).eval().lazyProduct(u.adjoint());
    hom.generator.emplace(unitary_element(reproject_unitary(conjugated)));
    return hom;
  }
  const Eigen::MatrixXcd random = unitary_exp(random_hermitian(n, std::numbers::pi, rng));
  hom.generator.emplace(unitary_element(random));
  return hom;
}

Outcome cmd_qrep(const Context& c, const std::string& name) {
  const SplitQRep& mu = pick(c.config.quasirepresentations, name, "quasirepresentations");
  const MetricGroup& target = mu.target();
  const Splitting& s = mu.splitting();
  const SplitQRDefect d = qrep_defect(mu);
  WordSampler sampler = c.sampler("qrep");
  const double sampled = qrep_sampled_defect(mu, sampler, c.samples, c.config.sampler.junctions);
  Outcome o;
  o.report["target"] = target.name();
  o.report["factor_defect_A"] = defect_text(d.on_a);
  o.report["factor_defect_B"] = defect_text(d.on_b);
  o.report["split_defect"] = defect_text(d.value);
  o.report["sampled_defect"] = num(sampled);
  const double sup_a = sup_norm_qrep(target, s.a(), mu.factor(Side::A));
  const double sup_b = sup_norm_qrep(target, s.b(), mu.factor(Side::B));
  o.report["sup_norm_A"] = num(sup_a);
  o.report["sup_norm_B"] = num(sup_b);
  o.violation = sampled > d.value.value + kMetricTolerance;
  if (c.config.epsilon) {
    const double eps = *c.config.epsilon;
    const SmallSubgroupReport small = check_no_small_subgroups(target, eps, 64, 200, child_seed(c.seed, "qrep-small"));
    o.report["epsilon"] = num(eps);
    o.report["no_small_subgroups"] = small.passes;
    if (small.violation) o.report["small_subgroup_generator"] = target.format(*small.violation);
    if (std::max(sup_a, sup_b) > eps / 2 + kMetricTolerance) {
      o.report["witness_search"] = "not applicable: sup norm exceeds epsilon / 2";
    } else {
      std::vector<Representation> reps;
      if (target.kind() == MetricKind::Finite) {
        reps = enumerate_representations(s, target);
      } else {
        std::mt19937_64 rng(child_seed(c.seed, "qrep-representations"));
        const std::size_t count = std::min<std::size_t>(c.samples, 1000);
        for (std::size_t i = 0; i < count; ++i) reps.push_back({sample_hom(target, s.a(), rng), sample_hom(target, s.b(), rng)});
      }
      std::size_t found = 0, vacuous = 0, exhausted = 0;
      for (const auto& rho : reps) {
        switch (nontriviality_witness(mu, rho, eps, c.depth).status) {
          case WitnessStatus::Found: ++found; break;
          case WitnessStatus::Vacuous: ++vacuous; break;
          case WitnessStatus::Exhausted: ++exhausted; break;
        }
      }
      o.report["representations"] = reps.size();
      o.report["witness_found"] = found;
      o.report["witness_vacuous"] = vacuous;
      o.report["witness_exhausted"] = exhausted;
    }
  }
  o.report["status"] = o.violation ? "violation" : "ok";
  return o;
}

Outcome cmd_rademacher(const Context& c, const std::vector<std::string>& texts) {
  const SplitQM f = rademacher();
  WordSampler sampler(f.splitting(), 6, 3, child_seed(c.seed, "rademacher"));
  Outcome o;
  o.report = defect_report(f, sampler, c.samples, c.config.sampler.junctions, o.violation);
  o.report["trivial"] = is_trivial(f);
  if (!texts.empty()) {
    Report rows = Report::array();
    for (const Word& g : parse_words(f.splitting(), texts)) {
      rows.push_back({{"word", format_word(f.splitting(), g)},
                      {"f", to_string(eval_split(f, g))},
                      {"homogenized", to_string(homogenize_eval(f, g))}});
    }
    o.report["values"] = rows;
  }
  return o;
}

// Config-dependent checks of selftest: sampled defects against exact ones.
std::vector<CriterionResult> config_checks(const Context& c) {
  std::vector<CriterionResult> out;
  int id = 14;
  for (const auto& [name, f] : c.config.quasimorphisms) {
    CriterionResult r{id++, "config quasimorphism " + name, false, {}, 0};
    WordSampler sampler = c.sampler("selftest-" + name);
    const Rational exact = split_defect(f);
    const Rational sampled = sampled_defect_with_junctions(f, sampler, c.samples, c.config.sampler.junctions);
    r.passed = sampled == exact;
    r.detail = fmt::format("sampled {} vs exact {}", to_string(sampled), to_string(exact));
    out.push_back(r);
  }
  for (const auto& [name, mu] : c.config.quasirepresentations) {
    CriterionResult r{id++, "config quasi-representation " + name, false, {}, 0};
    WordSampler sampler = c.sampler("selftest-" + name);
    const double exact = qrep_defect(mu).value.value;
    const double sampled = qrep_sampled_defect(mu, sampler, c.samples, c.config.sampler.junctions);
    r.passed = std::abs(sampled - exact) <= kMetricTolerance;
    r.detail = fmt::format("sampled {} vs exact {}", num(sampled), num(exact));
    out.push_back(r);
  }
  return out;
}

int cmd_selftest(const CommonOptions& opts, bool corrupt, bool timings, std::ostream& out) {
  Context c = make_context(opts, false);
  AcceptanceOptions options;
  options.corrupt_convention = corrupt;
  if (opts.seed) options.seed = *opts.seed;
  bool all = true;
  Report results = Report::array();
  auto show = [&](const CriterionResult& r) {
    all = all && r.passed;
    if (opts.format == "json") {
      Report row = {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}};
      if (timings) row["seconds"] = num(r.seconds);
      results.push_back(row);
    } else {
      out << format_result(r, timings) << std::endl;
    }
  };
  run_acceptance(options, show);
  if (c.has_config) {
    for (const auto& r : config_checks(c)) show(r);
  } else if (opts.format == "json") {
    results.push_back({{"id", nullptr}, {"title", "config checks"}, {"skipped", true}, {"detail", "no --config"}});
  } else {
    out << "SKIP     config checks (no --config)\n";
  }
  if (opts.format == "json") out << results.dump(2) << "\n";
  return all ? kExitOk : kExitViolation;
}

void add_common(CLI::App* sub, CommonOptions& o, bool config_required) {
  auto* config = sub->add_option("--config", o.config, "JSON configuration file");
  if (config_required) config->required();
  sub->add_option("--seed", o.seed, "overrides the configured seed");
  sub->add_option("--samples", o.samples, "number of random samples");
  sub->add_option("--depth", o.depth, "search depth");
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Split quasimorphisms, quasicocycles and quasi-representations on free products", "splitqm"};
  app.require_subcommand(1);
  CommonOptions opts;
  std::string name;
  std::string word;
  std::vector<std::string> words;
  std::int64_t n = 0;
  std::size_t length = 4;
  std::int64_t exponent = 3;
  std::int64_t prime = 2, other = 3, steps = 6;
  bool literal = false, corrupt = false, timings = false;

  auto* eval = app.add_subcommand("eval", "evaluate a split quasimorphism on a word");
  add_common(eval, opts, true);
  eval->add_option("--qm", name, "quasimorphism name");
  eval->add_option("word", word, "word such as \"a b^-2 a^3 b\"")->required();

  auto* defect = app.add_subcommand("defect", "factor, split and sampled defects with the Gromov norm");
  add_common(defect, opts, true);
  defect->add_option("--qm", name, "quasimorphism name");

  auto* homogenize = app.add_subcommand("homogenize", "homogenization values and their identities");
  add_common(homogenize, opts, true);
  homogenize->add_option("--qm", name, "quasimorphism name");
  homogenize->add_option("words", words, "words (default: sampled)");

  auto* decompose = app.add_subcommand("decompose", "counting decomposition residuals");
  add_common(decompose, opts, true);
  decompose->add_option("--qm", name, "quasimorphism name");
  decompose->add_option("words", words, "words (default: sampled)");

  auto* tau = app.add_subcommand("tau-check", "fixed points of tau_n: a -> a, b -> a^n b");
  add_common(tau, opts, true);
  tau->add_option("--qm", name, "quasimorphism name");
  tau->add_option("--n", n, "the n of tau_n")->required();
  tau->add_option("--length", length, "letter length of the checked words");
  tau->add_option("--exponent", exponent, "exponent bound of the checked words");

  auto* growth = app.add_subcommand("qc-growth", "linear growth of the prime-power and staircase quasicocycles");
  add_common(growth, opts, true);
  growth->add_option("--prime", prime, "prime p");
  growth->add_option("--other", other, "second prime q");
  growth->add_option("--steps", steps, "largest n");
  growth->add_flag("--literal", literal, "use the literal translating elements (expected to fail)");

  auto* space = app.add_subcommand("defect-space", "norm bounds and isometric embeddings of defect spaces");
  add_common(space, opts, false);

  auto* qrep = app.add_subcommand("qrep", "defects and nontriviality witnesses of a quasi-representation");
  add_common(qrep, opts, true);
  qrep->add_option("--qrep", name, "quasi-representation name");

  auto* rad = app.add_subcommand("rademacher", "the Rademacher map on Z/2 * Z/3");
  add_common(rad, opts, false);
  rad->add_option("words", words, "words to evaluate");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance checks");
  add_common(selftest, opts, false);
  selftest->add_flag("--corrupt-convention", corrupt, "use the literal convention in the quasicocycle check");
  selftest->add_flag("--timings", timings, "print running times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (selftest->parsed()) return cmd_selftest(opts, corrupt, timings, out);
    const bool needs_config = !space->parsed() && !rad->parsed();
    const Context c = make_context(opts, needs_config);
    Outcome o;
    if (eval->parsed()) {
      o = cmd_eval(c, name, word);
      if (opts.format == "table") {
        out << o.report["value"].get<std::string>() << "\n";
        return kExitOk;
      }
    } else if (defect->parsed()) {
      o = cmd_defect(c, name);
    } else if (homogenize->parsed()) {
      o = cmd_homogenize(c, name, words);
    } else if (decompose->parsed()) {
      o = cmd_decompose(c, name, words);
    } else if (tau->parsed()) {
      o = cmd_tau_check(c, name, n, length, exponent);
    } else if (growth->parsed()) {
      o = cmd_qc_growth(c, prime, other, steps, literal);
    } else if (space->parsed()) {
      o = cmd_defect_space(c);
    } else if (qrep->parsed()) {
      o = cmd_qrep(c, name);
    } else if (rad->parsed()) {
      o = cmd_rademacher(c, words);
    }
    emit(o.report, opts.format, out);
    return o.violation ? kExitViolation : kExitOk;
  } catch (const IdentityViolation& e) {
    err << "identity violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace splitqm
