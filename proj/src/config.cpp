#include "splitqm/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "splitqm/errors.hpp"

namespace splitqm {

using nlohmann::json;

namespace {

std::string child(const std::string& pointer, std::string_view key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return pointer + "/" + escaped;
}

std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

const json& require(const json& j, const std::string& pointer, std::string_view key) {
  if (!j.is_object()) throw ConfigError(pointer, "expected an object");
  const auto it = j.find(std::string(key));
  if (it == j.end()) throw ConfigError(child(pointer, key), "missing");
  return *it;
}

const json* optional_field(const json& j, const std::string& pointer, std::string_view key) {
  if (!j.is_object()) throw ConfigError(pointer, "expected an object");
  const auto it = j.find(std::string(key));
  return it == j.end() ? nullptr : &*it;
}

void check_keys(const json& j, const std::string& pointer, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw ConfigError(pointer, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw ConfigError(child(pointer, key), "unknown field");
  }
}

const json& require_array(const json& j, const std::string& pointer) {
  if (!j.is_array()) throw ConfigError(pointer, "expected an array");
  return j;
}

std::int64_t as_int(const json& j, const std::string& pointer) {
  if (!j.is_number_integer()) throw ConfigError(pointer, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t as_count(const json& j, const std::string& pointer) {
  const std::int64_t v = as_int(j, pointer);
  if (v < 0) throw ConfigError(pointer, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

std::string as_string(const json& j, const std::string& pointer) {
  if (!j.is_string()) throw ConfigError(pointer, "expected a string");
  return j.get<std::string>();
}

Rational as_rational(const json& j, const std::string& pointer) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw ConfigError(pointer, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ConfigError(pointer, e.what());
  }
}

double as_double(const json& j, const std::string& pointer) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string() && j.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
  return to_double(as_rational(j, pointer));
}

json rational_json(const Rational& q) { return to_string(q); }

// Runs `body`, turning validation exceptions into a ConfigError at `pointer`.
template <class F>
auto at(const std::string& pointer, F&& body) {
  try {
    return body();
  } catch (const ConfigError&) {
    throw;
  } catch (const ParseError& e) {
    throw ConfigError(pointer, e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(pointer, e.what());
  } catch (const std::domain_error& e) {
    throw ConfigError(pointer, e.what());
  }
}

FactorElement element_of(const FactorDescriptor& d, const json& j, const std::string& pointer) {
  const FactorElement x = element(as_int(j, pointer));
  at(pointer, [&] { validate(d, x); });
  return x;
}

SamplerSettings parse_sampler(const json& j, const std::string& pointer) {
  check_keys(j, pointer, {"samples", "junctions", "length", "exponent", "depth"});
  SamplerSettings s;
  if (auto* v = optional_field(j, pointer, "samples")) s.samples = as_count(*v, child(pointer, "samples"));
  if (auto* v = optional_field(j, pointer, "junctions")) s.junctions = as_count(*v, child(pointer, "junctions"));
  if (auto* v = optional_field(j, pointer, "length")) s.length = as_count(*v, child(pointer, "length"));
  if (auto* v = optional_field(j, pointer, "exponent")) {
    s.exponent = as_int(*v, child(pointer, "exponent"));
    if (s.exponent < 1) throw ConfigError(child(pointer, "exponent"), "must be at least 1");
  }
  if (auto* v = optional_field(j, pointer, "depth")) s.depth = as_count(*v, child(pointer, "depth"));
  return s;
}

RationalMatrix matrix_of(const json& j, const std::string& pointer, std::size_t dim) {
  require_array(j, pointer);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string row_ptr = child(pointer, i);
    require_array(j[i], row_ptr);
    std::vector<Rational> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(as_rational(j[i][k], child(row_ptr, k)));
    rows.push_back(std::move(row));
  }
  RationalMatrix m = at(pointer, [&] { return RationalMatrix::from_rows(rows); });
  if (m.dim() != dim) throw ConfigError(pointer, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
  return m;
}

FactorMatrices factor_matrices(const FactorDescriptor& d, const json& j, const std::string& pointer,
                               std::size_t dim) {
  check_keys(j, pointer, {"generator", "elements"});
  FactorMatrices out;
  if (d.kind() == FactorKind::FiniteTable) {
    const json& list = require_array(require(j, pointer, "elements"), child(pointer, "elements"));
    for (std::size_t i = 0; i < list.size(); ++i) {
      out.per_element.push_back(matrix_of(list[i], child(child(pointer, "elements"), i), dim));
    }
  } else {
    out.generator = matrix_of(require(j, pointer, "generator"), child(pointer, "generator"), dim);
  }
  return out;
}

ModuleAction parse_action(const Splitting& s, const json& j, const std::string& pointer) {
  const std::string kind = as_string(require(j, pointer, "kind"), child(pointer, "kind"));
  if (kind == "regular") {
    check_keys(j, pointer, {"kind", "p"});
    double p = 1;
    if (auto* v = optional_field(j, pointer, "p")) p = as_double(*v, child(pointer, "p"));
    if (!(p >= 1)) throw ConfigError(child(pointer, "p"), "p must be at least 1");
    return at(pointer, [&] { return ModuleAction(s, RegularRep{p}); });
  }
  FiniteDimRep rep;
  if (kind == "rotations") {
    check_keys(j, pointer, {"kind", "p"});
    rep = rational_rotation_rep();
  } else if (kind == "matrices") {
    check_keys(j, pointer, {"kind", "dim", "A", "B", "p"});
    rep.dim = as_count(require(j, pointer, "dim"), child(pointer, "dim"));
    rep.on_a = factor_matrices(s.a(), require(j, pointer, "A"), child(pointer, "A"), rep.dim);
    rep.on_b = factor_matrices(s.b(), require(j, pointer, "B"), child(pointer, "B"), rep.dim);
  } else {
    throw ConfigError(child(pointer, "kind"), "unknown action kind '" + kind + "'");
  }
  ModuleAction m = at(pointer, [&] { return ModuleAction(s, rep); });
  if (auto* v = optional_field(j, pointer, "p")) m.set_designated_p(as_double(*v, child(pointer, "p")));
  return m;
}

Vector parse_vector(const ModuleAction& m, const json& j, const std::string& pointer) {
  require_array(j, pointer);
  if (m.is_regular()) {
    Vector::Sparse entries;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string ptr = child(pointer, i);
      if (!j[i].is_array() || j[i].size() != 2) throw ConfigError(ptr, "expected [word, rational]");
      const Word g = at(child(ptr, 0), [&] { return parse_word(m.splitting(), as_string(j[i][0], child(ptr, 0))); });
      const Rational value = as_rational(j[i][1], child(ptr, 1));
      if (entries.count(g)) throw ConfigError(ptr, "repeated group element");
      if (value != 0) entries[g] = value;
    }
    return Vector::sparse(std::move(entries));
  }
  Vector::Dense coords;
  for (std::size_t i = 0; i < j.size(); ++i) coords.push_back(as_rational(j[i], child(pointer, i)));
  Vector v = Vector::dense(std::move(coords));
  at(pointer, [&] { m.check_shape(v); });
  return v;
}

FactorCocycleMap parse_cocycle_factor(const ModuleAction& m, Side side, const json& j, const std::string& pointer) {
  check_keys(j, pointer, {"support", "inner"});
  const FactorDescriptor& d = m.splitting().factor(side);
  FactorCocycleMap map;
  std::vector<std::pair<FactorElement, Vector>> listed;
  if (auto* support = optional_field(j, pointer, "support")) {
    const std::string sp = child(pointer, "support");
    require_array(*support, sp);
    for (std::size_t i = 0; i < support->size(); ++i) {
      const std::string ptr = child(sp, i);
      const json& entry = (*support)[i];
      if (!entry.is_array() || entry.size() != 2) throw ConfigError(ptr, "expected [element, vector]");
      const FactorElement x = element_of(d, entry[0], child(ptr, 0));
      listed.emplace_back(x, parse_vector(m, entry[1], child(ptr, 1)));
      at(ptr, [&] { set_alternating(m, side, map, x, listed.back().second); });
    }
    for (std::size_t i = 0; i < listed.size(); ++i) {
      if (!(map.support.at(listed[i].first.value) == listed[i].second)) {
        throw ConfigError(child(sp, i), "conflicts with the alternating value forced by another entry");
      }
    }
  }
  if (auto* inner = optional_field(j, pointer, "inner")) map.inner = parse_vector(m, *inner, child(pointer, "inner"));
  return map;
}

MetricGroup parse_target(const json& j, const std::string& pointer) {
  const std::string kind = as_string(require(j, pointer, "kind"), child(pointer, "kind"));
  if (kind == "circle") {
    check_keys(j, pointer, {"kind"});
    return MetricGroup::circle();
  }
  if (kind == "cyclic") {
    check_keys(j, pointer, {"kind", "n", "scale"});
    const std::int64_t n = as_int(require(j, pointer, "n"), child(pointer, "n"));
    Rational scale = 1;
    if (auto* v = optional_field(j, pointer, "scale")) scale = as_rational(*v, child(pointer, "scale"));
    return at(pointer, [&] { return MetricGroup::cyclic(n, scale); });
  }
  if (kind == "unitary") {
    check_keys(j, pointer, {"kind", "n"});
    const std::size_t n = as_count(require(j, pointer, "n"), child(pointer, "n"));
    if (n == 0) throw ConfigError(child(pointer, "n"), "dimension must be positive");
    return MetricGroup::unitary(n);
  }
  if (kind == "finite") {
    check_keys(j, pointer, {"kind", "group", "distance"});
    FactorDescriptor group = descriptor_from_json(require(j, pointer, "group"), child(pointer, "group"));
    const std::string dp = child(pointer, "distance");
    const json& rows = require_array(require(j, pointer, "distance"), dp);
    std::vector<std::vector<Rational>> distance;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require_array(rows[i], child(dp, i));
      std::vector<Rational> row;
      for (std::size_t k = 0; k < rows[i].size(); ++k) row.push_back(as_rational(rows[i][k], child(child(dp, i), k)));
      distance.push_back(std::move(row));
    }
    return at(pointer, [&] { return MetricGroup::finite(std::move(group), std::move(distance)); });
  }
  throw ConfigError(child(pointer, "kind"), "unknown target kind '" + kind + "'");
}

GroupElement parse_group_element(const MetricGroup& target, const json& j, const std::string& pointer) {
  GroupElement x;
  switch (target.kind()) {
    case MetricKind::Finite:
      x = GroupElement(std::in_place_index<0>, as_count(j, pointer));
      break;
    case MetricKind::Circle:
      x = circle_element(as_rational(j, pointer));
      break;
    case MetricKind::Unitary: {
      // Rows of entries, each a number or a [re, im] pair.
      const std::size_t n = target.dimension();
      require_array(j, pointer);
      if (j.size() != n) throw ConfigError(pointer, "expected " + std::to_string(n) + " rows");
      Eigen::MatrixXcd m(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        const std::string rp = child(pointer, r);
        if (!j[r].is_array() || j[r].size() != n) throw ConfigError(rp, "expected " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c) {
          const json& e = j[r][c];
          const std::string ep = child(rp, c);
          if (e.is_array()) {
            if (e.size() != 2) throw ConfigError(ep, "expected [re, im]");
            m(r, c) = {as_double(e[0], child(ep, 0)), as_double(e[1], child(ep, 1))};
          } else {
            m(r, c) = as_double(e, ep);
          }
        }
      }
      x = unitary_element(std::move(m));
      break;
    }
  }
  at(pointer, [&] { target.validate(x); });
  return x;
}

FactorQRMap parse_qr_factor(const MetricGroup& target, const FactorDescriptor& d, const json& j,
                            const std::string& pointer) {
  check_keys(j, pointer, {"support", "tail"});
  FactorQRMap map;
  std::vector<std::pair<FactorElement, GroupElement>> listed;
  if (auto* support = optional_field(j, pointer, "support")) {
    const std::string sp = child(pointer, "support");
    require_array(*support, sp);
    for (std::size_t i = 0; i < support->size(); ++i) {
      const std::string ptr = child(sp, i);
      const json& entry = (*support)[i];
      if (!entry.is_array() || entry.size() != 2) throw ConfigError(ptr, "expected [element, value]");
      const FactorElement x = element_of(d, entry[0], child(ptr, 0));
      listed.emplace_back(x, parse_group_element(target, entry[1], child(ptr, 1)));
      at(ptr, [&] { set_alternating(target, d, map, x, listed.back().second); });
    }
    for (std::size_t i = 0; i < listed.size(); ++i) {
      if (!target.same(map.support.at(listed[i].first.value), listed[i].second)) {
        throw ConfigError(child(sp, i), "conflicts with the alternating value forced by another entry");
      }
    }
  }
  if (auto* tail = optional_field(j, pointer, "tail")) {
    if (d.kind() != FactorKind::Integer) throw ConfigError(child(pointer, "tail"), "a tail needs an integer factor");
    map.tail = parse_group_element(target, *tail, child(pointer, "tail"));
  }
  at(pointer, [&] { validate(target, d, map); });
  return map;
}

DefectSpaceSettings parse_defect_space(const json& j, const std::string& pointer) {
  check_keys(j, pointer, {"carriers", "values", "sequences"});
  DefectSpaceSettings out;
  if (auto* v = optional_field(j, pointer, "carriers")) {
    const std::string p = child(pointer, "carriers");
    require_array(*v, p);
    for (std::size_t i = 0; i < v->size(); ++i) {
      const std::int64_t n = as_int((*v)[i], child(p, i));
      if (n < 2 || n > 12) throw ConfigError(child(p, i), "carrier order must lie in [2, 12]");
      out.carriers.push_back(n);
    }
  }
  if (auto* v = optional_field(j, pointer, "values")) {
    const std::string p = child(pointer, "values");
    require_array(*v, p);
    for (std::size_t i = 0; i < v->size(); ++i) out.values.push_back(as_rational((*v)[i], child(p, i)));
  } else {
    for (int k = -2; k <= 2; ++k) out.values.emplace_back(k, 2);
  }
  if (auto* v = optional_field(j, pointer, "sequences")) {
    const std::string p = child(pointer, "sequences");
    require_array(*v, p);
    for (std::size_t i = 0; i < v->size(); ++i) {
      const std::string ip = child(p, i);
      check_keys((*v)[i], ip, {"kernel", "group"});
      const std::int64_t k = as_int(require((*v)[i], ip, "kernel"), child(ip, "kernel"));
      const std::int64_t n = as_int(require((*v)[i], ip, "group"), child(ip, "group"));
      if (k < 1 || n < 2 || n > 24 || n % k != 0) {
        throw ConfigError(ip, "need 1 <= kernel dividing group <= 24");
      }
      out.sequences.emplace_back(k, n);
    }
  }
  return out;
}

template <class Parse>
void parse_named(const json& doc, std::string_view key, Parse&& parse) {
  const std::string pointer = child("", key);
  const json* section = optional_field(doc, "", key);
  if (!section) return;
  if (!section->is_object()) throw ConfigError(pointer, "expected an object of named entries");
  for (const auto& [name, value] : section->items()) parse(name, value, child(pointer, name));
}

}  // namespace

json to_json(const FactorDescriptor& d) {
  switch (d.kind()) {
    case FactorKind::Integer:
      return {{"kind", "integer"}};
    case FactorKind::Cyclic:
      return {{"kind", "cyclic"}, {"n", d.modulus()}};
    case FactorKind::FiniteTable:
      break;
  }
  std::vector<std::size_t> inverse;
  for (std::size_t i = 0; i < d.size(); ++i) inverse.push_back(d.inverse_index(i));
  json out = {{"kind", "table"}, {"table", d.table()}, {"inverse", inverse}, {"identity", d.identity_index()}};
  out["label"] = d.name();
  return out;
}

FactorDescriptor descriptor_from_json(const json& j, const std::string& pointer) {
  const std::string kind = as_string(require(j, pointer, "kind"), child(pointer, "kind"));
  if (kind == "integer") {
    check_keys(j, pointer, {"kind"});
    return FactorDescriptor::integer();
  }
  if (kind == "cyclic") {
    check_keys(j, pointer, {"kind", "n"});
    const std::int64_t n = as_int(require(j, pointer, "n"), child(pointer, "n"));
    return at(child(pointer, "n"), [&] { return FactorDescriptor::cyclic(n); });
  }
  if (kind == "table") {
    check_keys(j, pointer, {"kind", "table", "inverse", "identity", "label"});
    const std::string tp = child(pointer, "table");
    const json& rows = require_array(require(j, pointer, "table"), tp);
    FactorDescriptor::Table table;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require_array(rows[i], child(tp, i));
      std::vector<std::size_t> row;
      for (std::size_t k = 0; k < rows[i].size(); ++k) row.push_back(as_count(rows[i][k], child(child(tp, i), k)));
      table.push_back(std::move(row));
    }
    const std::string ip = child(pointer, "inverse");
    const json& inv = require_array(require(j, pointer, "inverse"), ip);
    std::vector<std::size_t> inverse;
    for (std::size_t i = 0; i < inv.size(); ++i) inverse.push_back(as_count(inv[i], child(ip, i)));
    const std::size_t identity = as_count(require(j, pointer, "identity"), child(pointer, "identity"));
    std::string label;
    if (auto* v = optional_field(j, pointer, "label")) label = as_string(*v, child(pointer, "label"));
    return at(pointer, [&] { return FactorDescriptor::finite_table(table, inverse, identity, label); });
  }
  throw ConfigError(child(pointer, "kind"), "unknown factor kind '" + kind + "'");
}

json to_json(const FactorQM& q) {
  json out = json::object();
  if (q.slope != 0) out["slope"] = rational_json(q.slope);
  if (!q.support.empty()) {
    json support = json::array();
    for (const auto& [key, value] : q.support) support.push_back({to_int64(key), rational_json(value)});
    out["support"] = support;
  }
  if (q.periodic) {
    json values = json::array();
    for (const auto& v : q.periodic->values) values.push_back(rational_json(v));
    out["periodic"] = {{"period", q.periodic->period}, {"values", values}};
  }
  if (q.sign_coefficient != 0) out["sign"] = rational_json(q.sign_coefficient);
  return out;
}

FactorQM factor_qm_from_json(const FactorDescriptor& d, const json& j, const std::string& pointer) {
  check_keys(j, pointer, {"slope", "support", "periodic", "sign"});
  FactorQM q;
  if (auto* v = optional_field(j, pointer, "slope")) q.slope = as_rational(*v, child(pointer, "slope"));
  if (auto* v = optional_field(j, pointer, "sign")) q.sign_coefficient = as_rational(*v, child(pointer, "sign"));
  if (auto* v = optional_field(j, pointer, "periodic")) {
    const std::string p = child(pointer, "periodic");
    check_keys(*v, p, {"period", "values"});
    PeriodicPart part;
    part.period = as_int(require(*v, p, "period"), child(p, "period"));
    const std::string vp = child(p, "values");
    const json& values = require_array(require(*v, p, "values"), vp);
    for (std::size_t i = 0; i < values.size(); ++i) part.values.push_back(as_rational(values[i], child(vp, i)));
    q.periodic = std::move(part);
  }
  if (auto* support = optional_field(j, pointer, "support")) {
    const std::string sp = child(pointer, "support");
    require_array(*support, sp);
    std::vector<std::pair<FactorElement, Rational>> listed;
    for (std::size_t i = 0; i < support->size(); ++i) {
      const std::string ptr = child(sp, i);
      const json& entry = (*support)[i];
      if (!entry.is_array() || entry.size() != 2) throw ConfigError(ptr, "expected [element, rational]");
      const FactorElement x = element_of(d, entry[0], child(ptr, 0));
      listed.emplace_back(x, as_rational(entry[1], child(ptr, 1)));
      at(ptr, [&] { q.set_alternating(d, x, listed.back().second); });
    }
    for (std::size_t i = 0; i < listed.size(); ++i) {
      if (q.support.at(listed[i].first.value) != listed[i].second) {
        throw ConfigError(child(sp, i), "conflicts with the alternating value forced by another entry");
      }
    }
  }
  at(pointer, [&] { validate(d, q); });
  return q;
}

Config parse_config(const json& doc) {
  check_keys(doc, "",
             {"schema", "seed", "splitting", "sampler", "quasimorphisms", "action", "vector", "cocycles", "target",
              "epsilon", "quasirepresentations", "defect_space"});
  const std::string schema = as_string(require(doc, "", "schema"), "/schema");
  if (schema != kConfigSchema) throw ConfigError("/schema", "unsupported schema '" + schema + "'");

  Config c;
  if (auto* v = optional_field(doc, "", "seed")) {
    if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<std::int64_t>() >= 0)) {
      throw ConfigError("/seed", "expected a non-negative integer");
    }
    c.seed = v->get<std::uint64_t>();
  }
  if (auto* v = optional_field(doc, "", "splitting")) {
    check_keys(*v, "/splitting", {"A", "B"});
    FactorDescriptor a = descriptor_from_json(require(*v, "/splitting", "A"), "/splitting/A");
    FactorDescriptor b = descriptor_from_json(require(*v, "/splitting", "B"), "/splitting/B");
    c.splitting = at("/splitting", [&] { return Splitting(std::move(a), std::move(b)); });
  }
  if (auto* v = optional_field(doc, "", "sampler")) c.sampler = parse_sampler(*v, "/sampler");

  parse_named(doc, "quasimorphisms", [&](const std::string& name, const json& j, const std::string& ptr) {
    check_keys(j, ptr, {"A", "B"});
    FactorQM a = j.contains("A") ? factor_qm_from_json(c.splitting.a(), j["A"], child(ptr, "A")) : FactorQM::zero();
    FactorQM b = j.contains("B") ? factor_qm_from_json(c.splitting.b(), j["B"], child(ptr, "B")) : FactorQM::zero();
    c.quasimorphisms.emplace(name, at(ptr, [&] { return SplitQM(c.splitting, std::move(a), std::move(b)); }));
  });

  if (auto* v = optional_field(doc, "", "action")) c.action = parse_action(c.splitting, *v, "/action");
  if (auto* v = optional_field(doc, "", "vector")) {
    if (!c.action) throw ConfigError("/vector", "needs an action");
    c.vector = parse_vector(*c.action, *v, "/vector");
  }
  parse_named(doc, "cocycles", [&](const std::string& name, const json& j, const std::string& ptr) {
    if (!c.action) throw ConfigError(ptr, "cocycles need an action");
    check_keys(j, ptr, {"A", "B"});
    FactorCocycleMap a, b;
    if (j.contains("A")) a = parse_cocycle_factor(*c.action, Side::A, j["A"], child(ptr, "A"));
    if (j.contains("B")) b = parse_cocycle_factor(*c.action, Side::B, j["B"], child(ptr, "B"));
    c.cocycles.emplace(name, at(ptr, [&] { return SplitQC(*c.action, std::move(a), std::move(b)); }));
  });

  if (auto* v = optional_field(doc, "", "target")) c.target = parse_target(*v, "/target");
  if (auto* v = optional_field(doc, "", "epsilon")) {
    c.epsilon = as_double(*v, "/epsilon");
    if (!(*c.epsilon > 0)) throw ConfigError("/epsilon", "must be positive");
  }
  parse_named(doc, "quasirepresentations", [&](const std::string& name, const json& j, const std::string& ptr) {
    if (!c.target) throw ConfigError(ptr, "quasi-representations need a target");
    check_keys(j, ptr, {"A", "B"});
    FactorQRMap a, b;
    if (j.contains("A")) a = parse_qr_factor(*c.target, c.splitting.a(), j["A"], child(ptr, "A"));
    if (j.contains("B")) b = parse_qr_factor(*c.target, c.splitting.b(), j["B"], child(ptr, "B"));
    c.quasirepresentations.emplace(name,
                                   at(ptr, [&] { return SplitQRep(c.splitting, *c.target, std::move(a), std::move(b)); }));
  });

  if (auto* v = optional_field(doc, "", "defect_space")) c.defect_space = parse_defect_space(*v, "/defect_space");
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("JSON syntax: ") + e.what());
  }
  return parse_config(doc);
}

std::uint64_t child_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&](unsigned char byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(seed >> (8 * i)));
  for (char ch : name) mix(static_cast<unsigned char>(ch));
  return h;
}

}  // namespace splitqm
