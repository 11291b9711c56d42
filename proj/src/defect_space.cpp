#include "splitqm/defect_space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace splitqm {

namespace {

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

void require_finite(const FactorDescriptor& d, const char* what) {
  if (!d.is_finite()) throw std::invalid_argument(std::string(what) + " needs a finite carrier");
}

}  // namespace

DefectVector::DefectVector(FactorDescriptor carrier, std::map<BigInt, Rational> values)
    : carrier_(std::move(carrier)) {
  for (auto& [k, v] : values) {
    validate(carrier_, FactorElement{k});
    if (v != 0) values_.emplace(k, std::move(v));
  }
  for (const auto& [k, v] : values_) {
    const FactorElement inv = invert(carrier_, FactorElement{k});
    if (at(inv) != -v) {
      throw std::invalid_argument("defect vector is not alternating at element " + k.str());
    }
  }
}

Rational DefectVector::at(const FactorElement& x) const {
  const auto it = values_.find(x.value);
  return it == values_.end() ? Rational(0) : it->second;
}

void DefectVector::set_alternating(const FactorElement& x, const Rational& value) {
  validate(carrier_, x);
  const FactorElement inv = invert(carrier_, x);
  if (inv == x && value != 0) {
    throw std::invalid_argument("an involution must take the value 0");
  }
  values_.erase(x.value);
  values_.erase(inv.value);
  if (value == 0) return;
  values_[x.value] = value;
  values_[inv.value] = -value;
}

FactorQM DefectVector::as_factor_qm() const {
  FactorQM q;
  q.support = values_;
  return q;
}

DefectVector operator+(const DefectVector& x, const DefectVector& y) {
  if (!(x.carrier() == y.carrier())) throw std::invalid_argument("defect vectors live on different carriers");
  std::map<BigInt, Rational> out = x.values();
  for (const auto& [k, v] : y.values()) out[k] += v;
  return DefectVector(x.carrier(), std::move(out));
}

DefectVector operator*(const Rational& c, const DefectVector& x) {
  std::map<BigInt, Rational> out;
  for (const auto& [k, v] : x.values()) out[k] = c * v;
  return DefectVector(x.carrier(), std::move(out));
}

Rational defect_norm(const DefectVector& f) {
  return factor_defect_exact(f.carrier(), f.as_factor_qm()).value;
}

Rational sup_norm(const DefectVector& f) {
  Rational best = 0;
  for (const auto& [k, v] : f.values()) best = std::max(best, abs_value(v));
  return best;
}

OrderBoundReport order_bound_check(const DefectVector& f) {
  OrderBoundReport report;
  report.norm = defect_norm(f);
  const FactorDescriptor& d = f.carrier();
  std::vector<FactorElement> elements;
  if (d.is_finite()) {
    elements = enumerate(d);
  } else {
    for (const auto& [k, v] : f.values()) elements.push_back(FactorElement{k});
  }
  for (const auto& x : elements) {
    if (is_identity(d, x)) continue;
    const auto ord = element_order(d, x);
    const Rational factor = ord ? Rational(1) - Rational(2, static_cast<std::int64_t>(*ord)) : Rational(1);
    if (abs_value(f.at(x)) > factor * report.norm) {
      report.holds = false;
      report.violation = x;
      break;
    }
  }
  return report;
}

bool norm_equivalence_holds(const DefectVector& f) {
  const Rational norm = defect_norm(f);
  const Rational sup = sup_norm(f);
  return sup <= norm && norm <= 3 * sup;
}

FactorElement FiniteHom::operator()(const FactorElement& x) const {
  validate(source, x);
  return images.at(x.value.convert_to<std::size_t>());
}

bool is_homomorphism(const FiniteHom& h) {
  require_finite(h.source, "a finite homomorphism");
  require_finite(h.target, "a finite homomorphism");
  if (h.images.size() != h.source.size()) return false;
  for (const auto& y : h.images) {
    if (!is_valid(h.target, y)) return false;
  }
  const auto elements = enumerate(h.source);
  for (const auto& x : elements) {
    for (const auto& y : elements) {
      if (h(multiply(h.source, x, y)) != multiply(h.target, h(x), h(y))) return false;
    }
  }
  return true;
}

bool is_injective(const FiniteHom& h) {
  std::set<BigInt> seen;
  for (const auto& y : h.images) seen.insert(y.value);
  return seen.size() == h.images.size();
}

bool is_surjective(const FiniteHom& h) {
  std::set<BigInt> seen;
  for (const auto& y : h.images) seen.insert(y.value);
  return seen.size() == h.target.size();
}

FiniteHom cyclic_hom(std::int64_t n, std::int64_t m, std::int64_t factor) {
  FiniteHom h{FactorDescriptor::cyclic(n), FactorDescriptor::cyclic(m), {}};
  for (std::int64_t k = 0; k < n; ++k) h.images.push_back(element(mod_floor(BigInt(factor) * k, m)));
  if (!is_homomorphism(h)) {
    throw std::invalid_argument("k -> " + std::to_string(factor) + "k is not a homomorphism Z/" +
                                std::to_string(n) + " -> Z/" + std::to_string(m));
  }
  return h;
}

DefectVector embed_subgroup(const DefectVector& f, const FiniteHom& inclusion) {
  if (!(f.carrier() == inclusion.source)) throw std::invalid_argument("vector is not on the subgroup");
  if (!is_homomorphism(inclusion) || !is_injective(inclusion)) {
    throw std::invalid_argument("subgroup embedding needs an injective homomorphism");
  }
  std::map<BigInt, Rational> out;
  for (const auto& [k, v] : f.values()) out[inclusion(FactorElement{k}).value] = v;
  return DefectVector(inclusion.target, std::move(out));
}

DefectVector pullback_quotient(const DefectVector& f, const FiniteHom& projection) {
  if (!(f.carrier() == projection.target)) throw std::invalid_argument("vector is not on the quotient");
  if (!is_homomorphism(projection) || !is_surjective(projection)) {
    throw std::invalid_argument("pullback needs a surjective homomorphism");
  }
  std::map<BigInt, Rational> out;
  for (const auto& x : enumerate(projection.source)) out[x.value] = f.at(projection(x));
  return DefectVector(projection.source, std::move(out));
}

void validate(const ShortExactSequence& ses) {
  const FiniteHom& i = ses.inclusion;
  const FiniteHom& p = ses.projection;
  if (!(i.target == p.source)) throw std::invalid_argument("sequence maps do not compose");
  if (!is_homomorphism(i) || !is_injective(i)) throw std::invalid_argument("inclusion is not a monomorphism");
  if (!is_homomorphism(p) || !is_surjective(p)) throw std::invalid_argument("projection is not an epimorphism");
  std::set<BigInt> image;
  for (const auto& y : i.images) image.insert(y.value);
  for (const auto& x : enumerate(p.source)) {
    if (is_identity(p.target, p(x)) != (image.count(x.value) != 0)) {
      throw std::invalid_argument("image of the inclusion differs from the kernel at element " + x.value.str());
    }
  }
}

DefectVector ses_embed(const DefectVector& on_kernel, const DefectVector& on_quotient,
                       const ShortExactSequence& ses) {
  validate(ses);
  if (!(on_kernel.carrier() == ses.inclusion.source) || !(on_quotient.carrier() == ses.projection.target)) {
    throw std::invalid_argument("vectors do not match the sequence");
  }
  std::map<BigInt, Rational> out;
  std::map<BigInt, BigInt> preimage;
  for (const auto& n : enumerate(ses.inclusion.source)) preimage[ses.inclusion(n).value] = n.value;
  for (const auto& g : enumerate(ses.projection.source)) {
    const auto it = preimage.find(g.value);
    out[g.value] = it != preimage.end() ? on_kernel.at(FactorElement{it->second})
                                        : on_quotient.at(ses.projection(g));
  }
  return DefectVector(ses.projection.source, std::move(out));
}

std::vector<DefectVector> all_alternating_vectors(const FactorDescriptor& carrier,
                                                  const std::vector<Rational>& values) {
  require_finite(carrier, "enumeration of defect vectors");
  std::vector<FactorElement> free;
  std::set<BigInt> taken;
  for (const auto& x : enumerate(carrier)) {
    const FactorElement inv = invert(carrier, x);
    if (inv == x || taken.count(x.value) != 0) continue;
    taken.insert(inv.value);
    free.push_back(x);
  }
  std::vector<DefectVector> out{DefectVector(carrier)};
  for (const auto& x : free) {
    std::vector<DefectVector> next;
    next.reserve(out.size() * values.size());
    for (const auto& partial : out) {
      for (const auto& v : values) {
        DefectVector f = partial;
        f.set_alternating(x, v);
        next.push_back(std::move(f));
      }
    }
    out = std::move(next);
  }
  return out;
}

DefectVector random_defect_vector(const FactorDescriptor& carrier, std::mt19937_64& rng,
                                  std::int64_t numerator_bound, std::int64_t denominator_bound,
                                  std::int64_t radius) {
  RandomQMOptions options;
  options.support_radius = radius;
  options.numerator_bound = numerator_bound;
  options.denominator_bound = denominator_bound;
  options.allow_slope = options.allow_periodic = options.allow_sign = false;
  return DefectVector(carrier, random_factor_qm(carrier, rng, options).support);
}

}  // namespace splitqm
