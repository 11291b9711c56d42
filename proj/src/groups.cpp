#include "splitqm/groups.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace splitqm {

FactorDescriptor FactorDescriptor::integer() { return FactorDescriptor{}; }

FactorDescriptor FactorDescriptor::cyclic(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("cyclic group needs n >= 2, got " + std::to_string(n));
  FactorDescriptor d;
  d.kind_ = FactorKind::Cyclic;
  d.modulus_ = n;
  return d;
}

FactorDescriptor FactorDescriptor::finite_table(Table table, std::vector<std::size_t> inverse,
                                                std::size_t identity, std::string label) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("empty multiplication table");
  if (identity >= n) throw std::invalid_argument("identity index out of range");
  if (inverse.size() != n) throw std::invalid_argument("inverse table has wrong size");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("multiplication table is not square");
    std::vector<bool> seen(n, false);
    for (std::size_t v : row) {
      if (v >= n || seen[v]) throw std::invalid_argument("multiplication table is not a Latin square");
      seen[v] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[table[i][j]]) throw std::invalid_argument("multiplication table is not a Latin square");
      seen[table[i][j]] = true;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (table[identity][x] != x || table[x][identity] != x) {
      throw std::invalid_argument("identity does not act neutrally");
    }
    if (inverse[x] >= n || table[x][inverse[x]] != identity || table[inverse[x]][x] != identity) {
      throw std::invalid_argument("inverse table inconsistent at " + std::to_string(x));
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]]) {
          throw std::invalid_argument("multiplication table is not associative");
        }

  FactorDescriptor d;
  d.kind_ = FactorKind::FiniteTable;
  if (label.empty()) label = "G" + std::to_string(n);
  d.data_ = std::make_shared<const TableData>(TableData{std::move(table), std::move(inverse), identity, std::move(label)});
  return d;
}

std::size_t FactorDescriptor::size() const {
  switch (kind_) {
    case FactorKind::Cyclic: return static_cast<std::size_t>(modulus_);
    case FactorKind::FiniteTable: return data_->table.size();
    case FactorKind::Integer: break;
  }
  throw std::logic_error("the integer group is infinite");
}

const FactorDescriptor::Table& FactorDescriptor::table() const {
  if (kind_ != FactorKind::FiniteTable) throw std::logic_error("not a table group");
  return data_->table;
}

std::size_t FactorDescriptor::identity_index() const {
  if (kind_ != FactorKind::FiniteTable) throw std::logic_error("not a table group");
  return data_->identity;
}

std::size_t FactorDescriptor::inverse_index(std::size_t x) const {
  if (kind_ != FactorKind::FiniteTable) throw std::logic_error("not a table group");
  return data_->inverse.at(x);
}

std::string FactorDescriptor::name() const {
  switch (kind_) {
    case FactorKind::Integer: return "Z";
    case FactorKind::Cyclic: return "Z/" + std::to_string(modulus_);
    case FactorKind::FiniteTable: return data_->label;
  }
  return "?";
}

bool operator==(const FactorDescriptor& x, const FactorDescriptor& y) {
  if (x.kind_ != y.kind_) return false;
  switch (x.kind_) {
    case FactorKind::Integer: return true;
    case FactorKind::Cyclic: return x.modulus_ == y.modulus_;
    case FactorKind::FiniteTable:
      return x.data_ == y.data_ ||
             (x.data_->table == y.data_->table && x.data_->identity == y.data_->identity);
  }
  return false;
}

bool is_valid(const FactorDescriptor& d, const FactorElement& x) {
  switch (d.kind()) {
    case FactorKind::Integer: return true;
    case FactorKind::Cyclic: return x.value >= 0 && x.value < d.modulus();
    case FactorKind::FiniteTable: return x.value >= 0 && x.value < d.size();
  }
  return false;
}

void validate(const FactorDescriptor& d, const FactorElement& x) {
  if (!is_valid(d, x)) {
    throw std::invalid_argument("element " + x.value.str() + " is not valid for factor " + d.name());
  }
}

namespace {

std::size_t index_of(const FactorElement& x) { return x.value.convert_to<std::size_t>(); }

}  // namespace

FactorElement multiply(const FactorDescriptor& d, const FactorElement& x, const FactorElement& y) {
  validate(d, x);
  validate(d, y);
  switch (d.kind()) {
    case FactorKind::Integer: return {x.value + y.value};
    case FactorKind::Cyclic: {
      BigInt r = x.value + y.value;
      if (r >= d.modulus()) r -= d.modulus();
      return {r};
    }
    case FactorKind::FiniteTable: return {BigInt(d.table()[index_of(x)][index_of(y)])};
  }
  throw std::logic_error("unreachable");
}

FactorElement invert(const FactorDescriptor& d, const FactorElement& x) {
  validate(d, x);
  switch (d.kind()) {
    case FactorKind::Integer: return {-x.value};
    case FactorKind::Cyclic: return {x.value == 0 ? BigInt(0) : BigInt(d.modulus() - x.value)};
    case FactorKind::FiniteTable: return {BigInt(d.inverse_index(index_of(x)))};
  }
  throw std::logic_error("unreachable");
}

FactorElement identity(const FactorDescriptor& d) {
  if (d.kind() == FactorKind::FiniteTable) return {BigInt(d.identity_index())};
  return {BigInt(0)};
}

bool is_identity(const FactorDescriptor& d, const FactorElement& x) {
  validate(d, x);
  return x == identity(d);
}

FactorElement power(const FactorDescriptor& d, const FactorElement& x, const BigInt& n) {
  validate(d, x);
  switch (d.kind()) {
    case FactorKind::Integer: return {x.value * n};
    case FactorKind::Cyclic: return {BigInt(mod_floor(x.value * n, d.modulus()))};
    case FactorKind::FiniteTable: break;
  }
  FactorElement base = n < 0 ? invert(d, x) : x;
  BigInt e = n < 0 ? BigInt(-n) : n;
  FactorElement result = identity(d);
  while (e > 0) {
    if ((e & 1) != 0) result = multiply(d, result, base);
    base = multiply(d, base, base);
    e >>= 1;
  }
  return result;
}

FactorElement generator(const FactorDescriptor& d) {
  if (d.kind() == FactorKind::FiniteTable) {
    throw std::invalid_argument("table group " + d.name() + " has no designated generator");
  }
  return {BigInt(1)};
}

std::optional<std::uint64_t> element_order(const FactorDescriptor& d, const FactorElement& x) {
  validate(d, x);
  switch (d.kind()) {
    case FactorKind::Integer:
      if (x.value == 0) return 1;
      return std::nullopt;
    case FactorKind::Cyclic: {
      const std::int64_t r = x.value.convert_to<std::int64_t>();
      return static_cast<std::uint64_t>(d.modulus() / std::gcd(r, d.modulus()));
    }
    case FactorKind::FiniteTable: {
      std::uint64_t order = 1;
      FactorElement y = x;
      while (!is_identity(d, y)) {
        y = multiply(d, y, x);
        ++order;
      }
      return order;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<FactorElement> enumerate(const FactorDescriptor& d) {
  if (!d.is_finite()) throw std::invalid_argument("cannot enumerate the integer group");
  std::vector<FactorElement> out;
  out.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out.push_back({BigInt(i)});
  return out;
}

FactorElement some_nontrivial(const FactorDescriptor& d) {
  if (d.kind() != FactorKind::FiniteTable) return generator(d);
  for (const auto& x : enumerate(d)) {
    if (!is_identity(d, x)) return x;
  }
  throw std::invalid_argument("factor " + d.name() + " is trivial");
}

FactorDescriptor symmetric_group_s3() {
  // Permutations of {0,1,2} as images of (0,1,2).
  const std::array<std::array<int, 3>, 6> perms{{
      {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1},
  }};
  auto index = [&](const std::array<int, 3>& p) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  FactorDescriptor::Table table(6, std::vector<std::size_t>(6));
  std::vector<std::size_t> inverse(6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      // (x*y)(k) = x(y(k))
      std::array<int, 3> comp{};
      for (int k = 0; k < 3; ++k) comp[k] = perms[i][perms[j][k]];
      table[i][j] = index(comp);
    }
    std::array<int, 3> inv{};
    for (int k = 0; k < 3; ++k) inv[perms[i][k]] = k;
    inverse[i] = index(inv);
  }
  return FactorDescriptor::finite_table(std::move(table), std::move(inverse), 0, "S3");
}

}  // namespace splitqm
