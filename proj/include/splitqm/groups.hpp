#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "splitqm/numeric.hpp"

namespace splitqm {

enum class FactorKind { Integer, Cyclic, FiniteTable };

/// An element of a factor group. For the integer group this is the exponent
/// k of a^k, for Z/n a residue in [0, n), for a table group a row index.
struct FactorElement {
  BigInt value;

  friend bool operator==(const FactorElement& x, const FactorElement& y) { return x.value == y.value; }
  friend bool operator!=(const FactorElement& x, const FactorElement& y) { return !(x == y); }
  friend bool operator<(const FactorElement& x, const FactorElement& y) { return x.value < y.value; }
};

inline FactorElement element(std::int64_t v) { return FactorElement{BigInt(v)}; }

/// One factor of a free product splitting: Z, Z/n, or a finite group given
/// by its multiplication table. Copies share the table storage.
class FactorDescriptor {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  static FactorDescriptor integer();
  static FactorDescriptor cyclic(std::int64_t n);
  /// Validates that `table` is an associative Latin square with neutral
  /// element `identity` and that `inverse` matches it.
  static FactorDescriptor finite_table(Table table, std::vector<std::size_t> inverse,
                                       std::size_t identity, std::string label = {});

  FactorKind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ != FactorKind::Integer; }
  /// The n of Z/n. Only meaningful for cyclic factors.
  std::int64_t modulus() const noexcept { return modulus_; }
  /// Number of elements; throws for the integer group.
  std::size_t size() const;
  const Table& table() const;
  std::size_t identity_index() const;
  std::size_t inverse_index(std::size_t x) const;

  /// Short human-readable name: "Z", "Z/3", or the table label.
  std::string name() const;

  friend bool operator==(const FactorDescriptor& x, const FactorDescriptor& y);

 private:
  struct TableData {
    Table table;
    std::vector<std::size_t> inverse;
    std::size_t identity = 0;
    std::string label;
  };

  FactorKind kind_ = FactorKind::Integer;
  std::int64_t modulus_ = 0;
  std::shared_ptr<const TableData> data_;
};

bool is_valid(const FactorDescriptor& d, const FactorElement& x);
/// Throws std::invalid_argument when x is not an element of d.
void validate(const FactorDescriptor& d, const FactorElement& x);

FactorElement multiply(const FactorDescriptor& d, const FactorElement& x, const FactorElement& y);
FactorElement invert(const FactorDescriptor& d, const FactorElement& x);
FactorElement identity(const FactorDescriptor& d);
bool is_identity(const FactorDescriptor& d, const FactorElement& x);
FactorElement power(const FactorDescriptor& d, const FactorElement& x, const BigInt& n);

/// The designated generator (exponent/residue 1) of Z or Z/n. Table groups
/// have no designated generator; this throws for them.
FactorElement generator(const FactorDescriptor& d);

/// Least n >= 1 with x^n = 1, or nullopt when x has infinite order.
std::optional<std::uint64_t> element_order(const FactorDescriptor& d, const FactorElement& x);

/// All elements of a finite factor, in index order. Throws for Z.
std::vector<FactorElement> enumerate(const FactorDescriptor& d);

/// Some non-identity element (the generator when there is one).
FactorElement some_nontrivial(const FactorDescriptor& d);

/// Symmetric group on three letters as a table group. Index 0 is the
/// identity, 1..3 are transpositions, 4 and 5 the 3-cycles.
FactorDescriptor symmetric_group_s3();

}  // namespace splitqm
