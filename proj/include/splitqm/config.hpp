#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "splitqm/defect_space.hpp"
#include "splitqm/qrep.hpp"
#include "splitqm/quasicocycles.hpp"
#include "splitqm/quasimorphisms.hpp"

namespace splitqm {

inline constexpr std::string_view kConfigSchema = "splitqm/1";

/// Invalid configuration. `pointer` is the JSON pointer of the offending
/// value ("" for the document root).
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string pointer, const std::string& message)
      : std::invalid_argument((pointer.empty() ? std::string("/") : pointer) + ": " + message),
        pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

struct SamplerSettings {
  std::size_t samples = 10000;
  std::size_t junctions = 20;
  std::size_t length = 6;
  std::int64_t exponent = 6;
  std::size_t depth = 32;
};

struct DefectSpaceSettings {
  /// Orders n of the cyclic carriers Z/n checked exhaustively.
  std::vector<std::int64_t> carriers;
  std::vector<Rational> values;
  /// Z/k -> Z/n -> Z/(n/k) sequences, as (k, n) pairs.
  std::vector<std::pair<std::int64_t, std::int64_t>> sequences;
};

struct Config {
  std::uint64_t seed = 0;
  Splitting splitting = free_group_splitting();
  SamplerSettings sampler;
  std::map<std::string, SplitQM> quasimorphisms;

  std::optional<ModuleAction> action;
  std::optional<Vector> vector;
  std::map<std::string, SplitQC> cocycles;

  std::optional<MetricGroup> target;
  std::optional<double> epsilon;
  std::map<std::string, SplitQRep> quasirepresentations;

  std::optional<DefectSpaceSettings> defect_space;
};

/// Parses and validates a whole document; throws ConfigError.
Config parse_config(const nlohmann::json& doc);
/// Reads a file; unreadable files and JSON syntax errors become ConfigError.
Config load_config(const std::string& path);

nlohmann::json to_json(const FactorDescriptor& d);
nlohmann::json to_json(const FactorQM& q);
FactorDescriptor descriptor_from_json(const nlohmann::json& j, const std::string& pointer = "");
FactorQM factor_qm_from_json(const FactorDescriptor& d, const nlohmann::json& j, const std::string& pointer = "");

/// FNV-1a over the seed bytes and the name.
std::uint64_t child_seed(std::uint64_t seed, std::string_view name);

}  // namespace splitqm
