#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "intspec/spectrum.hpp"

namespace intspec {

nlohmann::json to_json(const DensityReport& r);
DensityReport density_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SpectrumReport& s);
SpectrumReport spectrum_from_json(const nlohmann::json& j);

// "4/3" style for tables; integers print without denominator.
std::string short_fraction(const Rational& r);

std::string density_csv(const std::vector<DensityReport>& rows);
std::string density_markdown(const std::vector<DensityReport>& rows);
std::string spectrum_markdown(const SpectrumReport& s);

nlohmann::json to_json(const EigenvalueReport& e);
std::string eigen_csv(const EigenvalueReport& e);
std::string eigen_markdown(const EigenvalueReport& e);

bool operator==(const DensityReport& a, const DensityReport& b);

/// Content-addressed store of density reports.
class ResultCache : public RowCache {
public:
  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}
  std::optional<DensityReport> lookup(const std::string& group_spec, const std::string& subgroup_spec,
                                      const DensityOptions& opts) const override
  {
    return load(key(group_spec, subgroup_spec, opts));
  }
  void remember(const std::string& group_spec, const std::string& subgroup_spec, const DensityOptions& opts,
                const DensityReport& r) const override
  {
    store(key(group_spec, subgroup_spec, opts), r);
  }
  bool enabled() const { return !dir_.empty(); }
  static std::string key(const std::string& group_spec, const std::string& subgroup_spec, const DensityOptions& opts);
  std::optional<DensityReport> load(const std::string& key) const;
  void store(const std::string& key, const DensityReport& r) const;

private:
  std::string dir_;
};

std::uint64_t fnv1a64(const std::string& s);

} // namespace intspec
