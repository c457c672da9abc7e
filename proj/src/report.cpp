#include "intspec/report.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace intspec {

using nlohmann::json;

namespace {

json rational_json(const Rational& r) { return to_fraction_string(r); }
Rational rational_of(const json& j) { return parse_rational(j.get<std::string>()); }

} // namespace

std::string short_fraction(const Rational& r)
{
  return denominator(r) == 1 ? numerator(r).str() : to_fraction_string(r);
}

json to_json(const DensityReport& r)
{
  json j;
  j["schema"] = "intspec.density/1";
  j["group"] = r.group_spec;
  j["subgroup"] = r.subgroup_spec;
  j["label"] = r.label;
  j["group_order"] = r.group_order;
  j["subgroup_order"] = r.subgroup_order;
  j["index"] = r.index;
  j["alpha"] = r.alpha;
  j["witness"] = r.witness;
  j["witness_source"] = r.witness_source;
  j["bound"] = {{"kind", to_string(r.bound_kind)}, {"value", rational_json(r.bound_value)}};
  if (r.ratio)
    j["ratio"] = {{"weighting", r.ratio->weighting},
                  {"d", rational_json(r.ratio->d)},
                  {"tau", rational_json(r.ratio->tau)},
                  {"tau_exact", r.ratio->tau_exact},
                  {"bound", rational_json(r.ratio->bound)}};
  else
    j["ratio"] = nullptr;
  if (r.clique_bound)
    j["clique"] = {{"size", r.clique_size}, {"bound", rational_json(*r.clique_bound)}};
  else
    j["clique"] = nullptr;
  j["rho"] = rational_json(r.rho);
  j["rho_upper"] = rational_json(r.rho_upper);
  j["certified"] = r.certified;
  j["solver_status"] = r.solver_status;
  j["nodes"] = r.nodes;
  j["experiment"] = r.experiment;
  j["note"] = r.note;
  return j;
}

DensityReport density_from_json(const json& j)
{
  if (j.at("schema") != "intspec.density/1") throw std::invalid_argument("unknown density schema");
  DensityReport r;
  r.group_spec = j.at("group");
  r.subgroup_spec = j.at("subgroup");
  r.label = j.at("label");
  r.group_order = j.at("group_order");
  r.subgroup_order = j.at("subgroup_order");
  r.index = j.at("index");
  r.alpha = j.at("alpha");
  r.witness = j.at("witness").get<std::vector<Elem>>();
  r.witness_source = j.at("witness_source");
  r.bound_kind = parse_bound_kind(j.at("bound").at("kind"));
  r.bound_value = rational_of(j.at("bound").at("value"));
  if (!j.at("ratio").is_null()) {
    const auto& q = j.at("ratio");
    r.ratio = RatioCertificate{q.at("weighting"), rational_of(q.at("d")), rational_of(q.at("tau")),
                               q.at("tau_exact").get<bool>(), rational_of(q.at("bound"))};
  }
  if (!j.at("clique").is_null()) {
    r.clique_size = j.at("clique").at("size");
    r.clique_bound = rational_of(j.at("clique").at("bound"));
  }
  r.rho = rational_of(j.at("rho"));
  r.rho_upper = rational_of(j.at("rho_upper"));
  r.certified = j.at("certified");
  r.solver_status = j.at("solver_status");
  r.nodes = j.at("nodes");
  r.experiment = j.at("experiment");
  r.note = j.at("note");
  return r;
}

json to_json(const SpectrumReport& s)
{
  json j;
  j["schema"] = "intspec.spectrum/1";
  j["group"] = s.group_spec;
  j["group_order"] = s.group_order;
  j["rows"] = json::array();
  for (const auto& r : s.rows) j["rows"].push_back(to_json(r));
  j["sigma"] = json::array();
  for (const auto& x : s.sigma) j["sigma"].push_back(rational_json(x));
  return j;
}

SpectrumReport spectrum_from_json(const json& j)
{
  if (j.at("schema") != "intspec.spectrum/1") throw std::invalid_argument("unknown spectrum schema");
  SpectrumReport s;
  s.group_spec = j.at("group");
  s.group_order = j.at("group_order");
  for (const auto& r : j.at("rows")) s.rows.push_back(density_from_json(r));
  for (const auto& x : j.at("sigma")) s.sigma.push_back(rational_of(x));
  return s;
}

bool operator==(const DensityReport& a, const DensityReport& b) { return to_json(a) == to_json(b); }

namespace {

std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

} // namespace

std::string density_csv(const std::vector<DensityReport>& rows)
{
  std::ostringstream out;
  out << "group,subgroup,label,subgroup_order,index,alpha,rho,rho_upper,bound_kind,bound_value,certified\n";
  for (const auto& r : rows)
    out << csv_field(r.group_spec) << "," << csv_field(r.subgroup_spec) << "," << csv_field(r.label) << ","
        << r.subgroup_order << "," << r.index << "," << r.alpha << "," << to_fraction_string(r.rho) << ","
        << to_fraction_string(r.rho_upper) << "," << to_string(r.bound_kind) << "," << to_fraction_string(r.bound_value)
        << "," << (r.certified ? "true" : "false") << "\n";
  return out.str();
}

std::string density_markdown(const std::vector<DensityReport>& rows)
{
  std::ostringstream out;
  out << "| Subgroup H | |H| | rho(G,H) | certified | bound |\n";
  out << "|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    out << "| " << r.label << " | " << r.subgroup_order << " | " << short_fraction(r.rho);
    if (!r.certified) out << " .. " << short_fraction(r.rho_upper);
    out << " | " << (r.certified ? "yes" : "no") << " | " << to_string(r.bound_kind) << " |\n";
  }
  return out.str();
}

std::string spectrum_markdown(const SpectrumReport& s)
{
  std::ostringstream out;
  out << "### " << s.group_spec << " (order " << s.group_order << ")\n\n";
  out << density_markdown(s.rows);
  out << "\nsigma = {";
  for (std::size_t i = 0; i < s.sigma.size(); ++i) out << (i ? ", " : "") << short_fraction(s.sigma[i]);
  out << "}\n";
  return out.str();
}

json to_json(const EigenvalueReport& e)
{
  json j;
  j["schema"] = "intspec.eigs/1";
  j["group"] = e.group_spec;
  j["weighting"] = e.weighting;
  j["subgroup"] = e.subgroup_spec;
  j["d"] = rational_json(e.d);
  j["tau"] = rational_json(e.tau);
  j["tau_exact"] = e.tau_exact;
  j["rows"] = json::array();
  for (const auto& r : e.rows) {
    json row{{"character", r.character}, {"degree", r.degree}, {"approx", r.approx}};
    if (r.approx) row["value"] = r.value;
    else row["value"] = r.exact;
    j["rows"].push_back(row);
  }
  return j;
}

namespace {

std::string eigen_value_text(const EigenvalueRow& r)
{
  if (!r.approx) return r.exact;
  std::ostringstream os;
  os << std::setprecision(12) << r.value;
  return os.str();
}

} // namespace

std::string eigen_csv(const EigenvalueReport& e)
{
  std::ostringstream out;
  out << "character,degree,eigenvalue,approx\n";
  for (const auto& r : e.rows)
    out << csv_field(r.character) << "," << r.degree << "," << csv_field(eigen_value_text(r)) << ","
        << (r.approx ? "true" : "false") << "\n";
  return out.str();
}

std::string eigen_markdown(const EigenvalueReport& e)
{
  std::ostringstream out;
  out << "### " << e.group_spec << ", weighting " << e.weighting;
  if (!e.subgroup_spec.empty()) out << ", subgroup " << e.subgroup_spec;
  out << "\n\nd = " << short_fraction(e.d) << ", tau " << (e.tau_exact ? "= " : ">= ") << short_fraction(e.tau)
      << "\n\n| character | degree | eigenvalue |\n|---|---|---|\n";
  for (const auto& r : e.rows) out << "| " << r.character << " | " << r.degree << " | " << eigen_value_text(r)
                                                                         << (r.approx ? " (approx)" : "") << " |\n";
  return out.str();
}

std::uint64_t fnv1a64(const std::string& s)
{
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string ResultCache::key(const std::string& group_spec, const std::string& subgroup_spec, const DensityOptions& opts)
{
  std::ostringstream k;
  k << group_spec << '\n' << subgroup_spec << '\n' << to_string(opts.strategy) << '\n' << opts.node_budget << '\n'
    << opts.symmetry << '\n' << kSolverVersion;
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(k.str());
  return hex.str();
}

std::optional<DensityReport> ResultCache::load(const std::string& key) const
{
  if (!enabled()) return std::nullopt;
  std::ifstream in(std::filesystem::path(dir_) / (key + ".json"));
  if (!in) return std::nullopt;
  try {
    return density_from_json(json::parse(in));
  } catch (const std::exception&) {
    return std::nullopt; // unreadable entries are recomputed
  }
}

void ResultCache::store(const std::string& key, const DensityReport& r) const
{
  if (!enabled()) return;
  std::filesystem::create_directories(dir_);
  const auto final_path = std::filesystem::path(dir_) / (key + ".json");
  const auto tmp = final_path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << to_json(r).dump(1) << "\n";
  }
  std::filesystem::rename(tmp, final_path);
}

} // namespace intspec
