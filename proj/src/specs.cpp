#include "intspec/specs.hpp"

#include <charconv>
#include <map>

namespace intspec {

namespace {

const char* kGroupRule = "group spec must be PSL2:q=<prime power> or AGL:n=<int>,q=<prime power>";
const char* kSubgroupRule =
    "subgroup spec must be family=<U|V|M|torus|borel|unipotent|Ei|linear|translations|whole|trivial>"
    "[,r=<int>|,i=<int>] or index=<int>";

std::uint32_t parse_uint(const std::string& s, const std::string& rule)
{
  std::uint32_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || p != end) throw SpecError(rule + " (bad integer '" + s + "')");
  return v;
}

} // namespace

std::vector<std::pair<std::string, std::string>> parse_key_values(const std::string& text, const std::string& rule)
{
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw SpecError(rule + " (expected key=value, got '" + item + "')");
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

GroupPtr parse_group_spec(const std::string& text)
{
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) throw SpecError(std::string(kGroupRule) + " (missing ':')");
  const std::string kind = text.substr(0, colon);
  std::map<std::string, std::uint32_t> kv;
  for (const auto& [k, v] : parse_key_values(text.substr(colon + 1), kGroupRule)) {
    if (kv.count(k)) throw SpecError(std::string(kGroupRule) + " (duplicate key '" + k + "')");
    kv[k] = parse_uint(v, kGroupRule);
  }
  try {
    if (kind == "PSL2") {
      if (kv.size() != 1 || !kv.count("q")) throw SpecError(std::string(kGroupRule) + " (PSL2 takes exactly q)");
      return Group::psl2(kv["q"]);
    }
    if (kind == "AGL") {
      if (kv.size() != 2 || !kv.count("q") || !kv.count("n"))
        throw SpecError(std::string(kGroupRule) + " (AGL takes exactly n and q)");
      return Group::agl(kv["n"], kv["q"]);
    }
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    throw SpecError(std::string(kGroupRule) + " (" + e.what() + ")");
  }
  throw SpecError(std::string(kGroupRule) + " (unknown group kind '" + kind + "')");
}

Subgroup parse_subgroup_spec(const Group& G, const std::string& text)
{
  std::map<std::string, std::string> kv;
  for (const auto& [k, v] : parse_key_values(text, kSubgroupRule)) {
    if (kv.count(k)) throw SpecError(std::string(kSubgroupRule) + " (duplicate key '" + k + "')");
    kv[k] = v;
  }
  auto only = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : kv) {
      bool ok = false;
      for (const char* a : keys) ok = ok || k == a;
      if (!ok) throw SpecError(std::string(kSubgroupRule) + " (unexpected key '" + k + "')");
    }
  };
  try {
    if (kv.count("index")) {
      only({"index"});
      const std::uint32_t idx = parse_uint(kv["index"], kSubgroupRule);
      const auto subs = enumerate_subgroups(G);
      if (idx >= subs.size())
        throw SpecError(std::string(kSubgroupRule) + " (index " + std::to_string(idx) + " out of range, " +
                        std::to_string(subs.size()) + " classes)");
      return subs[idx];
    }
    if (!kv.count("family")) throw SpecError(std::string(kSubgroupRule) + " (missing family or index)");
    const std::string fam = kv["family"];
    if (fam == "M") {
      only({"family", "r"});
      if (!kv.count("r")) throw SpecError(std::string(kSubgroupRule) + " (family=M needs r)");
      return subgroup_M(G, parse_uint(kv["r"], kSubgroupRule));
    }
    if (fam == "Ei") {
      only({"family", "i"});
      if (!kv.count("i")) throw SpecError(std::string(kSubgroupRule) + " (family=Ei needs i)");
      return subgroup_E(G, parse_uint(kv["i"], kSubgroupRule));
    }
    only({"family"});
    if (fam == "U") return subgroup_U(G);
    if (fam == "V") return subgroup_V(G);
    if (fam == "torus") return subgroup_torus(G);
    if (fam == "borel") return subgroup_borel(G);
    if (fam == "unipotent") return subgroup_unipotent(G);
    if (fam == "linear") return subgroup_linear(G);
    if (fam == "translations") return subgroup_translations(G);
    if (fam == "whole") return closure(G, G.generators(), "whole");
    if (fam == "trivial") return closure(G, {}, "trivial");
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    throw SpecError(std::string(kSubgroupRule) + " (" + e.what() + ")");
  }
  throw SpecError(std::string(kSubgroupRule) + " (unknown family '" + kv["family"] + "')");
}

} // namespace intspec
