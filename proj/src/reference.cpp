#include "intspec/reference.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace intspec {

namespace {

// One table per line: q, then "label=rho" items separated by ';'.
const char* kTables[] = {
    "3|1=1;C2=2;C3=1;C2 x C2=1;A4=1",
    "4|1=1;C2=2;C3=4/3;C2 x C2=1;C5=1;S3=2;D5=1;A4=1;A5=1",
    "5|1=1;C2=2;C3=4/3;C2 x C2=1;C5=1;S3=2;D5=1;A4=1;A5=1",
    "7|1=1;C2=2;C3=4/3;C2 x C2=1;C2 x C2=1;C4=2;S3=2;C7=1;D4=1;A4=1;A4=1;C7 : C3=1;S4=1;S4=1;PSL(3,2)=1",
    "8|1=1;C2=4;C3=1;C2 x C2=2;S3=4/3;C7=10/7;C2 x C2 x C2=1;C9=1;D7=4;D9=1;(C2 x C2 x C2) : C7=1;PSL(2,8)=1",
    "9|1=1;C2=2;C3=5/3;C3=5/3;C2 x C2=1;C2 x C2=1;C4=2;C5=9/5;S3=5/2;S3=5/2;D4=1;C3 x C3=1;D5=11/10;A4=5/4;"
    "A4=5/4;(C3 x C3) : C2=1;S4=1;S4=1;(C3 x C3) : C4=1;A5=1;A5=1;A6=1",
    "11|1=1;C2=2;C3=4/3;C2 x C2=1;C5=12/5;S3=2;S3=2;C6=2;D5=17/10;C11=1;A4=1;D6=1;C11 : C5=1;A5=1;A5=1;"
    "PSL(2,11)=1",
    "13|1=1;C2=2;C3=4/3;C2 x C2=1;C6=2;S3=2;S3=2;C7=9/7;A4=1;D6=1;C13=1;D7=10/7;D13=1;C13 : C3=1;C13 : C6=1;"
    "PSL(2,13)=1",
    "17|1=1;C2=2;C3=1;C2 x C2=1;C2 x C2=1;C4=2;S3=2;C8=2;D4=1;D4=1;C9=11/9;A4=1;A4=1;D8=1;C17=1;D9=1;S4=1;S4=1;"
    "D17=1;C17 : C4=1;C17 : C8=1;PSL(2,17)=1",
    "19|1=1;C2=2;C3=4/3;C2 x C2=1;C5=6/5;S3=2;C9=7/3;D5=1;D5=1;C10=2;A4=1;D9=4/3;C19=1;D10=1;C19 : C3=1;A5=1;"
    "A5=1;C19 : C9=1;PSL(2,19)=1",
};

} // namespace

std::optional<std::vector<std::pair<std::string, Rational>>> reference_table(std::uint32_t q)
{
  for (const char* t : kTables) {
    const std::string line = t;
    const std::size_t bar = line.find('|');
    if (std::stoul(line.substr(0, bar)) != q) continue;
    std::vector<std::pair<std::string, Rational>> rows;
    std::stringstream ss(line.substr(bar + 1));
    std::string item;
    while (std::getline(ss, item, ';')) {
      const std::size_t eq = item.rfind('=');
      rows.emplace_back(item.substr(0, eq), parse_rational(item.substr(eq + 1)));
    }
    return rows;
  }
  return std::nullopt;
}

ReferenceComparison compare_with_reference(const SpectrumReport& s, std::uint32_t q)
{
  ReferenceComparison cmp;
  const auto table = reference_table(q);
  if (!table) {
    cmp.mismatches.push_back("no published table for q=" + std::to_string(q));
    return cmp;
  }
  std::map<std::string, std::vector<Rational>> want;
  for (const auto& [label, rho] : *table) want[label].push_back(rho);
  std::map<std::string, std::vector<const DensityReport*>> got;
  for (const auto& r : s.rows) got[r.label].push_back(&r);
  if (table->size() != s.rows.size())
    cmp.mismatches.push_back("row count " + std::to_string(s.rows.size()) + " vs " + std::to_string(table->size()));

  for (auto& [label, values] : want) {
    auto it = got.find(label);
    if (it == got.end() || it->second.size() != values.size()) {
      cmp.mismatches.push_back("label " + label + " occurs " + std::to_string(it == got.end() ? 0 : it->second.size()) +
                               " times, expected " + std::to_string(values.size()));
      continue;
    }
    // Certified rows must hit published values; uncertified rows must bracket one.
    std::vector<Rational> remaining = values;
    std::vector<const DensityReport*> open;
    for (const DensityReport* r : it->second) {
      if (!r->certified) {
        open.push_back(r);
        continue;
      }
      auto pos = std::find(remaining.begin(), remaining.end(), r->rho);
      if (pos == remaining.end()) {
        cmp.mismatches.push_back(label + ": certified " + to_fraction_string(r->rho) + " not in the published rows");
      } else {
        remaining.erase(pos);
      }
    }
    for (const DensityReport* r : open) {
      ++cmp.uncertified;
      auto pos = std::find_if(remaining.begin(), remaining.end(),
                              [&](const Rational& v) { return r->rho <= v && v <= r->rho_upper; });
      if (pos == remaining.end()) {
        cmp.mismatches.push_back(label + ": uncertified range excludes the published value");
      } else {
        ++cmp.bounded_ok;
        remaining.erase(pos);
      }
    }
  }
  for (const auto& [label, rows] : got)
    if (!want.count(label)) cmp.mismatches.push_back("unexpected label " + label);
  cmp.rows_match = cmp.mismatches.empty();
  return cmp;
}

} // namespace intspec
