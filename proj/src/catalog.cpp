#include "theta/catalog.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace theta {

std::string to_string(CatalogSource s) {
  switch (s) {
    case CatalogSource::AppendixTable: return "paper_appendix_A";
    case CatalogSource::KnotSection: return "paper_section_8_3";
    case CatalogSource::ExternalTable: break;
  }
  return "external_table";
}

CatalogSource parse_catalog_source(const std::string& s) {
  if (s == "paper_appendix_A") return CatalogSource::AppendixTable;
  if (s == "paper_section_8_3") return CatalogSource::KnotSection;
  if (s == "external_table") return CatalogSource::ExternalTable;
  throw std::invalid_argument("unknown catalog source '" + s + "'");
}

BraidWord CatalogEntry::word() const { return parse_braid(braid, strands); }

nlohmann::json CatalogEntry::to_json() const {
  nlohmann::json j = {{"name", name}, {"braid", braid}, {"components", components}, {"source", to_string(source)}};
  if (strands) j["strands"] = *strands;
  if (!aliases.empty()) j["aliases"] = aliases;
  return j;
}

CatalogEntry CatalogEntry::from_json(const nlohmann::json& j) {
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.braid = j.at("braid").get<std::string>();
  e.components = j.at("components").get<int>();
  e.source = parse_catalog_source(j.at("source").get<std::string>());
  if (j.contains("strands")) e.strands = j.at("strands").get<int>();
  if (j.contains("aliases")) e.aliases = j.at("aliases").get<std::vector<std::string>>();
  return e;
}

std::string dotted_name(const std::string& name) {
  const auto open = name.find('{');
  if (open == std::string::npos || name.back() != '}') return name;
  std::string out = name.substr(0, open) + ".";
  for (std::size_t i = open + 1; i + 1 < name.size(); ++i)
    if (name[i] != ',' && name[i] != ' ') out += name[i];
  return out;
}

void Catalog::add(CatalogEntry e) {
  const BraidWord w = e.word();
  const int found = components(w).count;
  if (found != e.components)
    throw std::invalid_argument("catalog entry " + e.name + " declares " + std::to_string(e.components) +
                                " components but its braid closes to " + std::to_string(found));
  if (find(e.name)) throw std::invalid_argument("duplicate catalog name " + e.name);
  entries_.push_back(std::move(e));
}

const CatalogEntry* Catalog::find(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name || dotted_name(e.name) == name) return &e;
    for (const auto& a : e.aliases)
      if (a == name || dotted_name(a) == name) return &e;
  }
  return nullptr;
}

const CatalogEntry& Catalog::at(const std::string& name) const {
  if (const CatalogEntry* e = find(name)) return *e;
  throw std::out_of_range("unknown link name '" + name + "'");
}

Catalog Catalog::load_jsonl(std::istream& in) {
  Catalog c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      c.add(CatalogEntry::from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& ex) {
      throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": " + ex.what());
    }
  }
  return c;
}

Catalog Catalog::load_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open catalog " + path.string());
  return load_jsonl(in);
}

void Catalog::write_jsonl(std::ostream& out) const {
  for (const auto& e : entries_) out << e.to_json().dump() << "\n";
}

Catalog Catalog::builtin() {
  using S = CatalogSource;
  Catalog c;
  auto entry = [&](std::string name, std::string braid, int comps, S source,
                   std::vector<std::string> aliases = {}, std::optional<int> strands = std::nullopt) {
    CatalogEntry e;
    e.name = std::move(name);
    e.braid = std::move(braid);
    e.components = comps;
    e.source = source;
    e.aliases = std::move(aliases);
    e.strands = strands;
    c.add(std::move(e));
  };

  entry("unknot", "{}", 1, S::ExternalTable, {"0_1"}, 1);
  entry("hopf", "{1, 1}", 2, S::ExternalTable, {"L2a1"});
  entry("3_1", "{1, 1, 1}", 1, S::ExternalTable, {"trefoil"});
  entry("3_1*", "{-1, -1, -1}", 1, S::ExternalTable);
  entry("4_1", "{1, -2, 1, -2}", 1, S::ExternalTable, {"figure-eight"});
  entry("6_2*", "{1, -2, 1, -2, -2, -2}", 1, S::ExternalTable);
  entry("solomon", "{1, 1, 1, 1}", 2, S::ExternalTable, {"L4a1"});

  entry("5_2*", "{-1, 2, -1, -2, -2, -2}", 1, S::KnotSection);
  entry("8_20", "{-2, 1, -2, -1, 2, -1, -2, 1}", 1, S::KnotSection);

  const S A = S::AppendixTable;
  entry("L11n358{0,1}", "{1, -2, -3, -4, 3, 3, -5, 4, -3, 2, -1, -3, -2, -4, 3, -2, -2, -2, 5, 4, -3}", 3, A);
  entry("L11n418{0,0}", "{-1, -2, 3, -2, -3, 2, -1, -3, -3, 2, -3}", 3, A);
  entry("L11a467{0,1}",
        "{1, -2, -3, 4, 3, -2, 3, 3, -2, -4, 5, 4, 3, -2, -1, -2, -3, -2, -2, -4, 3, -2, -5}", 3, A,
        {"L11n467{0,1}"});
  entry("L11a527{0,0}", "{1, 2, -3, -4, -3, 5, 4, -3, -2, -1, -3, -4, -3, 2, -3, -3, -5, 4, -3, 2, 2}", 3,
        A, {"L11n527{0,0}"});
  entry("L11n325{1,1}", "{-1, 2, -1, 2, -1, -2, -2, 3, -2, 3, -2}", 3, A);
  entry("L11n424{0,0}", "{-1, 2, -1, -2, 3, -2, -2, 1, -2, 3, -2}", 3, A);
  entry("L10n79{1,1}", "{-1, 2, -1, 2, -1, -2, -2, -2, -2, -2}", 3, A);
  entry("L10n95{1,0}", "{-1, 2, -1, -2, -2, -2, 1, -2, -2, -2}", 3, A);
  entry("L11a404{1,1}", "{-1, -1, 2, 2, -1, 3, 2, 2, -1, 2, 2, -3, 2}", 3, A);
  entry("L11a428{0,1}", "{1, -2, 3, -2, 1, 1, 1, -2, 3, -2, 1}", 3, A);
  entry("L10n76{1,1}", "{1, 2, -3, 4, -3, -2, -1, -3, -2, 3, -2, 3, -2, -3, -4, -3}", 3, A);
  entry("L11n425{1,0}", "{-1, 2, -1, -3, -3, -2, 1, 3, -2, -3, -3}", 3, A);
  return c;
}

}  // namespace theta
