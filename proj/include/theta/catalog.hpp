#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "theta/braid.hpp"

namespace theta {

// Serialized as "paper_appendix_A", "paper_section_8_3", "external_table".
enum class CatalogSource { AppendixTable, KnotSection, ExternalTable };

std::string to_string(CatalogSource s);
CatalogSource parse_catalog_source(const std::string& s);

struct CatalogEntry {
  std::string name;
  std::string braid;
  int components = 1;
  CatalogSource source = CatalogSource::ExternalTable;
  std::optional<int> strands;  // only when trailing trivial strands matter
  std::vector<std::string> aliases;

  BraidWord word() const;
  nlohmann::json to_json() const;
  static CatalogEntry from_json(const nlohmann::json& j);
};

class Catalog {
 public:
  static Catalog builtin();
  static Catalog load_jsonl(std::istream& in);
  static Catalog load_jsonl(const std::filesystem::path& path);

  void write_jsonl(std::ostream& out) const;
  void add(CatalogEntry e);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  /// Exact name, listed alias, or the dotted form "L11n418.00".
  const CatalogEntry* find(const std::string& name) const;
  const CatalogEntry& at(const std::string& name) const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// "L11n418{0,0}" -> "L11n418.00"; names without braces are returned as is.
std::string dotted_name(const std::string& name);

}  // namespace theta
