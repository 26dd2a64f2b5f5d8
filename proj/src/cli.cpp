#include "theta/cli.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "theta/cache.hpp"
#include "theta/catalog.hpp"
#include "theta/invariants.hpp"
#include "theta/validate.hpp"

namespace theta::cli {

namespace {

// Bad input from the user (unknown name, unparsable braid): exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParsedInvariant {
  InvariantKind kind = InvariantKind::Theta;
  int d = 1;
  std::string id;
};

ParsedInvariant parse_invariant(const std::string& text) {
  ParsedInvariant p;
  p.id = text;
  if (text == "theta") return p;
  if (text == "homflypt") {
    p.kind = InvariantKind::Homflypt;
    return p;
  }
  const std::string prefix = "theta-d:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      p.d = std::stoi(text.substr(prefix.size()), &used);
      if (used == text.size() - prefix.size() && p.d >= 1) {
        p.kind = InvariantKind::ThetaD;
        p.id = prefix + std::to_string(p.d);
        return p;
      }
    } catch (const std::exception&) {
    }
  }
  throw UsageError("invalid --invariant '" + text + "' (expected theta, homflypt or theta-d:<d> with d >= 1)");
}

struct Resolved {
  std::string name;
  BraidWord word;
};

Catalog load_catalog(const std::string& path) {
  if (path.empty()) return Catalog::builtin();
  try {
    return Catalog::load_jsonl(std::filesystem::path(path));
  } catch (const std::exception& ex) {
    throw UsageError(ex.what());
  }
}

BraidWord parse_user_braid(const std::string& text, std::optional<int> strands) {
  try {
    return parse_braid(text, strands);
  } catch (const std::exception& ex) {
    throw UsageError(ex.what());
  }
}

// A catalog name, its dotted form, or literal braid text.
Resolved resolve(const Catalog& cat, const std::string& ref, std::optional<int> strands) {
  if (const CatalogEntry* e = cat.find(ref)) {
    BraidWord w = e->word();
    if (strands) w = parse_user_braid(e->braid, std::max(*strands, w.strands));
    return {e->name, w};
  }
  if (!ref.empty() && (ref.front() == '{' || ref.front() == '-' || std::isdigit(static_cast<unsigned char>(ref.front()))))
    return {"", parse_user_braid(ref, strands)};
  throw UsageError("unknown link name '" + ref + "'");
}

// The cache is a pure memo: a hit returns exactly what a fresh computation
// would. For --engine all an entry is only written once the engines agreed.
ScalarValue compute(const BraidWord& w, const ParsedInvariant& inv, Engine engine,
                    const std::unique_ptr<ResultCache>& cache) {
  std::string key;
  if (cache) {
    key = ResultCache::key(w, inv.id, engine_name(engine));
    if (auto hit = cache->get(key)) return *hit;
  }
  InvariantRequest req;
  req.word = w;
  req.kind = inv.kind;
  req.d = inv.d;
  req.engine = engine;
  const ScalarValue v = evaluate(req);
  if (cache) cache->put(key, v);
  return v;
}

Engine engine_option(const std::string& s) {
  if (s == "trace") return Engine::Trace;
  if (s == "skein") return Engine::Skein;
  if (s == "closed") return Engine::Closed;
  if (s == "all") return Engine::All;
  if (s == "default") return Engine::Default;
  throw UsageError("invalid --engine '" + s + "'");
}

std::unique_ptr<ResultCache> open_cache(const std::string& dir) {
  if (dir.empty()) return nullptr;
  try {
    return std::make_unique<ResultCache>(dir);
  } catch (const std::exception& ex) {
    throw UsageError(std::string("cannot use cache directory: ") + ex.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact link invariants Theta, Theta_d and the Homflypt polynomial from braid words", "thetalink"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string engine_text = "default";
  std::string cache_dir;
  std::string catalog_path;
  std::optional<int> strands;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--engine", engine_text, "trace, skein, closed or all")
        ->check(CLI::IsMember({"default", "trace", "skein", "closed", "all"}));
    sub->add_option("--cache-dir", cache_dir, "Directory for cached results");
    sub->add_option("--catalog", catalog_path, "JSON-lines link catalog (default: built-in)");
    sub->add_option("--strands", strands, "Strand count (adds trailing free strands)")->check(CLI::Range(1, 16));
  };

  auto* eval = app.add_subcommand("eval", "Evaluate an invariant of one link");
  std::string braid_text;
  std::string link_name;
  std::string invariant_text = "theta";
  auto* braid_opt = eval->add_option("--braid", braid_text, "Braid word such as \"{1,-2,1}\"");
  auto* link_opt = eval->add_option("--link", link_name, "Catalog link name");
  braid_opt->excludes(link_opt);
  eval->add_option("--invariant", invariant_text, "theta, homflypt or theta-d:<d>");
  add_common(eval);

  auto* cmp = app.add_subcommand("compare", "Compare two links by P and Theta");
  std::string ref1;
  std::string ref2;
  cmp->add_option("link1", ref1, "Catalog name or braid word")->required();
  cmp->add_option("link2", ref2, "Catalog name or braid word")->required();
  add_common(cmp);

  auto* val = app.add_subcommand("validate", "Run a validation suite");
  std::string suite;
  SuiteOptions opts;
  val->add_option("--suite", suite, "paper, properties or esystem")
      ->required()
      ->check(CLI::IsMember({"paper", "properties", "esystem"}));
  val->add_option("--seed", opts.seed, "Seed for randomized checks");
  val->add_option("--max-strands", opts.max_strands, "Largest strand count of random braids")->check(CLI::Range(2, 8));
  val->add_option("--max-length", opts.max_length, "Longest random braid word")->check(CLI::Range(0, 40));
  val->add_option("--samples", opts.samples, "Random samples per property")->check(CLI::Range(1, 100000));
  val->add_option("--tolerance", opts.tolerance, "Numeric tolerance of the E-system checks")
      ->check(CLI::PositiveNumber);
  val->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* list = app.add_subcommand("catalog", "Print the link catalog as JSON lines");
  list->add_option("--catalog", catalog_path, "JSON-lines link catalog (default: built-in)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (eval->parsed()) {
      if (braid_opt->count() + link_opt->count() != 1)
        throw UsageError("eval needs exactly one of --braid or --link");
      const Catalog cat = load_catalog(catalog_path);
      const ParsedInvariant inv = parse_invariant(invariant_text);
      const Engine engine = engine_option(engine_text);
      const auto cache = open_cache(cache_dir);
      Resolved r = link_opt->count() ? resolve(cat, link_name, strands) : Resolved{"", parse_user_braid(braid_text, strands)};
      const ScalarValue v = compute(r.word, inv, engine, cache);
      if (format == "json") {
        nlohmann::json j = {{"link", r.name.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.name)},
                            {"braid", to_string(r.word)},
                            {"strands", r.word.strands},
                            {"invariant", inv.id},
                            {"engine", engine_name(engine)},
                            {"value", to_json(v)}};
        if (engine == Engine::All) j["engines_agree"] = true;
        out << j.dump() << "\n";
      } else {
        out << to_text(v) << "\n";
        if (engine == Engine::All) out << "engines agree (trace, skein, closed)\n";
      }
      return kOk;
    }

    if (cmp->parsed()) {
      const Catalog cat = load_catalog(catalog_path);
      const Engine engine = engine_option(engine_text);
      const auto cache = open_cache(cache_dir);
      const Resolved a = resolve(cat, ref1, strands);
      const Resolved b = resolve(cat, ref2, strands);
      const ParsedInvariant th = parse_invariant("theta");
      const ComparisonReport rep =
          compare_values(compute(a.word, th, engine, cache), compute(b.word, th, engine, cache),
                         a.name.empty() ? to_string(a.word) : a.name, b.name.empty() ? to_string(b.word) : b.name);
      if (format == "json") {
        out << rep.to_json().dump() << "\n";
      } else {
        out << "link1: " << rep.link1 << "\n"
            << "link2: " << rep.link2 << "\n"
            << "P difference: " << to_text(rep.p_difference) << "\n"
            << "Theta difference: " << to_text(rep.theta_difference) << "\n";
        for (const auto& [k, v] : rep.specializations) out << "Theta difference at E=" << k << ": " << to_text(v) << "\n";
        out << "P-equal: " << (rep.p_equal ? "yes" : "no") << "\n";
        if (rep.theta_distinguished) out << "P-equal but Theta-distinguished\n";
      }
      return rep.theta_distinguished ? kDistinguished : kOk;
    }

    if (val->parsed()) {
      const auto results = run_suite(suite, opts);
      const bool ok = all_passed(results);
      std::size_t passed = 0;
      for (const auto& r : results) passed += r.passed ? 1 : 0;
      if (format == "json") {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& r : results) checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        out << nlohmann::json{{"suite", suite}, {"seed", opts.seed}, {"passed", ok}, {"checks", checks}}.dump() << "\n";
      } else {
        for (const auto& r : results) {
          out << (r.passed ? "PASS " : "FAIL ") << r.name;
          if (!r.detail.empty()) out << " [" << r.detail << "]";
          out << "\n";
        }
        if (suite == "paper")
          for (const auto& note : laurent_form_notes()) out << "note: " << note << "\n";
        out << passed << "/" << results.size() << " checks passed\n";
      }
      return ok ? kOk : kComputation;
    }

    if (list->parsed()) {
      load_catalog(catalog_path).write_jsonl(out);
      return kOk;
    }
  } catch (const UsageError& ex) {
    err << "thetalink: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    err << "thetalink: " << ex.what() << "\n";
    return kComputation;
  }
  return kUsage;
}

}  // namespace theta::cli
