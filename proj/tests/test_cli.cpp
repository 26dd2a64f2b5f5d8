#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "support.hpp"

#include "theta/cache.hpp"
#include "theta/catalog.hpp"
#include "theta/cli.hpp"
#include "theta/invariants.hpp"

using namespace theta;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("thetalink-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("catalog") {
  const Catalog cat = Catalog::builtin();
  CHECK(cat.at("L11n418.00").name == "L11n418{0,0}");
  CHECK(cat.at("L11n467{0,1}").name == "L11a467{0,1}");
  CHECK(cat.at("trefoil").braid == "{1, 1, 1}");
  CHECK(cat.find("nope") == nullptr);
  CHECK(dotted_name("L10n95{1,0}") == "L10n95.10");
  int appendix = 0;
  for (const auto& e : cat.entries()) appendix += e.source == CatalogSource::AppendixTable ? 1 : 0;
  CHECK(appendix == 12);

  std::stringstream io;
  cat.write_jsonl(io);
  const Catalog back = Catalog::load_jsonl(io);
  REQUIRE(back.entries().size() == cat.entries().size());
  for (std::size_t i = 0; i < back.entries().size(); ++i) CHECK(back.entries()[i].to_json() == cat.entries()[i].to_json());

  std::stringstream bad(R"({"name":"x","braid":"{1,1}","components":1,"source":"external_table"})");
  CHECK_THROWS(Catalog::load_jsonl(bad));
  std::stringstream bad_source(R"({"name":"x","braid":"{1}","components":1,"source":"elsewhere"})");
  CHECK_THROWS(Catalog::load_jsonl(bad_source));
}

TEST_CASE("bundled catalog file matches the built-in catalog") {
  const Catalog file = Catalog::load_jsonl(std::filesystem::path(THETA_DATA_DIR) / "catalog.jsonl");
  const Catalog cat = Catalog::builtin();
  REQUIRE(file.entries().size() == cat.entries().size());
  for (std::size_t i = 0; i < cat.entries().size(); ++i) CHECK(file.entries()[i].to_json() == cat.entries()[i].to_json());
}

TEST_CASE("cache") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const BraidWord h = parse_braid("{1,1}");
  const std::string k = ResultCache::key(h, "theta", "trace");
  CHECK(k.size() == 64);
  CHECK(k != ResultCache::key(parse_braid("{1,1}", 3), "theta", "trace"));
  CHECK(k != ResultCache::key(h, "homflypt", "trace"));
  CHECK(k != ResultCache::key(h, "theta", "skein"));

  const auto dir = fresh_dir("cache");
  ResultCache cache(dir);
  CHECK_FALSE(cache.get(k));
  const ScalarValue v = theta::theta(h);
  cache.put(k, v);
  REQUIRE(cache.get(k));
  CHECK(*cache.get(k) == v);
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    ++files;
    CHECK(entry.path().extension() == ".json");
  }
  CHECK(files == 1);
  {
    std::ofstream corrupt(cache.path_for(k));
    corrupt << "{not json";
  }
  CHECK_FALSE(cache.get(k));
  std::filesystem::remove_all(dir);
}

TEST_CASE("eval") {
  Run r = run({"eval", "--braid", "{1,1}", "--invariant", "theta", "--engine", "all"});
  CHECK(r.code == 0);
  CHECK(parse_scalar(r.out.substr(0, r.out.find('\n'))) ==
        ScalarValue::lambda() * ScalarValue::mu() * ScalarValue::E(-1) + ScalarValue::delta() * ScalarValue::s());
  CHECK(r.out.find("engines agree") != std::string::npos);

  r = run({"eval", "--braid", "{}", "--strands", "1", "--invariant", "theta"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");

  r = run({"eval", "--link", "L11n418.00", "--invariant", "homflypt", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["link"] == "L11n418{0,0}");
  CHECK(scalar_from_json(j["value"]) == homflypt(Catalog::builtin().at("L11n418{0,0}").word()));

  r = run({"eval", "--braid", "{1,1}", "--invariant", "theta-d:2"});
  CHECK(r.code == 0);
  CHECK(parse_scalar(r.out) == theta_d(parse_braid("{1,1}"), 2));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"eval"}).code == cli::kUsage);
  CHECK(run({"eval", "--braid", "{1,0}"}).code == cli::kUsage);
  CHECK(run({"eval", "--link", "nope"}).code == cli::kUsage);
  CHECK(run({"eval", "--braid", "{1}", "--link", "hopf"}).code == cli::kUsage);
  CHECK(run({"eval", "--braid", "{1}", "--invariant", "theta-d:0"}).code == cli::kUsage);
  CHECK(run({"eval", "--braid", "{1}", "--engine", "fast"}).code == cli::kUsage);
  CHECK(run({"validate", "--suite", "other"}).code == cli::kUsage);
  CHECK(run({"compare", "hopf"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("compare exit codes") {
  Run r = run({"compare", "L10n79{1,1}", "L10n95{1,0}", "--format", "json"});
  CHECK(r.code == cli::kDistinguished);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["p_equal"] == true);
  CHECK(scalar_from_json(j["theta_difference"]) ==
        -parse_scalar("(E-1)*(L-1)*(q-1)^2*(q+1)^2*(L + L*q^4 + L*q^2 - q^2)*(E*L^4*q^4)^(-1)"));

  r = run({"compare", "hopf", "hopf"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("Theta difference: 0\n") != std::string::npos);

  r = run({"compare", "3_1", "{1,-2,1,-2}"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("P-equal: no") != std::string::npos);
}

TEST_CASE("cache transparency") {
  const auto dir = fresh_dir("transparency");
  for (const std::vector<std::string>& base :
       {std::vector<std::string>{"eval", "--link", "L10n76{1,1}", "--format", "json"},
        std::vector<std::string>{"eval", "--braid", "{1,-2,1,2}", "--engine", "all"},
        std::vector<std::string>{"compare", "L10n76{1,1}", "L11n425{1,0}"}}) {
    const Run plain = run(base);
    auto cached_args = base;
    cached_args.push_back("--cache-dir");
    cached_args.push_back(dir.string());
    const Run first = run(cached_args);
    const Run second = run(cached_args);
    CHECK(first.out == plain.out);
    CHECK(second.out == plain.out);
    CHECK(first.code == plain.code);
    CHECK(second.code == plain.code);
  }
  CHECK_FALSE(std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
}

TEST_CASE("JSON output round trips") {
  for (const char* w : {"{1,1}", "{1,-2,1,-2}", "{1,1,2,-1,2}", "{}"}) {
    const Run r = run({"eval", "--braid", w, "--strands", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const ScalarValue v = scalar_from_json(j["value"]);
    CHECK(to_json(v) == j["value"]);
    CHECK(v == theta::theta(parse_braid(w, 3)));
  }
}

TEST_CASE("validate esystem") {
  const Run r = run({"validate", "--suite", "esystem"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
