#include <doctest.h>

#include <cstdlib>
#include <random>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cache.hpp"
#include "cli.hpp"

using namespace slicestab;
using namespace slicestab::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Points the result cache at a fresh directory for the lifetime of the object.
struct TempCache {
  fs::path dir;
  TempCache() {
    dir = fs::temp_directory_path() / ("slicestab-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    setenv("SLICESTAB_CACHE_DIR", dir.c_str(), 1);
  }
  ~TempCache() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  int entries() const { return static_cast<int>(std::distance(fs::directory_iterator(dir), fs::directory_iterator())); }
};

const std::vector<std::string> kTp1{"--type", "A", "--rank", "1", "--lambda", "1,1", "--mu", "0"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST_CASE("fixed points command") {
  TempCache cache;
  const auto r = run_cli(with({"fixed-points"}, kTp1));
  CHECK(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc.at("count") == 2);
  CHECK(doc.at("dimension") == 2);
  CHECK(doc.at("points") == Json::parse("[[[-1],[1]],[[1],[-1]]]"));
}

TEST_CASE("exact stable envelopes of the A4 surface are verify-clean") {
  TempCache cache;
  const auto r = run_cli({"stab-exact", "--type", "A", "--rank", "1", "--lambda", "1,1,1,1,1", "--mu", "3", "--chamber",
                          "dominant", "--no-cache"});
  CHECK(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc.at("ok") == true);
  CHECK(doc.at("matrix").at("points").size() == 5);
}

TEST_CASE("verify all on T*Fl3") {
  TempCache cache;
  const auto r = run_cli({"verify", "all", "--type", "A", "--rank", "2", "--lambda", "1,1,1", "--mu", "0,0"});
  CHECK(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc.at("ok") == true);
  int skipped = 0;
  for (const auto& c : doc.at("checks")) skipped += c.at("skipped").get<bool>();
  CHECK(skipped == 2);
  // A1-only groups requested explicitly on rank two are input errors.
  CHECK(run_cli({"verify", "duality", "--type", "A", "--rank", "2", "--lambda", "1,1,1", "--mu", "0,0"}).code == 2);
}

TEST_CASE("verify groups on a PSL2 slice") {
  TempCache cache;
  for (const std::string g : {"duality", "recursion", "wallcross", "oracle", "all"}) {
    CAPTURE(g);
    const auto r = run_cli(with({"verify", g}, {"--type", "A", "--rank", "1", "--lambda", "1,1,1,1", "--mu", "0"}));
    CHECK(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(!doc.at("checks").empty());
    for (const auto& c : doc.at("checks")) CHECK(c.at("passed") == true);
  }
}

TEST_CASE("input errors exit with code 2") {
  TempCache cache;
  CHECK(run_cli({"fixed-points", "--type", "A", "--rank", "1", "--lambda", "1", "--mu", "0"}).code == 2);
  CHECK(run_cli({"fixed-points", "--type", "B", "--rank", "2", "--lambda", "2", "--mu", "0,0"}).code == 2);
  CHECK(run_cli({"fixed-points", "--type", "Q", "--rank", "2", "--lambda", "1", "--mu", "0,0"}).code == 2);
  CHECK(run_cli({"fixed-points", "--type", "A", "--rank", "1"}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli(with({"stab-exact", "--chamber", "0"}, kTp1)).code == 2);
  CHECK(run_cli(with({"stab-exact", "--polarization", "1,2"}, kTp1)).code == 2);
  CHECK(run_cli(with({"stab-exact", "--polarization", "1"}, kTp1)).code == 2);
  CHECK(run_cli(with({"mult", "--bundle", "L9"}, kTp1)).code == 2);
  CHECK(run_cli(with({"mult", "--bundle", "Q1"}, kTp1)).code == 2);
  CHECK(run_cli({"stab-exact", "--type", "A", "--rank", "2", "--lambda", "1,1,1", "--mu", "0,0"}).code == 2);
  CHECK(run_cli(with({"fixed-points", "--format", "xml"}, kTp1)).code == 2);
  const auto r = run_cli({"fixed-points", "--type", "A", "--rank", "1", "--lambda", "1", "--mu", "0"});
  CHECK(r.out.empty());
  CHECK(!r.err.empty());
  CHECK(cache.entries() == 0);
}

TEST_CASE("help exits cleanly") { CHECK(run_cli({"--help"}).code == 0); }

TEST_CASE("output is deterministic and the table agrees with the JSON") {
  TempCache cache;
  const auto args = with({"mult", "--bundle", "E1", "--no-cache"}, kTp1);
  const auto r1 = run_cli(args);
  const auto r2 = run_cli(args);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);

  const Json doc = Json::parse(r1.out);
  CHECK(render_table(doc) == run_cli(with(args, {"--format", "table"})).out);
  const std::string table = render_table(doc);
  CHECK(table.find("bundle\tE1") != std::string::npos);
  CHECK(table.find("-h") != std::string::npos);
  CHECK(table.find("1/2*a1 + 1/4*h") != std::string::npos);

  const auto t = run_cli(with({"fixed-points", "--format", "table"}, kTp1));
  CHECK(t.out.find("(-w,w)") != std::string::npos);
  const auto v = run_cli(with({"verify", "duality", "--format", "table"}, kTp1));
  CHECK(v.out.find("PASS") != std::string::npos);
  CHECK(v.out.find("FAIL") == std::string::npos);
  for (const std::string cmd : {"tangent", "stab-exact", "stab-mod-h2"})
    CHECK(run_cli(with({cmd, "--format", "table"}, kTp1)).code == 0);
}

TEST_CASE("point labels") {
  CHECK(point_label(Json::parse("[[-1],[1]]")) == "(-w,w)");
  CHECK(point_label(Json::parse("[[1,0],[-1,1]]")) == "(1,0;-1,1)");
}

TEST_CASE("result cache") {
  TempCache cache;
  const auto args = with({"stab-mod-h2"}, kTp1);
  const auto first = run_cli(args);
  CHECK(first.code == 0);
  CHECK(cache.entries() == 1);
  CHECK(run_cli(args).out == first.out);
  CHECK(cache.entries() == 1);
  CHECK(run_cli(with(args, {"--chamber", "antidominant"})).code == 0);
  CHECK(cache.entries() == 2);

  // A hit is served from the stored document.
  for (const auto& e : fs::directory_iterator(cache.dir)) {
    std::ifstream in(e.path());
    std::stringstream ss;
    ss << in.rdbuf();
    if (Json::parse(ss.str()).at("spec").at("chamber") == "dominant") {
      Json doc = Json::parse(ss.str());
      doc["marker"] = 1;
      std::ofstream(e.path(), std::ios::trunc) << doc.dump();
    }
  }
  CHECK(Json::parse(run_cli(args).out).contains("marker"));
  // --no-cache recomputes.
  CHECK(run_cli(with(args, {"--no-cache"})).out == first.out);
  // A corrupt entry is recomputed.
  for (const auto& e : fs::directory_iterator(cache.dir)) std::ofstream(e.path(), std::ios::trunc) << "{";
  CHECK(run_cli(args).out == first.out);
}

TEST_CASE("cache keys") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  JobSpec a;
  a.command = "mult";
  a.lambda = {1, 1};
  a.mu = {0};
  a.bundle = "E1";
  JobSpec b = a;
  b.format = "table";
  b.out = "x.txt";
  CHECK(a.canonical() == b.canonical());
  b.bundle = "E2";
  CHECK(a.canonical() != b.canonical());
}

TEST_CASE("output file") {
  TempCache cache;
  const fs::path path = cache.dir / "out.json";
  const auto r = run_cli(with({"fixed-points", "--out", path.string(), "--no-cache"}, kTp1));
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(Json::parse(ss.str()).at("count") == 2);
}
