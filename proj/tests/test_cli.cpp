#include <doctest.h>

#include <fstream>
#include <sstream>

#include "green/cli.hpp"
#include "green/io.hpp"
#include "test_util.hpp"

using namespace green;
using namespace green::cli;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result green_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "green");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::size_t file_count(const fs::path& dir) {
  return static_cast<std::size_t>(std::distance(fs::directory_iterator(dir), fs::directory_iterator()));
}

}  // namespace

TEST_CASE("gen-a writes loadable data and solve agrees with --n") {
  test_util::TempDir dir;
  const auto gen = green_cli({"gen-a", "--n", "3", "--out", dir.path.string(), "--no-cache"});
  REQUIRE(gen.code == kOk);
  const auto group = dir.path / "S3.weyl.json";
  const auto springer = dir.path / "S3.springer.json";
  REQUIRE(fs::exists(group));
  REQUIRE(fs::exists(springer));

  const auto from_files = green_cli({"solve", "--group", group.string(), "--springer", springer.string(), "--no-cache"});
  const auto from_n = green_cli({"solve", "--n", "3", "--no-cache"});
  CHECK(from_files.code == kOk);
  CHECK(from_n.code == kOk);
  CHECK(from_files.out == from_n.out);
}

TEST_CASE("solve output for S2") {
  const auto latex = green_cli({"solve", "--n", "2", "--format", "latex", "--no-cache"});
  REQUIRE(latex.code == kOk);
  CHECK(latex.out.find("% normalization=double_prime") != std::string::npos);
  CHECK(latex.out.find("p''") != std::string::npos);

  const auto json = green_cli({"solve", "--n", "2", "--normalization", "plain", "--no-cache"});
  REQUIRE(json.code == kOk);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["schema"] == "green-solution/1");
  CHECK(j["normalization"] == "plain");
  CHECK(j["labels"] == nlohmann::json{"(2)", "(1,1)"});
  CHECK(j["P"][0][1].dump() == R"([[-2,"1","1"]])");
  CHECK(j["P"][1][0].dump() == "[]");
  CHECK(j["Lambda"][0][0].dump() == R"([[-2,"-1","1"],[2,"1","1"]])");

  const auto csv = green_cli({"solve", "--n", "2", "--format", "csv", "--no-cache"});
  REQUIRE(csv.code == kOk);
  CHECK(csv.out.rfind("# schema=green-solution/1 group=sha256:", 0) == 0);
}

TEST_CASE("stalk report through solve") {
  const auto r = green_cli({"solve", "--n", "2", "--chi", "(2)", "--orbit", "(1,1)", "--no-cache"});
  REQUIRE(r.code == kOk);
  CHECK(r.out.find("(1,1)") != std::string::npos);
  CHECK(r.out.find("-2") != std::string::npos);

  CHECK(green_cli({"solve", "--n", "2", "--chi", "(2)", "--orbit", "(7)", "--no-cache"}).code == kValidationFailure);
  CHECK(green_cli({"solve", "--n", "2", "--chi", "(7)", "--orbit", "(2)", "--no-cache"}).code == kValidationFailure);
  CHECK(green_cli({"solve", "--n", "2", "--chi", "(2)", "--no-cache"}).code == kValidationFailure);
}

TEST_CASE("fake degrees, ext, omega and oracle outputs") {
  const auto fd = green_cli({"fake-degrees", "--n", "3", "--format", "csv", "--no-cache"});
  REQUIRE(fd.code == kOk);
  CHECK(fd.out.find("\"(3)\",1,0,0,0\n") != std::string::npos);
  CHECK(fd.out.find("\"(2,1)\",0,1,1,0\n") != std::string::npos);
  CHECK(fd.out.find("\"(1,1,1)\",0,0,0,1\n") != std::string::npos);

  const auto ext = green_cli({"ext", "--n", "3", "--no-cache"});
  REQUIRE(ext.code == kOk);
  CHECK(nlohmann::json::parse(ext.out)["tables"].size() == 3);
  CHECK(green_cli({"ext", "--n", "3", "--format", "latex", "--no-cache"}).code == kValidationFailure);

  const auto omega = green_cli({"omega", "--n", "2", "--no-cache"});
  REQUIRE(omega.code == kOk);
  CHECK(nlohmann::json::parse(omega.out)["entries"][0][1].dump() == R"([[-4,"1","1"]])");

  const auto oracle = green_cli({"oracle", "--n", "3", "--no-cache"});
  REQUIRE(oracle.code == kOk);
  CHECK(nlohmann::json::parse(oracle.out)["kostka_foulkes"].size() == 9);
}

TEST_CASE("check runs the whole suite") {
  const auto r = green_cli({"check", "--n", "4", "--no-cache"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS kostka-foulkes-bridge") != std::string::npos);
  CHECK(r.out.find("check passed for S4") != std::string::npos);
}

TEST_CASE("verify round trip and tampering") {
  test_util::TempDir dir;
  const auto sol = dir.path / "s3.solution.json";
  REQUIRE(green_cli({"solve", "--n", "3", "--out", sol.string(), "--no-cache"}).code == kOk);
  // Atomic write leaves exactly the target behind, with the stdout bytes.
  CHECK(file_count(dir.path) == 1);
  CHECK(slurp(sol) == green_cli({"solve", "--n", "3", "--no-cache"}).out);

  const auto ok = green_cli({"verify", "--n", "3", "--solution", sol.string(), "--no-cache"});
  CHECK(ok.code == kOk);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  auto doc = read_json_file(sol);
  SUBCASE("wrong omega hash") {
    doc["omega_hash"] = "sha256:0000";
    std::ofstream(sol) << doc.dump();
    const auto r = green_cli({"verify", "--n", "3", "--solution", sol.string(), "--no-cache"});
    CHECK(r.code == kInternalFailure);
    CHECK(r.out.find("FAIL omega-hash") != std::string::npos);
  }
  SUBCASE("altered entry") {
    doc["P"][0][0] = nlohmann::json::parse(R"([[0,"2","1"]])");
    std::ofstream(sol) << doc.dump();
    const auto r = green_cli({"verify", "--n", "3", "--solution", sol.string(), "--no-cache"});
    CHECK(r.code == kInternalFailure);
    CHECK(r.out.find("FAIL residual") != std::string::npos);
  }
  SUBCASE("malformed file") {
    std::ofstream(sol) << "[1, 2";
    CHECK(green_cli({"verify", "--n", "3", "--solution", sol.string(), "--no-cache"}).code == kValidationFailure);
  }
}

TEST_CASE("exit codes for bad input") {
  CHECK(green_cli({}).code == kValidationFailure);
  CHECK(green_cli({"solve"}).code == kValidationFailure);
  CHECK(green_cli({"solve", "--n", "1", "--no-cache"}).code == kValidationFailure);
  CHECK(green_cli({"solve", "--n", "11", "--no-cache"}).code == kValidationFailure);
  CHECK(green_cli({"solve", "--n", "3", "--format", "yaml"}).code == kValidationFailure);
  CHECK(green_cli({"solve", "--n", "3", "--normalization", "odd"}).code == kValidationFailure);
  CHECK(green_cli({"solve", "--n", "3", "--bogus"}).code == kValidationFailure);
  CHECK(green_cli({"verify", "--n", "3", "--no-cache"}).code == kValidationFailure);
  CHECK(green_cli({"solve", "--group", "/nonexistent/g.json", "--no-cache"}).code == kValidationFailure);
  CHECK(green_cli({"--help"}).code == kOk);

  test_util::TempDir dir;
  REQUIRE(green_cli({"gen-a", "--n", "3", "--out", dir.path.string(), "--no-cache"}).code == kOk);
  const auto group = dir.path / "S3.weyl.json";
  auto j = read_json_file(group);
  j["classes"][0]["size"] = 5;
  std::ofstream(group) << j.dump();
  const auto r = green_cli({"omega", "--group", group.string(), "--springer", (dir.path / "S3.springer.json").string(),
                            "--no-cache"});
  CHECK(r.code == kValidationFailure);
  CHECK(r.err.find("ValidationError") != std::string::npos);
}

TEST_CASE("cache: hits are byte-identical, corrupt entries warn and recompute") {
  test_util::TempDir dir;
  const auto cache = dir.path / "cache";
  const auto first = green_cli({"solve", "--n", "4", "--cache-dir", cache.string()});
  REQUIRE(first.code == kOk);
  REQUIRE(fs::exists(cache));
  const auto entries = file_count(cache);
  CHECK(entries >= 2);

  const auto second = green_cli({"solve", "--n", "4", "--cache-dir", cache.string()});
  CHECK(second.code == kOk);
  CHECK(second.out == first.out);
  CHECK(second.err.empty());
  CHECK(file_count(cache) == entries);

  for (const auto& e : fs::directory_iterator(cache)) std::ofstream(e.path()) << "{\"key\": \"x\"";
  const auto third = green_cli({"solve", "--n", "4", "--cache-dir", cache.string()});
  CHECK(third.code == kOk);
  CHECK(third.out == first.out);
  CHECK(third.err.find("corrupt") != std::string::npos);

  // Recomputed entries replaced the corrupt ones.
  const auto fourth = green_cli({"solve", "--n", "4", "--cache-dir", cache.string()});
  CHECK(fourth.out == first.out);
  CHECK(fourth.err.empty());

  SUBCASE("tampered payload with a stale digest") {
    for (const auto& e : fs::directory_iterator(cache)) {
      auto entry = read_json_file(e.path());
      entry["value"] = entry["value"].get<std::string>() + " ";
      std::ofstream(e.path()) << entry.dump();
    }
    const auto r = green_cli({"solve", "--n", "4", "--cache-dir", cache.string()});
    CHECK(r.out == first.out);
    CHECK(r.err.find("corrupt") != std::string::npos);
  }
}

TEST_CASE("no-cache writes nothing and output is deterministic") {
  test_util::TempDir dir;
  const auto cache = dir.path / "cache";
  const auto a = green_cli({"solve", "--n", "5", "--cache-dir", cache.string(), "--no-cache"});
  const auto b = green_cli({"solve", "--n", "5", "--no-cache"});
  CHECK(a.code == kOk);
  CHECK(a.out == b.out);
  CHECK(!fs::exists(cache));

  // A seeded extension changes nothing in the result.
  const auto seeded = green_cli({"solve", "--n", "5", "--seeds", "7", "--no-cache"});
  CHECK(seeded.code == kOk);
  CHECK(nlohmann::json::parse(seeded.out)["P"] == nlohmann::json::parse(a.out)["P"]);
}

TEST_CASE("cache keys") {
  CHECK(Cache::key_for({{"n", 3}}) == Cache::key_for({{"n", 3}}));
  CHECK(Cache::key_for({{"n", 3}}) != Cache::key_for({{"n", 4}}));
  CHECK(Cache::key_for({{"n", 3}}).size() == 64);

  RunConfig c;
  c.no_cache = true;
  CHECK(!resolve_cache_dir(c).has_value());
  c.no_cache = false;
  c.cache_dir = "/tmp/x";
  CHECK(resolve_cache_dir(c) == fs::path("/tmp/x"));
}

TEST_CASE("rendering helpers") {
  CHECK(latex_poly(LaurentPoly::t_power(-1)) == "t^{-1}");
  CHECK(latex_poly(LaurentPoly()) == "0");
  Matrix<LaurentPoly> m(1, 1);
  m(0, 0) = LaurentPoly::t_power(1) + LaurentPoly(1);
  CHECK(csv_matrix(m, {"(1)"}).find("\"(1)\"") != std::string::npos);
}
