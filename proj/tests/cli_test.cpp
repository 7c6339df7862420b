#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef K3CHAR_BIN
#error "K3CHAR_BIN must point at the command line binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(K3CHAR_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path fresh_cache_dir(const char* tag) {
  fs::path dir = fs::temp_directory_path() / (std::string("k3char_cli_") + tag);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("betti text output matches the known row") {
  RunResult r = run("betti --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1, 23, 276, 23, 1\n");
}

TEST_CASE("betti json carries the tool version and the configuration") {
  RunResult r = run("betti --n 3 --format json");
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.at("tool_version").is_string());
  CHECK(doc.at("config").at("n") == 3);
  std::vector<long long> betti = doc.at("betti");
  std::vector<long long> expect{1, 23, 299, 2554, 299, 23, 1};
  CHECK(betti == expect);
}

TEST_CASE("dimension subcommand evaluates the formula") {
  CHECK(run("dim --weight 3,1").out == "37422\n");
  CHECK(run("dim --weight '(2,2)'").out == "23000\n");
  CHECK(run("dim --family D --weight 1").out == "22\n");
  CHECK(run("dim --weight '' --rank 5").out == "1\n");
  RunResult big = run("dim --weight 6 --format json");
  json doc = json::parse(big.out);
  CHECK(doc.at("dim") == 361790);
}

TEST_CASE("malformed requests exit with the flag error code") {
  CHECK(run("dim --weight 1,2").exit_code == 2);
  CHECK(run("dim --weight cow").exit_code == 2);
  CHECK(run("table --n 2 --n-max 3").exit_code == 2);
  CHECK(run("table --n 2 --degrees 3").exit_code == 2);
  CHECK(run("verify --suite bogus").exit_code == 2);
  CHECK(run("betti").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("--version").exit_code == 0);
}

TEST_CASE("table json lists the decomposition of every degree") {
  fs::path dir = fresh_cache_dir("json");
  RunResult r = run("table --n 2 --format json --cache-dir " + dir.string());
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  const json& tables = doc.at("tables");
  REQUIRE(tables.size() == 3);
  CHECK(tables[0].at("degree") == 0);
  CHECK(tables[2].at("degree") == 4);
  CHECK(tables[2].at("family") == "B");
  CHECK(tables[2].at("betti") == 276);
  const json& entries = tables[2].at("entries");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].at("weight") == json::array());
  CHECK(entries[0].at("mult") == 1);
  CHECK(entries[1].at("weight") == json::array({2}));
  CHECK(entries[1].at("mult") == 1);
  fs::remove_all(dir);
}

TEST_CASE("table csv has one column per cohomology group") {
  fs::path dir = fresh_cache_dir("csv");
  RunResult r = run("table --n 2 --format csv --cache-dir " + dir.string());
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "weight,dim,\"H^{0,2}\",\"H^{2,2}\",\"H^{4,2}\"");
  std::string row;
  std::getline(lines, row);
  CHECK(row == "(),1,1,0,1");
  std::getline(lines, row);
  CHECK(row == "(1),23,0,1,0");
  std::getline(lines, row);
  CHECK(row == "(2),275,0,0,1");
  CHECK_FALSE(std::getline(lines, row));
  fs::remove_all(dir);
}

TEST_CASE("hodge counts the canonical classes in the middle cohomology") {
  fs::path dir = fresh_cache_dir("hodge");
  RunResult r = run("hodge --n-max 5 --cache-dir " + dir.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n=4") != std::string::npos);
  RunResult j = run("hodge --n-max 5 --format json --cache-dir " + dir.string());
  json doc = json::parse(j.out);
  std::vector<long long> counts;
  for (const auto& row : doc.at("hodge")) counts.push_back(row.at("count").get<long long>());
  CHECK(counts == std::vector<long long>{1, 0, 1, 1, 3, 2});
  fs::remove_all(dir);
}

TEST_CASE("second run is served from the cache with identical bytes") {
  fs::path dir = fresh_cache_dir("warm");
  std::string args = "table --n-max 3 --format json --cache-dir " + dir.string();
  RunResult cold = run(args);
  CHECK(cold.exit_code == 0);
  REQUIRE(fs::exists(dir));
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) files += e.is_regular_file();
  CHECK(files == 10);
  RunResult warm = run(args);
  CHECK(warm.exit_code == 0);
  CHECK(warm.out == cold.out);

  for (const auto& e : fs::directory_iterator(dir))
    std::ofstream(e.path(), std::ios::trunc) << "garbage";
  RunResult healed = run(args);
  CHECK(healed.exit_code == 0);
  CHECK(healed.out == cold.out);
  fs::remove_all(dir);
}

TEST_CASE("cache directory honors the environment variable") {
  fs::path dir = fresh_cache_dir("env");
  std::string cmd = "K3CHAR_CACHE_DIR=" + dir.string() + " " + K3CHAR_BIN +
                    " table --n 1 --format json >/dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) files += e.is_regular_file();
  CHECK(files == 3);
  fs::remove_all(dir);
}

TEST_CASE("verify subcommand reports suite results") {
  RunResult r = run("verify --suite ring");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[PASS] ring laws") != std::string::npos);
  CHECK(r.out.find("failed 0") != std::string::npos);
  RunResult j = run("verify --suite ring --format json");
  json doc = json::parse(j.out);
  CHECK(doc.at("ok") == true);
  CHECK(doc.at("results").size() >= 3);
}
