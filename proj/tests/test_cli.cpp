#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "glstep/error.hpp"

namespace fs = std::filesystem;
using glstep::cli::Cell;
using glstep::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / "glstep_cli_test";
  fs::create_directories(d);
  return d / name;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("csv fields") {
  CHECK(glstep::cli::csv_field(Cell{0.1}) == "0.10000000000000001");
  CHECK(std::stod(glstep::cli::csv_field(Cell{1.0 / 3.0})) == 1.0 / 3.0);
  CHECK(glstep::cli::csv_field(Cell{true}) == "1");
  CHECK(glstep::cli::csv_field(Cell{std::monostate{}}).empty());
  CHECK(glstep::cli::csv_field(Cell{std::string("plain")}) == "plain");
  CHECK(glstep::cli::csv_field(Cell{std::string("a,b")}) == "\"a,b\"");
  CHECK(glstep::cli::csv_field(Cell{std::string("say \"hi\"")}) == "\"say \"\"hi\"\"\"");
  CHECK(glstep::cli::csv_field(Cell{std::string("two\nlines")}) == "\"two\nlines\"");
}

TEST_CASE("grid parsing") {
  CHECK(glstep::cli::parse_grid("0") == std::vector<double>{0.0});
  CHECK(glstep::cli::parse_grid("-1:1:1") == std::vector<double>{-1.0, 0.0, 1.0});
  CHECK(glstep::cli::parse_grid("1:1.8:0.2").size() == 5);
  CHECK(glstep::cli::parse_grid("1.5,2,3") == std::vector<double>{1.5, 2.0, 3.0});
  for (const char* bad : {"", "1:0:1", "0:1:0", "0:1", "x", "1,,2", "0:1:-1"})
    CHECK_THROWS_AS(glstep::cli::parse_grid(bad), glstep::Error);
}

TEST_CASE("degennes table") {
  const Outcome r = call({"degennes", "--grid", "-1:1:1", "--stdout"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 4);
  CHECK(l[0] == "gamma,theta,xi_star,phi0");
  double prev = -1e300;
  for (std::size_t k = 1; k < l.size(); ++k) {
    const double th = std::stod(l[k].substr(l[k].find(',') + 1));
    CHECK(th > prev);
    prev = th;
  }
  const Outcome one = call({"degennes", "--grid", "0", "--stdout"});
  CHECK(lines(one.out).size() == 2);
  CHECK(call({"degennes", "--grid", "1:0:1", "--stdout"}).code == 2);
  CHECK(call({"degennes", "--stdout"}).code == 2);
  CHECK(r.err.find("wall") != std::string::npos);
  CHECK(r.out.find("wall") == std::string::npos);
}

TEST_CASE("fiber summary and usage errors") {
  const fs::path out = scratch("fiber.csv");
  const Outcome r = call({"fiber", "--a", "0.5", "--grid", "-1:1:0.5", "--out", out.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(lines(slurp(out)).size() == 6);
  const auto s = nlohmann::json::parse(slurp(out.string() + ".summary.json"));
  CHECK(s["outputs"]["beta"] == 0.5);
  CHECK(s["outputs"]["zeta"].is_null());
  CHECK(call({"fiber", "--a", "0", "--stdout"}).code == 2);
  CHECK(call({"fiber", "--a", "1", "--stdout"}).code == 2);
  CHECK(call({"fiber", "--stdout"}).code == 2);
  CHECK(call({"nosuch"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("json records round-trip") {
  const Outcome r = call({"phase", "--a", "-1,0.5", "--b", "0.8,1.5,3.5", "--format", "json", "--stdout"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j.dump(2) + "\n" == r.out);
  CHECK(j["command"] == "phase");
  CHECK(j["outputs"]["table"]["rows"].size() == 6);
}

TEST_CASE("phase rows") {
  const Outcome r = call({"phase", "--a", "-1,-0.5,0.5", "--b", "1.5,2.5,3.5", "--stdout"});
  REQUIRE(r.code == 0);
  const std::string t = r.out;
  CHECK(t.find("-1,1.5,1,1,1,barrier+full-surface,\n") != std::string::npos);
  CHECK(t.find("0.5,3.5,0,0,0,normal,\n") != std::string::npos);
  CHECK(t.find("-0.5,2.5,1,0,1,") != std::string::npos);
  CHECK(t.find("0.5,1.5,,,,bulk,\n") != std::string::npos);
  CHECK(call({"phase", "--a", "0,-1", "--b", "1.5", "--stdout"}).code == 2);
}

TEST_CASE("surface, gl1d, strip and barrier commands") {
  const Outcome s = call({"surface", "--grid", "1.0:1.8:0.2", "--stdout"});
  REQUIRE(s.code == 0);
  const auto l = lines(s.out);
  double prev = -1e300;
  for (std::size_t k = 1; k < l.size(); ++k) {
    const std::string rest = l[k].substr(l[k].find(',') + 1);
    const double v = std::stod(rest.substr(0, rest.find(',')));
    CHECK(v >= prev);
    prev = v;
  }
  CHECK(prev == 0.0);

  const Outcome g = call({"gl1d", "--a", "-1", "--b", "1.75", "--format", "json", "--stdout"});
  REQUIRE(g.code == 0);
  const auto gj = nlohmann::json::parse(g.out);
  CHECK(gj["outputs"]["trivial"] == true);
  CHECK(gj["outputs"]["energy"] == 0.0);

  CHECK(call({"strip", "--a", "-1", "--b", "1.2", "--m", "3", "--stdout"}).code == 2);
  const fs::path dump = scratch("strip.bin");
  const Outcome st = call({"strip", "--a", "-1", "--b", "1.2", "--R", "6", "--m", "4", "--spacing", "0.1", "--dump",
                           dump.string(), "--format", "json", "--stdout"});
  REQUIRE(st.code == 0);
  CHECK(fs::file_size(dump) == 8 * (6 + 2 * 59 * 79));

  const Outcome b = call({"barrier", "--a", "0.5", "--b", "2.5", "--format", "json", "--stdout"});
  REQUIRE(b.code == 0);
  const auto bj = nlohmann::json::parse(b.out);
  CHECK(bj["outputs"]["e_best"] == 0.0);
  CHECK(bj["outputs"]["table"]["rows"].empty());
  const Outcome bulk = call({"barrier", "--a", "-1", "--b", "0.9", "--stdout"});
  CHECK(bulk.code == 2);
  CHECK(bulk.err.find("bulk regime") != std::string::npos);
  // Iteration cap reached: solver failure.
  const Outcome cap = call({"strip", "--a", "-1", "--b", "1.2", "--R", "6", "--m", "4", "--spacing", "0.25",
                            "--tol", "1e-30", "--stdout"});
  CHECK(cap.code == 3);
  CHECK(cap.err.find("iteration cap") != std::string::npos);
}

TEST_CASE("config file sections and flag precedence") {
  const fs::path cfg = scratch("glstep.ini");
  {
    std::ofstream f(cfg);
    f << "[degennes]\ngrid=0\n\n[fiber]\na=-1\ngrid=-1:0:0.5\n";
  }
  const Outcome a = call({"--config", cfg.string(), "degennes", "--stdout"});
  REQUIRE(a.code == 0);
  CHECK(lines(a.out).size() == 2);
  const Outcome b = call({"--config", cfg.string(), "degennes", "--grid", "-1:1:1", "--stdout"});
  CHECK(lines(b.out).size() == 4);
  const Outcome c = call({"--config", cfg.string(), "fiber", "--stdout"});
  REQUIRE(c.code == 0);
  CHECK(lines(c.out).size() == 4);

  setenv("GLSTEP_CONFIG", cfg.string().c_str(), 1);
  const Outcome d = call({"degennes", "--stdout"});
  unsetenv("GLSTEP_CONFIG");
  CHECK(d.code == 0);
  CHECK(d.out == a.out);

  {
    std::ofstream f(cfg);
    f << "[degennes]\nnot_an_option=1\n";
  }
  CHECK(call({"--config", cfg.string(), "degennes", "--stdout"}).code == 2);
}

TEST_CASE("reruns are byte-identical") {
  const fs::path p1 = scratch("run1.csv"), p2 = scratch("run2.csv");
  for (const fs::path& p : {p1, p2})
    REQUIRE(call({"surface", "--grid", "1.2,1.5", "--out", p.string()}).code == 0);
  CHECK(slurp(p1) == slurp(p2));
  CHECK(slurp(p1.string() + ".summary.json") == slurp(p2.string() + ".summary.json"));
}
