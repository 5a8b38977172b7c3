#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "extactica/cli.hpp"
#include "extactica/report.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

const std::string fixtures_dir = std::string(EXTACTICA_DOCS_DIR) + "/fixtures/";

struct Result {
  int code;
  std::string out;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = extactica::cli::run(args, in, out, err);
  return {code, out.str()};
}

std::vector<std::string> expand(const std::string& line) {
  std::istringstream s(line);
  std::vector<std::string> args;
  std::string word;
  while (s >> word) args.push_back(word[0] == '@' ? fixtures_dir + word.substr(1) : word);
  return args;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string fixture(const std::string& name) { return fixtures_dir + name; }

}  // namespace

TEST_CASE("documented fixtures reproduce bit-exactly", "[cli]") {
  std::ifstream commands(fixtures_dir + "commands.txt");
  REQUIRE(commands.good());
  std::string line;
  int checked = 0;
  while (std::getline(commands, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream s(line);
    std::string name;
    int code = 0;
    s >> name >> code;
    std::string rest;
    std::getline(s, rest);
    INFO(name);
    const auto r = run(expand(rest));
    CHECK(r.code == code);
    CHECK(r.out == slurp(fixtures_dir + "expected/" + name + ".out"));
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("extactic verb", "[cli]") {
  const auto r = run({"extactic", "--field", fixture("X2.json"), "--n", "1"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["expected_degree"] == 6);
  CHECK(j["vanished"] == false);
  CHECK(j["polynomial"].get<std::string>().size() > 10);
}

TEST_CASE("first-integral verb", "[cli]") {
  auto j = json::parse(run({"first-integral", "--field", fixture("radialxy.json"), "--dmax", "3"}).out);
  CHECK(j["d"] == 1);
  j = json::parse(run({"first-integral", "--field", fixture("jouanolou2.txt"), "--dmax", "2"}).out);
  CHECK(j["d"].is_null());
}

TEST_CASE("family verb", "[cli]") {
  const auto r = run({"family", "--fieldX", fixture("x.json"), "--fieldY", fixture("y.json"), "--n", "1"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["gcd_form"] == "s^2*t - s*t^2");
  CHECK(j["rational_roots"] == json::parse(R"([["1","0"],["0","1"],["1","1"]])"));
}

TEST_CASE("standard input", "[cli]") {
  const std::string field = slurp(fixture("X2.json"));
  const auto from_stdin = run({"extactic", "--field", "-"}, field);
  const auto from_file = run({"extactic", "--field", fixture("X2.json")});
  CHECK(from_stdin.code == 0);
  CHECK(from_stdin.out == from_file.out);

  const auto both = run({"family", "--fieldX", "-", "--fieldY", "-"}, field);
  CHECK(both.code == 0);
  CHECK(json::parse(both.out)["identically_zero"] == false);

  const auto inline_json = run({"lines", "--field", field});
  CHECK(inline_json.code == 0);
  CHECK(json::parse(inline_json.out)["count"] == 6);
}

TEST_CASE("text format changes presentation only", "[cli]") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"extactic", "--field", fixture("X2.json")},
           {"lines", "--field", fixture("X3.json")},
           {"family", "--fieldX", fixture("x.json"), "--fieldY", fixture("y.json")},
           {"bounds", "--d", "3", "--n", "2"}}) {
    const auto as_json = run(args);
    auto text_args = args;
    text_args.insert(text_args.end(), {"--format", "text"});
    const auto as_text = run(text_args);
    CHECK(as_json.code == as_text.code);
    CHECK(extactica::to_text(json::parse(as_json.out)) == as_text.out);
  }
}

TEST_CASE("reports are deterministic", "[cli]") {
  const std::vector<std::string> args{"family", "--fieldX", fixture("lins_neto_X.json"), "--fieldY",
                                      fixture("lins_neto_Y.json")};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("errors are structured", "[cli]") {
  auto r = run({"lines", "--field", fixture("radialxy.json")});
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["error"]["kind"] == "domain");

  r = run({"extactic", "--field", fixture("bad_field.json")});
  CHECK(r.code == 1);
  const auto e = json::parse(r.out)["error"];
  CHECK(e["kind"] == "parse");
  CHECK(e["line"] == 1);

  CHECK(run({}).code == 1);
  CHECK(run({"extactic"}).code == 1);
  CHECK(run({"lines-through", "--field", fixture("X2.json"), "--point", "1,2"}).code == 1);
  CHECK(run({"lines-through", "--field", fixture("X2.json"), "--point", "1,a,2"}).code == 1);
  CHECK(run({"bounds"}).code == 1);
  CHECK(run({"extactic", "--field", fixture("X2.json"), "--format", "yaml"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("binary exit codes", "[cli]") {
  auto status = [](const std::string& args) {
    const std::string cmd = std::string(EXTACTICA_BINARY) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("bounds --d 2") == 0);
  CHECK(status("frobnicate") == 1);
  CHECK(status("lines --field " + fixture("radialxy.json")) == 2);
}
