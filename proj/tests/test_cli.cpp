#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

using json = nlohmann::json;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(HURWITZ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe))
    out.append(buffer, got);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

struct Fixture {
  Fixture() {
    write_file(temp_path("a2.dsl"), "rank 2\nm 1 2 3\n");
    write_file(temp_path("a2.json"), R"({"rank": 2, "bonds": [[1, 2, 3]]})");
    write_file(temp_path("b2.dsl"), "rank 2\nm 1 2 4\n");
    write_file(temp_path("f.json"), "[[1],[2],[1],[1]]");
    write_file(temp_path("g.json"), "[[2],[1,2,1],[2],[2]]");
    write_file(temp_path("fb.json"), "[[1],[2],[2],[2]]");
    write_file(temp_path("gb.json"), "[[1],[1],[1],[2]]");
  }
};

}  // namespace

TEST_CASE("classes") {
  Fixture fx;
  RunResult r = run("classes --diagram " + temp_path("a2.dsl"));
  CHECK(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["class_count"] == 1);
  CHECK(j["class_of_simple"] == json::array({1, 1}));

  // JSON diagram input is accepted too
  RunResult rj = run("classes --diagram " + temp_path("a2.json"));
  CHECK(rj.exit_code == 0);
  CHECK(json::parse(rj.output) == j);
}

TEST_CASE("decide exit codes and certificates") {
  Fixture fx;
  RunResult eq = run("decide --diagram " + temp_path("a2.dsl") +
                     " --coxeter \"1 2\" --f " + temp_path("f.json") + " --g " +
                     temp_path("g.json"));
  CHECK(eq.exit_code == 0);
  CHECK(json::parse(eq.output)["equivalent"] == true);

  RunResult ne = run("decide --diagram " + temp_path("b2.dsl") +
                     " --coxeter \"1 2\" --f " + temp_path("fb.json") + " --g " +
                     temp_path("gb.json"));
  CHECK(ne.exit_code == 1);
  json j = json::parse(ne.output);
  CHECK(j["equivalent"] == false);
  CHECK(j["certificate"]["f"]["1"] == 1);
  CHECK(j["certificate"]["f"]["2"] == 3);
  CHECK(j["certificate"]["g"]["1"] == 3);
}

TEST_CASE("connect output passes verify round-trip") {
  Fixture fx;
  RunResult c = run("connect --diagram " + temp_path("a2.dsl") +
                    " --coxeter \"1 2\" --f " + temp_path("f.json") + " --g " +
                    temp_path("g.json"));
  REQUIRE(c.exit_code == 0);
  json j = json::parse(c.output);
  REQUIRE(j.contains("witness"));
  write_file(temp_path("w.json"), j["witness"].dump());

  RunResult v = run("verify --diagram " + temp_path("a2.dsl") + " --f " +
                    temp_path("f.json") + " --braid " + temp_path("w.json") +
                    " --expect " + temp_path("g.json"));
  CHECK(v.exit_code == 0);
  CHECK(json::parse(v.output)["match"] == true);

  // empty braid with f == expect
  write_file(temp_path("empty.json"), "[]");
  RunResult ve = run("verify --diagram " + temp_path("a2.dsl") + " --f " +
                     temp_path("f.json") + " --braid " + temp_path("empty.json") +
                     " --expect " + temp_path("f.json"));
  CHECK(ve.exit_code == 0);

  // wrong expectation exits 1
  RunResult vw = run("verify --diagram " + temp_path("a2.dsl") + " --f " +
                     temp_path("f.json") + " --braid " + temp_path("empty.json") +
                     " --expect " + temp_path("g.json"));
  CHECK(vw.exit_code == 1);
  CHECK(json::parse(vw.output)["match"] == false);
}

TEST_CASE("normalize and orbit") {
  Fixture fx;
  write_file(temp_path("n.json"), "[[1,2,1],[1,2,1],[1],[2]]");
  RunResult n = run("normalize --diagram " + temp_path("a2.dsl") + " --f " +
                    temp_path("n.json"));
  CHECK(n.exit_code == 0);
  json j = json::parse(n.output);
  CHECK(j["core"] == json::parse("[[1],[2]]"));
  CHECK(j["pairs"] == json::parse("[[1,2,1]]"));
  CHECK(j["braid"] == json::parse("[2,1,3,2]"));

  RunResult o = run("orbit --diagram " + temp_path("a2.dsl") + " --f " +
                    temp_path("f.json") + " --cap 1000");
  CHECK(o.exit_code == 0);
  json jo = json::parse(o.output);
  CHECK(jo["size"] == 27);
  CHECK(jo["truncated"] == false);

  write_file(temp_path("inf.dsl"), "rank 2\nm 1 2 inf\n");
  write_file(temp_path("red.json"), "[[1],[2]]");
  RunResult t = run("orbit --diagram " + temp_path("inf.dsl") + " --f " +
                    temp_path("red.json") + " --cap 25 --dump");
  CHECK(t.exit_code == 0);
  json jt = json::parse(t.output);
  CHECK(jt["truncated"] == true);
  CHECK(jt["size"] == 25);
  CHECK(jt["states"].size() == 25);
}

TEST_CASE("deterministic output bytes") {
  Fixture fx;
  std::string cmd = "connect --diagram " + temp_path("a2.dsl") +
                    " --coxeter \"1 2\" --f " + temp_path("f.json") + " --g " +
                    temp_path("g.json");
  RunResult first = run(cmd);
  RunResult second = run(cmd);
  CHECK(first.output == second.output);

  // threads must not change orbit output
  std::string orbit_cmd = "orbit --diagram " + temp_path("a2.dsl") + " --f " +
                          temp_path("f.json") + " --cap 1000 --dump";
  RunResult serial = run(orbit_cmd + " --threads 1");
  RunResult parallel = run(orbit_cmd + " --threads 4");
  CHECK(serial.output == parallel.output);
}

TEST_CASE("invalid input yields a JSON error object and exit 2") {
  Fixture fx;
  write_file(temp_path("bad.json"), "[[1],[2],[1]]");
  RunResult r = run("decide --diagram " + temp_path("a2.dsl") +
                    " --coxeter \"1 2\" --f " + temp_path("bad.json") + " --g " +
                    temp_path("f.json"));
  CHECK(r.exit_code == 2);
  json j = json::parse(r.output);
  CHECK(j["code"] == "ParityError");
  CHECK(j.contains("message"));
  CHECK(j.contains("location"));

  write_file(temp_path("bad.dsl"), "rank 2\nm 1 2 x\n");
  RunResult s = run("classes --diagram " + temp_path("bad.dsl"));
  CHECK(s.exit_code == 2);
  CHECK(json::parse(s.output)["code"] == "SyntaxError");

  write_file(temp_path("rot.json"), "[[1,2],[1,2]]");
  RunResult t = run("orbit --diagram " + temp_path("a2.dsl") + " --f " +
                    temp_path("rot.json") + " --cap 10");
  CHECK(t.exit_code == 2);
  CHECK(json::parse(t.output)["code"] == "NotAReflection");
}

TEST_CASE("non-identity coxeter permutation") {
  Fixture fx;
  write_file(temp_path("fr.json"), "[[2],[1]]");
  write_file(temp_path("gr.json"), "[[1],[1,2,1]]");
  RunResult r = run("connect --diagram " + temp_path("a2.dsl") +
                    " --coxeter \"2 1\" --f " + temp_path("fr.json") + " --g " +
                    temp_path("gr.json"));
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output)["equivalent"] == true);

  // factorizations of s2 s1 do not validate against s1 s2
  RunResult bad = run("decide --diagram " + temp_path("a2.dsl") +
                      " --coxeter \"1 2\" --f " + temp_path("fr.json") + " --g " +
                      temp_path("fr.json"));
  CHECK(bad.exit_code == 2);
  CHECK(json::parse(bad.output)["code"] == "ProductMismatch");
}

TEST_CASE("selftest passes") {
  RunResult r = run("selftest");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["ok"] == true);
  CHECK(j["systems"].size() == 6);
}
