#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + AUGCUT_BIN + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_file(const std::string& name, const std::string& text) {
  std::string path = std::string(CLI_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

const char* kB6 = "6 7\n1 2 1\n2 3 1\n1 3 1\n4 5 1\n5 6 1\n4 6 1\n3 4 1\n";

int count(const std::string& s, const std::string& what) {
  int c = 0;
  for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("extreme-sets") {
  auto b6 = write_file("b6.txt", kB6);
  auto r = run("extreme-sets -i " + b6);
  CHECK(r.code == 0);
  CHECK(count(r.out, "set {") == 2);
  CHECK(count(r.out, "vertex ") == 6);
  auto j = run("extreme-sets --json -i " + b6);
  CHECK(j.code == 0);
  CHECK(j.out.find("\"members\":[4,5,6]") != std::string::npos);
  auto tri = write_file("tri.txt", "3 3\n1 2 1\n2 3 1\n1 3 1\n");
  CHECK(run("extreme-sets --check-oracle -i " + tri).code == 0);
  CHECK(run("extreme-sets -i " + write_file("bad.txt", "2 1\n1 5 1\n")).code == 1);
}

TEST_CASE("augment") {
  auto b6 = write_file("b6.txt", kB6);
  auto r = run("augment --verify --tau 3 -i " + b6);
  CHECK(r.code == 0);
  CHECK(r.out.find("total 2") != std::string::npos);
  auto zero = write_file("zero.txt", "1 0\n2 0\n3 0\n4 0\n5 0\n6 0\n");
  CHECK(run("augment --tau 2 --beta " + zero + " -i " + b6).code == 2);
  auto one = run("augment --tau 1 -i " + b6);
  CHECK(one.code == 0);
  CHECK(one.out == "total 0\n");
  CHECK(run("augment -i " + b6).code == 1);
}

TEST_CASE("splitoff") {
  auto path = write_file("path.txt", "3 2\n1 2 1\n2 3 1\n");
  auto r = run("splitoff --vertex 2 -i " + path);
  CHECK(r.code == 0);
  CHECK(r.out == "1 3 1\ntotal 1\n");
  CHECK(run("splitoff --vertex 2 -i " + write_file("odd.txt", "3 2\n1 2 1\n2 3 2\n")).code == 1);
  auto star = write_file("star.txt", "5 4\n1 2 1\n1 3 1\n1 4 1\n1 5 1\n");
  CHECK(run("splitoff --vertex 1 -i " + star).code == 2);
  auto wheel = write_file("wheel.txt", "5 8\n1 2 1\n2 3 1\n3 4 1\n4 1 1\n5 1 1\n5 2 1\n5 3 1\n5 4 1\n");
  CHECK(run("splitoff --verify --vertex 5 -i " + wheel).code == 0);
}

TEST_CASE("cut-threshold") {
  auto b6 = write_file("b6.txt", kB6);
  CHECK(run("cut-threshold --source 1 --phi 1 -i " + b6).out == "4 5 6\n");
  CHECK(run("cut-threshold --source 1 --phi 1 --backend accelerated -i " + b6).out == "4 5 6\n");
  CHECK(run("cut-threshold --source 1 --phi 0 -i " + b6).out == "\n");
  CHECK(run("cut-threshold --source 9 --phi 0 -i " + b6).code == 1);
}

TEST_CASE("bench") {
  auto r = run("bench --random 300 1500 5 --repeat 3 --seed 4");
  CHECK(r.code == 0);
  CHECK(count(r.out, "\n") == 3);
  auto again = run("bench --random 300 1500 5 --repeat 3 --seed 4");
  auto strip = [](std::string s) {
    std::string out;
    for (std::size_t p = 0; p < s.size();) {
      auto q = s.find("\"seconds_", p);
      if (q == std::string::npos) {
        out += s.substr(p);
        break;
      }
      out += s.substr(p, q - p);
      p = s.find_first_of(",}", q);
    }
    return out;
  };
  CHECK(strip(r.out) == strip(again.out));
  CHECK(run("bench --random 1 0 5").code == 1);
}

TEST_CASE("seed from the environment") {
  auto b6 = write_file("b6.txt", kB6);
  for (const char* seed : {"1", "9", "12345"}) {
    auto flag = run("augment --tau 3 -i " + b6 + " --seed " + seed);
    auto env = run("augment --tau 3 -i " + b6, std::string("AUGCUT_SEED=") + seed);
    CHECK(flag.code == 0);
    CHECK(env.out == flag.out);
  }
  CHECK(run("augment --tau 3 -i " + b6, "AUGCUT_SEED=abc").code == 1);
}
