#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Result {
  int status = -1;
  std::string output;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(NAKAYAMA_CLI_PATH) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("analyze prints the pinned values") {
  const auto r = run("analyze --seq 2,2,2");
  CHECK(r.status == 0);
  CHECK(r.output.find("magnitude      3/2") != std::string::npos);
  CHECK(r.output.find("p / w / c      3 / 2 / 1") != std::string::npos);
  CHECK(r.output.find("graded det     1+t^3") != std::string::npos);
  const auto r21 = run("analyze --seq 2,1");
  CHECK(r21.status == 0);
  CHECK(r21.output.find("gldim          1\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  const auto bad = run("analyze --seq 3,1");
  CHECK(bad.status == 2);
  CHECK(bad.output.find("NotAdmissible at index 1") != std::string::npos);
  CHECK(run("analyze --seq 2,2 --grading 1,1,1").status == 2);
  CHECK(run("analyze").status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("--help").status == 0);
  CHECK(run("verify --n-max 2 --p-max 3").status == 0);
}

TEST_CASE("analyze output is byte-identical across runs") {
  const auto a = run("analyze --seq 3,2,2 --grading 1,2,-1 --format json");
  const auto b = run("analyze --seq 3,2,2 --grading 1,2,-1 --format json");
  CHECK(a.status == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("dot export writes the resolution quiver") {
  const std::string path = "nakayama_cli_test.dot";
  CHECK(run("analyze --seq 2,1 --dot " + path).status == 0);
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string text;
  std::array<char, 1024> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), f)) > 0) text.append(buf.data(), got);
  std::fclose(f);
  std::remove(path.c_str());
  CHECK(text.find("  1 -> 1;\n  2 -> 1;\n") != std::string::npos);
}

TEST_CASE("other subcommands") {
  const auto m = run("magnitude --seq 3,3");
  CHECK(m.status == 0);
  CHECK(m.output.find("2/3") != std::string::npos);
  const auto d = run("det --seq 3,3");
  CHECK(d.status == 0);
  CHECK(d.output.find("1+t^2+t^4") != std::string::npos);
  const auto e = run("enumerate --n 2 --p-max 3 --count");
  CHECK(e.status == 0);
  CHECK(e.output.find('7') != std::string::npos);
}
