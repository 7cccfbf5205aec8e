#include <array>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct run_result {
  int code = -1;
  std::string out;
};

// Runs the command-line tool with `args` (shell syntax), capturing stdout; stderr is discarded.
run_result run(const std::string& args) {
  std::string cmd = std::string(TWISTLAB_CLI) + " " + args + " 2>/dev/null";
  run_result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* file) { return std::string(TWISTLAB_DATA) + "/" + file; }

nlohmann::json parse(const run_result& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("valid -m CN3 -f '~(p -> ~p)'").code, 0);
  EXPECT_EQ(run("valid -m CNf4 -f '(p -> q) -> ~(p -> ~q)'").code, 1);
  EXPECT_EQ(run("valid -m CN3 -f 'p &'").code, 2);
  EXPECT_EQ(run("valid -m XY3 -f p").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ValidityText) {
  auto r = run("valid -m CNf4 -f '(p -> q) -> ~(p -> ~q)'");
  EXPECT_EQ(r.out, "invalid: p=0, q=0\n");
}

TEST(Cli, TableJson) {
  auto r = run("--json table -m DF3 --op imp");
  ASSERT_EQ(r.code, 0);
  auto j = parse(r);
  EXPECT_EQ(j["title"], "imp");
  EXPECT_EQ(j["table"][2], (nlohmann::json{"0", "1/2", "1"}));
  EXPECT_EQ(run("--json table -m DF3 --op imp").out, r.out);  // stable output
}

TEST(Cli, TableFormats) {
  EXPECT_EQ(run("table -m DF3 --op imp --format csv").out, "imp,0,1/2,1\n0,1/2,1/2,1/2\n1/2,1/2,1/2,1/2\n1,0,1/2,1\n");
  auto all = run("table -m DF3");
  EXPECT_EQ(all.code, 0);
  EXPECT_NE(all.out.find("neg"), std::string::npos);
}

TEST(Cli, Entailment) {
  EXPECT_EQ(run("entail -m CN3 -p p -p 'p -> q' -c q").code, 0);
  EXPECT_EQ(run("entail -m CN3 -p q -c p").code, 1);
}

TEST(Cli, Theses) {
  EXPECT_EQ(run("theses -m CN3").code, 0);
  EXPECT_EQ(run("theses -m CNf4").code, 1);
}

TEST(Cli, Classify) {
  auto r = run("--json classify -a builtin:square -c boolean");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(parse(r)["holds"].get<bool>());
  EXPECT_EQ(run("classify -a OL3 -c lattice").code, 1);
}

TEST(Cli, Twist) {
  auto r = run("--json subalgebras --spec " + data("df_square.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out, run("--json subalgebras --spec " + data("df_square.json")).out);
  EXPECT_EQ(run("twist --kind CN --factor1 builtin:chain3").code, 2);
  EXPECT_EQ(run("twist --kind CN --factor1 builtin:boolean4").code, 0);
}

TEST(Cli, Represent) {
  EXPECT_EQ(run("represent -k Ff -a " + data("ff4.json")).code, 0);
  EXPECT_EQ(run("roundtrip --spec " + data("cn_boolean4.json")).code, 0);
  EXPECT_EQ(run("roundtrip --spec " + data("cnf_rho.json")).code, 2);
}

TEST(Cli, Define) {
  auto yes = run("--json define -m CN3 -t imp_f");
  ASSERT_EQ(yes.code, 0) << yes.out;
  EXPECT_EQ(parse(yes)["status"], "yes");
  auto no = run("--json define -m Ff4 -t imp_ol -b neg,and,or,imp");
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(parse(no)["status"], "no");
  EXPECT_EQ(run("define -m CN3 -t imp_ol --term '~((q ->F p) ->F ~q) ->F ((p |K q) ->F q)'").code, 0);
  EXPECT_EQ(run("define -m CN3 -t imp_ol --term 'p | q'").code, 1);
}

TEST(Cli, Clone) {
  auto r = run("--json clone -m DF3 -b neg,and,or");
  ASSERT_EQ(r.code, 0);
  auto j = parse(r);
  EXPECT_TRUE(j["closed"].get<bool>());
  EXPECT_EQ(j["levels"].back(), j["size"]);
}

} // namespace
