#include <fcntl.h>
#include <gtest/gtest.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "hasse/cli.hpp"

namespace fs = std::filesystem;
using hasse::cli::Command;
using hasse::cli::Format;

extern char** environ;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct Outcome {
  std::string out, err;
  int code = -1;
};

// Runs the tool from the source tree with stdout and stderr sent to files.
Outcome invoke(const std::vector<std::string>& args) {
  const fs::path dir = fs::temp_directory_path() / ("hasse_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto out = (dir / "out").string(), err = (dir / "err").string();
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_addopen(&actions, 1, out.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  posix_spawn_file_actions_addopen(&actions, 2, err.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  std::vector<std::string> all{HASSE_BIN};
  all.insert(all.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : all) argv.push_back(a.data());
  argv.push_back(nullptr);
  pid_t pid = 0;
  const int rc = posix_spawn(&pid, HASSE_BIN, &actions, nullptr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  Outcome o;
  if (rc != 0) return o;
  int status = 0;
  waitpid(pid, &status, 0);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  o.out = slurp(out);
  o.err = slurp(err);
  fs::remove_all(dir);
  return o;
}

std::string transcript(const Outcome& o) {
  std::string s = o.out;
  if (!o.err.empty()) s += "--- stderr\n" + o.err;
  return s + "--- exit " + std::to_string(o.code) + "\n";
}

std::vector<fs::path> cases() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(fs::path(HASSE_SOURCE_DIR) / "tests" / "cli"))
    if (e.path().extension() == ".cmd") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { fs::current_path(HASSE_SOURCE_DIR); }
};

}  // namespace

TEST_F(CliTest, CookbookTranscripts) {
  const auto all = cases();
  ASSERT_GE(all.size(), 20u);
  for (const auto& cmd : all) {
    auto expected = cmd;
    expected.replace_extension(".out");
    ASSERT_TRUE(fs::exists(expected)) << expected;
    EXPECT_EQ(transcript(invoke(split(slurp(cmd)))), slurp(expected)) << cmd.filename();
  }
}

// The README cookbook lists exactly the recorded invocations.
TEST_F(CliTest, ReadmeCookbookIsRecorded) {
  std::set<std::string> recorded, documented;
  for (const auto& cmd : cases()) recorded.insert(first_line(slurp(cmd)));
  std::istringstream readme(slurp("README.md"));
  for (std::string line; std::getline(readme, line);)
    if (line.rfind("$ hasse ", 0) == 0) documented.insert(line.substr(8));
  EXPECT_EQ(documented, recorded);
}

TEST_F(CliTest, MachineOutputIndependentOfThreads) {
  for (const auto& args : {std::vector<std::string>{"zeta", "--preset", "dihedral", "--base", "GF(3)[T]", "-D", "5", "--format", "machine"},
                           std::vector<std::string>{"points", "--preset", "s3", "--base", "Z", "-N", "40", "--format", "machine"},
                           std::vector<std::string>{"dirichlet", "--preset", "gauss", "--base", "Z", "-N", "60", "--format", "machine"}}) {
    auto one = args, many = args;
    one.insert(one.end(), {"--threads", "1"});
    many.insert(many.end(), {"--threads", "4"});
    const auto a = invoke(one), b = invoke(many), c = invoke(many);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(b.out, c.out);
  }
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"zeta", "--preset", "s3", "--base", "GF(3)", "-D", "0"}).code, 2);
  EXPECT_EQ(invoke({"zeta", "--preset", "s3", "--base", "GF(3)", "--format", "json"}).code, 2);
  EXPECT_EQ(invoke({"zeta", "--preset", "s3", "--file", "examples/hasse/s3_gf3.alg"}).code, 2);
  EXPECT_EQ(invoke({"zeta", "--file", "examples/hasse/s3_gf3.alg", "--base", "GF(3)"}).code, 2);
  EXPECT_EQ(invoke({"tensor", "--preset", "s3", "--base", "GF(3)"}).code, 2);
  EXPECT_EQ(invoke({"neighborhood", "--preset", "s3", "--base", "Z", "--localize", "3"}).code, 2);
}

TEST_F(CliTest, DomainErrors) {
  auto missing = invoke({"points", "--file", "examples/hasse/does_not_exist.alg"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("cannot read"), std::string::npos);
  EXPECT_EQ(invoke({"points", "--preset", "s3", "--base", "GF(6)"}).code, 1);
  EXPECT_EQ(invoke({"points", "--preset", "s3", "--base", "Z", "--fiber", "4"}).code, 1);
  EXPECT_EQ(invoke({"zeta", "--preset", "s3", "--base", "Z"}).code, 1);
  EXPECT_EQ(invoke({"dirichlet", "--preset", "s3", "--base", "GF(3)"}).code, 1);
  EXPECT_EQ(invoke({"points", "--preset", "dihedral", "--base", "GF(3)"}).code, 1);
  EXPECT_EQ(invoke({"neighborhood", "--preset", "s3", "--base", "Z", "--localize", "3", "--point", "P9"}).code, 1);
}

TEST(CliRun, InProcess) {
  Command c;
  c.subcommand = "zeta";
  c.preset = "s3";
  c.base = "GF(3)";
  c.format = Format::machine;
  std::ostringstream out, err;
  EXPECT_EQ(hasse::cli::run(c, out, err), 0);
  EXPECT_EQ(out.str(), "series D=5 coeffs=1,2,3,4,5,6\n");
  EXPECT_TRUE(err.str().empty());

  c.subcommand = "check-morphism";
  c.preset = "diag";
  std::ostringstream out2, err2;
  EXPECT_EQ(hasse::cli::run(c, out2, err2), 0);
  EXPECT_EQ(first_line(out2.str()), "morphism source=2 target=4 procesi=false rc=false");

  c.subcommand = "spec";
  c.preset = "nope";
  std::ostringstream out3, err3;
  EXPECT_EQ(hasse::cli::run(c, out3, err3), 1);
  EXPECT_EQ(err3.str(), "error: unknown preset 'nope'\n");
}

TEST(MorphismText, ParseErrorsKeepLineNumbers) {
  const std::string text = "# comment\nsource\nbase GF(3)\nbasis 1 e\nmul e e = e\ntarget\nbase GF(3)\nbasis 1 f\nmul f f = f\nmap e = g\n";
  try {
    hasse::parse_morphism(text);
    FAIL() << "expected a parse error";
  } catch (const hasse::ParseError& e) {
    EXPECT_EQ(e.line(), 10u);
    EXPECT_EQ(e.column(), 9u);
  }
  try {
    hasse::parse_morphism("source\nbase GF(3)\nbasis 1 e\nmul e e = x\ntarget\nbase GF(3)\nbasis 1\n");
    FAIL() << "expected a parse error";
  } catch (const hasse::ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(hasse::parse_morphism("base GF(3)\nbasis 1\n"), hasse::ParseError);
  EXPECT_THROW(hasse::parse_morphism("source\nbase GF(3)\nbasis 1 e\nmul e e = e\ntarget\nbase GF(3)\nbasis 1\n"), hasse::Error);
  // 1 -> e breaks the unit law, e -> 2f breaks multiplicativity over GF(3).
  EXPECT_THROW(hasse::to_morphism(hasse::parse_morphism("source\nbase GF(3)\nbasis 1\ntarget\nbase GF(3)\nbasis 1 e\nmul e e = e\nmap 1 = e\n")),
               hasse::LawError);
  EXPECT_THROW(hasse::to_morphism(hasse::parse_morphism(
                   "source\nbase GF(3)\nbasis 1 e\nmul e e = e\ntarget\nbase GF(3)\nbasis 1 f\nmul f f = f\nmap e = 2*f\n")),
               hasse::LawError);
}

TEST(MorphismText, PresetsAreMorphisms) {
  for (const auto& name : hasse::morphism_preset_names())
    for (std::uint64_t p : {2, 3, 5}) {
      const auto base = hasse::BaseRing::finite_field(hasse::Field::make(p, 1));
      EXPECT_NO_THROW(hasse::to_morphism(hasse::parse_morphism(hasse::morphism_preset_text(name, base)))) << name << " p=" << p;
    }
}
