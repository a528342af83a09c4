#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli_app.hpp"

namespace {

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = modbraid::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string temp_path(std::string const& name) {
    return (std::filesystem::temp_directory_path()
            / ("modbraid_cli_" + name + ".json"))
        .string();
  }

  nlohmann::json read_json(std::string const& path) {
    std::ifstream f(path);
    return nlohmann::json::parse(f);
  }

  std::string slurp(std::string const& path) {
    std::ifstream     f(path);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
  }

}  // namespace

TEST(Cli, Examples) {
  auto phi = run({"compute", "phi", "--cell", "e:1,2,3", "--n", "3"});
  EXPECT_EQ(phi.code, 0);
  EXPECT_EQ(phi.out, "{\"1,3\":1,\"2,3\":-1}\n");

  auto zn = run({"enumerate", "zn", "--n", "3"});
  EXPECT_EQ(zn.code, 0);
  EXPECT_EQ(zn.out, "48\n");

  auto ns = run({"verify", "nonsplit", "--n", "2"});
  EXPECT_EQ(ns.code, 0);
  EXPECT_EQ(ns.out, "nonsplit n=2: 1/1 passed\n");
}

TEST(Cli, Suites) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"verify", "tables", "--n", "3", "--t", "2"},
        {"verify", "cocycle", "--n", "3"},
        {"verify", "chainmap", "--n", "3"},
        {"verify", "closed-forms", "--n", "4"},
        {"verify", "split", "--t", "2", "--n", "3"},
        {"verify", "nonsplit", "--n", "3"},
        {"verify", "b4-generators", "--n", "4"},
        {"verify", "figures", "--n", "4"}}) {
    auto const r = run(args);
    EXPECT_EQ(r.code, 0) << args[1] << ": " << r.out << r.err;
    EXPECT_NE(r.out.find("passed"), std::string::npos);
  }
}

TEST(Cli, ComputeValues) {
  auto k = run({"compute", "kappa", "--cell", "e:1,2,3", "--n", "3"});
  EXPECT_EQ(k.out, "{\"1,3\":1,\"2,3\":1}\n");
  auto c = run({"compute", "cocycle", "--p", "[2,1,3]", "--q", "[2,1,3]",
                "--n", "3"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "{\"1,2\":1}\n");
  auto b = run({"compute", "burau", "--word", "b1 b1 b1 b1", "--n", "3",
                "--mod", "4"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("\"identity\":true"), std::string::npos);
  EXPECT_EQ(run({"bound", "schreier", "--n", "3"}).code, 0);
}

TEST(Cli, CosetEnumeration) {
  auto b = run({"coset-enum", "--builtin", "z-artin", "--n", "3"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.out, "48\n");
  auto f = run({"coset-enum", "--pres",
                std::string(MODBRAID_DATA_DIR) + "/presentations/s3.pres",
                "--strategy", "felsch"});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.out, "6\n");
  auto a = run({"coset-enum", "--builtin", "braid-artin", "--n", "3",
                "--limit", "100"});
  EXPECT_EQ(a.code, 1);
  EXPECT_NE(a.out.find("aborted"), std::string::npos);
}

TEST(Cli, EnvironmentLimit) {
  ::setenv("MODBRAID_COSET_LIMIT", "20", 1);
  auto const r = run({"coset-enum", "--builtin", "z-artin", "--n", "3"});
  ::unsetenv("MODBRAID_COSET_LIMIT");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run({"coset-enum", "--builtin", "z-artin", "--n", "3"}).code, 0);
}

TEST(Cli, UsageErrors) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{},
        {"bogus"},
        {"verify"},
        {"verify", "tables"},
        {"verify", "tables", "--n", "x"},
        {"verify", "split", "--n", "3", "--t", "3"},
        {"verify", "nonsplit", "--n", "5"},
        {"compute", "phi", "--cell", "q:1,2", "--n", "3"},
        {"compute", "phi", "--cell", "e:1,2,9", "--n", "3"},
        {"compute", "cocycle", "--p", "[2,1]", "--q", "[1,2,3]", "--n", "3"},
        {"compute", "burau", "--word", "b7", "--n", "3"},
        {"coset-enum", "--builtin", "nope", "--n", "3"},
        {"coset-enum", "--pres", "/nonexistent.pres"},
        {"coset-enum"},
        {"enumerate", "zn", "--n", "5"},
        {"bound", "schreier", "--n", "1"}}) {
    auto const r = run(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]) << " "
                         << (args.size() > 1 ? args[1] : "");
  }
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"--version"}).out, std::string(modbraid::version) + "\n");
}

TEST(Cli, JsonReportsAreDeterministic) {
  auto const a = temp_path("a"), b = temp_path("b");
  ASSERT_EQ(run({"verify", "tables", "--n", "3", "--json", a}).code, 0);
  ASSERT_EQ(run({"verify", "tables", "--n", "3", "--json", b}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));

  auto const j = read_json(a);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["version"], modbraid::version);
  EXPECT_EQ(j["suite"], "tables");
  auto const& cases = j["cases"];
  std::size_t passed = 0;
  for (auto const& c : cases) {
    passed += c["pass"].get<bool>() ? 1 : 0;
  }
  EXPECT_EQ(j["summary"]["total"], cases.size());
  EXPECT_EQ(j["summary"]["passed"], passed);
  EXPECT_EQ(j["summary"]["failed"], cases.size() - passed);

  ASSERT_EQ(run({"compute", "phi", "--cell", "e:1,2,3", "--n", "3", "--json",
                 a})
                .code,
            0);
  auto const k = read_json(a);
  EXPECT_EQ(k["command"], "compute phi");
  EXPECT_EQ(k["result"]["1,3"], 1);
  std::remove(a.c_str());
  std::remove(b.c_str());
}
