#include "cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "glinf");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = glinf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eigenvalues for (2,1) agree across all three methods") {
  const auto r = run({"eigenvalues", "--lambda", "2,1", "--m-max", "3", "--validate", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"([{"lambda":[2,1],"m":1,"closed":"3","recursive":"3","oracle":"3","agree":true},)"
        R"({"lambda":[2,1],"m":2,"closed":"0","recursive":"0","oracle":"0","agree":true},)"
        R"({"lambda":[2,1],"m":3,"closed":"12","recursive":"12","oracle":"12","agree":true}])"
        "\n");
}

TEST_CASE("eigenvalues of the trivial weight are zero") {
  const auto r = run({"eigenvalues", "--lambda", "", "--m-max", "4", "--validate", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "lambda,m,closed,recursive,oracle,agree\n"
        "\"[]\",1,0,0,0,true\n\"[]\",2,0,0,0,true\n\"[]\",3,0,0,0,true\n\"[]\",4,0,0,0,true\n");
}

TEST_CASE("eigenvalues of the vector weight alternate") {
  const auto r = run({"eigenvalues", "--lambda", "1", "--m-max", "4", "--format", "json"});
  CHECK(r.code == 0);
  const std::vector<std::string> expected{"1", "0", "1", "0"};
  for (std::size_t m = 0; m < 4; ++m)
    CHECK(r.out.find("\"m\":" + std::to_string(m + 1) + ",\"closed\":\"" + expected[m] + "\"") != std::string::npos);
}

TEST_CASE("verify-identity") {
  auto r = run({"verify-identity", "--lambda", "1,1", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("roots":["1","0","-2"],"residual_zero":true)") != std::string::npos);
  r = run({"verify-identity", "--lambda", "3", "--reduced", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("roots":["3","-1"],"residual_zero":true)") != std::string::npos);
  r = run({"verify-identity", "--lambda", "1,1", "--mu", "1", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("mu":[1])") != std::string::npos);
  r = run({"verify-identity", "--lambda", "2,1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("factor,root,kernel_dim") != std::string::npos);
  CHECK(r.out.find(",3,-2,3,true\n") != std::string::npos);
}

TEST_CASE("verify-invariants and decompose") {
  auto r = run({"verify-invariants", "--lambda", "2,1", "--m-max", "3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("oracle":"12","closed":"12","agree":true,"commutator":true,"tail":true)") != std::string::npos);
  r = run({"decompose", "--lambda", "2,1", "--mu", "1", "--validate", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"lambda":[2,1],"mu":[1],"summands":[{"nu":[3,1],"mult":1},{"nu":[2,2],"mult":1},{"nu":[2,1,1],"mult":1}]})"
        "\n");
}

TEST_CASE("oracle-check and fixture dump") {
  const std::string path = "cli_fixture_test.json";
  auto r = run({"oracle-check", "--lambda", "2,1", "--n", "3", "--fixture", path, "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("dim":8,"weyl_dim":8)") != std::string::npos);
  CHECK(slurp(path).find(R"("generators")") != std::string::npos);
  std::remove(path.c_str());
  r = run({"oracle-check", "--lambda", "2,1", "--n", "3", "--inject-mutation"});
  CHECK(r.code == 1);
}

TEST_CASE("JSON output is byte-stable") {
  const std::vector<std::string> args{"verify-invariants", "--lambda", "2,1", "--n", "4", "--format", "json",
                                      "--seed", "7"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> dec{"decompose", "--lambda", "2,1", "--mu", "2,1", "--format", "json"};
  CHECK(run(dec).out == run(dec).out);
}

TEST_CASE("--out writes the file instead of standard output") {
  const std::string path = "cli_out_test.json";
  const auto r = run({"eigenvalues", "--lambda", "1", "--m-max", "2", "--format", "json", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path) == run({"eigenvalues", "--lambda", "1", "--m-max", "2", "--format", "json"}).out);
  std::remove(path.c_str());
}

TEST_CASE("usage and configuration errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"eigenvalues"}).code == 2);
  CHECK(run({"eigenvalues", "--lambda", "1,2"}).code == 2);
  CHECK(run({"eigenvalues", "--lambda", "1", "--m-max", "13"}).code == 2);
  CHECK(run({"eigenvalues", "--lambda", "1", "--m-max", "0"}).code == 2);
  CHECK(run({"eigenvalues", "--lambda", "2,1", "--n", "1", "--validate"}).code == 2);
  CHECK(run({"verify-identity", "--lambda", "2,1", "--n", "2"}).code == 2);
  CHECK(run({"decompose", "--lambda", "1"}).code == 2);
  CHECK(run({"eigenvalues", "--lambda", "1", "--format", "xml"}).code == 2);
  CHECK(run({"eigenvalues", "--lambda", "1", "--out", "/nonexistent/dir/file"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify-identity") != std::string::npos);
}

TEST_CASE("validate_config enforces the rank bound") {
  glinf::cli::RunConfig cfg;
  cfg.command = "eigenvalues";
  cfg.lambda = glinf::make_highest_weight({2, 1});
  CHECK_NOTHROW(glinf::cli::validate_config(cfg));
  cfg.n_override = 1;
  CHECK_THROWS(glinf::cli::validate_config(cfg));
}

TEST_CASE("sweep restricted to m_max = 2 passes") {
  const auto r = run({"sweep", "--m-max", "2", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("passed":false)") == std::string::npos);
}

TEST_CASE("sweep with an injected mutation fails loudly") {
  const auto r = run({"sweep", "--m-max", "2", "--inject-mutation"});
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL]") != std::string::npos);
  CHECK(r.err.find("failed") != std::string::npos);
}

}
