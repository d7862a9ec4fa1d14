#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "alf/cli.hpp"
#include "alf/io.hpp"

using namespace alf;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

io::Json json(const Result& r) { return io::Json::parse(r.out); }

}  // namespace

TEST_CASE("family | classify") {
  const Result emitted = run({"family", "ALdP1", "--n", "2", "--emit"});
  REQUIRE(emitted.code == 0);
  const Result classified = run({"classify"}, emitted.out);
  CHECK(classified.code == 0);
  const auto report = json(classified);
  CHECK(report["status"] == "ALF");
  CHECK(report["ample_angles"]["constraints"][0]["text"] == "-2β1+2β2>0");
  CHECK(run({"classify", "-"}, emitted.out).out == classified.out);
  CHECK(run({"classify", "--expect-alf"}, emitted.out).code == 0);
}

TEST_CASE("family reports directly") {
  const Result r = run({"family", "ALdP.3", "--n", "0"});
  CHECK(r.code == 0);
  CHECK(json(r)["status"] == "StronglyALF");
  CHECK(run({"family", "ALdP9", "--n", "1"}).code == cli::kInputError);
  CHECK(run({"family", "ALdP1", "--n", "-1"}).code == cli::kInputError);
}

TEST_CASE("obstruction via blowup, aa and classify --expect-alf") {
  const Result base = run({"family", "ALdP4", "--n", "2", "--emit"});
  const Result once = run({"blowup", "--type", "i", "--on", "C1", "--fiber-label", "f"}, base.out);
  REQUIRE(once.code == 0);
  const Result twice = run({"blowup", "-", "--type", "i", "--on", "C4", "--fiber-label", "f"}, once.out);
  REQUIRE(twice.code == 0);
  const Result aa = run({"aa"}, twice.out);
  CHECK(aa.code == 0);
  const auto report = json(aa);
  CHECK(report["status"] == "NotALF");
  CHECK(report["diagnostics"][0]["class"]["text"] == "F-E1-E2");
  CHECK(run({"classify"}, twice.out).code == 0);
  CHECK(run({"classify", "--expect-alf"}, twice.out).code == cli::kNotAlf);
}

TEST_CASE("type (ii) blow-up through the CLI") {
  const Result base = run({"family", "ALdP1", "--n", "3", "--emit"});
  const Result next = run({"blowup", "--type", "ii", "--on", "C1", "--on", "C2"}, base.out);
  REQUIRE(next.code == 0);
  const auto d = io::parse_description(next.out);
  CHECK(d.boundary == std::vector<std::string>{"C1", "C2", "E1"});
  CHECK(json(run({"classify"}, next.out))["status"] == "ALF");
  CHECK(run({"blowup", "--type", "ii", "--on", "C1"}, base.out).code == cli::kInputError);
  CHECK(run({"blowup", "--type", "iii", "--on", "C1"}, base.out).code == cli::kInputError);
}

TEST_CASE("verify") {
  const Result r = run({"verify", "--n-max", "10"});
  CHECK(r.code == 0);
  const auto report = json(r);
  CHECK(report["all_passed"] == true);
  CHECK(report["rows"].size() == 4 * 11 + 10 + 10);
  CHECK(run({"verify", "--n-max", "0"}).code == cli::kInputError);
}

TEST_CASE("files, determinism and input errors") {
  const std::string path = "test_cli_pair.json";
  {
    std::ofstream f(path);
    f << run({"family", "ALdP2", "--n", "1", "--emit"}).out;
  }
  const Result a = run({"classify", path}), b = run({"classify", path});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::remove(path.c_str());

  const Result missing = run({"aa", "does-not-exist.json"});
  CHECK(missing.code == cli::kInputError);
  CHECK(json(missing)["error"]["kind"] == "parse_error");
  CHECK_FALSE(missing.err.empty());
  CHECK(run({"aa"}, "{not json").code == cli::kInputError);
  CHECK(run({"classify"}, R"({"base":{"kind":"p2"},"boundary":[]})").code == cli::kInputError);
  const Result incomplete =
      run({"classify"},
          R"({"base":{"kind":"p2"},"curves":[{"id":"Q","class":{"H":3}}],"blowups":[{"on":["Q"]}],"boundary":["Q"]})");
  CHECK(incomplete.code == cli::kInputError);
  CHECK(json(incomplete)["error"]["kind"] == "incomplete_mori_data");
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({"family", "ALdP1"}).code == cli::kInputError);
  CHECK(run({"--help"}).code == 0);
}
