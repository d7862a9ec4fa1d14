#include <doctest.h>

#include <regex>

#include "alf/error.hpp"
#include "alf/io.hpp"

using namespace alf;
using io::Json;

namespace {

std::string parse_error_location(std::string_view text) {
  try {
    io::parse_pair(text);
  } catch (const ParseError& e) {
    return e.location();
  }
  return "<no error>";
}

std::string parse_error_cause(std::string_view text) {
  try {
    io::parse_pair(text);
  } catch (const ParseError& e) {
    return e.cause();
  }
  return "<no error>";
}

// Every leaf of a report is a string, boolean, null or integer; numeric
// strings are exact fractions.
void check_exact(const Json& j) {
  if (j.is_object() || j.is_array()) {
    for (const auto& v : j) check_exact(v);
    return;
  }
  CHECK_FALSE(j.is_number_float());
}

std::vector<PairDescription> sample_descriptions() {
  std::vector<PairDescription> out;
  for (Family kind : kAllFamilies)
    for (int n : {0, 1, 4}) out.push_back(family_description(kind, n));
  out.push_back(obstruction_same_fiber(2).description());
  LogPair chain = family(Family::ALdP2, 1);
  for (int k = 0; k < 3; ++k) chain = blow_up_type_ii(chain, *next_node(chain));
  out.push_back(chain.description());
  PairDescription p2;
  p2.base = BaseSurface::projective_plane();
  p2.curves = {{"Q", {{"H", 3}}, 0}, {"L", {{"H", 1}, {"E1", -1}}, 1}};
  p2.blowups = {BlowUpSpec{{"Q"}, std::nullopt, false}};
  p2.boundary = {"Q"};
  out.push_back(p2);
  return out;
}

}  // namespace

TEST_CASE("parsing the ALdP.1.2 example") {
  const std::string text =
      R"({"base":{"kind":"hirzebruch","n":2},"curves":[{"id":"C1","class":"Z"},{"id":"C2","class":{"Z":1,"F":4}}],"boundary":["C1","C2"]})";
  CHECK(io::parse_description(text) == family_description(Family::ALdP1, 2));
  const LogPair pair = io::parse_pair(text);
  CHECK(equals(compute_ample_angles(pair).body, expected_family_body(Family::ALdP1, 2)));
}

TEST_CASE("parse and emit round trip") {
  for (const auto& d : sample_descriptions()) {
    const std::string text = io::emit_pair(d);
    CHECK(io::parse_description(text) == d);
    CHECK(io::emit_pair(io::parse_description(text)) == text);
  }
  // Emission normalizes: terms merged, zero terms dropped, basis order.
  const std::string messy =
      R"({"boundary":["A"],"curves":[{"id":"A","class":{"F":2,"Z":1,"E1":0}}],"base":{"n":1,"kind":"hirzebruch"}})";
  const std::string once = io::emit_pair(io::parse_description(messy));
  CHECK(once.find(R"("E1")") == std::string::npos);
  CHECK(once.find(R"("base")") < once.find(R"("curves")"));
  CHECK(io::emit_pair(io::parse_description(once)) == once);
}

TEST_CASE("empty boundary is a valid pair that classify refuses") {
  const LogPair pair = io::parse_pair(R"({"base":{"kind":"p2"},"boundary":[]})");
  CHECK(pair.size() == 0);
  CHECK_THROWS_AS(classify(pair), PreconditionError);
}

TEST_CASE("parse errors carry locations") {
  CHECK(parse_error_location(R"({"base":{"kind":"p2"}, "boundary":["C1"]})") == "/boundary/0");
  CHECK(parse_error_cause(R"({"base":{"kind":"p2"}, "boundary":["C1"]})") == "unknown_curve");
  CHECK(parse_error_location(
            R"({"base":{"kind":"hirzebruch","n":1},"blowups":[{"on":["C7"],"node":false}],"boundary":[]})") ==
        "/blowups/0");
  CHECK(parse_error_location(R"({"base":{"kind":"hirzebruch","n":1},"curves":[{"id":"C1","class":{"Z":0.5}}]})") ==
        "/curves/0/class/Z");
  CHECK(parse_error_location(R"({"base":{"kind":"hirzebruch","n":1},"curves":[{"id":"C1","class":7}]})") ==
        "/curves/0/class");
  CHECK(parse_error_location(R"({"base":{"kind":"hirzebruch","n":1},"curves":[{"id":"C1","class":"Q"}]})") ==
        "/curves/0");
  CHECK(parse_error_location(R"({"base":{"kind":"cubic"}})") == "/base/kind");
  CHECK(parse_error_location(R"({"base":{"kind":"hirzebruch","n":-2}})") == "/base/n");
  CHECK(parse_error_location(R"({"base":{"kind":"hirzebruch"}})") == "/base");
  CHECK(parse_error_location(R"({"base":{"kind":"p2"},"extra":1})") == "/extra");
  CHECK(parse_error_location(R"({"curves":[]})") == "");
  CHECK(parse_error_location(R"({"base":)") == "");
  CHECK(parse_error_location(R"({"base":{"kind":"p2"},"boundary":"C1"})") == "/boundary");
  CHECK(parse_error_location(
            R"({"base":{"kind":"hirzebruch","n":1},"curves":[{"id":"C1","class":"F","step":3}]})") ==
        "/curves/0/step");
  CHECK(parse_error_location(
            R"({"base":{"kind":"hirzebruch","n":1},"blowups":[{"on":["Z"],"node":"yes"}]})") ==
        "/blowups/0/node");
  // Three curves through one point.
  CHECK(parse_error_cause(
            R"({"base":{"kind":"hirzebruch","n":0},"curves":[{"id":"A","class":"Z"},{"id":"B","class":"F"},{"id":"C","class":{"Z":1,"F":1}}],"blowups":[{"on":["A","B","C"]}]})") ==
        "snc_violation");
}

TEST_CASE("reports are exact and deterministic") {
  const LogPair pair = family(Family::ALdP1, 2);
  const Json report = io::classify_report(pair, classify(pair));
  check_exact(report);
  CHECK(report["schema"] == "alf-report/1");
  CHECK(report["status"] == "ALF");
  CHECK(report["ample_angles"]["constraints"][0]["text"] == "-2β1+2β2>0");
  CHECK(report["boundary_shape"]["shape"] == "Cycle");
  CHECK(report["minimality"]["minimal"] == true);
  const std::regex fraction("-?[0-9]+/[0-9]+");
  for (const auto& c : report["ample_angles"]["constraints"]) {
    for (const auto& a : c["coefficients"]) CHECK(std::regex_match(a.get<std::string>(), fraction));
    CHECK(std::regex_match(c["constant"].get<std::string>(), fraction));
  }
  for (const auto& v : report["ample_angles"]["closure_vertices"])
    for (const auto& x : v) CHECK(std::regex_match(x.get<std::string>(), fraction));
  CHECK(io::dump(report) == io::dump(io::classify_report(family(Family::ALdP1, 2), classify(family(Family::ALdP1, 2)))));
}

TEST_CASE("obstruction report names the offending class") {
  const LogPair pair = obstruction_same_fiber(3);
  const Json report = io::aa_report(pair, classify(pair));
  CHECK(report["status"] == "NotALF");
  CHECK(report["ample_angles"]["sample_point"].is_null());
  const auto& d = report["diagnostics"][0];
  CHECK(d["kind"] == "empty_body");
  CHECK(d["curve"] == "f");
  CHECK(d["class"]["text"] == "F-E1-E2");
}

TEST_CASE("error reports") {
  try {
    io::parse_pair(R"({"base":{"kind":"p2"}, "boundary":["C1"]})");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    const Json j = io::error_report(e);
    CHECK(j["error"]["kind"] == "parse_error");
    CHECK(j["error"]["cause"] == "unknown_curve");
    CHECK(j["error"]["location"] == "/boundary/0");
  }
}
