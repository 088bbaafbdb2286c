#include "hypercone/cone_io.hpp"
#include "hypercone/report.hpp"

#include <doctest.h>

#include <sstream>

using namespace hypercone;

namespace {

std::string emit(const Cone& c) {
  std::ostringstream out;
  write_cone(out, c);
  return out.str();
}

template <typename Fn>
ParseError parse_failure(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError");
  throw std::logic_error("unreachable");
}

Cone parse(const std::string& text) {
  std::istringstream in(text);
  return read_cone(in, "test");
}

}  // namespace

TEST_CASE("cone files round-trip bit-exactly") {
  for (const Cone& c : {Cone(generate_hyp(7)), Cone(generate_met(5)), Cone(generate_cuts(8))}) {
    const std::string text = emit(c);
    const Cone back = parse(text);
    CHECK(back.index() == c.index());
    CHECK(emit(back) == text);
    std::visit(
        [&](const auto& a) {
          const auto& b = std::get<std::decay_t<decltype(a)>>(back);
          CHECK(a.points() == b.points());
          CHECK(a.matrix() == b.matrix());
        },
        c);
  }
}

TEST_CASE("header and layout") {
  const std::string text = emit(generate_met(3));
  CHECK(text.rfind("3 3 3 H\n", 0) == 0);
  const Cone c = parse("# comment\n\n3 3 2 V\n1 1 0  # a cut\n\t0 1 1\n");
  CHECK(std::get<VCone>(c).size() == 2);
}

TEST_CASE("diagnostics carry line and column") {
  auto e = parse_failure([] { parse("3 3 2 H\n-1 -1 1\n-1 1x -1\n"); });
  CHECK(e.line() == 3);
  CHECK(e.column() == 4);
  CHECK(std::string(e.what()).find("test:3:4:") == 0);

  e = parse_failure([] { parse("3 4 1 H\n1 1 1 1\n"); });
  CHECK(e.line() == 1);
  CHECK(e.column() == 3);

  e = parse_failure([] { parse("3 3 1 Q\n1 1 1\n"); });
  CHECK(e.column() == 7);

  e = parse_failure([] { parse("3 3 2 H\n1 -1 -1\n"); });
  CHECK(e.line() == 3);

  e = parse_failure([] { parse("3 3 1 H\n1 -1 -1\n-1 1 -1\n"); });
  CHECK(e.line() == 3);

  e = parse_failure([] { parse("3 3 1 H\n1 -1\n"); });
  CHECK(e.line() == 2);

  e = parse_failure([] { parse("3 3 2 H\n1 -1 -1\n2 -2 -2\n"); });
  CHECK(e.line() == 3);

  e = parse_failure([] { parse("3 3 1 H\n0 0 0\n"); });
  CHECK(e.line() == 2);

  e = parse_failure([] { parse("3 3 1 H\n99999999999999999999 0 0\n"); });
  CHECK(e.column() == 1);

  e = parse_failure([] { parse(""); });
  CHECK(e.line() == 1);
}

TEST_CASE("single vectors") {
  std::istringstream bare("1 1 0\n");
  CHECK(equal(read_vector(bare), make_int_vector({1, 1, 0})));
  std::istringstream wrapped("3 3 1 V\n0 1 1\n");
  CHECK(equal(read_vector(wrapped), make_int_vector({0, 1, 1})));
  std::istringstream odd("1 1\n");
  CHECK_THROWS_AS(read_vector(odd), ParseError);
  std::istringstream trailing("1 1 0\n1 0 1\n");
  CHECK_THROWS_AS(read_vector(trailing), ParseError);
}

TEST_CASE("b-vector files") {
  std::istringstream in("1 1 -1 0 0\n# pentagonal\n1 1 1 -1 -1\n");
  const auto list = read_bvectors(in);
  REQUIRE(list.size() == 2);
  CHECK(list[1] == BVector{1, 1, 1, -1, -1});

  std::istringstream bad_sum("1 1 1 0 0\n");
  CHECK_THROWS_AS(read_bvectors(bad_sum), ParseError);
  std::istringstream ragged("1 1 -1\n1 1 -1 0\n");
  const auto e = parse_failure([&] { read_bvectors(ragged); });
  CHECK(e.line() == 2);
}

TEST_CASE("graph files") {
  std::istringstream in("4 3\n1 2\n2 3\n3 4\n");
  const SimpleGraph g = read_graph(in);
  CHECK(g.vertices() == 4);
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(path_metric(g).coords()(pair_index(4, 0, 3)) == 3);

  std::istringstream out_of_range("3 1\n1 4\n");
  CHECK(parse_failure([&] { read_graph(out_of_range); }).column() == 3);
  std::istringstream repeated("3 2\n1 2\n2 1\n");
  CHECK(parse_failure([&] { read_graph(repeated); }).line() == 3);
  std::istringstream short_list("3 2\n1 2\n");
  CHECK_THROWS_AS(read_graph(short_list), ParseError);
  std::istringstream loop("3 1\n2 2\n");
  CHECK_THROWS_AS(read_graph(loop), ParseError);
}

TEST_CASE("missing files are input errors") {
  CHECK_THROWS_AS(read_cone_file("/nonexistent/cone.txt"), InputError);
}

TEST_CASE("JSON reports sort keys and carry a schema version") {
  Json j = report_envelope("cone");
  j["cone"] = cone_json(Cone(generate_met(3)));
  const std::string text = j.dump();
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(text.find("\"cone\"") < text.find("\"report\""));
  CHECK(text.find("\"report\"") < text.find("\"schema_version\""));
  CHECK(j["cone"]["count"] == 3);
  CHECK(j["cone"]["vectors"][0] == Json::array({-1, -1, 1}));
}
