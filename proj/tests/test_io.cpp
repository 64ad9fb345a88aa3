#include "doctest.h"

#include "qaffine/json_io.hpp"

using namespace qaffine;
namespace io = qaffine::io;

namespace {

QSeries tiny_series() {
  QSeries s(4);
  s.set(0, Int(1));
  s.set(1, Int(-2));
  s.set(3, Int(5));
  return s;
}

VerifyReport pass_report() {
  VerifyReport r;
  r.identity = "main-exact i=0 n=1";
  r.order = 6;
  r.pass = true;
  r.elapsed_ms = 0;
  return r;
}

VerifyReport fail_report() {
  VerifyReport r;
  r.identity = "demo, with comma";
  r.order = 3;
  r.pass = false;
  r.mismatch = MismatchInfo{"q^2", "4", "5"};
  r.floor_shift = 1;
  r.elapsed_ms = 0;
  return r;
}

}  // namespace

TEST_CASE("format names") {
  CHECK(io::format_from_name("json") == io::Format::kJson);
  CHECK(io::format_from_name("csv") == io::Format::kCsv);
  CHECK(io::format_from_name("text") == io::Format::kText);
  CHECK(!io::format_from_name("yaml").has_value());
}

TEST_CASE("plain series renders to all three formats") {
  const QSeries s = tiny_series();

  CHECK(io::to_json(s) ==
        "{\n"
        "  \"trunc_order\": 4,\n"
        "  \"q_min\": 0,\n"
        "  \"terms\": [\n"
        "    {\n"
        "      \"q\": 0,\n"
        "      \"colours\": [],\n"
        "      \"coeff\": \"1\"\n"
        "    },\n"
        "    {\n"
        "      \"q\": 1,\n"
        "      \"colours\": [],\n"
        "      \"coeff\": \"-2\"\n"
        "    },\n"
        "    {\n"
        "      \"q\": 3,\n"
        "      \"colours\": [],\n"
        "      \"coeff\": \"5\"\n"
        "    }\n"
        "  ]\n"
        "}\n");

  // CSV lists every retained exponent, zeros included.
  CHECK(io::to_csv(s) == "0,1\n1,-2\n2,0\n3,5\n4,0\n");

  CHECK(io::to_text(s) == "1 - 2*q + 5*q^3 + O(q^5)\n");
}

TEST_CASE("coloured and lattice series render sparsely") {
  ColouredSeries cs(2, 3, -1);
  cs.add_term(-1, {1, -1}, Int(3));
  cs.add_term(2, {0, 2}, Int(-1));
  CHECK(io::to_csv(cs) == "-1,1,-1,3\n2,0,2,-1\n");
  CHECK(io::to_json(cs).find("\"q_min\": -1") != std::string::npos);
  CHECK(io::to_json(cs).find("\"coeff\": \"3\"") != std::string::npos);

  LatticeSeries ls(2);
  ls.add_term({0, 0}, Int(1));
  ls.add_term({1, -2}, Int(4));
  CHECK(io::to_csv(ls) == "0,0,1\n1,-2,4\n");
  CHECK(io::to_json(ls).find("\"a_min\": 0") != std::string::npos);
}

TEST_CASE("partitions render with their weight") {
  const ColouredPartition p = {{3, 1}, {0, 0}};
  CHECK(io::to_csv(p) == "3,3:1;0:0\n");
  const std::string j = io::to_json(p);
  CHECK(j.find("\"weight\": 3") != std::string::npos);
  CHECK(j.find("\"size\": 3") != std::string::npos);
  CHECK(j.find("\"colour\": 1") != std::string::npos);
}

TEST_CASE("verification report formats") {
  const VerifyReport ok = pass_report();
  CHECK(io::to_json(ok) ==
        "{\n"
        "  \"identity\": \"main-exact i=0 n=1\",\n"
        "  \"order\": 6,\n"
        "  \"status\": \"PASS\",\n"
        "  \"first_mismatch\": null,\n"
        "  \"floor_shift\": 0,\n"
        "  \"elapsed_ms\": 0\n"
        "}\n");
  CHECK(io::to_csv(ok) == "main-exact i=0 n=1,6,PASS,,,,0,0\n");
  CHECK(io::to_text(ok) == "PASS  main-exact i=0 n=1  [order 6, 0 ms]\n");

  const VerifyReport bad = fail_report();
  // Comma in the identity forces RFC-4180 quoting.
  CHECK(io::to_csv(bad) == "\"demo, with comma\",3,FAIL,q^2,4,5,1,0\n");
  CHECK(io::to_text(bad) ==
        "FAIL  demo, with comma  [order 3, floor shift 1, 0 ms]\n"
        "  first mismatch at q^2: lhs = 4, rhs = 5\n");
  const std::string j = io::to_json(bad);
  CHECK(j.find("\"status\": \"FAIL\"") != std::string::npos);
  CHECK(j.find("\"where\": \"q^2\"") != std::string::npos);
}

TEST_CASE("grid summary counts its cells") {
  const std::string empty = io::grid_summary_json({});
  CHECK(empty.find("\"total\": 0") != std::string::npos);
  CHECK(empty.find("\"status\": \"PASS\"") != std::string::npos);

  const std::string mixed = io::grid_summary_json({pass_report(), fail_report()});
  CHECK(mixed.find("\"total\": 2") != std::string::npos);
  CHECK(mixed.find("\"passed\": 1") != std::string::npos);
  CHECK(mixed.find("\"status\": \"FAIL\"") != std::string::npos);
}

TEST_CASE("render dispatches on the format") {
  const QSeries s = tiny_series();
  CHECK(io::render(s, io::Format::kCsv) == io::to_csv(s));
  CHECK(io::render(s, io::Format::kJson) == io::to_json(s));
  CHECK(io::render(s, io::Format::kText) == io::to_text(s));
}
