#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ringnc/cli.hpp"
#include "ringnc/network.hpp"
#include "ringnc/network_io.hpp"

using namespace ringnc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("ringnc_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("partition commands") {
  auto r = run({"partitions", "maximal", "--k", "12"});
  CHECK(r.code == 0);
  CHECK(r.out == "(12)\n(7,5)\n");
  CHECK(run({"partitions", "enumerate", "--k", "4"}).out == "(4)\n(3,1)\n(2,2)\n(2,1,1)\n(1,1,1,1)\n");
  CHECK(run({"partitions", "divides", "--left", "(2,1)", "--right", "(3)"}).out == "(2,1) divides (3): YES\n");
  CHECK(run({"partitions", "divides", "--left", "(2,2)", "--right", "(3,1)"}).out ==
        "(2,2) divides (3,1): NO\n");
  CHECK(run({"partitions", "maximal", "--k", "41"}).code == 2);
}

TEST_CASE("ring commands") {
  auto r = run({"rings", "maximal", "--size", "2^5"});
  CHECK(r.code == 0);
  CHECK(r.out == "GF(2^5)\nGF(2^3)xGF(2^2)\n");
  CHECK(run({"rings", "maximal", "--size", "12"}).out == "GF(2^2)xGF(3)\n");
  // GF(4) in canonical order: constant term most significant
  CHECK(run({"rings", "elements", "--ring", "GF(4)"}).out == "0\nx\n1\n1+x\n");
  CHECK(run({"rings", "elements", "--ring", "Z(3)xGF(2)"}).out == "(0,0)\n(0,1)\n(1,0)\n(1,1)\n(2,0)\n(2,1)\n");
  auto p = run({"rings", "parse", "--ring", "Z(3) x GF(2^2)"});
  CHECK(p.out ==
        "ring: Z(3)xGF(2^2)\ncanonical: GF(2^2)xGF(3)\nsize: 12\ncharacteristic: 6\nfield: no\n");
  auto bad = run({"rings", "parse", "--ring", "GF(6)"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("offset") != std::string::npos);
}

TEST_CASE("dominance commands") {
  auto r = run({"dominance", "fields", "--left", "GF(8)xGF(4)", "--right", "GF(32)"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "left\xe2\xaa\xafright: NO (prime 2 exponent 5 has no divisor in {3,2})\n"
        "right\xe2\xaa\xafleft: NO (prime 2 exponent 3 has no divisor in {5})\n");
  auto z = run({"dominance", "zmod", "--left", "Z(12)", "--right", "Z(6)"});
  CHECK(z.out.rfind("left\xe2\xaa\xafright: YES\nright\xe2\xaa\xafleft: NO", 0) == 0);
  auto c = run({"dominance", "catalog", "--left", "D(2)", "--right", "GF(4)"});
  CHECK(c.out.find("DualAugmentation D(2) -> GF(2)") != std::string::npos);
  CHECK(c.out.find("SubringInclusion GF(2) -> GF(2^2)") != std::string::npos);
  CHECK(run({"dominance", "fields", "--left", "Z(4)", "--right", "GF(4)"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"partitions"}).code == 2);
  CHECK(run({"partitions", "maximal"}).code == 2);
  CHECK(run({"partitions", "maximal", "--k", "5", "--bogus", "1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("table verification") {
  auto full = run({"verify", "table1", "--max-k", "30"});
  CHECK(full.code == 0);
  CHECK(full.out.find("17: (17) (15,2) (14,3) (13,4) (12,5) (11,6) (10,7) (9,8) (7,6,4)") != std::string::npos);
  auto five = run({"verify", "table1", "--max-k", "5"});
  CHECK(five.code == 0);
  CHECK(five.out.find("OK: 5 rows checked") != std::string::npos);
  CHECK(run({"verify", "table1", "--max-k", "31"}).code == 2);

  auto golden = read(cli::default_data_path("table1.txt"));
  auto tampered = golden;
  tampered.replace(tampered.find("(7,6,4)"), 7, "(7,5,5)");
  auto path = temp_file("table1.txt", tampered);
  auto bad = run({"verify", "table1", "--golden", path});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("MISMATCH k=17") != std::string::npos);
  CHECK(run({"verify", "table1", "--max-k", "16", "--golden", path}).code == 0);

  CHECK(run({"verify", "example513"}).code == 0);
  auto g513 = read(cli::default_data_path("example513.txt"));
  g513.replace(g513.find("GF(p^6)xGF(p^5)"), 15, "GF(p^10)xGF(p)");
  CHECK(run({"verify", "example513", "--golden", temp_file("e513.txt", g513)}).code == 1);
}

TEST_CASE("network solve, verify and transform") {
  auto gen = run({"network", "gen", "two-six"});
  REQUIRE(gen.code == 0);
  CHECK(parse_network(gen.out) == two_six());
  auto net = temp_file("two_six.json", gen.out);

  auto s3 = run({"network", "solve", "--file", net, "--ring", "GF(3)"});
  CHECK(s3.code == 0);
  CHECK(verify(two_six(), parse_code(s3.out)));
  CHECK(run({"network", "solve", "--file", net, "--ring", "GF(3)", "--jobs", "4"}).out == s3.out);

  for (const char* r : {"GF(2)", "Z(6)"}) {
    auto u = run({"network", "solve", "--file", net, "--ring", r});
    CHECK(u.code == 1);
    CHECK(u.out == "UNSOLVABLE (search exhausted)\n");
  }
  auto over = run({"network", "solve", "--file", net, "--ring", "GF(3)", "--budget", "2^10"});
  CHECK(over.code == 2);
  CHECK(over.err.find("3^8") != std::string::npos);
  CHECK(run({"network", "solve", "--file", net, "--ring", "GF(3)", "--budget", "6561"}).code == 0);
  CHECK(run({"network", "solve", "--file", net, "--ring", "GF(3)", "--budget", "lots"}).code == 2);
  CHECK(run({"network", "solve", "--file", "/nonexistent.json", "--ring", "GF(3)"}).code == 2);

  auto code = temp_file("two_six_gf3.json", s3.out);
  auto v = run({"network", "verify", "--file", net, "--code", code});
  CHECK(v.code == 0);
  CHECK(v.out == "VERIFIED\n");
  auto wrong = parse_code(s3.out);
  wrong.edges["l01"] = {0, 0};
  auto wv = run({"network", "verify", "--file", net, "--code", temp_file("wrong.json", code_to_json(wrong))});
  CHECK(wv.code == 1);
  CHECK(wv.out.rfind("NOT A SOLUTION", 0) == 0);

  auto b3 = temp_file("c3.json", run({"network", "gen", "choose-two", "--n", "3"}).out);
  auto s6 = run({"network", "solve", "--file", b3, "--ring", "GF(3)xGF(2)"});
  REQUIRE(s6.code == 0);
  auto s6_file = temp_file("c3_prod.json", s6.out);
  auto t = run({"network", "transform", "--file", b3, "--code", s6_file, "--ring", "Z(6)"});
  CHECK(t.code == 0);
  auto moved = parse_code(t.out);
  CHECK(moved.ring == parse_ring("Z(6)"));
  CHECK(verify(choose_two(3), moved));
  auto refused = run({"network", "transform", "--file", b3, "--code", s6_file, "--ring", "Z(12)"});
  CHECK(refused.code == 1);
  CHECK(refused.out.rfind("NOT TRANSFORMABLE", 0) == 0);
}

TEST_CASE("choose-two over small fields: exit 0 iff q >= n - 1") {
  for (unsigned n = 2; n <= 5; ++n) {
    auto net = temp_file("choose_" + std::to_string(n) + ".json",
                         run({"network", "gen", "choose-two", "--n", std::to_string(n)}).out);
    for (unsigned q = 2; q <= 5; ++q) {
      auto r = run({"network", "solve", "--file", net, "--ring", "GF(" + std::to_string(q) + ")"});
      CHECK_MESSAGE(r.code == (q + 1 >= n ? 0 : 1), "n=", n, " q=", q);
    }
  }
}
