#include <cliffalg_cli/cli.hpp>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  json doc;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cliffalg::cli::run(args, in, out, err);
  json doc;
  try {
    doc = json::parse(out.str());
  } catch (const json::parse_error&) {
  }
  return {code, out.str(), doc};
}

}  // namespace

TEST_CASE("form reconstruct on random forms") {
  const auto r = run({"form", "reconstruct", "--m", "5", "--random", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.doc["subcommand"] == "form reconstruct");
  CHECK(r.doc["verdict"] == "pass");
  CHECK(r.doc["payload"]["recovered"]["m"] == 5);
  CHECK(r.doc["payload"]["seed"] == 7);
}

TEST_CASE("form reconstruct from input and from inconsistent constants") {
  const auto ok = run({"form", "reconstruct", "--input", "-"}, R"({"m":3,"Q":[["1","0","0"],["0","2","0"],["0","0","0"]]})");
  CHECK(ok.code == 0);
  CHECK(ok.doc["payload"]["recovered"]["Q"][1][1] == "2");
  // A lone nonzero constant is not the bracket table of any form.
  const auto bad = run({"form", "reconstruct", "--input", R"({"m":3,"constants":[[0,1,2,"5"]]})"});
  CHECK(bad.code == 2);
  CHECK(bad.doc["verdict"] == "fail");
  CHECK(bad.doc["payload"].contains("counterexample"));
}

TEST_CASE("form tensor round trip") {
  const auto r = run({"form", "tensor", "--input", R"({"m":3,"Q":[["1","0","0"],["0","1","0"],["0","0","1"]]})"});
  CHECK(r.code == 0);
  CHECK(r.doc["payload"]["tensor"]["dim"] == 4);
  const auto back = run({"form", "tensor", "--input", r.doc["payload"]["tensor"].dump()});
  CHECK(back.code == 0);
  CHECK(back.doc["payload"]["recovered"] == r.doc["payload"]["recovered"]);
}

TEST_CASE("spinor subcommands") {
  const auto c = run({"spinor", "check", "D", "3"});
  CHECK(c.code == 0);
  CHECK(c.doc["payload"]["isomorphism"]["bijective"] == true);
  CHECK(c.doc["payload"]["central_involution"]["c"] == "1");
  const auto w = run({"spinor", "weights", "D", "4", "--halfspin", "-"});
  CHECK(w.code == 0);
  CHECK(w.doc["payload"]["dim"] == 8);
  CHECK(run({"spinor", "weights", "B", "3"}).doc["payload"]["dim"] == 8);
  CHECK(run({"spinor", "weights", "D", "4", "--halfspin", "x"}).code == 1);
}

TEST_CASE("lipschitz test") {
  const auto zero = run({"lipschitz", "test", "--input", R"({"space":{"m":2,"Q":[["1","0"],["0","1"]]},"x":{}})"});
  CHECK(zero.code == 0);
  CHECK(zero.doc["payload"]["verdict"] == "none");
  const auto v = run({"lipschitz", "test", "--input", R"({"space":{"m":2,"Q":[["1","0"],["0","1"]]},"x":{"[1]":"2"}})"});
  CHECK(v.doc["payload"]["verdict"] == "group");
  CHECK(v.doc["payload"]["norm_scalar"] == "4");
  const auto inf = run({"lipschitz", "test", "--input", R"({"space":{"m":3,"Q":[["0","0","0"],["0","0","0"],["0","0","0"]]}})"});
  CHECK(inf.code == 0);
  CHECK(inf.doc["payload"]["spin_dim"] == 3);
  const auto rnd = run({"lipschitz", "test", "--random", "--m", "3", "--trials", "20", "--seed", "4"});
  CHECK(rnd.code == 0);
}

TEST_CASE("degenerate analyze") {
  const auto r = run({"degenerate", "analyze", "--m", "5"});
  CHECK(r.code == 0);
  CHECK(r.doc["payload"]["radical_dim"] == 8);
  CHECK(r.doc["payload"]["det"]["num"] == json({"0", "32"}));
  // Reading diag(1, 1, t - 1) at t = 1 is the same family.
  const auto shifted = run({"degenerate", "analyze", "--at", "1", "--input",
                            R"({"m":3,"Q":[["1","0","0"],["0","1","0"],["0","0",["-1","1"]]]})"});
  CHECK(shifted.code == 0);
  CHECK(shifted.doc["payload"]["radical_dim"] == 2);
  const auto degenerate = run({"degenerate", "analyze", "--input", R"({"m":3,"Q":[["1","0","0"],["0","1","0"],["0","0","0"]]})"});
  CHECK(degenerate.code == 2);
  CHECK(run({"degenerate", "analyze", "--m", "4"}).code == 1);
}

TEST_CASE("plethysm verify") {
  const auto g2 = run({"plethysm", "verify", "g2"});
  CHECK(g2.code == 0);
  CHECK(g2.doc["payload"]["constituents"][0]["dim"] == 64);
  CHECK(g2.doc["payload"]["halfspin_agree"] == true);
  CHECK(g2.doc["payload"]["highest_weight_is_rho"] == true);
  const auto c3 = run({"plethysm", "verify", "c3", "--halfspin", "-"});
  CHECK(c3.code == 0);
  CHECK(c3.doc["payload"]["constituents"][0]["dim"] == 64);
  CHECK(c3.doc["payload"]["highest_weight_is_rho"] == false);
  CHECK(run({"plethysm", "verify", "e8"}).code == 1);
}

TEST_CASE("localmodel subcommands") {
  const std::string nil = R"({"g":2,"n":2,"X":[[["0","1"],["0","0"]],[["0","0"],["1","0"]]]})";
  const auto s = run({"localmodel", "simple", "--input", R"({"tuple":)" + nil + R"(,"v":["1","0"]})"});
  CHECK(s.code == 0);
  CHECK(s.doc["payload"]["cyclic"] == true);
  const auto d = run({"localmodel", "simple", "--input", R"({"g":1,"n":2,"X":[[["1","0"],["0","2"]]]})"});
  CHECK(d.code == 2);
  CHECK(d.doc["payload"]["counterexample"]["span_dim"] == 2);

  const auto eq = run({"localmodel", "sequiv", "--input",
                       R"({"a":{"g":1,"n":2,"X":[[["1","0"],["0","2"]]]},"b":{"g":1,"n":2,"X":[[["2","0"],["0","1"]]]}})"});
  CHECK(eq.code == 0);
  const auto ne = run({"localmodel", "sequiv", "--L", "2", "--input",
                       R"({"a":{"g":1,"n":2,"X":[[["1","0"],["0","2"]]]},"b":{"g":1,"n":2,"X":[[["1","0"],["0","3"]]]}})"});
  CHECK(ne.code == 2);
  CHECK(ne.doc["payload"]["counterexample"]["word"] == json({1}));

  CHECK(run({"localmodel", "centralizer", "--input", nil}).code == 0);
  const auto cart = run({"localmodel", "centralizer", "--input", R"({"g":1,"n":2,"X":[[["1","0"],["0","-1"]]]})"});
  CHECK(cart.code == 2);
  CHECK(cart.doc["payload"]["centralizer_dim"] == 1);
  CHECK(run({"localmodel", "centralizer", "--input", R"({"g":1,"n":2,"X":[[["1","0"],["0","1"]]]})"}).code == 1);
}

TEST_CASE("usage errors and determinism") {
  CHECK(run({}).code == 1);
  CHECK(run({"form", "reconstruct", "--bogus"}).code == 1);
  const auto bad = run({"form", "tensor", "--input", "{\"m\": 3,"});
  CHECK(bad.code == 1);
  CHECK(bad.doc["error"].get<std::string>().find("byte") != std::string::npos);
  CHECK(run({"localmodel", "simple", "--input", "/nonexistent/file.json"}).code == 1);

  const auto a = run({"lipschitz", "test", "--random", "--m", "4", "--trials", "10", "--seed", "99"});
  const auto b = run({"lipschitz", "test", "--random", "--m", "4", "--trials", "10", "--seed", "99"});
  CHECK(a.out == b.out);
  const auto s1 = run({"selftest", "--only", "2", "--only", "10"});
  const auto s2 = run({"selftest", "--only", "2", "--only", "10"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
  CHECK(s1.doc["payload"]["criteria"].size() == 2);
}
