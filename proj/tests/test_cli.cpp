#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cli_app.hpp"
#include "eao/error.hpp"
#include "eao/json_io.hpp"
#include "eao/random.hpp"

using namespace eao;
using json::Json;

namespace {

struct Result {
  int status;
  std::string out;
  Json body;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = cli::run(args, in, out, err);
  Json body;
  try {
    body = Json::parse(out.str());
  } catch (const Json::parse_error&) {
  }
  return {status, out.str(), body};
}

const std::string kDiagPoint =
    R"({"n":2,"p":1,"q":1,"A":[[1,0],[0,2]],"B":[[1],[1]],"C":[[1,1]]})";

}  // namespace

TEST_CASE("json round trips") {
  Sampler rng(71);
  for (std::size_t r = 1; r <= 3; ++r) {
    const Point w = rng.point(3, 2, 1, r);
    CHECK(json::point_from_json(json::to_json(w)) == w);
  }
  const auto v = evaluate_invariants(rng.point(3, 1, 2));
  CHECK(json::invariant_vector_from_json(json::to_json(v)) == v);
  CHECK(json::rational_from_json(Json("-4/6")) == Rational(-2, 3));
  CHECK(json::rational_from_json(Json(12)) == 12);
  CHECK_THROWS_AS(json::rational_from_json(Json(1.5)), Error);
  CHECK_THROWS_AS(json::matrix_from_json(Json::parse("[[1,2],[3]]")), Error);
}

TEST_CASE("invariants subcommand") {
  const auto r = call({"invariants"}, kDiagPoint);
  CHECK(r.status == 0);
  CHECK(r.out == "{\"tau\":[\"3\",\"5\"],\"gamma\":[[[\"2\"]],[[\"3\"]]]}\n");
  const auto inline_json = call({"invariants", "--json", kDiagPoint});
  CHECK(inline_json.out == r.out);
  const auto words = call({"invariants", "--max-len", "2"}, kDiagPoint);
  CHECK(words.status == 0);
  CHECK(words.body["tau"]["1,1"] == "5");
  CHECK(words.body["gamma"][""] == Json::parse(R"([["2"]])"));
}

TEST_CASE("dims subcommand") {
  const auto r = call({"dims", "--n", "3", "--p", "2", "--q", "1"});
  CHECK(r.status == 0);
  CHECK(r.out == "{\"component_dims\":[9,10,11,12],\"nullcone_dim\":12,\"equidimensional\":false}\n");
  const auto boxed = call({"dims", "--n", "2", "--p", "1", "--q", "1", "--box", "2"});
  CHECK(boxed.body["unstable_classes"].size() == 3);
  CHECK(call({"dims", "--n", "2"}).status == 2);
  CHECK(call({"dims", "--n", "0", "--p", "1", "--q", "1"}).status == 2);
}

TEST_CASE("classify subcommand") {
  const auto zero = call({"classify"}, json::to_json(Point::zero(3, 1, 2)).dump());
  CHECK(zero.status == 0);
  CHECK(zero.out == "{\"in_null_cone\":true,\"d_min\":0,\"d_max\":3}\n");
  const auto off = call({"classify"}, kDiagPoint);
  CHECK(off.status == 0);
  CHECK(off.body["in_null_cone"] == false);
}

TEST_CASE("reconstruct subcommand") {
  const auto ok = call({"reconstruct"}, R"({"t":[1,2],"gamma":[[[2]],[[3]]]})");
  CHECK(ok.status == 0);
  const Point w = json::point_from_json(ok.body);
  CHECK(evaluate_invariants(w).tau == std::vector<Rational>{3, 5});

  const auto degenerate = call({"reconstruct"}, R"({"t":[1,1],"gamma":[[[2]],[[3]]]})");
  CHECK(degenerate.status == 1);
  CHECK(degenerate.body["error"] == "degenerate_spectrum");

  const auto rank_two =
      call({"reconstruct"}, R"({"t":[0,1],"gamma":[[[1,0],[0,1]],[[0,0],[0,0]]]})");
  CHECK(rank_two.status == 1);
  CHECK(rank_two.body["error"] == "fiber_condition_violated");

  const std::string zeros = R"({"t":[0,1],"gamma":[[[0]],[[0]]]})";
  CHECK(call({"reconstruct"}, zeros).status == 0);
  const auto strict = call({"reconstruct", "--strict-rank1"}, zeros);
  CHECK(strict.status == 1);
  CHECK(strict.body["error"] == "fiber_condition_violated");
}

TEST_CASE("sample and certify subcommands") {
  const auto sample = call({"sample", "--n", "3", "--p", "2", "--q", "1", "--k", "2", "--seed", "9"});
  CHECK(sample.status == 0);
  const auto again = call({"sample", "--n", "3", "--p", "2", "--q", "1", "--k", "2", "--seed", "9"});
  CHECK(sample.out == again.out);

  const auto cert = call({"certify", "--k", "2"}, sample.out);
  CHECK(cert.status == 0);
  CHECK(cert.body["k"] == 2);
  CHECK(cert.body["lambda"] == Json::parse("[2,1,-1]"));

  const auto off = call({"certify", "--k", "0"}, kDiagPoint);
  CHECK(off.status == 1);
  CHECK(off.body["error"] == "not_in_null_cone");

  const std::string pair =
      R"({"n":2,"p":1,"q":1,"A":[[0,1],[0,0]],"B":[[1],[0]],"C":[[0,1]]})";
  const auto wrong_k = call({"certify", "--k", "0"}, pair);
  CHECK(wrong_k.status == 1);
  CHECK(wrong_k.body["error"] == "not_a_member");
  CHECK(call({"certify"}, pair).status == 2);
  CHECK(call({"sample", "--n", "2", "--p", "1", "--q", "1", "--k", "3"}).status == 2);
}

TEST_CASE("malformed input") {
  for (const std::string bad :
       {"", "{", "[]", R"({"n":2})", R"({"n":2,"p":1,"q":1,"A":[[1,0],[0,2]],"B":[[1]],"C":[[1,1]]})",
        R"({"n":2,"p":1,"q":1,"A":[[1,0],[0,2]],"B":[[1],[1]],"C":[["1/0",1]]})",
        R"({"n":-1,"p":1,"q":1,"A":[],"B":[],"C":[]})"}) {
    const auto r = call({"invariants"}, bad);
    CHECK(r.status == 2);
    CHECK(r.body["error"] == "malformed_input");
    CHECK(r.body.contains("detail"));
  }
  CHECK(call({}).status == 2);
  CHECK(call({"invariants", "--nonsense"}).status == 2);
  CHECK(call({"verify", "--suite", "bogus"}).status == 2);
  CHECK(call({"verify"}).status == 2);
  CHECK(call({"classify", "/nonexistent/file.json"}).status == 2);
}

TEST_CASE("verify output is deterministic and tallies add up") {
  const std::vector<std::string> args{"verify", "--suite", "sl-relation", "--trials", "100",
                                      "--seed", "7", "--n", "3"};
  const auto a = call(args);
  const auto b = call(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.body["cells"] == 100);
  CHECK(a.body["passes"] == 100);
  CHECK(a.body["passes"].get<std::size_t>() + a.body["failures"].get<std::size_t>() ==
        a.body["cells"].get<std::size_t>());
  CHECK(a.body["seed"] == 7);
}
