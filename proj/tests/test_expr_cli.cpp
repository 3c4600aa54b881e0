// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "symwitt/checks.hpp"
#include "symwitt/cli.hpp"
#include "symwitt/expr.hpp"

using namespace symwitt;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("grammar shapes") {
  ExprPtr e = parse_expr("p[2] @ p[3]");
  CHECK(e->node == Expr::Node::pleth);
  CHECK(e->children[0]->node == Expr::Node::generator);
  CHECK(e->children[0]->partition == Partition({2}));

  ExprPtr f = parse_expr("e[2] + 3*w[1]");
  CHECK(f->node == Expr::Node::add);
  CHECK(f->children[1]->node == Expr::Node::mul);
  CHECK(f->children[1]->children[0]->literal == 3);

  // '@' binds tighter than '*', which binds tighter than '+'
  ExprPtr g = parse_expr("e[1] @ e[1] * e[2] + 1");
  CHECK(g->node == Expr::Node::add);
  CHECK(g->children[0]->node == Expr::Node::mul);
  CHECK(g->children[0]->children[0]->node == Expr::Node::pleth);

  try {
    parse_expr("p[2] @");
    CHECK(false);
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 7);
  }
  CHECK_THROWS_AS(parse_expr("q[2]"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("e[2] +"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("(e[2]"), SyntaxError);
}

TEST_CASE("evaluation") {
  CHECK(eval_in_basis("p[2] @ p[3]", Basis::monomial).str() == "m[6]");
  CHECK(eval_in_basis("p[2]", Basis::witt).str() == "w[1]^2 + 2*w[2]");
  CHECK(eval_in_basis("e[2] - e[2]", Basis::elementary).str() == "0");
  CHECK(eval_in_basis("e[1]^2 - 2*e[2]", Basis::power_sum).str() == "p[2]");
  CHECK(eval_in_basis("2", Basis::monomial).str() == "2");
  CHECK(eval_in_basis("1/2", Basis::elementary).str() == "1/2");
  // e[2,1] means the product e_2 e_1
  CHECK(eval_in_basis("e[2,1]", Basis::elementary).str() == "e[1]*e[2]");
}

TEST_CASE("sym subcommands") {
  auto r = run_cli({"sym", "convert", "p[2]", "--to", "w"});
  CHECK(r.code == 0);
  CHECK(r.out == "w[1]^2 + 2*w[2]\n");
  r = run_cli({"sym", "eval", "p[2] @ p[3]"});
  CHECK(r.code == 0);
  CHECK(r.out == "m[6]\n");
  r = run_cli({"sym", "eval", "e[2] + 3*w[1]", "--to", "e", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"basis\":\"e\"") != std::string::npos);
}

TEST_CASE("witt subcommands") {
  auto r = run_cli({"witt", "add", "--p", "2", "--len", "3", "--mod", "0", "[2,-1,-4]",
                    "[0,0,0]"});
  CHECK(r.code == 0);
  CHECK(r.out == "[2,-1,-4]\n");

  r = run_cli({"witt", "mul", "--p", "2", "--len", "2", "--mod", "6", "[2,0]", "[3,0]"});
  CHECK(r.code == 0);
  CHECK(r.out == "[0,0]\n");  // [2][3] = [6] = [0] in Z/6

  r = run_cli({"witt", "ghost", "--p", "2", "--len", "3", "[2,-1,-4]"});
  CHECK(r.code == 0);
  CHECK(r.out == "[2,2,2]\n");

  r = run_cli({"witt", "unghost", "--p", "2", "--len", "3", "[2,2,2]"});
  CHECK(r.code == 0);
  CHECK(r.out == "[2,-1,-4]\n");

  r = run_cli({"witt", "teich", "--p", "2", "--len", "3", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "[5,0,0]\n");

  r = run_cli({"witt", "frob", "--n", "2", "--p", "2", "--len", "3", "[3,5,0]"});
  CHECK(r.code == 0);
  CHECK(r.out == "[19,-115]\n");

  r = run_cli({"witt", "versch", "--n", "2", "--trunc", "1,2", "[7]"});
  CHECK(r.code == 0);
  CHECK(r.out == "[0,7]\n");

  r = run_cli({"witt", "series", "--len", "3", "[2,0,1]"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 - 2*t - t^3 + O(t^4)\n");

  r = run_cli({"witt", "series", "--len", "4", "--invert", "[1,1,0,0,0]"});
  CHECK(r.code == 0);
  CHECK(r.out == "[-1,0,0,0]\n");

  // JSON input form
  r = run_cli({"witt", "neg", R"({"trunc":[1,2],"mod":0,"components":["1","1"]})"});
  CHECK(r.code == 0);
  CHECK(r.out == "[-1,-2]\n");

  // JSON output round trip
  r = run_cli({"witt", "add", "--p", "2", "--len", "2", "--json", "[1,0]", "[1,0]"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"trunc\":[1,2]") != std::string::npos);
  CHECK(r.out.find("\"mod\":0") != std::string::npos);
}

TEST_CASE("dwork, delta, lambda, ah") {
  auto r = run_cli({"dwork", "--ring", "Z", "--p", "2", "--r", "2", "--len", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "[2,-1,-4]\n");

  r = run_cli({"dwork", "--ring", "Z[x]", "--p", "2", "--r", "x", "--len", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "[x,0]\n");

  r = run_cli({"delta", "--ring", "Z", "--p", "2", "--r", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "-3\n");

  r = run_cli({"lambda", "--const", "3", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "[3,3]\n");

  r = run_cli({"lambda", "--psi", "3,3", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"lambda\":[\"3\",\"3\"]") != std::string::npos);

  r = run_cli({"ah", "--p", "2", "--len", "4", "--outer", "2", "--inner", "2", "[2,3,5,7]"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 6) == "[[2,3]");
}

TEST_CASE("exit codes") {
  // usage error: unknown option
  auto r = run_cli({"witt", "add", "--bogus", "1"});
  CHECK(r.code == 2);
  // usage error: no subcommand
  r = run_cli({});
  CHECK(r.code == 2);
  // domain error: ghost vector with no preimage -> IntegralityError
  r = run_cli({"witt", "unghost", "--p", "2", "--len", "3", "[0,1,0]"});
  CHECK(r.code == 3);
  CHECK(r.err.find("IntegralityError") != std::string::npos);
  // domain error: syntax error in an expression
  r = run_cli({"sym", "eval", "p[2] @"});
  CHECK(r.code == 3);
  CHECK(r.err.find("SyntaxError") != std::string::npos);
  CHECK(r.err.find("offset 7") != std::string::npos);
  // help exits 0
  r = run_cli({"--help"});
  CHECK(r.code == 0);
}

TEST_CASE("check and linearize subcommands") {
  auto r = run_cli({"check", "partitions"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS  partitions/count-matches-dp-oracle") != std::string::npos);

  r = run_cli({"check", "partitions", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"status\":\"pass\"") != std::string::npos);

  r = run_cli({"linearize", "--p", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"check\":\"cotangent_F\"") != std::string::npos);
  CHECK(r.out.find("\"status\":\"pass\"") != std::string::npos);
}

TEST_CASE("module invariant suite") {
  for (const auto& r : run_check_suite("cli")) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}
