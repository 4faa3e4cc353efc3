#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "glc/cli.hpp"
#include "json.hpp"

using namespace glc;
using namespace glc::cli;

namespace {

const char* kExampleSession =
    "ring R = poly(GF(101),[x,y],grevlex) mod ideal(x*y)\n"
    "module N = coker(R, [[x]])\n"
    "module M = coker(R, [[x, y],[0, x]])\n";

Report run_one(const Session& s, std::size_t k, const Options& opts = {}) {
  REQUIRE(k < s.commands.size());
  return run_command(s, s.commands[k], opts);
}

std::string witness(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.witnesses)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST_CASE("example session parses and binds in order") {
  Session s = parse_session(kExampleSession);
  REQUIRE(s.order == std::vector<std::string>{"R", "N", "M"});
  CHECK(s.bindings.at("R").kind == Binding::Kind::Ring);
  CHECK(s.bindings.at("N").kind == Binding::Kind::Module);
  CHECK(s.bindings.at("M").kind == Binding::Kind::Module);
  CHECK(s.bindings.at("R").ring->dim == 1);
  CHECK(s.bindings.at("N").module->ngens() == 1);
  CHECK(s.bindings.at("M").module->ngens() == 2);
  CHECK(s.bindings.at("M").ring == s.bindings.at("R").ring);
}

TEST_CASE("example commands give the documented answers") {
  Session s = parse_session(std::string(kExampleSession) + "pd N\next 1 N R\ndim R\n");
  REQUIRE(s.commands.size() == 3);
  CHECK(run_one(s, 0).result == "infinite");
  CHECK(run_one(s, 1).result == "0");
  CHECK(run_one(s, 2).result == "1");
  CHECK(run_one(s, 0).status == "ok");
}

TEST_CASE("parse-print round trip is the identity on the canonical form") {
  std::string text = std::string(kExampleSession) +
                     "ideal a = (x, y^2)\n"
                     "module T = coker(R, [[x*y - y^2]], twists = [-2])\n"
                     "pd N\n"
                     "check C5.2 M N a\n";
  std::string p1 = print_session(parse_session(text));
  std::string p2 = print_session(parse_session(p1));
  CHECK(p1 == p2);
  CHECK(p1.find("ring R = poly(GF(101), [x, y], grevlex) mod ideal(x*y)") != std::string::npos);
  CHECK(p1.find("module N = coker(R, [[x]])") != std::string::npos);
  CHECK(p1.find("ideal a = (x, y^2)") != std::string::npos);
  CHECK(p1.find("twists = [-2]") != std::string::npos);
  CHECK(p1.find("check C5.2 M N a") != std::string::npos);
}

TEST_CASE("rationals and field override") {
  Session s = parse_session("ring Q = poly(QQ, [x, y], lex)\nmodule K = coker(Q, [[x], [y]])\n");
  CHECK(s.bindings.at("Q").ring->ctx->field.kind() == FieldKind::Rationals);
  CHECK(s.bindings.at("Q").ring->ctx->order == MonomialOrder::Lex);

  // fractional coefficients print and reparse
  Session f = parse_session("ring Q = poly(QQ, [x, y], grevlex)\nmodule F = coker(Q, [[1/2*x + y]])\n");
  std::string p1 = print_session(f);
  CHECK(print_session(parse_session(p1)) == p1);

  Options to_qq;
  to_qq.field_override = -1;
  CHECK(parse_session("ring R = poly(GF(7), [x], grevlex)\n", to_qq)
            .bindings.at("R")
            .ring->ctx->field.kind() == FieldKind::Rationals);

  Options to_p;
  to_p.field_override = 13;
  CHECK(parse_session("ring R = poly(QQ, [x], grevlex)\n", to_p)
            .bindings.at("R")
            .ring->ctx->field.modulus() == 13);
}

TEST_CASE("error classes carry positions and expectations") {
  SUBCASE("lexical") {
    try {
      parse_session("dim @\n");
      FAIL("expected a lexical error");
    } catch (const LexicalError& e) {
      CHECK(e.line == 1);
      CHECK(e.col == 5);
    }
  }
  SUBCASE("syntactic: missing token") {
    try {
      parse_session("ring R = poly(GF(101), [x], grevlex\n");
      FAIL("expected a syntax error");
    } catch (const SyntacticError& e) {
      // inside an unclosed paren the newline is suppressed, so the parser
      // runs to end of input before noticing
      REQUIRE(!e.expected.empty());
      CHECK(e.expected.front() == "')'");
    }
  }
  SUBCASE("syntactic: unknown command lists the verbs") {
    try {
      parse_session("ring R = poly(GF(101), [x], grevlex)\nfrob R\n");
      FAIL("expected a syntax error");
    } catch (const SyntacticError& e) {
      CHECK(e.line == 2);
      CHECK(std::find(e.expected.begin(), e.expected.end(), "'ext'") != e.expected.end());
    }
  }
  SUBCASE("semantic: unknown ring name") {
    CHECK_THROWS_AS(parse_session("module M = coker(Q, [[1]])\n"), SemanticError);
  }
  SUBCASE("semantic: duplicate binding") {
    CHECK_THROWS_AS(
        parse_session("ring R = poly(GF(101), [x], grevlex)\nring R = poly(QQ, [y], grevlex)\n"),
        SemanticError);
  }
  SUBCASE("semantic: non-homogeneous entries") {
    CHECK_THROWS_AS(
        parse_session("ring R = poly(GF(101), [x, y], grevlex)\nmodule M = coker(R, [[x + y^2]])\n"),
        SemanticError);
    CHECK_THROWS_AS(
        parse_session("ring R = poly(GF(101), [x, y], grevlex)\nideal a = (x + y^2)\n"),
        SemanticError);
  }
  SUBCASE("semantic: composite characteristic") {
    try {
      parse_session("ring R = poly(GF(6), [x], grevlex)\n");
      FAIL("expected a semantic error");
    } catch (const SemanticError& e) {
      CHECK(e.col == 18);
    }
  }
  SUBCASE("semantic: ragged matrix and twist mismatch") {
    CHECK_THROWS_AS(
        parse_session("ring R = poly(GF(101), [x, y], grevlex)\nmodule M = coker(R, [[x, y], [x]])\n"),
        SemanticError);
    CHECK_THROWS_AS(
        parse_session("ring R = poly(GF(101), [x], grevlex)\nmodule M = coker(R, [[x]], twists = [1, 2])\n"),
        SemanticError);
  }
  SUBCASE("semantic at run time: unknown name and ring mismatch") {
    Session s = parse_session(
        "ring R = poly(GF(101), [x], grevlex)\n"
        "ring S = poly(GF(101), [y], grevlex)\n"
        "dim Z\n"
        "ext 0 R S\n"
        "pd R S\n");
    CHECK_THROWS_AS(run_one(s, 0), SemanticError);
    CHECK_THROWS_AS(run_one(s, 1), SemanticError);
    CHECK_THROWS_AS(run_one(s, 2), SemanticError);  // arity
  }
}

TEST_CASE("command chains keep theorem ids and instance names whole") {
  Session s = parse_session(
      "ring R = poly(GF(101), [x], grevlex)\n"
      "check C5.4/C5.5 R1.7-regular\n"
      "deficiency -1 R\n");
  REQUIRE(s.commands.size() == 2);
  CHECK(s.commands[0].args == std::vector<std::string>{"C5.4/C5.5", "R1.7-regular"});
  Report r = run_one(s, 0);
  CHECK(r.status == "hypothesis-not-met");  // the corollary's vanishing gate never engages for k over k[x]
  CHECK(witness(r, "instance") == "R1.7-regular");
  CHECK(run_one(s, 1).result == "0");
}

TEST_CASE("windowed commands report stabilization") {
  Session s = parse_session(
      "ring R = poly(GF(101), [x, y], grevlex) mod ideal(x*y)\n"
      "module N = coker(R, [[x]])\n"
      "ideal a = (x, y)\n"
      "cech 1 R N\n"
      "limit 1 a R N\n");
  Options opts;
  opts.window = {-3, 3};
  Report cech = run_one(s, 0, opts);
  CHECK(cech.result == "-3:1 -2:1 -1:1");  // H^1_m(k[y]) lives in negative degrees
  CHECK(witness(cech, "window") == "[-3, 3]");
  CHECK(witness(cech, "conclusive") == "yes");
  Report lim = run_one(s, 1, opts);
  CHECK(lim.result == cech.result);
  CHECK(witness(lim, "stabilized") == "yes");
}

TEST_CASE("check against builtins and suite summaries") {
  Session s = parse_session("check EX5 EX5\ncheck T5.1\nsuite\n");
  Report one = run_one(s, 0);
  CHECK(one.status == "verified");
  CHECK(witness(one, "pd N") == "infinite");
  Report multi = run_one(s, 1);
  CHECK(multi.status == "ok");
  CHECK(multi.result.find("FAILED 0") != std::string::npos);
  CHECK(witness(multi, "nonCM-T T5.1") == "verified");
  Report suite = run_one(s, 2);
  CHECK(suite.status == "ok");
  CHECK(suite.result.find("FAILED 0") != std::string::npos);
  CHECK(suite.witnesses.size() == theorem_ids().size() * builtin_instances().size());
}

TEST_CASE("json rendering is byte stable and matches the shipped schema") {
  Session s = parse_session(std::string(kExampleSession) + "pd N\next 1 N R\ndim R\ncheck EX5 EX5\n");
  Options opts;
  std::string j1 = render_json(run_session(s, opts));
  std::string j2 = render_json(run_session(s, opts));
  CHECK(j1 == j2);

  nlohmann::json reports = nlohmann::json::parse(j1);
  std::ifstream in(GLC_SCHEMA_PATH);
  REQUIRE(in.good());
  nlohmann::json schema = nlohmann::json::parse(in);

  // structural validation against the schema: required keys, declared types,
  // the status enum, and no extra properties
  const auto& props = schema.at("items").at("properties");
  const auto required = schema.at("items").at("required").get<std::set<std::string>>();
  std::set<std::string> statuses;
  for (const auto& v : props.at("status").at("enum")) statuses.insert(v.get<std::string>());

  REQUIRE(reports.is_array());
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) {
    REQUIRE(r.is_object());
    for (const auto& key : required) CHECK(r.contains(key));
    for (const auto& [key, val] : r.items()) {
      REQUIRE_MESSAGE(props.contains(key), "unexpected key ", key);
      const std::string type = props.at(key).value("type", "");
      if (type == "string") CHECK(val.is_string());
      if (type == "number") CHECK(val.is_number());
      if (type == "array") CHECK(val.is_array());
    }
    CHECK(statuses.count(r.at("status").get<std::string>()) == 1);
    CHECK(r.at("runtime_ms") == 0);
    CHECK(r.at("version") == kVersion);
    for (const auto& w : r.at("witnesses")) {
      CHECK(w.at("key").is_string());
      CHECK(w.at("value").is_string());
    }
  }
  CHECK(reports[3].at("status") == "verified");
}

TEST_CASE("exit code singles out failures") {
  Report ok, failed;
  ok.status = "ok";
  failed.status = "FAILED";
  CHECK(exit_code({}) == 0);
  CHECK(exit_code({ok, ok}) == 0);
  CHECK(exit_code({ok, failed}) == 1);
}

TEST_CASE("text rendering lists witnesses under the result") {
  Report r;
  r.command = "dual-side";
  r.inputs = {"1", "M", "N"};
  r.result = "0";
  r.witnesses = {{"route", "CM-canonical"}};
  CHECK(render_text(r) == "dual-side 1 M N: 0\n  route: CM-canonical\n");
}
