#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glc/verify.hpp"

namespace glc::cli {

inline constexpr const char* kVersion = "0.1.0";

// parse errors carry the source position and, for syntax errors, the token
// set that would have been accepted
struct CliError : Error {
  CliError(const std::string& what, int line, int col,
           std::vector<std::string> expected = {});
  int line = 0, col = 0;
  std::vector<std::string> expected;
};
struct LexicalError : CliError {
  using CliError::CliError;
};
struct SyntacticError : CliError {
  using CliError::CliError;
};
struct SemanticError : CliError {
  using CliError::CliError;
};

struct Binding {
  enum class Kind { Ring, Module, Ideal } kind = Kind::Ring;
  RingPtr ring;   // Ring: the ring itself; Module/Ideal: the ring it lives over
  ModPtr module;
  Ideal ideal;
};

struct Command {
  std::string verb;
  std::vector<std::string> args;
  int line = 0, col = 0;
};

struct Session {
  std::string source;
  std::vector<std::string> order;  // declaration order of bindings
  std::map<std::string, Binding> bindings;
  std::vector<Command> commands;
};

struct Options {
  bool json = false;
  std::optional<std::pair<int, int>> window;
  int nmax = 6;
  std::uint64_t seed = 0;
  // override for the coefficient field of every ring declaration:
  // 0 = as written, -1 = QQ, p = GF(p)
  std::int64_t field_override = 0;
};

Session parse_session(const std::string& text, const Options& opts = {});

// canonical reprint; parse(print(s)) reproduces the session
std::string print_session(const Session& s);

struct Report {
  std::string command;
  std::vector<std::string> inputs;
  std::string result;
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::string status = "ok";  // ok | verified | hypothesis-not-met | FAILED | inconclusive
  double runtime_ms = 0;
};

Report run_command(const Session& s, const Command& c, const Options& opts);
std::vector<Report> run_session(const Session& s, const Options& opts);

std::string render_text(const Report& r);
// byte-stable serialization of a whole run (runtime_ms is emitted as 0)
std::string render_json(const std::vector<Report>& rs);

// 0 clean, 1 when any report FAILED
int exit_code(const std::vector<Report>& rs);

}  // namespace glc::cli
