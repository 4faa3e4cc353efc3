#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "glc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"homological invariants of graded modules"};
  std::string path;
  app.add_option("session", path, ".glc session file, or - for stdin")->required();
  bool json = false;
  app.add_flag("--json", json, "emit the run as a JSON report array");
  std::vector<int> window;
  app.add_option("--window", window, "degree window: lo hi")->expected(2);
  int nmax = 6;
  app.add_option("--nmax", nmax, "stage bound for truncated limits");
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for generated instance families");
  std::string field;
  app.add_option("--field", field, "override every declared coefficient field: a prime p, or QQ");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  glc::cli::Options opts;
  opts.json = json;
  if (!window.empty()) opts.window = {window[0], window[1]};
  opts.nmax = nmax;
  opts.seed = seed;
  if (!field.empty()) {
    if (field == "QQ") {
      opts.field_override = -1;
    } else {
      try {
        std::size_t used = 0;
        long long p = std::stoll(field, &used);
        if (used != field.size()) throw glc::Error("trailing characters");
        (void)glc::Field::prime(p);
        opts.field_override = p;
      } catch (const std::exception& e) {
        std::cerr << "error: --field wants a prime or QQ, got '" << field << "'\n";
        return 2;
      }
    }
  }

  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot open '" << path << "'\n";
      return 2;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  try {
    glc::cli::Session session = glc::cli::parse_session(text, opts);
    std::vector<glc::cli::Report> reports;
    if (opts.json) {
      reports = glc::cli::run_session(session, opts);
      std::cout << glc::cli::render_json(reports);
    } else {
      for (const auto& c : session.commands) {
        reports.push_back(glc::cli::run_command(session, c, opts));
        std::cout << glc::cli::render_text(reports.back());
      }
    }
    return glc::cli::exit_code(reports);
  } catch (const glc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
