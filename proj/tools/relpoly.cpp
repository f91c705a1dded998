#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "relpoly/pipeline.hpp"
#include "relpoly/report.hpp"
#include "relpoly/suites.hpp"

namespace {

using namespace relpoly;

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
      return 2;
    case ErrorKind::Classification:
      return 3;
    case ErrorKind::Internal:
      return 4;
  }
  return 4;
}

long long parse_component(const std::string& part) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(part, &pos);
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "bad-phi",
         "--phi expects two comma-separated integers, got \"" + part + "\"");
  }
  if (pos != part.size()) {
    fail(ErrorKind::Parse, "bad-phi",
         "--phi expects two comma-separated integers, got \"" + part + "\"");
  }
  if (v >= (1LL << 31) || v <= -(1LL << 31)) {
    fail(ErrorKind::Parse, "phi-out-of-range",
         "--phi components must have absolute value below 2^31");
  }
  return v;
}

Direction parse_phi(const std::string& text) {
  const size_t comma = text.find(',');
  if (comma == std::string::npos) {
    fail(ErrorKind::Parse, "bad-phi",
         "--phi expects \"a,b\" with integer a, b");
  }
  return Direction::checked(parse_component(text.substr(0, comma)),
                            parse_component(text.substr(comma + 1)));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
  if (!f) {
    fail(ErrorKind::Parse, "cannot-write-file",
         "cannot write to \"" + path + "\"");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "marked polytopes, Sigma membership, and splitting complexity for "
      "two-generator one-relator group presentations"};
  app.require_subcommand(1);

  std::string relator;
  std::string gens = "xy";
  std::string phi_text;
  std::string svg_path;
  bool json_out = false;
  bool witness = false;
  bool arcs = false;
  uint64_t seed = 1;
  size_t count = 200;
  size_t maxlen = 40;

  const auto add_word_options = [&](CLI::App* cmd) {
    cmd->add_option("relator", relator,
                    "relator word, uppercase letters are inverses "
                    "(e.g. \"xyXY\", \"x^2Y^3\")")
        ->required();
    cmd->add_option("--gens", gens,
                    "the two generator letters used for parsing and "
                    "printing (default \"xy\")");
    cmd->add_flag("--json", json_out, "emit the JSON report");
  };

  CLI::App* poly =
      app.add_subcommand("polytope", "compute the marked polytope");
  add_word_options(poly);
  poly->add_option("--svg", svg_path,
                   "also write an SVG drawing of the walk, its hull, and "
                   "the polytope to this path");

  CLI::App* bns = app.add_subcommand(
      "bns", "Sigma membership for one direction, or the whole arc set");
  add_word_options(bns);
  bns->add_option("--phi", phi_text, "character to test, as \"a,b\"");
  bns->add_flag("--arcs", arcs,
                "report the full arc set (the default when --phi is absent)");

  CLI::App* split = app.add_subcommand(
      "split", "thickness, splitting complexity, and the HNN witness");
  add_word_options(split);
  split->add_option("--phi", phi_text, "character, as \"a,b\"")->required();
  split->add_flag("--witness", witness,
                  "include the explicit HNN splitting data");

  CLI::App* check =
      app.add_subcommand("check", "run the randomized property suites");
  check->add_option("--count", count, "trials per suite (default 200)");
  check->add_option("--seed", seed, "64-bit seed (default 1)");
  check->add_option("--maxlen", maxlen,
                    "maximum relator length (default 40)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "relpoly: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) {
      SuiteOptions o;
      o.seed = seed;
      o.count = count;
      o.maxlen = maxlen;
      const std::vector<SuiteResult> rs = run_property_suites(o);
      std::cout << suites_text(rs);
      return all_passed(rs) ? 0 : 5;
    }

    const GenNames names = GenNames::of(gens);
    const Presentation pi = make_presentation(parse_word(relator, names),
                                              names);
    const PolytopeResult pr = marked_polytope(pi);

    if (poly->parsed()) {
      if (!svg_path.empty()) write_file(svg_path, polytope_svg(pr));
      std::cout << (json_out ? polytope_json(pr) : polytope_text(pr));
    } else if (bns->parsed()) {
      if (!phi_text.empty()) {
        const Direction phi = parse_phi(phi_text);
        std::cout << (json_out ? bns_membership_json(pr, phi)
                               : bns_membership_text(pr, phi));
      } else {
        std::cout << (json_out ? bns_arcs_json(pr) : bns_arcs_text(pr));
      }
    } else if (split->parsed()) {
      const Direction phi = parse_phi(phi_text);
      std::cout << (json_out ? split_json(pr, phi, witness)
                             : split_text(pr, phi, witness));
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "relpoly: " << e.code() << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "relpoly: unexpected error: " << e.what() << "\n";
    return 4;
  }
}
