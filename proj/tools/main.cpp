#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thompson/verify.hpp"

namespace {

using namespace thompson;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

long env_long(const char* name, long fallback) {
  if (const char* v = std::getenv(name)) {
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (end && *end == '\0') return parsed;
  }
  return fallback;
}

PLMap map_of(const std::string& word_text) { return eval_word(parse_word(word_text)); }

void print_slopes(const PLMap& f) {
  const auto& pts = f.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    int s = f.slope_exponent(i);
    std::cout << "[" << pts[i].x << ", " << pts[i + 1].x << "] slope 2^" << s << "\n";
  }
}

// 64x32 character plot of the graph over the unit square, identity
// diagonal dotted for reference.
void print_graph(const PLMap& f) {
  constexpr int kCols = 64;
  constexpr int kRows = 32;
  std::vector<std::string> canvas(kRows, std::string(kCols, ' '));
  auto row_of = [&](const Dyadic& y) {
    BigInt r = (y * Dyadic(kRows)).floor();
    if (r >= kRows) r = kRows - 1;
    return kRows - 1 - static_cast<int>(r);
  };
  for (int col = 0; col < kCols; ++col) {
    Dyadic alpha(BigInt(col), 6);  // col / 64
    canvas[static_cast<std::size_t>(row_of(alpha))][static_cast<std::size_t>(col)] = '.';
  }
  for (int col = 0; col < kCols; ++col) {
    Dyadic alpha(BigInt(col), 6);
    int r = row_of(f.evaluate(alpha));
    canvas[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = '*';
  }
  for (const auto& line : canvas) std::cout << "|" << line << "|\n";
}

int run_verify(const std::string& which, int kmax, int nmax, int radius, int base_kmax,
               bool as_json) {
  std::vector<Report> reports;
  if (which == "lemma1") {
    reports.push_back(verify_lemma1(kmax));
  } else if (which == "claim") {
    reports.push_back(verify_claim(kmax));
  } else if (which == "relations") {
    reports.push_back(verify_relations(nmax));
  } else if (which == "centralizer") {
    reports.push_back(verify_centralizer_x0(radius));
    reports.push_back(check_base_centralizer(radius, base_kmax));
  } else {
    std::cerr << "unknown check '" << which << "' (expected lemma1|claim|relations|centralizer)\n";
    return kExitUsage;
  }
  bool all_pass = true;
  for (const auto& r : reports) {
    std::cout << (as_json ? r.json() : r.str()) << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation in Thompson's group F as PL2([0,1]).\n"
               "Words multiply left to right (maps act on the right): in\n"
               "\"x0 x1\" the map x0 applies first."};
  app.require_subcommand(1);

  std::string word_text, at_text, spec_text, format = "json", check;
  int kmax = static_cast<int>(env_long("THOMPSON_KMAX", 20));
  int nmax = static_cast<int>(env_long("THOMPSON_NMAX", 20));
  int radius = static_cast<int>(env_long("THOMPSON_RADIUS", 4));
  int base_kmax = 3;
  bool as_json = false;

  auto* eval = app.add_subcommand("eval", "evaluate WORD at a dyadic point");
  eval->add_option("word", word_text)->required();
  eval->add_option("--at", at_text, "dyadic argument, e.g. 1/2^3")->required();

  auto* map_cmd = app.add_subcommand("map", "print the canonical breakpoint list of WORD");
  map_cmd->add_option("word", word_text)->required();

  auto* support_cmd = app.add_subcommand("support", "print supp(WORD) as open intervals");
  support_cmd->add_option("word", word_text)->required();

  auto* slopes_cmd = app.add_subcommand("slopes", "print per-segment slopes of WORD");
  slopes_cmd->add_option("word", word_text)->required();

  auto* trivial_cmd = app.add_subcommand("is-trivial", "word problem: does WORD equal 1?");
  trivial_cmd->add_option("word", word_text)->required();

  auto* abel_cmd = app.add_subcommand("abelianize", "slope exponents at the endpoints");
  abel_cmd->add_option("word", word_text)->required();

  auto* wembed = app.add_subcommand("wreath-embed", "map of \"shift=m; coeffs={k:m, ...}\"");
  wembed->add_option("element", spec_text)->required();
  wembed->add_flag("--json", as_json);

  auto* wdec = app.add_subcommand("wreath-decompose", "normal form of WORD in <a, b>");
  wdec->add_option("word", word_text)->required();
  wdec->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand("verify", "run a machine check");
  verify_cmd->add_option("check", check, "lemma1|claim|relations|centralizer")->required();
  verify_cmd->add_option("--kmax", kmax);
  verify_cmd->add_option("--nmax", nmax);
  verify_cmd->add_option("--radius", radius);
  verify_cmd->add_option("--base-kmax", base_kmax);
  verify_cmd->add_flag("--json", as_json);

  auto* export_cmd = app.add_subcommand("export", "breakpoints of WORD as json or csv");
  export_cmd->add_option("word", word_text)->required();
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* graph_cmd = app.add_subcommand("graph", "ASCII plot on a 64x32 grid");
  graph_cmd->add_option("word", word_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      std::cout << map_of(word_text).evaluate(Dyadic::parse(at_text)) << "\n";
    } else if (map_cmd->parsed()) {
      std::cout << map_of(word_text).str() << "\n";
    } else if (support_cmd->parsed()) {
      std::cout << support(map_of(word_text)).str() << "\n";
    } else if (slopes_cmd->parsed()) {
      print_slopes(map_of(word_text));
    } else if (trivial_cmd->parsed()) {
      bool trivial = is_trivial(parse_word(word_text));
      std::cout << (trivial ? "true" : "false") << "\n";
      return trivial ? kExitPass : kExitCheckFailed;
    } else if (abel_cmd->parsed()) {
      auto [u, v] = abelianize(map_of(word_text));
      std::cout << "(" << u << ", " << v << ")\n";
    } else if (wembed->parsed()) {
      PLMap f = embed(WreathElement::parse(spec_text));
      std::cout << (as_json ? f.json() : f.str()) << "\n";
    } else if (wdec->parsed()) {
      try {
        WreathElement u = decompose(map_of(word_text));
        std::cout << (as_json ? u.json() : u.str()) << "\n";
      } catch (const NotInWreathSubgroup& e) {
        std::cerr << "not in the wreath subgroup: " << e.what() << "\n";
        return kExitCheckFailed;
      }
    } else if (verify_cmd->parsed()) {
      return run_verify(check, kmax, nmax, radius, base_kmax, as_json);
    } else if (export_cmd->parsed()) {
      PLMap f = map_of(word_text);
      std::cout << (format == "json" ? f.json() : f.csv());
      if (format == "json") std::cout << "\n";
    } else if (graph_cmd->parsed()) {
      print_graph(map_of(word_text));
    }
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitPass;
}
