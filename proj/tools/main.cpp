// wlp — admissibility, Grassmann necklaces, Le diagrams, matroid bases and
// integrand denominators for Wilson loop diagrams.
//
// Every command reads the diagram interchange schema
//   {"n": <int>, "propagators": [[a,b], ...]}
// as a file path, inline JSON, or "-" for stdin.
//
// Exit codes: 0 success, 1 domain error (inadmissible input and the like),
// 2 usage error (bad flags, unreadable input, malformed JSON).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wlp/json_io.hpp"
#include "wlp/matroid.hpp"
#include "wlp/selftest.hpp"

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

wlp::WilsonLoopDiagram load_diagram(const std::string& input) {
  std::string text;
  if (input == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else if (!input.empty() && input.front() == '{') {
    text = input;
  } else {
    std::ifstream file(input);
    if (!file) throw UsageError("cannot read input file: " + input);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
  return wlp::diagram_from_json(parsed);
}

void require_admissible(const wlp::WilsonLoopDiagram& w) {
  const wlp::AdmissibilityReport report = wlp::is_admissible(w);
  if (!report.ok) {
    std::cerr << "diagram is not admissible: "
              << wlp::admissibility_to_json(report).dump() << "\n";
    throw std::domain_error("inadmissible diagram");
  }
}

std::string propagator_text(const wlp::Propagator& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

int run_check(const wlp::WilsonLoopDiagram& w, bool text) {
  const wlp::AdmissibilityReport report = wlp::is_admissible(w);
  if (text) {
    if (report.ok) {
      std::cout << "admissible\n";
    } else {
      for (const wlp::Violation& v : report.violations) {
        std::cout << (v.kind == wlp::ViolationKind::TooManyProps ? "TooManyProps"
                      : v.kind == wlp::ViolationKind::DenseSubset ? "DenseSubset"
                                                                  : "Crossing");
        for (const wlp::Propagator& p : v.witness) std::cout << " " << propagator_text(p);
        std::cout << "\n";
      }
    }
  } else {
    std::cout << wlp::admissibility_to_json(report).dump(2) << "\n";
  }
  return report.ok ? 0 : 1;
}

int run_necklace(const wlp::WilsonLoopDiagram& w, bool text) {
  require_admissible(w);
  const wlp::GrassmannNecklace neck = wlp::grassmann_necklace(w);
  if (text) {
    for (int i = 1; i <= neck.n; ++i) {
      std::cout << "I_" << i << " =";
      for (int v : neck.terms[i - 1]) std::cout << " " << v;
      std::cout << "\n";
    }
  } else {
    std::cout << wlp::necklace_to_json(neck).dump(2) << "\n";
  }
  return 0;
}

int run_le(const wlp::WilsonLoopDiagram& w, bool text) {
  require_admissible(w);
  const wlp::LeDiagram d = wlp::le_from_necklace(wlp::grassmann_necklace(w));
  if (text) {
    std::cout << wlp::render_ascii(d);
  } else {
    std::cout << wlp::le_to_json(d).dump(2) << "\n";
  }
  return 0;
}

int run_dim(const wlp::WilsonLoopDiagram& w, bool text) {
  require_admissible(w);
  const int dim = wlp::dimension(w);
  if (text) {
    std::cout << dim << "\n";
  } else {
    std::cout << json{{"n", w.vertex_count()},
                      {"k", w.propagator_count()},
                      {"dimension", dim}}
                     .dump(2)
              << "\n";
  }
  return 0;
}

int run_bases(const wlp::WilsonLoopDiagram& w, bool text) {
  require_admissible(w);
  const auto all = wlp::bases(w);
  if (text) {
    for (const auto& b : all) {
      bool first = true;
      for (int v : b) {
        if (!first) std::cout << " ";
        first = false;
        std::cout << v;
      }
      std::cout << "\n";
    }
  } else {
    std::cout << json{{"n", w.vertex_count()},
                      {"k", w.propagator_count()},
                      {"count", all.size()},
                      {"bases", all}}
                     .dump(2)
              << "\n";
  }
  return 0;
}

int run_cmatrix(const wlp::WilsonLoopDiagram& w, bool text) {
  const wlp::SymbolicMatrix m = wlp::c_matrix(w, w.propagators());
  if (text) {
    for (int r = 1; r <= m.rows(); ++r) {
      for (int v = 1; v <= m.cols(); ++v) {
        std::cout << (v > 1 ? " " : "")
                  << (m.has_entry(r, v) ? m.entry(r, v).str() : "0");
      }
      std::cout << "\n";
    }
  } else {
    std::cout << wlp::cmatrix_to_json(m).dump(2) << "\n";
  }
  return 0;
}

int run_denom(const wlp::WilsonLoopDiagram& w, bool text, bool omega_only) {
  require_admissible(w);
  const wlp::DenominatorReport report = wlp::verify_radical(w, w.propagators());
  if (omega_only) {
    std::cout << report.r_definition.str() << "\n";
    return 0;
  }
  if (text) {
    std::cout << "R (edge definition) = " << report.r_definition.str() << "\n";
    std::cout << "R (necklace)        = " << report.r_necklace.str() << "\n";
    for (size_t i = 0; i < report.r_factors.size(); ++i)
      std::cout << "r_" << i + 1 << " = " << report.r_factors[i].str() << "\n";
    std::cout << "products_equal: " << (report.checks.products_equal ? "true" : "false")
              << "\n";
    std::cout << "square_free: " << (report.checks.square_free ? "true" : "false")
              << "\n";
    std::cout << "radical_ok: " << (report.checks.radical_ok ? "true" : "false")
              << "\n";
  } else {
    std::cout << wlp::report_to_json(report).dump(2) << "\n";
  }
  return report.checks.radical_ok ? 0 : 1;
}

int run_enumerate(int k, int n, bool text) {
  std::vector<wlp::WilsonLoopDiagram> all;
  try {
    all = wlp::enumerate_admissible(k, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (text) {
    for (const auto& w : all) std::cout << wlp::diagram_to_json(w).dump() << "\n";
  } else {
    json list = json::array();
    for (const auto& w : all) list.push_back(wlp::diagram_to_json(w));
    std::cout << json{{"count", all.size()}, {"diagrams", list}}.dump(2) << "\n";
  }
  return 0;
}

int run_selftest_command(int max_n, int random_count, unsigned seed) {
  wlp::SelftestOptions options;
  options.max_n = max_n;
  options.random_count = random_count;
  options.seed = seed;
  bool all_pass = true;
  for (const wlp::CaseResult& c : wlp::run_selftest(options)) {
    all_pass = all_pass && c.pass;
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  " << c.detail
              << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wilson loop diagram combinatorics"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "json";
  bool omega_only = false;
  int opt_k = 0, opt_n = 0;
  int max_n = 7, random_count = 50;
  unsigned seed = 20250810;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "diagram file, inline JSON, or -")->required();
    cmd->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* check = app.add_subcommand("check", "admissibility report");
  add_input(check);
  CLI::App* necklace = app.add_subcommand("necklace", "Grassmann necklace");
  add_input(necklace);
  CLI::App* le = app.add_subcommand("le", "Le diagram");
  add_input(le);
  CLI::App* dim = app.add_subcommand("dim", "positroid cell dimension");
  add_input(dim);
  CLI::App* bases_cmd = app.add_subcommand("bases", "matroid bases");
  add_input(bases_cmd);
  CLI::App* cmatrix = app.add_subcommand("cmatrix", "symbolic interaction matrix");
  add_input(cmatrix);
  CLI::App* denom = app.add_subcommand("denom", "integrand denominator report");
  add_input(denom);
  denom->add_flag("--omega", omega_only, "print only the factored denominator");
  CLI::App* enumerate = app.add_subcommand("enumerate", "all admissible diagrams");
  enumerate->add_option("--k", opt_k, "propagator count")->required();
  enumerate->add_option("--n", opt_n, "vertex count")->required();
  enumerate->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  CLI::App* selftest = app.add_subcommand("selftest", "run the verification suite");
  selftest->add_option("--max-n", max_n, "exhaustive sweep bound");
  selftest->add_option("--random-count", random_count, "extra random diagrams");
  selftest->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  const bool text = format == "text";
  try {
    if (app.got_subcommand(enumerate)) return run_enumerate(opt_k, opt_n, text);
    if (app.got_subcommand(selftest))
      return run_selftest_command(max_n, random_count, seed);

    const wlp::WilsonLoopDiagram w = load_diagram(input);
    if (app.got_subcommand(check)) return run_check(w, text);
    if (app.got_subcommand(necklace)) return run_necklace(w, text);
    if (app.got_subcommand(le)) return run_le(w, text);
    if (app.got_subcommand(dim)) return run_dim(w, text);
    if (app.got_subcommand(bases_cmd)) return run_bases(w, text);
    if (app.got_subcommand(cmatrix)) return run_cmatrix(w, text);
    if (app.got_subcommand(denom)) return run_denom(w, text, omega_only);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const wlp::SchemaError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
