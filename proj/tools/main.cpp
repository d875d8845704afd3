#include "cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using itcalc::cli::Options;
using itcalc::cli::Outcome;

int main(int argc, char** argv) {
  CLI::App app{"itcalc: relative Igusa-Todorov computations over monomial algebras"};
  app.set_version_flag("--version", itcalc::cli::kVersion);

  Options o;
  std::string replay_path, output_path, horizon_text;
  bool pretty = false;

  app.add_option("command", o.command, "phi | phi-dim | resolve | ext | check-exact | tilting-check | verify-bound | decompose");
  app.add_option("--algebra", o.algebra, ".alg file of A");
  app.add_option("--b-algebra", o.b_algebra, ".alg file of B (verify-bound)");
  app.add_option("--modules", o.modules, ".mod files whose modules may be named in expressions");
  app.add_option("--module", o.module, "module expression");
  app.add_option("--target", o.target, "second module expression (ext)");
  app.add_option("--generator", o.generator, "E = A + G as an expression")->capture_default_str();
  app.add_option("--family", o.family, "nakayama-all or a module expression")->capture_default_str();
  app.add_option("--b-family", o.b_family, "family over B (verify-bound)")->capture_default_str();
  app.add_option("--complex", o.complex, ".cpx file");
  app.add_option("--degree", o.degree, "Ext degree")->capture_default_str();
  app.add_option("--length", o.length, "resolution length")->capture_default_str();
  app.add_option("--horizon", horizon_text, "syzygy horizon (default ITCALC_HORIZON or 50)");
  app.add_option("--seed", o.seed, "integer seed or 'random'");
  app.add_flag("--pretty", pretty, "aligned table instead of JSON");
  app.add_option("--output", output_path, "also write the JSON report here");
  app.add_option("--replay", replay_path, "recompute a stored report and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : itcalc::cli::kExitInput;
  }

  Outcome out;
  if (!replay_path.empty()) {
    std::ifstream in(replay_path);
    nlohmann::json stored;
    try {
      if (!in) throw std::runtime_error("cannot read " + replay_path);
      stored = nlohmann::json::parse(in);
    } catch (const std::exception& e) {
      std::cerr << "itcalc: " << e.what() << "\n";
      return itcalc::cli::kExitInput;
    }
    out = itcalc::cli::replay(stored);
    if (out.report.contains("replay_mismatch")) std::cerr << "itcalc: replayed report differs from " << replay_path << "\n";
  } else {
    if (o.command.empty()) {
      std::cerr << app.help();
      return itcalc::cli::kExitInput;
    }
    if (!horizon_text.empty()) {
      try {
        std::size_t used = 0;
        o.horizon = std::stoi(horizon_text, &used);
        if (used != horizon_text.size()) throw std::invalid_argument(horizon_text);
      } catch (const std::exception&) {
        std::cerr << "itcalc: --horizon must be an integer\n";
        return itcalc::cli::kExitInput;
      }
    }
    out = itcalc::cli::run(o);
  }

  const std::string json_text = out.report.dump(2) + "\n";
  if (!output_path.empty()) {
    std::ofstream f(output_path, std::ios::binary);
    f << json_text;
    if (!f) {
      std::cerr << "itcalc: cannot write " << output_path << "\n";
      return itcalc::cli::kExitInput;
    }
  }
  std::cout << (pretty ? itcalc::cli::render_pretty(out.report) : json_text);
  if (out.report.contains("error")) std::cerr << "itcalc: " << out.report["error"]["message"].get<std::string>() << "\n";
  return out.exit_code;
}
