#include "braidseed/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "braidseed/autgroup.hpp"
#include "braidseed/exchange.hpp"
#include "braidseed/render.hpp"
#include "braidseed/report.hpp"
#include "braidseed/variety.hpp"

namespace braidseed {

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("non-integer token '") + tok + "' in " + what);
    }
  }
  return out;
}

// Resolves --u / --u-oneline into a permutation; both given means both must
// describe the same element.
Permutation resolve_u(int n, const std::string& u_word, bool has_word, const std::string& u_oneline,
                      bool has_oneline) {
  if (!has_word && !has_oneline) throw InvalidInput("one of --u or --u-oneline is required");
  std::optional<Permutation> from_word;
  if (has_word) {
    std::vector<int> word = parse_int_list(u_word, "--u");
    for (int letter : word)
      if (letter < 1 || letter > n - 1)
        throw InvalidInput("--u letter " + std::to_string(letter) + " out of range 1.." +
                           std::to_string(n - 1));
    from_word = Permutation::from_word(n, word);
  }
  std::optional<Permutation> from_oneline;
  if (has_oneline) {
    std::vector<int> images = parse_int_list(u_oneline, "--u-oneline");
    if (static_cast<int>(images.size()) != n)
      throw InvalidInput("--u-oneline must list n = " + std::to_string(n) + " images");
    from_oneline = Permutation::from_oneline(images);
  }
  if (from_word && from_oneline && !(*from_word == *from_oneline))
    throw InvalidInput("--u and --u-oneline describe different permutations");
  return from_word ? *from_word : *from_oneline;
}

struct PairArgs {
  int n = 0;
  std::string beta;
  std::string u_word, u_oneline;
  CLI::Option* u_word_opt = nullptr;
  CLI::Option* u_oneline_opt = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "strand count")->required();
    cmd->add_option("--beta", beta, "braid word letters, space or comma separated")->required();
    u_word_opt = cmd->add_option("--u", u_word, "permutation as a word in simple reflections");
    u_oneline_opt = cmd->add_option("--u-oneline", u_oneline, "permutation in one-line notation");
  }

  std::pair<Permutation, BraidWord> resolve() const {
    BraidWord word = parse_word(beta, n);
    Permutation u =
        resolve_u(n, u_word, u_word_opt->count() > 0, u_oneline, u_oneline_opt->count() > 0);
    if (u.n() != n) throw InvalidInput("permutation size differs from --n");
    return {u, word};
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"braidseed: exact cluster seed data of braid varieties from 3D plabic graphs"};
  app.require_subcommand(1);

  // analyze
  CLI::App* analyze = app.add_subcommand("analyze", "compute H, D, Bhat, A and the torus action");
  PairArgs analyze_pair;
  analyze_pair.attach(analyze);
  std::string analyze_out = "json";
  bool analyze_check = false, analyze_inductive = false;
  analyze->add_option("--out", analyze_out, "output form: json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));
  analyze->add_flag("--check", analyze_check, "run the full internal validation suite");
  analyze->add_flag("--inductive", analyze_inductive, "build Bhat and A by the inductive L/R route");

  // survey
  CLI::App* survey_cmd = app.add_subcommand("survey", "enumerate (u, beta) pairs and emit CSV");
  int survey_n = 0, survey_min = 0, survey_max = 0, survey_jobs = 0;
  int64_t survey_budget = 1000000;
  std::string survey_u = "all", survey_out = "csv";
  survey_cmd->add_option("--n", survey_n, "strand count")->required();
  survey_cmd->add_option("--min-len", survey_min, "minimum braid word length")->required();
  survey_cmd->add_option("--max-len", survey_max, "maximum braid word length")->required();
  survey_cmd->add_option("--u", survey_u, "'all' or a fixed word in simple reflections");
  survey_cmd->add_option("--jobs", survey_jobs, "worker cap (0 = all cores)");
  survey_cmd->add_option("--budget", survey_budget, "maximum instances examined");
  survey_cmd->add_option("--out", survey_out, "output form (csv)")->check(CLI::IsMember({"csv"}));

  // render
  CLI::App* render_cmd = app.add_subcommand("render", "draw the plabic diagram or the quiver");
  PairArgs render_pair;
  render_pair.attach(render_cmd);
  std::string render_format, render_target;
  int render_film = 0;
  render_cmd->add_option("--format", render_format, "svg, dot or tikz")->required();
  render_cmd->add_option("--target", render_target, "plabic or quiver")->required();
  CLI::Option* film_opt = render_cmd->add_option("--film", render_film, "highlight this film's regions");

  // variety
  CLI::App* variety_cmd = app.add_subcommand("variety", "emit the defining equations");
  PairArgs variety_pair;
  variety_pair.attach(variety_cmd);
  int64_t max_terms = 200000;
  variety_cmd->add_option("--max-terms", max_terms, "polynomial term budget");

  // mutate
  CLI::App* mutate_cmd = app.add_subcommand("mutate", "apply a mutation sequence to a stored report");
  std::string report_file, seq_text;
  mutate_cmd->add_option("--report", report_file, "JSON report written by analyze")->required();
  mutate_cmd->add_option("--seq", seq_text, "mutable indices, space or comma separated")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) {
      auto [u, beta] = analyze_pair.resolve();
      AnalysisReport report = build_report(u, beta, analyze_inductive);
      if (analyze_check) validate_report(report);
      if (analyze_out == "json")
        out << report_to_json(report);
      else
        out << report_to_pretty(report);
      return 0;
    }

    if (survey_cmd->parsed()) {
      SurveyOptions options;
      options.n = survey_n;
      options.min_len = survey_min;
      options.max_len = survey_max;
      options.jobs = survey_jobs;
      options.budget = survey_budget;
      if (survey_u != "all") {
        std::vector<int> word = parse_int_list(survey_u, "--u");
        options.u_word = word;
      }
      SurveyResult result = survey(options);
      out << result.csv;
      err << "# surveyed: " << result.emitted << " nonempty, " << result.skipped_empty
          << " empty skipped" << (result.truncated ? ", TRUNCATED at budget" : "") << "\n";
      return 0;
    }

    if (render_cmd->parsed()) {
      auto [u, beta] = render_pair.resolve();
      RenderOptions options;
      options.format = parse_render_format(render_format);
      options.target = parse_render_target(render_target);
      if (film_opt->count() > 0) options.film = render_film;
      out << render(u, beta, options);
      return 0;
    }

    if (variety_cmd->parsed()) {
      auto [u, beta] = variety_pair.resolve();
      VarietyEquations eq = defining_equations(u, beta, max_terms);
      DimensionReport dim = dimension_report(u, beta);
      nlohmann::ordered_json j;
      j["n"] = beta.n;
      j["s"] = eq.s;
      j["extended_word"] = eq.extended_word;
      j["dim"] = dim.dim;
      nlohmann::ordered_json eqs = nlohmann::ordered_json::array();
      for (const Poly& p : eq.equations) {
        nlohmann::ordered_json record;
        record["text"] = poly_to_string(p);
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (auto& [mask, coeff] : p.terms) {
          nlohmann::ordered_json term;
          std::vector<int> exponents(eq.s, 0);
          for (int v : monomial_vars(mask)) exponents[v - 1] = 1;
          term["exponents"] = exponents;
          term["coeff"] = coeff;
          terms.push_back(std::move(term));
        }
        record["terms"] = std::move(terms);
        eqs.push_back(std::move(record));
      }
      j["equations"] = std::move(eqs);
      out << j.dump(2) << "\n";
      return 0;
    }

    if (mutate_cmd->parsed()) {
      std::ifstream in(report_file);
      if (!in) throw InvalidInput("cannot open report file '" + report_file + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      AnalysisReport report = report_from_json(buffer.str());
      std::vector<int> seq = parse_int_list(seq_text, "--seq");
      IntMatrix bhat = report.bhat;
      for (int k : seq) bhat = mutate(bhat, k, report.m);
      auto matrix_rows = [&](int rows) {
        nlohmann::ordered_json rj = nlohmann::ordered_json::array();
        for (int i = 0; i < rows; ++i) {
          nlohmann::ordered_json row = nlohmann::ordered_json::array();
          for (int c = 0; c < bhat.cols(); ++c) row.push_back(bhat.at(i, c));
          rj.push_back(std::move(row));
        }
        return rj;
      };
      nlohmann::ordered_json j;
      j["m"] = report.m;
      j["f"] = report.f;
      j["seq"] = seq;
      j["Bhat"] = matrix_rows(bhat.rows());
      j["Btilde"] = matrix_rows(report.m);
      out << j.dump(2) << "\n";
      return 0;
    }
  } catch (const EmptyVariety& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace braidseed
