// impactgraph: rank nodes of a signed weighted cognitive map by mutual influence.
//
//   impactgraph <command> <file> [flags]
//
// Commands: scenarios, matrices, rank, compare, impulse, paths.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "impactgraph/cli.hpp"

namespace ig = impactgraph;
using ig::cli::Command;
using ig::cli::OutputFormat;

namespace {

struct Flags {
  std::string from;
  std::string to;
};

void add_common(CLI::App* sub, ig::cli::RunConfig& config) {
  sub->add_option("file", config.input, "Adjacency matrix (CSV or JSON)")->required();
  sub->add_option("--lambda", config.analysis.amplification.lambda,
                  "Amplification steepness")
      ->capture_default_str();
  sub->add_option("--max-paths", config.analysis.max_paths,
                  "Per-pair simple path limit")
      ->capture_default_str();
  sub->add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"table", OutputFormat::table},
                                              {"json", OutputFormat::json},
                                              {"csv", OutputFormat::csv}},
          CLI::ignore_case));
}

void add_propagation(CLI::App* sub, ig::cli::RunConfig& config) {
  sub->add_option("--epsilon", config.propagation.epsilon, "Convergence threshold")
      ->capture_default_str();
  sub->add_option("--max-steps", config.propagation.max_steps, "Propagation step limit")
      ->capture_default_str();
  sub->add_option("--normalization", config.propagation.normalization,
                  "signed (reference) or abs")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, ig::Normalization>{{"signed", ig::Normalization::signed_sum},
                                                   {"abs", ig::Normalization::absolute_sum}},
          CLI::ignore_case));
}

void add_pair(CLI::App* sub, Flags& flags, bool required) {
  auto* f = sub->add_option("--from", flags.from, "Source node (label or 1-based index)");
  auto* t = sub->add_option("--to", flags.to, "Target node (label or 1-based index)");
  if (required) {
    f->required();
    t->required();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank cognitive-map nodes by optimal impact scenarios"};
  app.require_subcommand(1);

  ig::cli::RunConfig config;
  Flags flags;

  auto* scenarios = app.add_subcommand("scenarios", "Score every scenario of one node pair");
  add_common(scenarios, config);
  add_pair(scenarios, flags, true);

  auto* matrices = app.add_subcommand("matrices", "Print Z, T, Z1 and the steady state");
  add_common(matrices, config);
  add_propagation(matrices, config);

  auto* rank = app.add_subcommand("rank", "Rank nodes by total influence");
  add_common(rank, config);
  add_propagation(rank, config);
  rank->add_option("--model", config.model, "pareto, kosko or sum")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, ig::Model>{{"pareto", ig::Model::pareto},
                                           {"kosko", ig::Model::kosko},
                                           {"sum", ig::Model::sum}},
          CLI::ignore_case));

  auto* compare = app.add_subcommand("compare", "Side-by-side ranks of all models");
  add_common(compare, config);
  add_propagation(compare, config);

  auto* impulse = app.add_subcommand("impulse", "Run the impulse process");
  add_common(impulse, config);
  impulse->add_option("--init", config.init, "Initial pulses p(0), comma separated")
      ->delimiter(',')
      ->required();
  impulse->add_option("--values", config.values, "Initial values v(0), comma separated")
      ->delimiter(',');
  impulse->add_option("--steps", config.steps, "Number of steps")->capture_default_str();

  auto* paths = app.add_subcommand("paths", "List simple paths");
  add_common(paths, config);
  add_pair(paths, flags, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ig::cli::kOk : ig::cli::kUsage;
  }

  const std::pair<CLI::App*, Command> commands[] = {
      {scenarios, Command::scenarios}, {matrices, Command::matrices},
      {rank, Command::rank},           {compare, Command::compare},
      {impulse, Command::impulse},     {paths, Command::paths}};
  for (const auto& [sub, command] : commands) {
    if (!sub->parsed()) continue;
    config.command = command;
    if (auto* o = sub->get_option_no_throw("--from"); o && o->count()) config.from = flags.from;
    if (auto* o = sub->get_option_no_throw("--to"); o && o->count()) config.to = flags.to;
  }
  return ig::cli::run(config, std::cout, std::cerr);
}
