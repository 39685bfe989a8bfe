#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hecke/errors.hpp"
#include "hecke/pairspec.hpp"
#include "hecke/representation.hpp"
#include "hecke/verify.hpp"

namespace {

using hecke::Json;

constexpr int kExitUsage = 2;
constexpr int kExitMathDomain = 3;
constexpr int kExitVerifyFailed = 4;

std::size_t group_cap() {
  if (const char *env = std::getenv("HECKE_GROUP_CAP")) {
    char *end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0)
      return v;
    throw hecke::SemanticError("HECKE_GROUP_CAP must be a positive integer");
  }
  return hecke::kDefaultGroupCap;
}

hecke::PairPtr load_pair(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw hecke::Error("cannot open pair file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return hecke::build_pair(hecke::parse_pair_spec(buf.str()), group_cap());
}

Json parse_json_arg(const std::string &text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw hecke::SyntaxError("malformed JSON element", 1, 1);
  return j;
}

void emit(const Json &doc) { std::cout << doc.dump() << "\n"; }

int run(int argc, char **argv) {
  CLI::App app{"Hecke-pair convolution algebra toolkit"};
  app.require_subcommand(1);

  std::string pair_path, f1_text, f2_text, element_text;
  std::string side = "left", suite = "all";
  int trials = 100;
  unsigned seed = 0;
  double tol = 1e-9;

  auto add_pair_opt = [&](CLI::App *cmd, bool required = true) {
    auto *opt = cmd->add_option("--pair", pair_path, "pair spec file");
    if (required)
      opt->required();
  };

  auto *cmd_cosets = app.add_subcommand("cosets", "coset and double-coset counts");
  add_pair_opt(cmd_cosets);

  auto *cmd_double = app.add_subcommand("double-cosets", "double-coset classes");
  add_pair_opt(cmd_double);

  auto *cmd_sc = app.add_subcommand("structure-constants",
                                    "basis expansion tensor of the algebra");
  add_pair_opt(cmd_sc);

  auto *cmd_conv = app.add_subcommand("convolve", "product of two elements");
  add_pair_opt(cmd_conv);
  cmd_conv->add_option("--f1", f1_text, "first element (JSON)")->required();
  cmd_conv->add_option("--f2", f2_text, "second element (JSON)")->required();

  auto *cmd_repr = app.add_subcommand("repr", "regular representation matrix");
  add_pair_opt(cmd_repr);
  cmd_repr->add_option("--side", side, "left | right")
      ->check(CLI::IsMember({"left", "right"}));
  cmd_repr->add_option("--element", element_text, "element (JSON)")->required();

  auto *cmd_inter = app.add_subcommand("check-intertwine",
                                       "verify U * left = right * U");
  add_pair_opt(cmd_inter);
  cmd_inter->add_option("--trials", trials, "random elements to test");
  cmd_inter->add_option("--seed", seed, "RNG seed");

  auto *cmd_verify = app.add_subcommand("verify", "run verification suites");
  add_pair_opt(cmd_verify, false);
  cmd_verify->add_option("--suite", suite, "algebra | representation | all")
      ->check(CLI::IsMember({"algebra", "representation", "all"}));
  cmd_verify->add_option("--trials", trials, "random trials per check");
  cmd_verify->add_option("--seed", seed, "RNG seed");

  auto *cmd_norm = app.add_subcommand("norm", "operator norm of a rep matrix");
  add_pair_opt(cmd_norm);
  cmd_norm->add_option("--element", element_text, "element (JSON)")->required();
  cmd_norm->add_option("--side", side, "left | right")
      ->check(CLI::IsMember({"left", "right"}));
  cmd_norm->add_option("--tol", tol, "relative tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0)
      return app.exit(e); // --help
    std::cerr << Json{{"type", "UsageError"}, {"error", e.what()}}.dump()
              << "\n";
    return kExitUsage;
  }

  if (cmd_cosets->parsed()) {
    emit(hecke::cosets_report(load_pair(pair_path)));
  } else if (cmd_double->parsed()) {
    Json full = hecke::cosets_report(load_pair(pair_path));
    emit(Json{{"n_double", full["n_double"]},
              {"double_classes", full["double_classes"]}});
  } else if (cmd_sc->parsed()) {
    emit(hecke::structure_constants_to_json(load_pair(pair_path)));
  } else if (cmd_conv->parsed()) {
    hecke::PairPtr pair = load_pair(pair_path);
    hecke::HeckeElement f1 =
        hecke::element_from_json(pair, parse_json_arg(f1_text));
    hecke::HeckeElement f2 =
        hecke::element_from_json(pair, parse_json_arg(f2_text));
    emit(hecke::element_to_json(hecke::convolve(f1, f2)));
  } else if (cmd_repr->parsed()) {
    hecke::PairPtr pair = load_pair(pair_path);
    hecke::HeckeElement f =
        hecke::element_from_json(pair, parse_json_arg(element_text));
    emit(hecke::matrix_to_json(side == "left" ? hecke::left_action_matrix(f)
                                              : hecke::right_action_matrix(f)));
  } else if (cmd_inter->parsed()) {
    hecke::PairPtr pair = load_pair(pair_path);
    bool holds = true;
    for (int cls = 0; cls < pair->n_classes() && holds; ++cls)
      holds = hecke::check_intertwining(hecke::basis_element(pair, cls)).holds;
    hecke::ElementSampler sampler(pair, seed);
    for (int t = 0; t < trials && holds; ++t)
      holds = hecke::check_intertwining(sampler.next()).holds;
    emit(Json{{"holds", holds}, {"trials", trials}});
    if (!holds)
      return kExitVerifyFailed;
  } else if (cmd_verify->parsed()) {
    std::vector<hecke::PairPtr> pairs;
    if (pair_path.empty())
      pairs = hecke::builtin_roster();
    else
      pairs.push_back(load_pair(pair_path));
    Json reports = Json::array();
    bool all = true;
    for (const auto &pair : pairs) {
      if (suite == "algebra" || suite == "all") {
        hecke::VerificationReport r =
            hecke::verify_star_algebra(pair, trials, seed);
        all = all && r.all_passed();
        Json jr = r.to_json();
        jr["suite"] = "algebra";
        if (!pair->description().empty())
          jr["pair"] = pair->description();
        else
          jr["pair"] = pair_path;
        reports.push_back(std::move(jr));
      }
      if (suite == "representation" || suite == "all") {
        hecke::VerificationReport r =
            hecke::verify_representation(pair, trials, seed);
        all = all && r.all_passed();
        Json jr = r.to_json();
        jr["suite"] = "representation";
        if (!pair->description().empty())
          jr["pair"] = pair->description();
        else
          jr["pair"] = pair_path;
        reports.push_back(std::move(jr));
      }
    }
    emit(Json{{"suite", suite},
              {"trials", trials},
              {"seed", seed},
              {"reports", std::move(reports)},
              {"all_passed", all}});
    if (!all)
      return kExitVerifyFailed;
  } else if (cmd_norm->parsed()) {
    hecke::PairPtr pair = load_pair(pair_path);
    hecke::HeckeElement f =
        hecke::element_from_json(pair, parse_json_arg(element_text));
    double value =
        hecke::operator_norm(side == "left" ? hecke::left_action_matrix(f)
                                            : hecke::right_action_matrix(f),
                             tol);
    std::ostringstream out;
    out.precision(17);
    out << value;
    std::cout << out.str() << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const hecke::SyntaxError &e) {
    std::cerr << Json{{"type", "SyntaxError"}, {"error", e.what()}}.dump()
              << "\n";
    return kExitUsage;
  } catch (const hecke::Error &e) {
    std::cerr << Json{{"type", "MathDomainError"}, {"error", e.what()}}.dump()
              << "\n";
    return kExitMathDomain;
  } catch (const std::exception &e) {
    std::cerr << Json{{"type", "InternalError"}, {"error", e.what()}}.dump()
              << "\n";
    return kExitMathDomain;
  }
}
