#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpsim/harness.hpp"

namespace hn = cpsim::harness;

int main(int argc, char** argv) {
  CLI::App app{"composite-pulse NMR gate and counting simulator"};
  app.require_subcommand(1);

  struct Opts {
    std::string config;
    std::string out;
    std::vector<std::string> families;
    double theta = 0.0;
    double f_min = 0.0;
    double f_max = 0.0;
    double f_step = 0.0;
  } opts;

  const std::pair<const char*, hn::Experiment> kinds[] = {
      {"profile", hn::Experiment::profile},
      {"fidelity", hn::Experiment::fidelity},
      {"counting", hn::Experiment::counting},
      {"multiplet", hn::Experiment::multiplet},
      {"simplify", hn::Experiment::simplify},
  };
  const char* descriptions[] = {
      "excitation amplitude across a pulse-strength error sweep",
      "gate fidelity across a pulse-strength error sweep",
      "approximate-counting signal versus iteration count",
      "carbon multiplet amplitudes under repeated coupling gates",
      "counting on the five-spin system against the two-spin reference",
  };

  std::map<const CLI::App*, hn::Experiment> by_subcommand;
  int idx = 0;
  for (const auto& [name, experiment] : kinds) {
    CLI::App* sub = app.add_subcommand(name, descriptions[idx++]);
    sub->add_option("--config", opts.config,
                    "JSON config file (schema_version 1); command-line options "
                    "override it");
    sub->add_option("--out", opts.out, "output file path");
    sub->add_option("--family", opts.families,
                    "pulse family (repeatable); for counting and simplify the "
                    "first is the one-qubit family, the second the coupling "
                    "family");
    sub->add_option("--theta", opts.theta, "target rotation angle in radians");
    sub->add_option("--f-min", opts.f_min, "pulse-strength error grid start");
    sub->add_option("--f-max", opts.f_max, "pulse-strength error grid end");
    sub->add_option("--f-step", opts.f_step, "pulse-strength error grid step");
    by_subcommand[sub] = experiment;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const hn::Experiment experiment = by_subcommand.at(sub);

  try {
    hn::SweepSpec spec = opts.config.empty() ? hn::default_spec(experiment)
                                             : hn::load_config(opts.config);
    if (spec.experiment != experiment) {
      throw std::invalid_argument(
          std::string("config: experiment '") +
          hn::experiment_name(spec.experiment) +
          "' does not match this subcommand");
    }
    if (sub->count("--family") > 0) {
      std::vector<cpsim::pulses::Family> families;
      families.reserve(opts.families.size());
      for (const auto& name : opts.families) {
        families.push_back(cpsim::pulses::family_from_name(name));
      }
      if (experiment == hn::Experiment::counting ||
          experiment == hn::Experiment::simplify) {
        if (families.size() > 2) {
          throw std::invalid_argument(
              "--family: at most two (one-qubit, coupling) for this command");
        }
        spec.one_qubit = families.at(0);
        if (families.size() == 2) spec.coupling_family = families[1];
      } else {
        spec.families = families;
      }
    }
    if (sub->count("--theta") > 0) spec.theta = opts.theta;
    if (sub->count("--f-min") > 0) spec.f.min = opts.f_min;
    if (sub->count("--f-max") > 0) spec.f.max = opts.f_max;
    if (sub->count("--f-step") > 0) spec.f.step = opts.f_step;
    if (sub->count("--out") > 0) spec.out = opts.out;

    hn::validate_spec(spec);
    std::cout << hn::run_sweep(spec) << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
