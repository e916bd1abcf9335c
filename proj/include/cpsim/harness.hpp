#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cpsim/counting.hpp"
#include "cpsim/coupling.hpp"
#include "cpsim/pulses.hpp"

// Experiment driver: JSON configs in, deterministic CSV/JSON tables out.
// Every experiment is a pure function of its spec; rerunning a config
// produces byte-identical files.
namespace cpsim::harness {

enum class Experiment { profile, fidelity, counting, multiplet, simplify };

const char* experiment_name(Experiment e);
Experiment experiment_from_name(const std::string& name);

// Inclusive arithmetic grid: min, min+step, ..., up to max (a half-step of
// slack absorbs roundoff in (max-min)/step).
struct Grid {
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;

  int size() const;
  double value(int i) const;
};

// Named spin system with overridable couplings. "two-spin" uses j_ch as the
// single coupling; "alanine" is the five-spin system (13C, alpha proton,
// three methyl protons).
struct SystemRef {
  std::string name = "alanine";
  double j_ch = 145.0;
  double j_cm = 4.5;
  double j_hm = 7.3;
};

coupling::SpinSystem build_system(const SystemRef& ref);

struct SweepSpec {
  Experiment experiment = Experiment::profile;
  std::vector<pulses::Family> families;
  double theta = 0.0;  // filled by default_spec
  Grid f{-1.0, 1.0, 0.01};
  double g = 0.0;
  double epsilon = 0.0;
  // counting / simplify
  int k = 1;
  int r_max = 20;
  pulses::Family one_qubit = pulses::Family::BB1;
  pulses::Family coupling_family = pulses::Family::naive;
  double damping_rate = 0.0;
  // multiplet
  int n_max = 10;
  SystemRef system;
  std::string out;           // output path; empty picks "<experiment>.csv"
  std::string format = "csv";  // "csv" or "json"
};

SweepSpec default_spec(Experiment e);

// Throws std::invalid_argument naming the offending field.
void validate_spec(const SweepSpec& spec);

// Parses a JSON config (schema_version 1). Unknown keys are rejected so a
// typo cannot silently fall back to a default.
SweepSpec load_config(const std::string& path);

// Tabular results. Doubles are emitted with 17 significant digits, which
// round-trips exactly; parse_csv(emit_csv(t)) == t.
using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  bool operator==(const Table& other) const;
};

std::string format_double(double v);
std::string emit_csv(const Table& table);
std::string emit_json(const Table& table);
Table parse_csv(const std::string& text);

// Transverse signal (twice the in-phase magnetization) after a 90 degree
// y pulse in the given family on |0>, per grid point.
std::vector<std::pair<double, double>> excitation_profile(pulses::Family family,
                                                          const Grid& f_grid,
                                                          double g = 0.0,
                                                          double epsilon = 0.0);

Table run_experiment(const SweepSpec& spec);

// Runs the experiment and writes the table to the resolved output path
// (CPSIM_OUT_DIR prefixes relative paths). Returns the path written.
std::string run_sweep(const SweepSpec& spec);

// Multiplet diagnostics used by tests and the acceptance gate, indexed by
// n-1 for n = 1..n_max gates:
//   wrapped_spread    largest pairwise phase gap inside either quartet
//   unwrapped_spread  quartet phase width after removing the ideal doublet
//                     evolution and unwrapping each component's phase
//                     trajectory along n
//   max_deviation     largest |component - ideal| over all eight lines,
//                     damping included
struct MultipletMetrics {
  std::vector<double> wrapped_spread;
  std::vector<double> unwrapped_spread;
  std::vector<double> max_deviation;
  double duration_units_per_gate = 0.0;
};

MultipletMetrics multiplet_metrics(const coupling::SpinSystem& sys,
                                   pulses::Family coupling_family, int n_max,
                                   double damping_rate);

// Largest |pulse signal - two-spin matrix signal| over r for counting on
// the given five-spin system (probe: alpha proton, search: carbon).
double simplify_deviation(const SweepSpec& spec, double j_hm);

}  // namespace cpsim::harness
