#include "cpsim/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cpsim::harness {

namespace {

const double kPi = std::acos(-1.0);

double wrap_pi(double x) {
  double y = std::fmod(x + kPi, 2.0 * kPi);
  if (y < 0.0) y += 2.0 * kPi;
  return y - kPi;  // [-pi, pi)
}

pulses::ErrorModel make_error(double f, double g, double epsilon) {
  pulses::ErrorModel err;
  err.f = f;
  err.g = g;
  err.epsilon = epsilon;
  return err;
}

// in-phase transverse signal of spin 0 after exciting |0> with the family's
// 90-degree-style pulse of the given target angle about y
double excitation_amplitude(pulses::Family family, double theta,
                            const pulses::ErrorModel& err) {
  const auto seq = pulses::make_sequence(family, theta, kPi / 2.0);
  const qcore::Unitary u = pulses::sequence_propagator(seq, err);
  qcore::DensityMatrix rho = qcore::Matrix::Zero(2, 2);
  rho(0, 0) = 1.0;
  rho = qcore::evolve_state(rho, u);
  return (2.0 * (rho * qcore::single_spin(qcore::Axis::x)).trace()).real();
}

struct MultipletRun {
  // per gate count n = 1..n_max, the damped components
  std::vector<std::vector<coupling::MultipletComponent>> per_n;
  double units_per_gate = 0.0;
};

MultipletRun run_multiplet(const coupling::SpinSystem& sys, double j_ch,
                           pulses::Family family, int n_max, double damping_rate) {
  const pulses::ErrorModel none;
  const int n_spins = sys.n_spins();

  // carbon starts pseudo-pure in |0>, every proton maximally mixed
  qcore::Matrix rho = qcore::Matrix::Ones(1, 1);
  for (int i = 0; i < n_spins; ++i) {
    qcore::Matrix local;
    if (i == 0) {
      local = qcore::Matrix::Zero(2, 2);
      local(0, 0) = 1.0;
    } else {
      local = 0.5 * qcore::identity(2);
    }
    rho = qcore::tensor(rho, local);
  }
  rho = qcore::evolve_state(rho, coupling::hard_pulse(sys, "13C", kPi / 2.0,
                                                      kPi / 2.0, none));

  // one composite coupling gate of pi/2; the tilt pulses land on the carbon
  // (slot 1 is the pulsed spin S), the alpha proton rides along as spin I
  std::vector<coupling::SequenceEvent> events;
  for (const auto& elem : coupling::composite_coupling(family, kPi / 2.0)) {
    for (auto& ev : coupling::compile_coupling_element(elem, j_ch)) {
      events.push_back(ev);
    }
  }
  const std::vector<int> slots = {1, 0};
  const qcore::Unitary gate =
      coupling::program_unitary(events, sys, slots, 1.0 / (4.0 * j_ch), none);

  MultipletRun run;
  run.units_per_gate = coupling::program_delay_units(events);
  for (int n = 1; n <= n_max; ++n) {
    rho = qcore::evolve_state(rho, gate);
    auto comps = coupling::multiplet_phases(rho, sys, 0);
    const double damp = std::exp(-damping_rate * run.units_per_gate * n);
    for (auto& c : comps) c.amplitude *= damp;
    run.per_n.push_back(std::move(comps));
  }
  return run;
}

// the isolated-doublet prediction for a component on the given doublet half
qcore::Complex ideal_component(int n, int partner_state) {
  const double sign = (partner_state == 0) ? 1.0 : -1.0;
  const double phase = n * (kPi / 2.0) * sign;
  return {std::cos(phase), std::sin(phase)};
}

struct SimplifyRecord {
  int r = 0;
  qcore::Complex signal{0.0, 0.0};
  qcore::Complex reference{0.0, 0.0};
};

std::vector<SimplifyRecord> simplify_records(const SweepSpec& spec, double j_hm) {
  const auto sys =
      coupling::alanine_system(spec.system.j_ch, spec.system.j_cm, j_hm);
  counting::CountingProblem problem;
  problem.n_bits = 1;
  problem.k = spec.k;
  problem.r_max = spec.r_max;
  counting::GateBackend backend;
  backend.one_qubit = spec.one_qubit;
  backend.coupling = spec.coupling_family;
  backend.error = make_error(0.0, 0.0, 0.0);
  backend.damping_rate = spec.damping_rate;
  // the alpha proton is observed (slot 0), the carbon is searched (slot 1)
  const auto signal =
      counting::run_counting(problem, backend, sys, 1, 0, spec.system.j_ch);
  const auto reference =
      counting::matrix_counting_signal(problem, counting::default_assignment(problem));

  std::vector<SimplifyRecord> out;
  out.reserve(signal.size());
  for (size_t i = 0; i < signal.size(); ++i) {
    SimplifyRecord rec;
    rec.r = signal[i].r;
    rec.signal = signal[i].amplitude;
    rec.reference = reference[i].amplitude;
    out.push_back(rec);
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

const char* experiment_name(Experiment e) {
  switch (e) {
    case Experiment::profile: return "excitation-profile";
    case Experiment::fidelity: return "fidelity-sweep";
    case Experiment::counting: return "counting";
    case Experiment::multiplet: return "coupling-multiplet";
    case Experiment::simplify: return "simplify-demo";
  }
  throw std::invalid_argument("unknown experiment value");
}

Experiment experiment_from_name(const std::string& name) {
  for (Experiment e : {Experiment::profile, Experiment::fidelity,
                       Experiment::counting, Experiment::multiplet,
                       Experiment::simplify}) {
    if (name == experiment_name(e)) return e;
  }
  throw std::invalid_argument(
      "unknown experiment '" + name +
      "' (valid: excitation-profile, fidelity-sweep, counting, "
      "coupling-multiplet, simplify-demo)");
}

int Grid::size() const {
  if (!(step > 0.0)) return 0;
  if (max < min) return 0;
  return static_cast<int>(std::floor((max - min) / step + 1e-9)) + 1;
}

double Grid::value(int i) const { return min + i * step; }

coupling::SpinSystem build_system(const SystemRef& ref) {
  if (ref.name == "two-spin") return coupling::two_spin_system(ref.j_ch);
  if (ref.name == "alanine") {
    return coupling::alanine_system(ref.j_ch, ref.j_cm, ref.j_hm);
  }
  throw std::invalid_argument("system: unknown name '" + ref.name +
                              "' (valid: two-spin, alanine)");
}

SweepSpec default_spec(Experiment e) {
  SweepSpec spec;
  spec.experiment = e;
  spec.theta = kPi / 2.0;
  switch (e) {
    case Experiment::profile:
    case Experiment::fidelity:
      spec.families = pulses::all_families();
      spec.f = {-1.0, 1.0, 0.01};
      break;
    case Experiment::counting:
      spec.f = {0.0, 0.1, 0.05};
      spec.one_qubit = pulses::Family::BB1;
      spec.coupling_family = pulses::Family::naive;
      break;
    case Experiment::multiplet:
      spec.families = {pulses::Family::naive, pulses::Family::BB1,
                       pulses::Family::NB1, pulses::Family::PB1};
      break;
    case Experiment::simplify:
      spec.one_qubit = pulses::Family::BB1;
      spec.coupling_family = pulses::Family::BB1;
      break;
  }
  switch (e) {
    case Experiment::profile: spec.out = "profile.csv"; break;
    case Experiment::fidelity: spec.out = "fidelity.csv"; break;
    case Experiment::counting: spec.out = "counting.csv"; break;
    case Experiment::multiplet: spec.out = "multiplet.csv"; break;
    case Experiment::simplify: spec.out = "simplify.csv"; break;
  }
  return spec;
}

void validate_spec(const SweepSpec& spec) {
  const bool needs_families = spec.experiment == Experiment::profile ||
                              spec.experiment == Experiment::fidelity ||
                              spec.experiment == Experiment::multiplet;
  if (needs_families) {
    require(!spec.families.empty(), "families: list must not be empty");
  }
  if (spec.experiment == Experiment::multiplet) {
    for (pulses::Family f : spec.families) {
      if (f == pulses::Family::B4 || f == pulses::Family::P4) {
        throw std::invalid_argument(
            std::string("families: '") + pulses::family_name(f) +
            "' cannot drive coupling gates (reversed rotations)");
      }
    }
  }
  if (spec.experiment == Experiment::profile ||
      spec.experiment == Experiment::fidelity) {
    require(spec.theta > 0.0 && spec.theta <= 2.0 * kPi + 1e-12,
            "theta: must lie in (0, 2pi], got " + std::to_string(spec.theta));
  }
  if (spec.experiment == Experiment::profile ||
      spec.experiment == Experiment::fidelity ||
      spec.experiment == Experiment::counting) {
    require(spec.f.step > 0.0, "f grid: step must be positive, got " +
                                   std::to_string(spec.f.step));
    require(spec.f.size() >= 1, "f grid: empty (max below min)");
  }
  require(std::isfinite(spec.g), "g: must be finite");
  require(std::isfinite(spec.epsilon), "epsilon: must be finite");
  if (spec.experiment == Experiment::counting ||
      spec.experiment == Experiment::simplify) {
    require(spec.k >= 0 && spec.k <= 2, "k: must be in [0, 2] for a 1-bit register, got " +
                                            std::to_string(spec.k));
    require(spec.r_max >= 0 && spec.r_max <= 10000,
            "r_max: must be in [0, 10000], got " + std::to_string(spec.r_max));
    const pulses::Family cf = spec.coupling_family;
    if (cf == pulses::Family::B4 || cf == pulses::Family::P4) {
      throw std::invalid_argument(
          std::string("coupling: family '") + pulses::family_name(cf) +
          "' cannot drive coupling gates (reversed rotations)");
    }
  }
  if (spec.experiment == Experiment::multiplet) {
    require(spec.n_max >= 1 && spec.n_max <= 20,
            "n_max: must be in [1, 20], got " + std::to_string(spec.n_max));
  }
  if (spec.experiment == Experiment::multiplet ||
      spec.experiment == Experiment::simplify) {
    require(spec.system.name == "alanine",
            "system: experiment '" + std::string(experiment_name(spec.experiment)) +
                "' needs the alanine system");
  }
  require(spec.damping_rate >= 0.0, "damping_rate: must be nonnegative");
  require(spec.system.j_ch > 0.0, "system: j_ch must be positive");
  require(spec.system.j_cm >= 0.0, "system: j_cm must be nonnegative");
  require(spec.system.j_hm >= 0.0, "system: j_hm must be nonnegative");
  require(spec.format == "csv" || spec.format == "json",
          "format: must be 'csv' or 'json', got '" + spec.format + "'");
}

SweepSpec load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("config: cannot open '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config: " + std::string(e.what()));
  }
  require(j.is_object(), "config: top level must be an object");

  require(j.contains("schema_version"), "config: missing schema_version");
  require(j["schema_version"].is_number_integer() &&
              j["schema_version"].get<int>() == 1,
          "config: schema_version must be 1");
  require(j.contains("experiment"), "config: missing experiment");
  require(j["experiment"].is_string(), "config: experiment must be a string");
  SweepSpec spec = default_spec(experiment_from_name(j["experiment"].get<std::string>()));

  auto number = [](const nlohmann::json& v, const char* field) -> double {
    if (!v.is_number()) {
      throw std::invalid_argument(std::string("config: ") + field +
                                  " must be a number");
    }
    return v.get<double>();
  };
  auto integer = [](const nlohmann::json& v, const char* field) -> int {
    if (!v.is_number_integer()) {
      throw std::invalid_argument(std::string("config: ") + field +
                                  " must be an integer");
    }
    return v.get<int>();
  };
  auto text = [](const nlohmann::json& v, const char* field) -> std::string {
    if (!v.is_string()) {
      throw std::invalid_argument(std::string("config: ") + field +
                                  " must be a string");
    }
    return v.get<std::string>();
  };

  for (const auto& [key, value] : j.items()) {
    if (key == "schema_version" || key == "experiment") {
      continue;
    } else if (key == "families") {
      require(value.is_array(), "config: families must be an array of names");
      spec.families.clear();
      for (const auto& item : value) {
        spec.families.push_back(pulses::family_from_name(text(item, "families entry")));
      }
    } else if (key == "theta") {
      spec.theta = number(value, "theta");
    } else if (key == "f_min") {
      spec.f.min = number(value, "f_min");
    } else if (key == "f_max") {
      spec.f.max = number(value, "f_max");
    } else if (key == "f_step") {
      spec.f.step = number(value, "f_step");
    } else if (key == "g") {
      spec.g = number(value, "g");
    } else if (key == "epsilon") {
      spec.epsilon = number(value, "epsilon");
    } else if (key == "k") {
      spec.k = integer(value, "k");
    } else if (key == "r_max") {
      spec.r_max = integer(value, "r_max");
    } else if (key == "n_max") {
      spec.n_max = integer(value, "n_max");
    } else if (key == "one_qubit") {
      spec.one_qubit = pulses::family_from_name(text(value, "one_qubit"));
    } else if (key == "coupling") {
      spec.coupling_family = pulses::family_from_name(text(value, "coupling"));
    } else if (key == "damping_rate") {
      spec.damping_rate = number(value, "damping_rate");
    } else if (key == "system") {
      require(value.is_object(), "config: system must be an object");
      for (const auto& [skey, svalue] : value.items()) {
        if (skey == "name") {
          spec.system.name = text(svalue, "system.name");
        } else if (skey == "j_ch") {
          spec.system.j_ch = number(svalue, "system.j_ch");
        } else if (skey == "j_cm") {
          spec.system.j_cm = number(svalue, "system.j_cm");
        } else if (skey == "j_hm") {
          spec.system.j_hm = number(svalue, "system.j_hm");
        } else {
          throw std::invalid_argument("config: unknown field 'system." + skey + "'");
        }
      }
    } else if (key == "out") {
      spec.out = text(value, "out");
    } else if (key == "format") {
      spec.format = text(value, "format");
    } else {
      throw std::invalid_argument("config: unknown field '" + key + "'");
    }
  }

  validate_spec(spec);
  return spec;
}

bool Table::operator==(const Table& other) const {
  return columns == other.columns && rows == other.rows;
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // collapse negative zero
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string emit_csv(const Table& table) {
  std::string out;
  for (size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      if (const double* d = std::get_if<double>(&row[c])) {
        out += format_double(*d);
      } else {
        out += std::get<std::string>(row[c]);
      }
    }
    out += '\n';
  }
  return out;
}

std::string emit_json(const Table& table) {
  std::string out = "[\n";
  for (size_t r = 0; r < table.rows.size(); ++r) {
    out += "  {";
    const auto& row = table.rows[r];
    for (size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
      if (c) out += ", ";
      out += '"' + table.columns[c] + "\": ";
      if (const double* d = std::get_if<double>(&row[c])) {
        out += format_double(*d);
      } else {
        out += '"' + std::get<std::string>(row[c]) + '"';
      }
    }
    out += (r + 1 < table.rows.size()) ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

Table parse_csv(const std::string& text) {
  Table table;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    size_t start = 0;
    while (true) {
      const size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (header) {
      table.columns = cells;
      header = false;
      continue;
    }
    std::vector<Cell> row;
    row.reserve(cells.size());
    for (const auto& cell : cells) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (!cell.empty() && end == cell.c_str() + cell.size()) {
        row.emplace_back(v);
      } else {
        row.emplace_back(cell);
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<std::pair<double, double>> excitation_profile(pulses::Family family,
                                                          const Grid& f_grid,
                                                          double g, double epsilon) {
  std::vector<std::pair<double, double>> out;
  const int n = f_grid.size();
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double f = f_grid.value(i);
    out.emplace_back(f, excitation_amplitude(family, kPi / 2.0,
                                             make_error(f, g, epsilon)));
  }
  return out;
}

Table run_experiment(const SweepSpec& spec) {
  validate_spec(spec);
  Table table;
  switch (spec.experiment) {
    case Experiment::profile: {
      table.columns = {"family", "theta", "f", "g", "epsilon", "amplitude"};
      for (pulses::Family fam : spec.families) {
        for (int i = 0; i < spec.f.size(); ++i) {
          const double f = spec.f.value(i);
          const double amp = excitation_amplitude(
              fam, spec.theta, make_error(f, spec.g, spec.epsilon));
          table.rows.push_back({std::string(pulses::family_name(fam)), spec.theta,
                                f, spec.g, spec.epsilon, amp});
        }
      }
      break;
    }
    case Experiment::fidelity: {
      table.columns = {"family", "theta", "f", "g", "epsilon", "fidelity"};
      const qcore::Unitary ideal = qcore::rotation_unitary(spec.theta, 0.0);
      for (pulses::Family fam : spec.families) {
        const auto seq = pulses::make_sequence(fam, spec.theta, 0.0);
        for (int i = 0; i < spec.f.size(); ++i) {
          const double f = spec.f.value(i);
          const double fid = qcore::propagator_fidelity(
              pulses::sequence_propagator(seq, make_error(f, spec.g, spec.epsilon)),
              ideal);
          table.rows.push_back({std::string(pulses::family_name(fam)), spec.theta,
                                f, spec.g, spec.epsilon, fid});
        }
      }
      break;
    }
    case Experiment::counting: {
      table.columns = {"one_qubit", "coupling", "k",         "f",
                       "r",         "signal_re", "signal_im", "signal_abs"};
      counting::CountingProblem problem;
      problem.n_bits = 1;
      problem.k = spec.k;
      problem.r_max = spec.r_max;
      for (int i = 0; i < spec.f.size(); ++i) {
        const double f = spec.f.value(i);
        counting::GateBackend backend;
        backend.one_qubit = spec.one_qubit;
        backend.coupling = spec.coupling_family;
        backend.error = make_error(f, spec.g, spec.epsilon);
        backend.damping_rate = spec.damping_rate;
        for (const auto& rec : counting::run_counting(problem, backend)) {
          table.rows.push_back({std::string(pulses::family_name(spec.one_qubit)),
                                std::string(pulses::family_name(spec.coupling_family)),
                                static_cast<double>(spec.k), f,
                                static_cast<double>(rec.r), rec.amplitude.real(),
                                rec.amplitude.imag(), std::abs(rec.amplitude)});
        }
      }
      break;
    }
    case Experiment::multiplet: {
      table.columns = {"family",       "n",      "partner_state",
                       "group_mz_twice", "multiplicity", "amp_re",
                       "amp_im",       "phase"};
      const auto sys = build_system(spec.system);
      for (pulses::Family fam : spec.families) {
        const auto run = run_multiplet(sys, spec.system.j_ch, fam, spec.n_max,
                                       spec.damping_rate);
        for (int n = 1; n <= spec.n_max; ++n) {
          for (const auto& comp : run.per_n[static_cast<size_t>(n - 1)]) {
            table.rows.push_back(
                {std::string(pulses::family_name(fam)), static_cast<double>(n),
                 static_cast<double>(comp.partner_state),
                 static_cast<double>(comp.group_mz_twice),
                 static_cast<double>(comp.multiplicity), comp.amplitude.real(),
                 comp.amplitude.imag(),
                 std::atan2(comp.amplitude.imag(), comp.amplitude.real())});
          }
        }
      }
      break;
    }
    case Experiment::simplify: {
      table.columns = {"j_hm",      "r",         "signal_re", "signal_im",
                       "oracle_re", "oracle_im", "deviation"};
      for (double j_hm : {spec.system.j_hm, 0.0}) {
        for (const auto& rec : simplify_records(spec, j_hm)) {
          table.rows.push_back({j_hm, static_cast<double>(rec.r),
                                rec.signal.real(), rec.signal.imag(),
                                rec.reference.real(), rec.reference.imag(),
                                std::abs(rec.signal - rec.reference)});
        }
      }
      break;
    }
  }
  return table;
}

std::string run_sweep(const SweepSpec& spec) {
  const Table table = run_experiment(spec);
  std::string path = spec.out.empty()
                         ? std::string(experiment_name(spec.experiment)) + ".csv"
                         : spec.out;
  if (!path.empty() && path.front() != '/') {
    if (const char* dir = std::getenv("CPSIM_OUT_DIR"); dir && *dir) {
      path = std::string(dir) + "/" + path;
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("out: cannot write '" + path + "'");
  }
  out << (spec.format == "json" ? emit_json(table) : emit_csv(table));
  return path;
}

MultipletMetrics multiplet_metrics(const coupling::SpinSystem& sys,
                                   pulses::Family coupling_family, int n_max,
                                   double damping_rate) {
  // j_ch is read back off the system: it is the observed-spin/partner coupling
  double j_ch = 0.0;
  for (int j = 1; j < sys.n_spins(); ++j) {
    j_ch = std::max(j_ch, std::abs(sys.couplings(0, j)));
  }
  const auto run = run_multiplet(sys, j_ch, coupling_family, n_max, damping_rate);

  MultipletMetrics metrics;
  metrics.duration_units_per_gate = run.units_per_gate;

  // unwrapped phase trajectory per component, keyed (partner_state, mz2)
  std::map<std::pair<int, int>, double> unwrapped;
  std::map<std::pair<int, int>, bool> started;

  for (int n = 1; n <= n_max; ++n) {
    const auto& comps = run.per_n[static_cast<size_t>(n - 1)];

    double wrapped = 0.0;
    double deviation = 0.0;
    for (int pstate = 0; pstate <= 1; ++pstate) {
      std::vector<double> phases;
      for (const auto& c : comps) {
        if (c.partner_state != pstate) continue;
        phases.push_back(std::arg(c.amplitude));
      }
      for (size_t a = 0; a < phases.size(); ++a) {
        for (size_t b = a + 1; b < phases.size(); ++b) {
          wrapped = std::max(wrapped, std::abs(wrap_pi(phases[a] - phases[b])));
        }
      }
    }
    for (const auto& c : comps) {
      const qcore::Complex ideal = ideal_component(n, c.partner_state);
      deviation = std::max(deviation, std::abs(c.amplitude - ideal));

      const double raw = std::arg(c.amplitude * std::conj(ideal));
      const auto key = std::make_pair(c.partner_state, c.group_mz_twice);
      if (!started[key]) {
        unwrapped[key] = raw;
        started[key] = true;
      } else {
        unwrapped[key] += wrap_pi(raw - unwrapped[key]);
      }
    }

    double spread = 0.0;
    for (int pstate = 0; pstate <= 1; ++pstate) {
      double lo = 0.0, hi = 0.0;
      bool first = true;
      for (const auto& [key, value] : unwrapped) {
        if (key.first != pstate) continue;
        if (first) {
          lo = hi = value;
          first = false;
        } else {
          lo = std::min(lo, value);
          hi = std::max(hi, value);
        }
      }
      spread = std::max(spread, hi - lo);
    }

    metrics.wrapped_spread.push_back(wrapped);
    metrics.unwrapped_spread.push_back(spread);
    metrics.max_deviation.push_back(deviation);
  }
  return metrics;
}

double simplify_deviation(const SweepSpec& spec, double j_hm) {
  double worst = 0.0;
  for (const auto& rec : simplify_records(spec, j_hm)) {
    worst = std::max(worst, std::abs(rec.signal - rec.reference));
  }
  return worst;
}

}  // namespace cpsim::harness
