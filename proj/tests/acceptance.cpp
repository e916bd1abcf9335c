// Acceptance gate: one line per criterion, exit 0 only if all pass.
// Runs against the library plus (for the last criterion) the installed CLI,
// whose path is argv[1].
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "cpsim/counting.hpp"
#include "cpsim/coupling.hpp"
#include "cpsim/harness.hpp"
#include "cpsim/pulses.hpp"
#include "cpsim/qcore.hpp"

using namespace cpsim;

namespace {

const double kPi = std::acos(-1.0);

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double v, int digits = 6) {
  std::ostringstream ss;
  ss << std::setprecision(digits) << v;
  return ss.str();
}

double naive_infidelity(double theta, double f) {
  const auto seq = pulses::make_sequence(pulses::Family::naive, theta, 0.0);
  pulses::ErrorModel err;
  err.f = f;
  return 1.0 - qcore::propagator_fidelity(pulses::sequence_propagator(seq, err),
                                          qcore::rotation_unitary(theta, 0.0));
}

double family_infidelity(pulses::Family fam, double theta, double f) {
  const auto seq = pulses::make_sequence(fam, theta, 0.0);
  pulses::ErrorModel err;
  err.f = f;
  return 1.0 - qcore::propagator_fidelity(pulses::sequence_propagator(seq, err),
                                          qcore::rotation_unitary(theta, 0.0));
}

Outcome criterion_plain_error_law() {
  double worst = 0.0;
  for (double theta : {kPi / 2.0, kPi}) {
    for (int i = 0; i <= 200; ++i) {
      const double f = -1.0 + 0.01 * i;
      const double fid = 1.0 - naive_infidelity(theta, f);
      worst = std::max(worst, std::abs(fid - std::cos(f * theta / 2.0)));
    }
  }
  Outcome out;
  out.pass = worst <= 1e-10;
  out.detail = "plain-pulse fidelity matches cos(f*theta/2) to " + num(worst, 3) +
               " across f in [-1,1] for 90 and 180 degree targets (tol 1e-10)";
  return out;
}

Outcome criterion_sixth_order_coefficient() {
  const double coeff = 45.0 * std::pow(kPi, 6) / 9216.0;
  double worst_rel = 0.0;
  for (int i = 0; i <= 16; ++i) {
    const double f = 0.02 + 0.005 * i;
    const double ratio = family_infidelity(pulses::Family::BB1, kPi, f) /
                         std::pow(f, 6);
    worst_rel = std::max(worst_rel, std::abs(ratio - coeff) / coeff);
  }
  Outcome out;
  out.pass = worst_rel <= 0.02;
  out.detail = "BB1 180-degree infidelity / f^6 stays within " +
               num(100.0 * worst_rel, 3) + "% of " + num(coeff, 17) +
               " for f in [0.02, 0.1] (tol 2%)";
  return out;
}

Outcome criterion_tilt_and_compilation() {
  const auto seq = pulses::make_sequence(pulses::Family::BB1, kPi / 2.0, 0.0);
  const double tilt_deg = seq.elements[1].phase * 180.0 / kPi;
  const double expected_deg = 97.180755781458288;
  const bool tilt_ok = std::abs(tilt_deg - expected_deg) <= 0.01;

  const auto elements =
      coupling::composite_coupling(pulses::Family::BB1, kPi / 2.0);
  std::vector<coupling::SequenceEvent> events;
  std::vector<double> delays;
  for (const auto& e : elements) {
    for (const auto& ev : coupling::compile_coupling_element(e, 1.0)) {
      events.push_back(ev);
      if (const auto* d = std::get_if<coupling::DelayEvent>(&ev)) {
        delays.push_back(d->duration);
      }
    }
  }
  const std::vector<double> expected_delays = {1.0, 4.0, 8.0, 4.0, 1.0};
  bool delays_ok = delays.size() == expected_delays.size();
  for (size_t i = 0; delays_ok && i < delays.size(); ++i) {
    delays_ok = std::abs(delays[i] - expected_delays[i]) <= 1e-9;
  }

  const auto sys = coupling::two_spin_system(1.0);
  const qcore::Matrix u = coupling::program_unitary(events, sys, {0, 1},
                                                    1.0 / 4.0, pulses::ErrorModel{});
  const double fid = qcore::propagator_fidelity(
      u, coupling::tilted_coupling_unitary(kPi / 2.0, 0.0));
  const bool program_ok = fid >= 1.0 - 1e-10;

  Outcome out;
  out.pass = tilt_ok && delays_ok && program_ok;
  out.detail = "90-degree BB1 tilt " + num(tilt_deg, 12) + " deg (expect " +
               num(expected_deg, 12) + "), coupling delays 1:4:8:4:1 " +
               (delays_ok ? "ok" : "wrong") + ", compiled program fidelity " +
               num(fid, 12);
  return out;
}

Outcome criterion_family_ordering() {
  struct Golden {
    double f, naive, bb1, nb1, pb1, b4;
  };
  const Golden goldens[] = {
      {0.05, 0.00077096375927732108, 1.4398728875875122e-08,
       0.0030228273782477721, 2.1211333744997063e-07, 3.4661162828797387e-13},
      {0.1, 0.0030826662668724802, 9.1355950815330544e-07,
       0.011934094953424568, 1.3161201790956589e-05, 3.3974556501448205e-10},
      {0.2, 0.012311659404862563, 5.6473934507028645e-05, 0.045313051313861097,
       0.00074407668335330079, 3.2065162780536838e-07},
  };
  bool ok = true;
  std::ostringstream detail;
  for (const auto& g : goldens) {
    const double plain = family_infidelity(pulses::Family::naive, kPi / 2.0, g.f);
    const double bb1 = family_infidelity(pulses::Family::BB1, kPi / 2.0, g.f);
    const double nb1 = family_infidelity(pulses::Family::NB1, kPi / 2.0, g.f);
    const double pb1 = family_infidelity(pulses::Family::PB1, kPi / 2.0, g.f);
    const double b4 = family_infidelity(pulses::Family::B4, kPi / 2.0, g.f);
    ok = ok && bb1 < plain && nb1 > plain && pb1 < plain && b4 <= bb1;
    auto close = [](double a, double b) {
      const double tol = (b < 1e-10) ? 0.05 : 1e-6;
      return std::abs(a - b) <= tol * b;
    };
    ok = ok && close(plain, g.naive) && close(bb1, g.bb1) && close(nb1, g.nb1) &&
         close(pb1, g.pb1) && close(b4, g.b4);
    if (g.f == 0.1) {
      detail << "at f=0.1: plain " << num(plain, 6) << ", BB1 " << num(bb1, 6)
             << ", NB1 " << num(nb1, 6) << ", PB1 " << num(pb1, 6) << ", B4 "
             << num(b4, 6);
    }
  }
  Outcome out;
  out.pass = ok;
  out.detail = "broadband < plain < narrowband and B4 <= BB1 at f in "
               "{0.05, 0.1, 0.2} with pinned values; " +
               detail.str();
  return out;
}

Outcome criterion_excitation_profile() {
  const harness::Grid grid{-1.0, 1.0, 0.01};
  const auto plain = harness::excitation_profile(pulses::Family::naive, grid);
  const auto pb1 = harness::excitation_profile(pulses::Family::PB1, grid);
  const auto nb1 = harness::excitation_profile(pulses::Family::NB1, grid);

  double worst_law = 0.0;
  for (const auto& [f, amp] : plain) {
    worst_law = std::max(worst_law, std::abs(amp - std::cos(f * kPi / 2.0)));
  }
  double pb1_min_inside = 2.0;
  for (const auto& [f, amp] : pb1) {
    if (std::abs(f) <= 0.2 + 1e-12) pb1_min_inside = std::min(pb1_min_inside, amp);
  }
  const double pb1_far = pb1[10].second;    // f = -0.9
  const double plain_far = plain[10].second;
  const double nb1_edges =
      std::max(std::abs(nb1.front().second), std::abs(nb1.back().second));

  Outcome out;
  out.pass = worst_law <= 1e-10 && pb1_min_inside >= 0.99 &&
             pb1_far < plain_far && nb1_edges <= 1e-10;
  out.detail = "plain profile follows cos(f*pi/2) to " + num(worst_law, 3) +
               "; PB1 min inside |f|<=0.2 is " + num(pb1_min_inside, 10) +
               "; at f=-0.9 PB1 " + num(pb1_far, 6) + " < plain " +
               num(plain_far, 6) + "; NB1 edge amplitude " + num(nb1_edges, 3);
  return out;
}

Outcome criterion_counting_signals() {
  bool match_ok = true;
  double worst = 0.0;
  for (int k : {0, 1, 2}) {
    counting::CountingProblem p;
    p.k = k;
    const auto reference =
        counting::matrix_counting_signal(p, counting::default_assignment(p));
    counting::GateBackend backend;
    backend.one_qubit = pulses::Family::BB1;
    backend.coupling = pulses::Family::naive;
    const auto recs = counting::run_counting(p, backend);
    for (size_t i = 0; i < recs.size(); ++i) {
      worst = std::max(worst,
                       std::abs(recs[i].amplitude - reference[i].amplitude));
    }
  }
  match_ok = worst <= 1e-8;

  counting::CountingProblem p;
  auto rate_for = [&](pulses::Family fam) {
    counting::GateBackend backend;
    backend.one_qubit = fam;
    backend.coupling = pulses::Family::naive;
    backend.error.f = 0.1;
    return counting::envelope_decay_rate(counting::run_counting(p, backend));
  };
  const double rate_plain = rate_for(pulses::Family::naive);
  const double rate_bb1 = rate_for(pulses::Family::BB1);
  const bool envelope_ok =
      rate_bb1 < rate_plain &&
      std::abs(rate_plain - 0.0025090894960835735) <= 1e-6 &&
      std::abs(rate_bb1 - 5.1453142636679306e-05) <= 1e-8;

  Outcome out;
  out.pass = match_ok && envelope_ok;
  out.detail = "zero-error pulse signals match the matrix signals to " +
               num(worst, 3) + " for k in {0,1,2}; at f=0.1 envelope decays at " +
               num(rate_plain, 6) + " per iteration plain vs " + num(rate_bb1, 6) +
               " with BB1 pulses";
  return out;
}

Outcome criterion_multiplet_phases() {
  const auto sys = coupling::alanine_system(145.0, 4.5, 7.3);
  const auto plain = harness::multiplet_metrics(sys, pulses::Family::naive, 10, 0.0);
  const auto bb1 = harness::multiplet_metrics(sys, pulses::Family::BB1, 10, 0.0);
  const auto nb1 = harness::multiplet_metrics(sys, pulses::Family::NB1, 10, 0.0);
  const auto pb1 = harness::multiplet_metrics(sys, pulses::Family::PB1, 10, 0.0);

  const double s_plain = plain.unwrapped_spread[9];
  const double s_bb1 = bb1.unwrapped_spread[9];
  const double s_nb1 = nb1.unwrapped_spread[9];
  const double s_pb1 = pb1.unwrapped_spread[9];
  const bool chain_ok = s_bb1 < s_plain && s_plain < s_nb1;

  const auto bb1_damped =
      harness::multiplet_metrics(sys, pulses::Family::BB1, 10, 0.002);
  const auto pb1_damped =
      harness::multiplet_metrics(sys, pulses::Family::PB1, 10, 0.002);
  const bool damped_ok =
      pb1_damped.max_deviation[9] > bb1_damped.max_deviation[9];

  const double ratio = s_pb1 / s_bb1;
  const bool ratio_ok = ratio <= 2.0;

  Outcome out;
  out.pass = chain_ok && damped_ok && ratio_ok;
  out.detail = "after 10 gates the phase spreads order BB1 " + num(s_bb1, 6) +
               " < plain " + num(s_plain, 6) + " < NB1 " + num(s_nb1, 6) +
               (chain_ok ? " (ok)" : " (WRONG)") +
               "; damped deviations PB1 " + num(pb1_damped.max_deviation[9], 6) +
               " > BB1 " + num(bb1_damped.max_deviation[9], 6) +
               (damped_ok ? " (ok)" : " (WRONG)") + "; PB1/BB1 spread ratio " +
               num(ratio, 10) +
               (ratio_ok ? " within 2.0" : " exceeds the required 2.0");
  return out;
}

Outcome criterion_simplification() {
  const auto spec = harness::default_spec(harness::Experiment::simplify);
  const double with_hm = harness::simplify_deviation(spec, 7.3);
  const double without_hm = harness::simplify_deviation(spec, 0.0);
  Outcome out;
  out.pass = with_hm > 0.1 && without_hm < 0.1;
  out.detail = "five-spin counting deviates from the two-spin reference by " +
               num(with_hm, 6) + " with the 7.3 Hz proton-proton coupling and " +
               num(without_hm, 6) + " without it (threshold 0.1)";
  return out;
}

Outcome criterion_cli_determinism(const std::string& cli) {
  Outcome out;
  if (cli.empty()) {
    out.detail = "no CLI path supplied";
    return out;
  }
  const char* config = "acceptance_cli.json";
  {
    std::ofstream cfg(config);
    cfg << R"({
  "schema_version": 1,
  "experiment": "counting",
  "k": 1,
  "r_max": 20,
  "one_qubit": "BB1",
  "coupling": "naive",
  "f_min": 0.0,
  "f_max": 0.05,
  "f_step": 0.05
})";
  }
  auto invoke = [&](const std::string& out_name) {
    const std::string cmd = "\"" + cli + "\" counting --config " + config +
                            " --out " + out_name + " > /dev/null";
    return std::system(cmd.c_str());
  };
  if (invoke("acceptance_out_1.csv") != 0 || invoke("acceptance_out_2.csv") != 0) {
    out.detail = "CLI invocation failed";
    return out;
  }
  auto slurp = [](const char* path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string a = slurp("acceptance_out_1.csv");
  const std::string b = slurp("acceptance_out_2.csv");
  out.pass = !a.empty() && a == b;
  out.detail = "two CLI runs of the same config wrote " +
               std::to_string(a.size()) + " bytes each, " +
               (out.pass ? "byte-identical" : "DIFFERENT");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  struct Criterion {
    const char* name;
    double budget_seconds;  // 0 = no budget
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"plain-error-law", 1.0, criterion_plain_error_law},
      {"sixth-order-coefficient", 1.0, criterion_sixth_order_coefficient},
      {"tilt-and-compilation", 0.0, criterion_tilt_and_compilation},
      {"family-ordering", 5.0, criterion_family_ordering},
      {"excitation-profile", 0.0, criterion_excitation_profile},
      {"counting-signals", 30.0, criterion_counting_signals},
      {"multiplet-phases", 120.0, criterion_multiplet_phases},
      {"five-spin-simplification", 0.0, criterion_simplification},
      {"cli-determinism", 0.0,
       [&cli] { return criterion_cli_determinism(cli); }},
  };

  int passed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.budget_seconds > 0.0 && elapsed > c.budget_seconds) {
      out.pass = false;
      out.detail += " [exceeded " + num(c.budget_seconds, 3) + "s budget: " +
                    num(elapsed, 3) + "s]";
    }
    if (out.pass) ++passed;
    std::printf("ACCEPTANCE %d %s %s: %s\n", index, out.pass ? "PASS" : "FAIL",
                c.name, out.detail.c_str());
  }
  std::printf("ACCEPTANCE SUMMARY %d/9 passed\n", passed);
  return passed == 9 ? 0 : 1;
}
