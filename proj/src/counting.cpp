#include "cpsim/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cpsim::counting {

namespace {

const double kPi = std::acos(-1.0);

int register_dim(const CountingProblem& p) { return 1 << p.n_bits; }

// diagonal phases lambda with exp(-i*lambda) = +-1 per entry
double phase_for_sign(double entry) { return entry > 0.0 ? 0.0 : -kPi; }

qcore::Matrix real_hadamard(int n_bits) {
  qcore::Matrix h1(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h1 << s, s, s, -s;
  qcore::Matrix h = h1;
  for (int i = 1; i < n_bits; ++i) h = qcore::tensor(h, h1);
  return h;
}

void append_family_pulse(std::vector<coupling::SequenceEvent>& events, int slot,
                         pulses::Family family, double theta, double phase) {
  const auto seq = pulses::make_sequence(family, theta, phase);
  for (const auto& e : seq.elements) {
    events.push_back(coupling::PulseEvent{slot, e.theta, e.phase});
  }
}

// Events realizing the diagonal two-spin gate diag(exp(-i*lambda_ss')) on
// (slot 0, slot 1), up to a global phase: a zz coupling rotation plus one
// frame z shift per spin. The three factors are diagonal and commute; the
// emission order is fixed for determinism.
void append_controlled_phase(std::vector<coupling::SequenceEvent>& events,
                             const double lambda[4], pulses::Family coupling_family) {
  const double beta = (lambda[0] + lambda[1] - lambda[2] - lambda[3]) / 2.0;
  const double gamma = (lambda[0] - lambda[1] + lambda[2] - lambda[3]) / 2.0;
  double alpha = (lambda[0] - lambda[1] - lambda[2] + lambda[3]) / 2.0;
  const double tol = 1e-12;
  if (alpha < -tol) alpha += 2.0 * kPi;  // coupling rotations run forward only
  if (alpha > tol) {
    for (const auto& elem : coupling::composite_coupling(coupling_family, alpha)) {
      for (auto& ev : coupling::compile_coupling_element(elem, 1.0)) {
        events.push_back(ev);
      }
    }
  }
  if (std::abs(gamma) > tol) events.push_back(coupling::FrameZEvent{1, gamma});
  if (std::abs(beta) > tol) events.push_back(coupling::FrameZEvent{0, beta});
}

std::vector<coupling::SequenceEvent> preparation_events(const GateBackend& backend) {
  std::vector<coupling::SequenceEvent> events;
  append_family_pulse(events, 0, backend.one_qubit, kPi / 2.0, kPi / 2.0);
  append_family_pulse(events, 1, backend.one_qubit, kPi / 2.0, kPi / 2.0);
  return events;
}

std::vector<coupling::SequenceEvent> iteration_events(const CountingProblem& problem,
                                                      const GateBackend& backend) {
  const auto which_f = default_assignment(problem);
  std::vector<coupling::SequenceEvent> events;

  // controlled Uf: diag(1, 1, uf(0), uf(1)) over |observed, search>
  double lam_f[4] = {0.0, 0.0,
                     phase_for_sign(which_f[0] != 0 ? 1.0 : -1.0),
                     phase_for_sign(which_f[1] != 0 ? 1.0 : -1.0)};
  append_controlled_phase(events, lam_f, backend.coupling);

  append_family_pulse(events, 1, backend.one_qubit, kPi / 2.0, 3.0 * kPi / 2.0);

  // controlled U0: diag(1, 1, -1, 1)
  double lam_0[4] = {0.0, 0.0, -kPi, 0.0};
  append_controlled_phase(events, lam_0, backend.coupling);

  append_family_pulse(events, 1, backend.one_qubit, kPi / 2.0, kPi / 2.0);
  return events;
}

}  // namespace

void validate(const CountingProblem& problem) {
  if (problem.n_bits < 1 || problem.n_bits > 3) {
    throw std::invalid_argument("counting problem: n_bits must be in [1, 3], got " +
                                std::to_string(problem.n_bits));
  }
  const int n = register_dim(problem);
  if (problem.k < 0 || problem.k > n) {
    throw std::invalid_argument("counting problem: k must be in [0, " +
                                std::to_string(n) + "], got " +
                                std::to_string(problem.k));
  }
  if (problem.r_max < 0 || problem.r_max > 10000) {
    throw std::invalid_argument("counting problem: r_max must be in [0, 10000], got " +
                                std::to_string(problem.r_max));
  }
}

std::vector<int> default_assignment(const CountingProblem& problem) {
  validate(problem);
  const int n = register_dim(problem);
  std::vector<int> f(static_cast<size_t>(n), 0);
  for (int x = n - problem.k; x < n; ++x) f[static_cast<size_t>(x)] = 1;
  return f;
}

qcore::Unitary oracle_unitary(const CountingProblem& problem,
                              const std::vector<int>& which_f) {
  validate(problem);
  const int n = register_dim(problem);
  if (static_cast<int>(which_f.size()) != n) {
    throw std::invalid_argument("oracle: assignment covers " +
                                std::to_string(which_f.size()) + " inputs, expected " +
                                std::to_string(n));
  }
  int ones = 0;
  for (int v : which_f) {
    if (v != 0 && v != 1) {
      throw std::invalid_argument("oracle: assignment entries must be 0 or 1");
    }
    ones += v;
  }
  if (ones != problem.k) {
    throw std::invalid_argument("oracle: assignment marks " + std::to_string(ones) +
                                " inputs but k = " + std::to_string(problem.k));
  }
  qcore::Matrix u = qcore::Matrix::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    u(x, x) = (which_f[static_cast<size_t>(x)] != 0) ? 1.0 : -1.0;
  }
  return u;
}

qcore::Unitary zero_state_oracle(const CountingProblem& problem) {
  validate(problem);
  const int n = register_dim(problem);
  qcore::Matrix u = qcore::Matrix::Identity(n, n);
  u(0, 0) = -1.0;
  return u;
}

qcore::Unitary grover_iterate_matrix(const CountingProblem& problem,
                                     const std::vector<int>& which_f) {
  const qcore::Matrix h = real_hadamard(problem.n_bits);
  return h * zero_state_oracle(problem) * h * oracle_unitary(problem, which_f);
}

double grover_eigenphase(const CountingProblem& problem) {
  validate(problem);
  const double n = static_cast<double>(register_dim(problem));
  return 2.0 * std::asin(std::sqrt(static_cast<double>(problem.k) / n));
}

std::vector<SignalRecord> matrix_counting_signal(const CountingProblem& problem,
                                                 const std::vector<int>& which_f) {
  const qcore::Unitary g = grover_iterate_matrix(problem, which_f);
  Eigen::VectorXcd psi0 = real_hadamard(problem.n_bits).col(0);
  Eigen::VectorXcd psi = psi0;
  std::vector<SignalRecord> out;
  out.reserve(static_cast<size_t>(problem.r_max) + 1);
  for (int r = 0; r <= problem.r_max; ++r) {
    if (r > 0) psi = g * psi;
    SignalRecord rec;
    rec.r = r;
    rec.amplitude = psi0.dot(psi);  // conjugates psi0
    out.push_back(rec);
  }
  return out;
}

std::vector<coupling::SequenceEvent> counting_pulse_program(
    const CountingProblem& problem, const GateBackend& backend, int r) {
  validate(problem);
  if (problem.n_bits != 1) {
    throw std::invalid_argument(
        "counting pulse program: built for a 1-bit register, got n_bits = " +
        std::to_string(problem.n_bits));
  }
  if (r < 0) {
    throw std::invalid_argument("counting pulse program: r must be nonnegative");
  }
  auto events = preparation_events(backend);
  const auto gadget = iteration_events(problem, backend);
  for (int i = 0; i < r; ++i) {
    events.insert(events.end(), gadget.begin(), gadget.end());
  }
  return events;
}

std::vector<SignalRecord> run_counting(const CountingProblem& problem,
                                       const GateBackend& backend) {
  const auto sys = coupling::two_spin_system(145.0);
  return run_counting(problem, backend, sys, 0, 1, 145.0);
}

std::vector<SignalRecord> run_counting(const CountingProblem& problem,
                                       const GateBackend& backend,
                                       const coupling::SpinSystem& sys,
                                       int probe, int search, double j_ref) {
  validate(problem);
  coupling::validate(sys);
  if (problem.n_bits != 1) {
    throw std::invalid_argument(
        "run_counting: the pulse realization needs a 1-bit register");
  }
  const int n = sys.n_spins();
  if (probe < 0 || probe >= n || search < 0 || search >= n || probe == search) {
    throw std::invalid_argument("run_counting: probe and search must be distinct spins");
  }
  if (!(j_ref > 0.0)) {
    throw std::invalid_argument("run_counting: reference coupling must be positive");
  }
  if (backend.damping_rate < 0.0) {
    throw std::invalid_argument("run_counting: damping rate must be nonnegative");
  }

  const std::vector<int> slots = {probe, search};
  const double t_unit = 1.0 / (4.0 * j_ref);

  // probe and search start in |0>, spectators maximally mixed
  qcore::Matrix rho = qcore::Matrix::Ones(1, 1);
  for (int i = 0; i < n; ++i) {
    qcore::Matrix local;
    if (i == probe || i == search) {
      local = qcore::Matrix::Zero(2, 2);
      local(0, 0) = 1.0;
    } else {
      local = 0.5 * qcore::identity(2);
    }
    rho = qcore::tensor(rho, local);
  }

  const auto prep = preparation_events(backend);
  const auto gadget = iteration_events(problem, backend);
  const qcore::Unitary u_prep =
      coupling::program_unitary(prep, sys, slots, t_unit, backend.error);
  const qcore::Unitary u_gadget =
      coupling::program_unitary(gadget, sys, slots, t_unit, backend.error);
  const double gadget_units = coupling::program_delay_units(gadget);

  const qcore::Matrix detect = qcore::raising_operator(n, probe);
  rho = qcore::evolve_state(rho, u_prep);

  std::vector<SignalRecord> out;
  out.reserve(static_cast<size_t>(problem.r_max) + 1);
  for (int r = 0; r <= problem.r_max; ++r) {
    if (r > 0) rho = qcore::evolve_state(rho, u_gadget);
    SignalRecord rec;
    rec.r = r;
    rec.amplitude = 2.0 * (rho * detect).trace() *
                    std::exp(-backend.damping_rate * gadget_units * r);
    out.push_back(rec);
  }
  return out;
}

double envelope_decay_rate(const std::vector<SignalRecord>& records) {
  // peak magnitude per disjoint four-iteration window starting at r = 0,
  // log-linear fit against the window centers
  const int r_top = std::min<int>(static_cast<int>(records.size()) - 1, 20);
  const int windows = (r_top + 1) / 4;
  std::vector<double> xs, ys;
  for (int w = 0; w < windows; ++w) {
    double peak = 0.0;
    for (int r = 4 * w; r <= std::min(4 * w + 3, r_top); ++r) {
      peak = std::max(peak, std::abs(records[static_cast<size_t>(r)].amplitude));
    }
    xs.push_back(4.0 * w + 1.5);
    ys.push_back(std::log(std::max(peak, 1e-300)));
  }
  if (xs.size() < 2) {
    throw std::invalid_argument("envelope_decay_rate: need at least 8 iterations");
  }
  const double n = static_cast<double>(xs.size());
  const double xbar = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double ybar = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - xbar) * (ys[i] - ybar);
    den += (xs[i] - xbar) * (xs[i] - xbar);
  }
  return -num / den;
}

double dominant_frequency(const std::vector<SignalRecord>& records) {
  const int m = static_cast<int>(records.size());
  if (m < 2) {
    throw std::invalid_argument("dominant_frequency: need at least 2 samples");
  }
  int best = 0;
  double best_mag = -1.0;
  for (int freq = 0; freq < m; ++freq) {
    qcore::Complex sum(0.0, 0.0);
    for (int r = 0; r < m; ++r) {
      const double arg = -2.0 * kPi * freq * r / m;
      sum += records[static_cast<size_t>(r)].amplitude *
             qcore::Complex(std::cos(arg), std::sin(arg));
    }
    if (std::abs(sum) > best_mag) {
      best_mag = std::abs(sum);
      best = freq;
    }
  }
  return 2.0 * kPi * std::min(best, m - best) / m;
}

}  // namespace cpsim::counting
