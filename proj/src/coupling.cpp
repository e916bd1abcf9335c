#include "cpsim/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cpsim::coupling {

namespace {

const double kPi = std::acos(-1.0);

std::vector<int> spins_of_kind(const SpinSystem& sys, const std::string& kind) {
  std::vector<int> out;
  for (int i = 0; i < sys.n_spins(); ++i) {
    if (sys.kinds[static_cast<size_t>(i)] == kind) out.push_back(i);
  }
  if (out.empty()) {
    throw std::invalid_argument("spin system has no spin of kind '" + kind + "'");
  }
  return out;
}

}  // namespace

void validate(const SpinSystem& sys) {
  const int n = sys.n_spins();
  if (n < 1 || n > 6) {
    throw std::invalid_argument("spin system: need between 1 and 6 spins, got " +
                                std::to_string(n));
  }
  if (sys.couplings.rows() != n || sys.couplings.cols() != n) {
    std::ostringstream msg;
    msg << "spin system: coupling table is " << sys.couplings.rows() << "x"
        << sys.couplings.cols() << " but there are " << n << " spins";
    throw std::invalid_argument(msg.str());
  }
  for (int i = 0; i < n; ++i) {
    if (sys.couplings(i, i) != 0.0) {
      throw std::invalid_argument("spin system: coupling table diagonal must be zero");
    }
    for (int j = 0; j < n; ++j) {
      if (std::abs(sys.couplings(i, j) - sys.couplings(j, i)) > 1e-12) {
        throw std::invalid_argument("spin system: coupling table must be symmetric");
      }
      if (!std::isfinite(sys.couplings(i, j))) {
        throw std::invalid_argument("spin system: coupling table must be finite");
      }
    }
  }
}

SpinSystem two_spin_system(double j_hz) {
  SpinSystem sys;
  sys.kinds = {"1H", "13C"};
  sys.couplings = Eigen::MatrixXd::Zero(2, 2);
  sys.couplings(0, 1) = sys.couplings(1, 0) = j_hz;
  validate(sys);
  return sys;
}

SpinSystem alanine_system(double j_ch, double j_cm, double j_hm) {
  SpinSystem sys;
  sys.kinds = {"13C", "1H", "1Hm", "1Hm", "1Hm"};
  sys.couplings = Eigen::MatrixXd::Zero(5, 5);
  auto set = [&sys](int a, int b, double j) {
    sys.couplings(a, b) = sys.couplings(b, a) = j;
  };
  set(0, 1, j_ch);
  for (int m = 2; m < 5; ++m) {
    set(0, m, j_cm);
    set(1, m, j_hm);
  }
  validate(sys);
  return sys;
}

qcore::Unitary tilted_coupling_unitary(double theta, double phi) {
  const qcore::Matrix iz = qcore::spin_operator(2, 0, qcore::Axis::z);
  const qcore::Matrix sz = qcore::spin_operator(2, 1, qcore::Axis::z);
  const qcore::Matrix sx = qcore::spin_operator(2, 1, qcore::Axis::x);
  const qcore::Matrix h = 2.0 * (std::cos(phi) * iz * sz + std::sin(phi) * iz * sx);
  return qcore::hermitian_exponential(h, theta);
}

std::vector<CouplingElement> composite_coupling(pulses::Family family,
                                                double theta) {
  switch (family) {
    case pulses::Family::naive:
    case pulses::Family::BB1:
    case pulses::Family::NB1:
    case pulses::Family::PB1:
      break;
    default:
      throw std::invalid_argument(
          std::string("composite_coupling: family '") + pulses::family_name(family) +
          "' contains reversed rotations, which free evolution cannot realize");
  }
  const auto seq = pulses::make_sequence(family, theta, 0.0);
  std::vector<CouplingElement> out;
  out.reserve(seq.elements.size());
  for (const auto& e : seq.elements) out.push_back({e.theta, e.phase});
  return out;
}

std::vector<SequenceEvent> compile_coupling_element(const CouplingElement& e,
                                                    double j_hz) {
  if (!(j_hz > 0.0)) {
    throw std::invalid_argument("compile_coupling_element: coupling must be positive, got " +
                                std::to_string(j_hz));
  }
  if (!(e.theta > 0.0)) {
    throw std::invalid_argument(
        "compile_coupling_element: rotation angle must be positive to run as a delay, got " +
        std::to_string(e.theta));
  }
  // tilt the S spin's frame down, evolve under the bare coupling, tilt back:
  // exp(-i*phi*Sy) exp(-i*theta*2IzSz) exp(+i*phi*Sy), first factor on the
  // right acting first
  const double phi = pulses::normalize_phase(e.phase);
  std::vector<SequenceEvent> events;
  events.push_back(PulseEvent{1, phi, 3.0 * kPi / 2.0});
  events.push_back(DelayEvent{4.0 * e.theta / kPi});
  events.push_back(PulseEvent{1, phi, kPi / 2.0});
  return events;
}

qcore::Unitary coupling_error_propagator(
    const std::vector<CouplingElement>& elements, double f) {
  qcore::Unitary u = qcore::identity(4);
  for (const auto& e : elements) {
    u = tilted_coupling_unitary((1.0 + f) * e.theta, e.phase) * u;
  }
  return u;
}

qcore::Matrix system_hamiltonian(const SpinSystem& sys) {
  validate(sys);
  const int n = sys.n_spins();
  const int dim = 1 << n;
  qcore::Matrix h = qcore::Matrix::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (sys.couplings(i, j) == 0.0) continue;
      h += kPi * sys.couplings(i, j) * 2.0 *
           (qcore::spin_operator(n, i, qcore::Axis::z) *
            qcore::spin_operator(n, j, qcore::Axis::z));
    }
  }
  return h;
}

qcore::Unitary free_evolution(const SpinSystem& sys, double seconds) {
  if (seconds < 0.0) {
    throw std::invalid_argument("free_evolution: duration must be nonnegative, got " +
                                std::to_string(seconds));
  }
  return qcore::hermitian_exponential(system_hamiltonian(sys), seconds);
}

qcore::Unitary hard_pulse(const SpinSystem& sys, const std::string& kind,
                          double theta, double phase,
                          const pulses::ErrorModel& err) {
  validate(sys);
  const int n = sys.n_spins();
  const int dim = 1 << n;
  const double p = phase + err.epsilon + (theta < 0.0 ? kPi : 0.0);
  qcore::Matrix h = qcore::Matrix::Zero(dim, dim);
  for (int i : spins_of_kind(sys, kind)) {
    h += (1.0 + err.f) * (std::cos(p) * qcore::spin_operator(n, i, qcore::Axis::x) +
                          std::sin(p) * qcore::spin_operator(n, i, qcore::Axis::y)) +
         err.g * qcore::spin_operator(n, i, qcore::Axis::z);
  }
  return qcore::hermitian_exponential(h, std::abs(theta));
}

qcore::Unitary frame_rotation(const SpinSystem& sys, const std::string& kind,
                              double angle) {
  validate(sys);
  const int n = sys.n_spins();
  const int dim = 1 << n;
  qcore::Matrix h = qcore::Matrix::Zero(dim, dim);
  for (int i : spins_of_kind(sys, kind)) {
    h += qcore::spin_operator(n, i, qcore::Axis::z);
  }
  return qcore::hermitian_exponential(h, angle);
}

qcore::Unitary program_unitary(const std::vector<SequenceEvent>& events,
                               const SpinSystem& sys,
                               const std::vector<int>& slots,
                               double t_unit_seconds,
                               const pulses::ErrorModel& err) {
  validate(sys);
  if (!(t_unit_seconds > 0.0)) {
    throw std::invalid_argument("program_unitary: time unit must be positive");
  }
  auto resolve = [&](int slot) -> const std::string& {
    if (slot < 0 || slot >= static_cast<int>(slots.size())) {
      throw std::invalid_argument("program_unitary: event references slot " +
                                  std::to_string(slot) + " but only " +
                                  std::to_string(slots.size()) + " slots are mapped");
    }
    const int spin = slots[static_cast<size_t>(slot)];
    if (spin < 0 || spin >= sys.n_spins()) {
      throw std::invalid_argument("program_unitary: slot maps to spin " +
                                  std::to_string(spin) + " outside the system");
    }
    return sys.kinds[static_cast<size_t>(spin)];
  };

  const int dim = 1 << sys.n_spins();
  qcore::Unitary u = qcore::identity(dim);
  for (const auto& ev : events) {
    if (const auto* p = std::get_if<PulseEvent>(&ev)) {
      u = hard_pulse(sys, resolve(p->slot), p->theta, p->phase, err) * u;
    } else if (const auto* d = std::get_if<DelayEvent>(&ev)) {
      if (d->duration < 0.0) {
        throw std::invalid_argument("program_unitary: negative delay");
      }
      u = free_evolution(sys, d->duration * t_unit_seconds) * u;
    } else {
      const auto& fz = std::get<FrameZEvent>(ev);
      u = frame_rotation(sys, resolve(fz.slot), fz.angle) * u;
    }
  }
  return u;
}

double program_delay_units(const std::vector<SequenceEvent>& events) {
  double total = 0.0;
  for (const auto& ev : events) {
    if (const auto* d = std::get_if<DelayEvent>(&ev)) total += d->duration;
  }
  return total;
}

std::vector<MultipletComponent> multiplet_phases(const qcore::DensityMatrix& rho,
                                                 const SpinSystem& sys,
                                                 int observed) {
  validate(sys);
  const int n = sys.n_spins();
  if (observed < 0 || observed >= n) {
    throw std::invalid_argument("multiplet_phases: observed spin " +
                                std::to_string(observed) + " outside the system");
  }
  const int dim = 1 << n;
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("multiplet_phases: state dimension does not match system");
  }

  int partner = -1;
  double best = -1.0;
  for (int j = 0; j < n; ++j) {
    if (j == observed) continue;
    if (std::abs(sys.couplings(observed, j)) > best) {
      best = std::abs(sys.couplings(observed, j));
      partner = j;
    }
  }
  if (partner < 0) {
    throw std::invalid_argument("multiplet_phases: system has no second spin");
  }

  // equivalent-spin group: same kind and same couplings to the observed spin
  // and to the partner
  auto same = [](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
  };
  std::vector<std::vector<int>> groups;
  for (int j = 0; j < n; ++j) {
    if (j == observed || j == partner) continue;
    bool placed = false;
    for (auto& g : groups) {
      const int rep = g.front();
      if (sys.kinds[static_cast<size_t>(j)] == sys.kinds[static_cast<size_t>(rep)] &&
          same(sys.couplings(observed, j), sys.couplings(observed, rep)) &&
          same(sys.couplings(partner, j), sys.couplings(partner, rep))) {
        g.push_back(j);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({j});
  }
  std::vector<int> group;
  for (const auto& g : groups) {
    if (g.size() >= 2 && g.size() > group.size()) group = g;
  }

  // bit index of a spin in the basis label (spin 0 is the most significant)
  auto spin_bit = [n](int spin, int state) { return (state >> (n - 1 - spin)) & 1; };

  const qcore::Matrix raise = qcore::raising_operator(n, observed);
  std::vector<MultipletComponent> out;
  const int m = static_cast<int>(group.size());
  for (int pstate = 0; pstate <= 1; ++pstate) {
    for (int mz2 = m; mz2 >= -m; mz2 -= 2) {
      MultipletComponent comp;
      comp.partner_state = pstate;
      comp.group_mz_twice = mz2;
      // diagonal projector onto the (partner, group) configuration
      qcore::Matrix proj = qcore::Matrix::Zero(dim, dim);
      for (int s = 0; s < dim; ++s) {
        if (spin_bit(partner, s) != pstate) continue;
        int up = 0;
        for (int gsp : group) up += 1 - spin_bit(gsp, s);
        if (up - (m - up) != mz2) continue;
        proj(s, s) = 1.0;
      }
      // weight = number of group configurations with this z projection,
      // i.e. C(m, ups) for ups spins up
      const int ups = (m + mz2) / 2;
      long long ways = 1;
      for (int i = 0; i < ups; ++i) ways = ways * (m - i) / (i + 1);
      comp.multiplicity = static_cast<int>(ways);
      const qcore::Complex raw = 2.0 * (rho * (raise * proj)).trace();
      comp.amplitude = raw * std::pow(2.0, n - 1) / static_cast<double>(ways);
      out.push_back(comp);
    }
  }
  return out;
}

}  // namespace cpsim::coupling
