#include "cpsim/pulses.hpp"

#include <cmath>
#include <stdexcept>

namespace cpsim::pulses {

namespace {

const double pi = std::acos(-1.0);

void require_gate_angle(double theta, const char* who) {
  if (!(theta > 0.0) || theta > 2.0 * pi || !std::isfinite(theta)) {
    throw std::invalid_argument(std::string(who) + ": theta must lie in (0, 2pi], got " +
                                std::to_string(theta));
  }
}

PulseElement elem(double theta, double phase) {
  return PulseElement{theta, normalize_phase(phase)};
}

CompositeSequence wrap(Family f, double theta, double phi, std::vector<PulseElement> els) {
  CompositeSequence seq;
  seq.elements = std::move(els);
  seq.family = f;
  seq.target_theta = theta;
  seq.target_phi = phi;
  return seq;
}

}  // namespace

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams = {Family::naive, Family::BB1, Family::NB1,
                                           Family::PB1,   Family::B4,  Family::P4};
  return fams;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::naive: return "naive";
    case Family::BB1: return "BB1";
    case Family::NB1: return "NB1";
    case Family::PB1: return "PB1";
    case Family::B4: return "B4";
    case Family::P4: return "P4";
  }
  throw std::invalid_argument("unknown family value");
}

Family family_from_name(const std::string& name) {
  for (Family f : all_families()) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown family \"" + name +
                              "\" (valid: naive, BB1, NB1, PB1, B4, P4)");
}

double normalize_phase(double phase) {
  double p = std::fmod(phase, 2.0 * pi);
  if (p < 0.0) p += 2.0 * pi;
  if (p >= 2.0 * pi) p = 0.0;
  return p;
}

CompositeSequence naive_pulse(double theta, double phi) {
  require_gate_angle(theta, "naive_pulse");
  return wrap(Family::naive, theta, phi, {elem(theta, phi)});
}

CompositeSequence bb1(double theta, double phi) {
  require_gate_angle(theta, "bb1");
  const double psi = std::acos(-theta / (4.0 * pi));
  return wrap(Family::BB1, theta, phi,
              {elem(theta / 2, phi), elem(pi, phi + psi), elem(2 * pi, phi + 3 * psi),
               elem(pi, phi + psi), elem(theta / 2, phi)});
}

CompositeSequence nb1(double theta, double phi) {
  require_gate_angle(theta, "nb1");
  const double psi = std::acos(-theta / (4.0 * pi));
  return wrap(Family::NB1, theta, phi,
              {elem(theta / 2, phi), elem(pi, phi + psi), elem(2 * pi, phi - psi),
               elem(pi, phi + psi), elem(theta / 2, phi)});
}

CompositeSequence pb1(double theta, double phi) {
  require_gate_angle(theta, "pb1");
  const double psi = std::acos(-theta / (8.0 * pi));
  return wrap(Family::PB1, theta, phi,
              {elem(theta / 2, phi), elem(2 * pi, phi + psi), elem(4 * pi, phi - psi),
               elem(2 * pi, phi + psi), elem(theta / 2, phi)});
}

CompositeSequence b4(double theta, double phi) {
  require_gate_angle(theta, "b4");
  const double psi = std::acos(-theta / (24.0 * pi));
  std::vector<PulseElement> els;
  els.push_back(elem(theta / 2, phi));
  auto bracket = [&] {
    for (int rep = 0; rep < 4; ++rep) {
      els.push_back(elem(pi, phi + psi));
      els.push_back(elem(2 * pi, phi + 3 * psi));
      els.push_back(elem(pi, phi + psi));
    }
  };
  bracket();
  // central block: reversed rotations, stored with signed angles
  els.push_back(elem(-2 * pi, phi + psi));
  els.push_back(elem(-4 * pi, phi - psi));
  els.push_back(elem(-2 * pi, phi + psi));
  bracket();
  els.push_back(elem(theta / 2, phi));
  return wrap(Family::B4, theta, phi, std::move(els));
}

CompositeSequence p4(double theta, double phi) {
  require_gate_angle(theta, "p4");
  const double psi = std::acos(-theta / (48.0 * pi));
  std::vector<PulseElement> els;
  els.push_back(elem(theta / 2, phi));
  auto bracket = [&] {
    for (int rep = 0; rep < 4; ++rep) {
      els.push_back(elem(2 * pi, phi + psi));
      els.push_back(elem(4 * pi, phi - psi));
      els.push_back(elem(2 * pi, phi + psi));
    }
  };
  bracket();
  els.push_back(elem(-4 * pi, phi + psi));
  els.push_back(elem(-8 * pi, phi - psi));
  els.push_back(elem(-4 * pi, phi + psi));
  bracket();
  els.push_back(elem(theta / 2, phi));
  return wrap(Family::P4, theta, phi, std::move(els));
}

CompositeSequence make_sequence(Family f, double theta, double phi) {
  switch (f) {
    case Family::naive: return naive_pulse(theta, phi);
    case Family::BB1: return bb1(theta, phi);
    case Family::NB1: return nb1(theta, phi);
    case Family::PB1: return pb1(theta, phi);
    case Family::B4: return b4(theta, phi);
    case Family::P4: return p4(theta, phi);
  }
  throw std::invalid_argument("unknown family value");
}

CompositeSequence canonicalize(const CompositeSequence& seq) {
  CompositeSequence out = seq;
  for (PulseElement& e : out.elements) {
    if (e.theta < 0.0) {
      e.theta = -e.theta;
      e.phase = normalize_phase(e.phase + pi);
    }
  }
  return out;
}

qcore::Unitary element_propagator(const PulseElement& e, const ErrorModel& err) {
  const double p = e.phase + err.epsilon + (e.theta < 0.0 ? pi : 0.0);
  const qcore::Matrix h =
      (1.0 + err.f) * (std::cos(p) * qcore::single_spin(qcore::Axis::x) +
                       std::sin(p) * qcore::single_spin(qcore::Axis::y)) +
      err.g * qcore::single_spin(qcore::Axis::z);
  return qcore::hermitian_exponential(h, std::abs(e.theta));
}

qcore::Unitary sequence_propagator(const CompositeSequence& seq, const ErrorModel& err) {
  qcore::Unitary u = qcore::identity(2);
  for (const PulseElement& e : seq.elements) {
    u = element_propagator(e, err) * u;
  }
  return u;
}

std::optional<double> analytic_fidelity(Family f, double theta, double f_error) {
  switch (f) {
    case Family::naive:
      return std::cos(f_error * theta / 2.0);
    case Family::BB1: {
      const double t2 = theta * theta;
      const double p2 = pi * pi;
      const double coeff = (32.0 * p2 * p2 * t2 + 14.0 * p2 * t2 * t2 - t2 * t2 * t2) / 9216.0;
      return 1.0 - std::pow(f_error, 6) * coeff;
    }
    default:
      return std::nullopt;
  }
}

double nominal_duration(const CompositeSequence& seq) {
  double sum = 0.0;
  for (const PulseElement& e : seq.elements) sum += std::abs(e.theta);
  return sum;
}

}  // namespace cpsim::pulses
