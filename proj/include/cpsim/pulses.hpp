#pragma once

// The composite-pulse families: naive single rotations plus the BB1, NB1,
// PB1, B4 and P4 sequences, together with a parametric systematic error
// model and the resulting net propagators.

#include <optional>
#include <string>
#include <vector>

#include "cpsim/qcore.hpp"

namespace cpsim::pulses {

enum class Family { naive, BB1, NB1, PB1, B4, P4 };

const std::vector<Family>& all_families();
std::string family_name(Family f);
Family family_from_name(const std::string& name);  // throws listing valid names

// One rotation instruction. theta is the signed nominal angle (negative for
// the reversed central rotations of B4/P4); phase is kept in [0, 2pi).
struct PulseElement {
  double theta = 0.0;
  double phase = 0.0;
};

// Systematic errors applied uniformly to every element of a sequence:
//   f        fractional pulse-length error, actual angle = (1+f) * nominal
//   g        resonance offset as a fraction of the nominal field strength
//   epsilon  constant phase offset added to every element phase (radians)
struct ErrorModel {
  double f = 0.0;
  double g = 0.0;
  double epsilon = 0.0;
};

struct CompositeSequence {
  std::vector<PulseElement> elements;  // first element acts first
  Family family = Family::naive;
  double target_theta = 0.0;
  double target_phi = 0.0;
};

// Folds a phase into [0, 2pi).
double normalize_phase(double phase);

// Family constructors. Gate angles are restricted to (0, 2pi]: the
// correction phases arccos(-theta/c) stay inside their principal domain
// there, and out-of-range input is rejected rather than clamped so caller
// bugs surface. Element counts: 1 for naive, 5 for BB1/NB1/PB1, 29 for
// B4/P4 after expanding the repeated brackets and the central block.
CompositeSequence naive_pulse(double theta, double phi);
CompositeSequence bb1(double theta, double phi);
CompositeSequence nb1(double theta, double phi);
CompositeSequence pb1(double theta, double phi);
CompositeSequence b4(double theta, double phi);
CompositeSequence p4(double theta, double phi);
CompositeSequence make_sequence(Family f, double theta, double phi);

// Rewrites negative rotations as positive rotations about the opposite axis
// (phase + pi). Propagator-identical to the signed form.
CompositeSequence canonicalize(const CompositeSequence& seq);

// exp[-i |theta| ((1+f)(Ix cos p + Iy sin p) + g Iz)] with
// p = phase + epsilon (+ pi when theta is negative). Reduces to the ideal
// rotation at zero error.
qcore::Unitary element_propagator(const PulseElement& e, const ErrorModel& err);

// Time-ordered product of element propagators; the first listed element acts
// first, i.e. sits rightmost in the matrix product.
qcore::Unitary sequence_propagator(const CompositeSequence& seq, const ErrorModel& err);

// Closed-form fidelity laws where one exists under a pure pulse-length
// error: cos(f theta / 2) for naive, the sixth-order expansion
// 1 - f^6 (32 pi^4 theta^2 + 14 pi^2 theta^4 - theta^6) / 9216 for BB1.
// Empty for the other families.
std::optional<double> analytic_fidelity(Family f, double theta, double f_error);

// Sum of |theta_i| in units of the inverse nominal field strength; the
// execution-time proxy for a composite gate (PB1/BB1 = 17/9 at 90 degrees).
double nominal_duration(const CompositeSequence& seq);

}  // namespace cpsim::pulses
