#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cpsim/pulses.hpp"
#include "cpsim/qcore.hpp"

// Two-spin coupling gates and their pulse+delay realizations, plus the
// multi-spin machinery (weak-coupling Hamiltonians, kind-selective hard
// pulses, multiplet analysis) needed to run them on realistic systems.
namespace cpsim::coupling {

// A coupling rotation: exp[-i*theta*(2IzSz cos(phase) + 2IzSx sin(phase))].
// theta is signed; phase is the tilt toward the zx axis, kept in [0, 2pi).
struct CouplingElement {
  double theta = 0.0;
  double phase = 0.0;
};

// Timed program events. `slot` is a logical spin index; it is resolved to a
// physical spin (and through it to a pulse channel, i.e. a spin kind) when
// the program is executed on a concrete system.
struct PulseEvent {
  int slot = 0;
  double theta = 0.0;
  double phase = 0.0;
};

// Free evolution. Duration is stored in units of t = 1/(4*J_ref), so the
// same program can be replayed against any reference coupling.
struct DelayEvent {
  double duration = 0.0;
};

// Exact zero-duration z rotation of the local reference frame. Frame shifts
// are carrier-phase bookkeeping, so they carry no error model and no time.
struct FrameZEvent {
  int slot = 0;
  double angle = 0.0;
};

using SequenceEvent = std::variant<PulseEvent, DelayEvent, FrameZEvent>;

// A weakly coupled spin system: one kind label per spin (pulses address all
// spins of a kind at once) and a symmetric J table in Hz.
struct SpinSystem {
  std::vector<std::string> kinds;
  Eigen::MatrixXd couplings;

  int n_spins() const { return static_cast<int>(kinds.size()); }
};

// Throws std::invalid_argument naming the offending field.
void validate(const SpinSystem& sys);

SpinSystem two_spin_system(double j_hz);

// Carbon-13 plus the alpha proton plus three equivalent methyl protons.
// Spin order: [13C, 1H(alpha), 1H(methyl) x3], dim 32.
SpinSystem alanine_system(double j_ch = 145.0, double j_cm = 4.5,
                          double j_hm = 7.3);

// exp[-i*theta*(2IzSz cos(phi) + 2IzSx sin(phi))] on two spins.
qcore::Unitary tilted_coupling_unitary(double theta, double phi);

// The single-qubit phase schedules reused with coupling rotations. Only the
// families whose rotations are all forward (naive, BB1, NB1, PB1) can be
// realized as delays; the others throw.
std::vector<CouplingElement> composite_coupling(pulses::Family family,
                                                double theta);

// Realizes one tilted coupling rotation as [pulse, delay, pulse]: the tilt
// angle becomes the flip angle of a -y/+y pulse pair on slot 1 (spin S)
// around a delay of 4*theta/pi time units. Requires theta > 0 and j_hz > 0.
std::vector<SequenceEvent> compile_coupling_element(const CouplingElement& e,
                                                    double j_hz);

// Product of tilted_coupling_unitary((1+f)*theta_i, phase_i), first element
// acting first: the abstract model where a miscalibrated J scales every
// coupling angle by the same factor.
qcore::Unitary coupling_error_propagator(
    const std::vector<CouplingElement>& elements, double f);

// Sum over pairs of pi*J[i][j]*2*Iiz*Ijz, in angular frequency units.
qcore::Matrix system_hamiltonian(const SpinSystem& sys);

// exp(-i*H*seconds); seconds must be nonnegative.
qcore::Unitary free_evolution(const SpinSystem& sys, double seconds);

// One hard pulse applied simultaneously to every spin of the given kind,
// with the same per-spin error model as a single-qubit pulse element:
// angle scaled by (1+f), phase shifted by epsilon, g*Iz added per spin.
qcore::Unitary hard_pulse(const SpinSystem& sys, const std::string& kind,
                          double theta, double phase,
                          const pulses::ErrorModel& err);

// Exact z rotation of every spin of the given kind (carrier phase shift).
qcore::Unitary frame_rotation(const SpinSystem& sys, const std::string& kind,
                              double angle);

// Executes an event list left to right. slots[i] is the physical spin index
// behind logical slot i; t_unit_seconds converts delay units to seconds.
// Pulse and frame events address the kind of their resolved spin.
qcore::Unitary program_unitary(const std::vector<SequenceEvent>& events,
                               const SpinSystem& sys,
                               const std::vector<int>& slots,
                               double t_unit_seconds,
                               const pulses::ErrorModel& err);

// Total delay time in t units; pulses and frame shifts take no time.
double program_delay_units(const std::vector<SequenceEvent>& events);

// One line of the observed spin's multiplet: the doublet half selected by
// the coupling partner's z state (0 means |0>, i.e. m = +1/2) and the joint
// z projection of the equivalent-spin group (twice the total m, so a methyl
// group gives +3, +1, -1, -3 with weights 1:3:3:1).
struct MultipletComponent {
  int partner_state = 0;
  int group_mz_twice = 0;
  int multiplicity = 1;
  qcore::Complex amplitude{0.0, 0.0};
};

// Partitions the observed spin's raising-operator expectation by partner
// state and group z projection. The partner is the spin with the largest
// coupling to the observed spin; the group is the largest set of at least
// two remaining spins sharing a kind and coupling pattern. Without such a
// group the plain doublet (two components) is returned. Amplitudes are
// normalized so a freshly excited observed spin reads 1.0 per component.
std::vector<MultipletComponent> multiplet_phases(
    const qcore::DensityMatrix& rho, const SpinSystem& sys, int observed);

}  // namespace cpsim::coupling
