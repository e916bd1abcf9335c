#pragma once

#include <complex>
#include <vector>

#include "cpsim/coupling.hpp"
#include "cpsim/pulses.hpp"
#include "cpsim/qcore.hpp"

// Approximate quantum counting on a two-spin register: the iterate
// G = H U0 H^-1 Uf applied r times, realized both as exact matrices and as
// a pulse+delay program whose robustness depends on the chosen gate
// families. The solution count k is read off the oscillation frequency of
// the observed spin's transverse signal.
namespace cpsim::counting {

struct CountingProblem {
  int n_bits = 1;   // search register size; the pulse realization needs 1
  int k = 1;        // number of marked inputs, 0 <= k <= 2^n_bits
  int r_max = 20;   // largest iteration count recorded
};

// Throws std::invalid_argument naming the offending field.
void validate(const CountingProblem& problem);

// Gate families and error settings used by the pulse-level realization.
// damping_rate multiplies recorded amplitudes by exp(-rate * elapsed delay
// time in t units), a stand-in for coherence decay on long sequences.
struct GateBackend {
  pulses::Family one_qubit = pulses::Family::naive;
  pulses::Family coupling = pulses::Family::naive;
  pulses::ErrorModel error{};
  double damping_rate = 0.0;
};

// f(x) = 1 exactly for the k largest inputs; the canonical marking used
// when no explicit assignment is given.
std::vector<int> default_assignment(const CountingProblem& problem);

// Diagonal |x> -> (-1)^(f(x)+1) |x>. Requires exactly k ones in which_f.
qcore::Unitary oracle_unitary(const CountingProblem& problem,
                              const std::vector<int>& which_f);

// Diagonal |x> -> -|x> for x = 0, +|x> otherwise.
qcore::Unitary zero_state_oracle(const CountingProblem& problem);

// G = H U0 H^-1 Uf with the real Hadamard on every register bit.
qcore::Unitary grover_iterate_matrix(const CountingProblem& problem,
                                     const std::vector<int>& which_f);

// 2 * arcsin(sqrt(k / N)): the eigenphase the signal oscillates at.
double grover_eigenphase(const CountingProblem& problem);

struct SignalRecord {
  int r = 0;
  qcore::Complex amplitude{0.0, 0.0};
};

// Ideal reference signal <psi0| G^r |psi0> with |psi0> = H |0...0>,
// for r = 0..r_max.
std::vector<SignalRecord> matrix_counting_signal(const CountingProblem& problem,
                                                 const std::vector<int>& which_f);

// The full event program for r iterations on a two-slot register
// (slot 0: observed spin, slot 1: search spin). Preparation excites both
// spins with 90 degree y pulses in the one-qubit family; each iteration
// applies the controlled oracle phases (compiled to coupling gates plus
// frame z shifts), a 90 degree -y pulse, the controlled zero-state phase,
// and a 90 degree +y pulse on the search spin. Requires n_bits = 1.
std::vector<coupling::SequenceEvent> counting_pulse_program(
    const CountingProblem& problem, const GateBackend& backend, int r);

// Runs the pulse program on the built-in two-spin system (145 Hz coupling),
// recording 2 Tr(rho I+) of the observed spin for r = 0..r_max.
std::vector<SignalRecord> run_counting(const CountingProblem& problem,
                                       const GateBackend& backend);

// Same experiment on an arbitrary system: probe and search name the spins
// behind slots 0 and 1, j_ref fixes the delay time unit t = 1/(4 j_ref).
// The probe and search spins start in |0>, every other spin starts
// maximally mixed.
std::vector<SignalRecord> run_counting(const CountingProblem& problem,
                                       const GateBackend& backend,
                                       const coupling::SpinSystem& sys,
                                       int probe, int search, double j_ref);

// Fitted exponential decay rate of the signal envelope: the log of the peak
// magnitude inside each complete four-iteration window (up to r = 20) is
// fit against the window position by least squares; returns minus the
// slope per iteration.
double envelope_decay_rate(const std::vector<SignalRecord>& records);

// Location of the dominant discrete Fourier peak of the complex signal,
// folded into [0, pi]. Resolution is 2 pi / (r_max + 1).
double dominant_frequency(const std::vector<SignalRecord>& records);

}  // namespace cpsim::counting
