#pragma once

#include <cstdint>

#include "knead/angle.hpp"
#include "knead/metrics.hpp"
#include "knead/sequence.hpp"

namespace knead {

// Subinterval of the (iterated) critical path, encoded by the offsets of its
// two endpoint itineraries into nu.  kCritical stands for the critical point
// star-nu; every other endpoint is an iterate of the critical value.  The
// pair is unordered and offsets past the preperiod are reduced mod period.
struct IntervalState {
    static constexpr int kCritical = -1;
    int a = kCritical;
    int b = 0;
    bool operator==(const IntervalState& o) const = default;
};

// counts[n] = number of precritical points of depth n in the interior of the
// critical path, for 1 <= n <= n_max (counts[0] unused).  Interior splits
// only, so counts[1] = 0 and counts[n] <= 2^(n-2).
struct PrecriticalCensus {
    std::vector<std::uint64_t> counts;
    int n_max = 0;
    std::uint64_t at(int n) const { return counts.at(static_cast<std::size_t>(n)); }
};

inline constexpr int kMaxCensusDepth = 64;  // counts fit in uint64 up to here

// Frontier simulation of the critical-path subdivision: endpoints advance in
// lockstep while their current symbols agree (star is a wildcard); a concrete
// disagreement at step n records one precritical point of depth n and splits
// the interval into two children, each keeping one advanced endpoint and
// gaining a fresh critical-value endpoint.  Interval states are deduplicated
// with multiplicity, which keeps the cost polynomial for eventually periodic
// sequences.
PrecriticalCensus census(const Seq& nu, int n_max);
PrecriticalCensus census(const BoundedStream& nu, int n_max);

// The finite state machine the frontier settles into for eventually periodic
// nu.  Out-degree 2 marks a split, out-degree 0 a degenerate absorbing state.
struct SplitAutomaton {
    std::vector<IntervalState> states;
    std::vector<std::vector<int>> children;  // child state ids, size 0..2
    std::vector<bool> splits;
    int initial = 0;

    int size() const { return static_cast<int>(states.size()); }
    PrecriticalCensus replay(int n_max) const;
};

SplitAutomaton compile_automaton(const Seq& nu);

struct EntropyResult {
    double value = 0;
    enum class Kind { ExactSpectral, GrowthEstimate } kind = Kind::ExactSpectral;
    double lower_bound = 0;
    double upper_bound = 0;
    long long evidence = 0;  // automaton size (exact) or census horizon (estimate)
};

inline constexpr double kSpectralTol = 1e-12;

// Certified two-sided bounds on the spectral radius of the automaton's
// counting matrix, via Collatz-Wielandt ratios per strongly connected
// component.  No eigensolver: iterated nonnegative matrix action only.
struct SpectralBounds {
    double lower = 0;
    double upper = 0;
};
SpectralBounds spectral_radius_bounds(const SplitAutomaton& fsm, double tol = kSpectralTol);

// h(nu) = log(spectral radius), clamped to [0, log 2].
EntropyResult entropy_exact(const Seq& nu, double tol = kSpectralTol);

// limsup realization over a finite horizon: max of log+(N(n))/n over the last
// third of the window, with the coarse 2^(n-2) bound refined through the
// position of the second 1 when available.
EntropyResult entropy_estimate(const Seq& nu, int n_max);
EntropyResult entropy_estimate(const BoundedStream& nu, int n_max);

EntropyResult entropy_of_angle(const Angle& theta, double tol = kSpectralTol);

// Upper bound log(2^s - 1)/s from the position s of the second 1; log 2 when
// there is no second 1 (the maximal sequence).
double refined_upper_bound(const Seq& nu);

// Exact recurrence data for an eventually periodic sequence: the sup over all
// n of diff(nu, shift^n nu) ranges over finitely many shifts.  Periodic
// returns show up as an infinite diff; periodic sequences count as
// non-recurrent by convention, and eventually periodic sequences always have
// bounded finite diffs, so the verdict is always non-recurrent here.
struct RecurrenceWitness {
    long long max_finite_diff = 0;
    bool periodic_return = false;  // some shift reproduces nu exactly
    bool recurrent = false;        // always false for eventually periodic input
};
RecurrenceWitness recurrence_witness(const Seq& nu, int n_max);

}  // namespace knead
