#include "knead/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace knead {

namespace {

constexpr double kLog2 = 0.6931471805599453;

// Offset arithmetic for one sequence: offsets name the itineraries
// shift^o(nu), reduced mod period once past the preperiod, plus the critical
// point as offset kCritical (whose itinerary is star followed by nu).
struct OffsetSpace {
    const Seq& nu;
    int r, p;
    explicit OffsetSpace(const Seq& s) : nu(s), r(s.preperiod()), p(s.period()) {}

    int canon(int o) const { return o < r ? o : r + (o - r) % p; }
    int succ(int o) const { return o == IntervalState::kCritical ? 0 : canon(o + 1); }
    Symbol symbol(int o) const {
        return o == IntervalState::kCritical ? Symbol::Star : nu.entry(o + 1);
    }
    IntervalState make(int x, int y) const { return x <= y ? IntervalState{x, y} : IntervalState{y, x}; }
};

struct Step {
    bool split;
    IntervalState c0, c1;  // c1 used only when split
};

template <typename Space>
Step step_state(const Space& sp, const IntervalState& s) {
    // Degenerate interval: both endpoints carry the same itinerary; it never
    // subdivides (symbolic distance infinity).
    if (s.a == s.b) return Step{false, s, s};
    const Symbol sa = sp.symbol(s.a);
    const Symbol sb = sp.symbol(s.b);
    if (symbols_differ(sa, sb))
        return Step{true, sp.make(sp.succ(s.a), 0), sp.make(0, sp.succ(s.b))};
    return Step{false, sp.make(sp.succ(s.a), sp.succ(s.b)), s};
}

struct StateKey {
    bool operator()(const IntervalState& x, const IntervalState& y) const {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

template <typename Space>
PrecriticalCensus census_impl(const Space& sp, int n_max) {
    if (n_max < 2) throw std::invalid_argument("census: n_max >= 2 required");
    if (n_max > kMaxCensusDepth) throw std::invalid_argument("census: n_max exceeds the uint64-safe depth 64");
    PrecriticalCensus out;
    out.n_max = n_max;
    out.counts.assign(static_cast<std::size_t>(n_max) + 1, 0);

    std::map<IntervalState, std::uint64_t, StateKey> frontier;
    frontier[IntervalState{IntervalState::kCritical, 0}] = 1;
    for (int t = 0; t < n_max; ++t) {
        std::map<IntervalState, std::uint64_t, StateKey> next;
        std::uint64_t split_count = 0;
        for (const auto& [state, mult] : frontier) {
            const Step st = step_state(sp, state);
            if (st.split) {
                split_count += mult;
                next[st.c0] += mult;
                next[st.c1] += mult;
            } else {
                next[st.c0] += mult;
            }
        }
        out.counts[static_cast<std::size_t>(t) + 1] = split_count;  // splits at step t have depth t+1
        frontier = std::move(next);
    }
    return out;
}

// Offset space over a bounded stream: no periodic reduction, entries must
// cover every position the simulation touches.
struct StreamSpace {
    const BoundedStream& nu;
    explicit StreamSpace(const BoundedStream& s) : nu(s) {}
    int succ(int o) const { return o == IntervalState::kCritical ? 0 : o + 1; }
    Symbol symbol(int o) const {
        return o == IntervalState::kCritical ? Symbol::Star : nu.entry(o + 1);
    }
    IntervalState make(int x, int y) const { return x <= y ? IntervalState{x, y} : IntervalState{y, x}; }
};

void require_nontrivial(const Seq& nu) {
    if (nu.is_trivial()) throw std::invalid_argument("the trivial sequence has no critical path dynamics");
}

}  // namespace

PrecriticalCensus census(const Seq& nu, int n_max) {
    require_nontrivial(nu);
    return census_impl(OffsetSpace(nu), n_max);
}

PrecriticalCensus census(const BoundedStream& nu, int n_max) {
    if (nu.length() < n_max)
        throw std::invalid_argument("census: stream shorter than the requested depth");
    return census_impl(StreamSpace(nu), n_max);
}

SplitAutomaton compile_automaton(const Seq& nu) {
    require_nontrivial(nu);
    const OffsetSpace sp(nu);
    SplitAutomaton fsm;
    std::map<IntervalState, int, StateKey> index;

    auto id_of = [&](const IntervalState& s) {
        auto [it, fresh] = index.try_emplace(s, fsm.size());
        if (fresh) {
            fsm.states.push_back(s);
            fsm.children.emplace_back();
            fsm.splits.push_back(false);
        }
        return it->second;
    };

    const int init = id_of(IntervalState{IntervalState::kCritical, 0});
    fsm.initial = init;
    for (int i = 0; i < fsm.size(); ++i) {  // fsm grows while we scan it
        if (static_cast<long long>(fsm.size()) > 2'000'000)
            throw std::length_error("compile_automaton: state space too large");
        const IntervalState s = fsm.states[static_cast<std::size_t>(i)];
        if (s.a == s.b) continue;  // absorbing, out-degree 0
        const Step st = step_state(sp, s);
        const int c0 = id_of(st.c0);  // may reallocate fsm vectors
        const int c1 = st.split ? id_of(st.c1) : -1;
        fsm.splits[static_cast<std::size_t>(i)] = st.split;
        fsm.children[static_cast<std::size_t>(i)].push_back(c0);
        if (st.split) fsm.children[static_cast<std::size_t>(i)].push_back(c1);
    }
    return fsm;
}

PrecriticalCensus SplitAutomaton::replay(int n_max) const {
    if (n_max < 2) throw std::invalid_argument("replay: n_max >= 2 required");
    if (n_max > kMaxCensusDepth) throw std::invalid_argument("replay: n_max exceeds the uint64-safe depth 64");
    PrecriticalCensus out;
    out.n_max = n_max;
    out.counts.assign(static_cast<std::size_t>(n_max) + 1, 0);
    std::vector<std::uint64_t> x(states.size(), 0), y;
    x[static_cast<std::size_t>(initial)] = 1;
    for (int t = 0; t < n_max; ++t) {
        y.assign(states.size(), 0);
        std::uint64_t split_count = 0;
        for (std::size_t i = 0; i < states.size(); ++i) {
            if (x[i] == 0) continue;
            if (splits[i]) split_count += x[i];
            for (int c : children[i]) y[static_cast<std::size_t>(c)] += x[i];
        }
        out.counts[static_cast<std::size_t>(t) + 1] = split_count;
        x.swap(y);
    }
    return out;
}

namespace {

// Tarjan strongly connected components, iterative.
std::vector<std::vector<int>> strongly_connected_components(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    std::vector<std::vector<int>> sccs;
    int counter = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& edges = adj[static_cast<std::size_t>(f.v)];
            if (f.child < edges.size()) {
                const int w = edges[f.child++];
                if (index[static_cast<std::size_t>(w)] == -1) {
                    index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = true;
                    call.push_back({w, 0});
                } else if (on_stack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], index[static_cast<std::size_t>(w)]);
                }
            } else {
                if (low[static_cast<std::size_t>(f.v)] == index[static_cast<std::size_t>(f.v)]) {
                    std::vector<int> comp;
                    while (true) {
                        const int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = false;
                        comp.push_back(w);
                        if (w == f.v) break;
                    }
                    sccs.push_back(std::move(comp));
                }
                const int v = f.v;
                call.pop_back();
                if (!call.empty())
                    low[static_cast<std::size_t>(call.back().v)] =
                        std::min(low[static_cast<std::size_t>(call.back().v)], low[static_cast<std::size_t>(v)]);
            }
        }
    }
    return sccs;
}

// Collatz-Wielandt bounds on the Perron root of one irreducible component,
// iterating with (A + I) to force primitivity.  Valid two-sided bounds hold
// for every positive vector; iteration tightens them.
SpectralBounds component_bounds(const std::vector<std::vector<std::pair<int, int>>>& in_edges, double tol) {
    const std::size_t m = in_edges.size();
    std::vector<double> x(m, 1.0), y(m);
    SpectralBounds best{0.0, std::numeric_limits<double>::infinity()};
    const long long max_iters = 400'000;
    for (long long it = 0; it < max_iters; ++it) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0, norm = 0.0;
        for (std::size_t v = 0; v < m; ++v) {
            double s = 0;
            for (const auto& [u, mult] : in_edges[v]) s += mult * x[static_cast<std::size_t>(u)];
            const double ratio = s / x[v];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            y[v] = s + x[v];  // (A + I) x keeps every coordinate positive
            norm = std::max(norm, y[v]);
        }
        best.lower = std::max(best.lower, lo);
        best.upper = std::min(best.upper, hi);
        if (best.upper - best.lower < tol * std::max(1.0, best.lower)) break;
        for (std::size_t v = 0; v < m; ++v) x[v] = y[v] / norm;
    }
    return best;
}

}  // namespace

SpectralBounds spectral_radius_bounds(const SplitAutomaton& fsm, double tol) {
    const auto sccs = strongly_connected_components(fsm.children);
    SpectralBounds out{0.0, 0.0};
    std::vector<int> local(static_cast<std::size_t>(fsm.size()), -1);
    for (const auto& comp : sccs) {
        for (std::size_t i = 0; i < comp.size(); ++i) local[static_cast<std::size_t>(comp[i])] = static_cast<int>(i);

        if (comp.size() == 1) {
            const int v = comp[0];
            int self = 0;
            for (int c : fsm.children[static_cast<std::size_t>(v)])
                if (c == v) ++self;
            out.lower = std::max(out.lower, static_cast<double>(self));
            out.upper = std::max(out.upper, static_cast<double>(self));
        } else {
            std::vector<std::vector<std::pair<int, int>>> in_edges(comp.size());
            for (int u : comp) {
                const auto& ch = fsm.children[static_cast<std::size_t>(u)];
                for (int c : ch) {
                    if (local[static_cast<std::size_t>(c)] == -1) continue;
                    // accumulate multiplicity (a split can emit the same child twice)
                    auto& vec = in_edges[static_cast<std::size_t>(local[static_cast<std::size_t>(c)])];
                    const int lu = local[static_cast<std::size_t>(u)];
                    if (!vec.empty() && vec.back().first == lu)
                        ++vec.back().second;
                    else
                        vec.emplace_back(lu, 1);
                }
            }
            const SpectralBounds b = component_bounds(in_edges, tol);
            out.lower = std::max(out.lower, b.lower);
            out.upper = std::max(out.upper, b.upper);
        }
        for (int v : comp) local[static_cast<std::size_t>(v)] = -1;
    }
    return out;
}

EntropyResult entropy_exact(const Seq& nu, double tol) {
    require_nontrivial(nu);
    const SplitAutomaton fsm = compile_automaton(nu);
    const SpectralBounds rho = spectral_radius_bounds(fsm, tol);
    EntropyResult res;
    res.kind = EntropyResult::Kind::ExactSpectral;
    res.evidence = fsm.size();
    res.lower_bound = std::clamp(std::log(std::max(1.0, rho.lower)), 0.0, kLog2);
    res.upper_bound = std::clamp(std::log(std::max(1.0, rho.upper)), 0.0, kLog2);
    res.value = std::clamp(std::log(std::max(1.0, 0.5 * (rho.lower + rho.upper))), res.lower_bound, res.upper_bound);
    return res;
}

namespace {

EntropyResult estimate_from_census(const PrecriticalCensus& c, double refined_upper) {
    EntropyResult res;
    res.kind = EntropyResult::Kind::GrowthEstimate;
    res.evidence = c.n_max;
    double v = 0;
    for (int n = std::max(2, (2 * c.n_max) / 3); n <= c.n_max; ++n) {
        const auto cnt = c.at(n);
        if (cnt > 1) v = std::max(v, std::log(static_cast<double>(cnt)) / n);
    }
    res.lower_bound = 0;
    res.upper_bound = std::min(kLog2, refined_upper);
    res.value = std::clamp(v, res.lower_bound, res.upper_bound);
    return res;
}

}  // namespace

double refined_upper_bound(const Seq& nu) {
    const auto s = second_one_position(nu);
    if (!s) return kLog2;
    const double sd = static_cast<double>(*s);
    return std::log(std::pow(2.0, sd) - 1.0) / sd;
}

EntropyResult entropy_estimate(const Seq& nu, int n_max) {
    if (n_max < 16) throw std::invalid_argument("entropy_estimate: n_max >= 16 required");
    return estimate_from_census(census(nu, n_max), refined_upper_bound(nu));
}

EntropyResult entropy_estimate(const BoundedStream& nu, int n_max) {
    if (n_max < 16) throw std::invalid_argument("entropy_estimate: n_max >= 16 required");
    double ub = kLog2;
    int ones = 0;
    for (long long k = 1; k <= nu.length(); ++k) {
        if (nu.entry(k) == Symbol::One && ++ones == 2) {
            ub = std::log(std::pow(2.0, static_cast<double>(k)) - 1.0) / static_cast<double>(k);
            break;
        }
    }
    return estimate_from_census(census(nu, n_max), ub);
}

EntropyResult entropy_of_angle(const Angle& theta, double tol) {
    return entropy_exact(kneading_of_angle(theta), tol);
}

RecurrenceWitness recurrence_witness(const Seq& nu, int n_max) {
    require_nontrivial(nu);
    if (n_max < 1) throw std::invalid_argument("recurrence_witness: n_max >= 1");
    RecurrenceWitness w;
    // All shifts repeat past preperiod + period, so the sup is exact on this window.
    const long long window = std::min<long long>(n_max, nu.preperiod() + nu.period());
    for (long long n = 1; n <= window; ++n) {
        const DepthResult d = diff(nu, nu.shifted(n));
        if (d.is_infinity())
            w.periodic_return = true;
        else
            w.max_finite_diff = std::max(w.max_finite_diff, d.value);
    }
    w.recurrent = false;  // eventually periodic sequences are never recurrent
    return w;
}

}  // namespace knead
