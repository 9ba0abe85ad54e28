#include "knead/metrics.hpp"

#include <numeric>

namespace knead {

std::string to_string(const DepthResult& d) {
    switch (d.kind) {
        case DepthResult::Kind::Finite: return std::to_string(d.value);
        case DepthResult::Kind::Infinity: return "inf";
        default: return ">" + std::to_string(d.value);
    }
}

namespace {

long long exact_window(const Seq& a, const Seq& b) {
    const long long r = std::max(a.preperiod(), b.preperiod());
    const long long l = std::lcm<long long>(a.period(), b.period());
    if (l > 100'000'000) throw std::length_error("diff: lcm of periods too large to decide exactly");
    return r + l;
}

}  // namespace

DepthResult diff(const Seq& a, const Seq& b) {
    const long long w = exact_window(a, b);
    for (long long k = 1; k <= w; ++k)
        if (symbols_differ(a.entry(k), b.entry(k))) return DepthResult::finite(k);
    // The pair sequence (a_k, b_k) is periodic past the window, so no
    // concrete difference ever occurs.
    return DepthResult::infinity();
}

DepthResult diff(const Seq& a, const BoundedStream& b, long long horizon) {
    if (horizon < 1) throw std::invalid_argument("diff: horizon must be >= 1");
    const long long w = std::min(horizon, b.length());
    for (long long k = 1; k <= w; ++k)
        if (symbols_differ(a.entry(k), b.entry(k))) return DepthResult::finite(k);
    return DepthResult::beyond(w);
}

DepthResult diff(const BoundedStream& a, const BoundedStream& b, long long horizon) {
    if (horizon < 1) throw std::invalid_argument("diff: horizon must be >= 1");
    const long long w = std::min({horizon, a.length(), b.length()});
    for (long long k = 1; k <= w; ++k)
        if (symbols_differ(a.entry(k), b.entry(k))) return DepthResult::finite(k);
    return DepthResult::beyond(w);
}

namespace {

DepthResult depth_max(DepthResult x, DepthResult y) {
    if (x.is_infinity() || y.is_infinity()) return DepthResult::infinity();
    if (!x.is_finite() || !y.is_finite()) {
        // max with an unresolved side stays unresolved unless the finite side
        // already exceeds the horizon of the other.
        if (x.is_finite() && x.value > y.value) return x;
        if (y.is_finite() && y.value > x.value) return y;
        return DepthResult::beyond(std::max(x.value, y.value));
    }
    return DepthResult::finite(std::max(x.value, y.value));
}

}  // namespace

DepthResult Diff(const Seq& a, const Seq& b) {
    return depth_max(diff(a.projected(Symbol::Zero), b.projected(Symbol::Zero)),
                     diff(a.projected(Symbol::One), b.projected(Symbol::One)));
}

DepthResult Diff(const Seq& a, const BoundedStream& b, long long horizon) {
    return depth_max(diff(a.projected(Symbol::Zero), b, horizon),
                     diff(a.projected(Symbol::One), b, horizon));
}

DepthResult rho(const Seq& nu, long long n) {
    if (nu.has_star()) throw std::invalid_argument("rho: star-free sequence required (project first)");
    if (n < 1) throw std::invalid_argument("rho: n >= 1 required");
    // The pair (nu_k, nu_{k-n}) is periodic in k once k > preperiod + n.
    const long long w = n + nu.preperiod() + n + nu.period();
    for (long long k = n + 1; k <= w; ++k)
        if (nu.entry(k) != nu.entry(k - n)) return DepthResult::finite(k);
    return DepthResult::infinity();
}

DepthResult rho(const BoundedStream& nu, long long n, long long horizon) {
    if (n < 1) throw std::invalid_argument("rho: n >= 1 required");
    if (horizon < 1) throw std::invalid_argument("rho: horizon must be >= 1");
    const long long w = std::min(horizon, nu.length());
    for (long long k = n + 1; k <= w; ++k) {
        const Symbol a = nu.entry(k), b = nu.entry(k - n);
        if (!is_concrete(a) || !is_concrete(b))
            throw std::invalid_argument("rho: star-free stream required");
        if (a != b) return DepthResult::finite(k);
    }
    return DepthResult::beyond(w);
}

std::optional<long long> second_one_position(const Seq& nu) {
    const long long w = nu.preperiod() + nu.period();
    int seen = 0;
    for (long long k = 1; k <= w; ++k) {
        if (nu.entry(k) == Symbol::One && ++seen == 2) return k;
    }
    // Within one full preperiod+period there is at most one 1: if the period
    // contains a 1 the second occurrence lies one period later, otherwise
    // there is none.
    for (long long k = nu.preperiod() + 1; k <= w; ++k)
        if (nu.entry(k) == Symbol::One) return k + nu.period();
    return std::nullopt;
}

}  // namespace knead
