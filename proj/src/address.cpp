#include "knead/address.hpp"

#include <algorithm>

namespace knead {

std::string InternalAddress::str() const {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out.push_back('-');
        out += std::to_string(entries[i]);
    }
    if (truncated) out += "-...";
    return out;
}

bool InternalAddress::prefix_of(const InternalAddress& o) const {
    if (entries.size() > o.entries.size()) return false;
    return std::equal(entries.begin(), entries.end(), o.entries.begin());
}

bool InternalAddress::strict_prefix_of(const InternalAddress& o) const {
    if (!prefix_of(o)) return false;
    return entries.size() < o.entries.size() || o.truncated;
}

namespace {

// rho-orbit of 1 for a star-free sequence starting with 1.
InternalAddress rho_orbit_address(const Seq& nu, int max_terms) {
    if (!nu.starts_with_one()) throw std::invalid_argument("internal_address: sequence must start with 1");
    InternalAddress addr;
    addr.entries.push_back(1);
    long long a = 1;
    while (static_cast<int>(addr.entries.size()) < max_terms) {
        const DepthResult r = rho(nu, a);
        if (r.is_infinity()) return addr;  // nu is a-periodic: address finite
        a = r.value;
        addr.entries.push_back(a);
    }
    if (!rho(nu, a).is_infinity()) addr.truncated = true;
    return addr;
}

// Does the rho-orbit of 1 of a p-periodic star-free sequence pass through
// exactly p?  Since the sequence is p-periodic, hitting p implies rho(p) is
// infinite, i.e. the address is finite with last entry p.
bool address_ends_at(const Seq& proj, long long p) {
    long long a = 1;
    while (a < p) {
        const DepthResult r = rho(proj, a);
        if (!r.is_finite()) return false;
        a = r.value;
    }
    return a == p;
}

}  // namespace

UpperLower upper_lower(const Seq& nu) {
    if (!nu.is_star_periodic() || nu.period() < 2)
        throw std::invalid_argument("upper_lower: star-periodic sequence of period >= 2 required");
    const long long p = nu.period();
    const Seq p0 = nu.projected(Symbol::Zero);
    const Seq p1 = nu.projected(Symbol::One);
    const bool q0 = address_ends_at(p0, p);
    const bool q1 = address_ends_at(p1, p);
    if (q0 == q1)
        throw std::logic_error("upper_lower: exactly one projection must have finite address ending at the period (got " +
                               nu.str() + ")");
    return q0 ? UpperLower{p0, p1} : UpperLower{p1, p0};
}

InternalAddress internal_address(const Seq& nu, int max_terms) {
    if (max_terms < 1) throw std::invalid_argument("internal_address: max_terms >= 1");
    if (nu.is_trivial()) return InternalAddress{{1}, false};
    if (nu.is_star_periodic()) return rho_orbit_address(upper_lower(nu).upper, max_terms);
    if (nu.has_star()) throw std::invalid_argument("internal_address: misplaced star in " + nu.str());
    return rho_orbit_address(nu, max_terms);
}

std::optional<long long> is_bifurcation(const Seq& nu) {
    if (!nu.is_star_periodic()) throw std::invalid_argument("is_bifurcation: star-periodic sequence required");
    const long long p = nu.period();
    std::optional<long long> best;
    for (Symbol e : {Symbol::Zero, Symbol::One}) {
        const long long q = nu.projected(e).period();
        if (q < p) {
            if (best && *best != q)
                throw std::logic_error("is_bifurcation: both projections collapse, on " + nu.str());
            best = q;
        }
    }
    return best;
}

Seq bifurcation_base(const Seq& nu, long long q) {
    if (!nu.is_star_periodic() || q < 1 || q > nu.period())
        throw std::invalid_argument("bifurcation_base: bad arguments");
    Word w(nu.period_word().begin(), nu.period_word().begin() + static_cast<std::ptrdiff_t>(q - 1));
    w.push_back(Symbol::Star);
    return Seq({}, std::move(w));
}

Seq address_to_kneading(const InternalAddress& addr) {
    const auto& a = addr.entries;
    if (a.empty() || a.front() != 1) throw std::invalid_argument("address must start with 1");
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] <= a[i - 1]) throw std::invalid_argument("address must be strictly increasing");
    if (a.back() > 1'000'000) throw std::length_error("address_to_kneading: period too large");

    // nu_0 = (1); each step extends periodically to the next entry and flips
    // the symbol there.
    Word w{Symbol::One};
    for (std::size_t i = 1; i < a.size(); ++i) {
        const std::size_t s = static_cast<std::size_t>(a[i]);
        Word next(s);
        for (std::size_t j = 0; j < s; ++j) next[j] = w[j % w.size()];
        next[s - 1] = flip(next[s - 1]);
        w = std::move(next);
    }
    w.back() = Symbol::Star;
    return Seq({}, std::move(w));
}

OrderEvidence precedes_by_address(const Seq& mu, const Seq& nu, int max_terms) {
    if (!mu.is_star_periodic()) throw std::invalid_argument("precedes_by_address: mu must be star-periodic");
    if (mu == nu) return OrderEvidence::NoEvidence;
    const InternalAddress amu = internal_address(mu, max_terms);
    if (amu.truncated) return OrderEvidence::NoEvidence;  // mu's address longer than the horizon: no certificate
    if (!nu.is_trivial()) {
        const InternalAddress anu = internal_address(nu, max_terms);
        if (amu.strict_prefix_of(anu)) return OrderEvidence::Yes;
        if (nu.is_star_periodic()) {
            const Seq low = upper_lower(nu).lower;
            if (low.starts_with_one() && amu.prefix_of(rho_orbit_address(low, max_terms)))
                return OrderEvidence::Yes;
        }
    }
    return OrderEvidence::NoEvidence;
}

namespace {

InternalAddress address_up_to(const Seq& chi, long long bound) {
    // Entries of the rho-orbit of 1 while they stay <= bound.
    InternalAddress addr;
    addr.entries.push_back(1);
    long long a = 1;
    while (true) {
        const DepthResult r = rho(chi, a);
        if (!r.is_finite() || r.value > bound) return addr;
        a = r.value;
        addr.entries.push_back(a);
    }
}

}  // namespace

WeakBranch weak_branch(const Seq& nu, const Seq& nu2) {
    const DepthResult d = Diff(nu, nu2);
    if (!d.is_finite())
        throw std::invalid_argument("weak_branch: Diff(nu, nu') must be finite (bifurcation-related inputs rejected)");
    const long long k = d.value;

    for (Symbol e : {Symbol::One, Symbol::Zero}) {
        const Seq chi = nu.projected(e);
        const Seq chi2 = nu2.projected(e);
        const DepthResult de = diff(chi, chi2);
        if (de.is_finite() && de.value != k) continue;  // this projection does not realize the max
        if (!chi.starts_with_one() || !chi2.starts_with_one()) continue;

        const InternalAddress a1 = address_up_to(chi, k);
        const InternalAddress a2 = address_up_to(chi2, k);
        std::size_t n = 0;
        while (n < a1.entries.size() && n < a2.entries.size() && a1.entries[n] == a2.entries[n]) ++n;

        // Candidate addresses: the longest common prefix (the construction in
        // the source theorem) first, then deeper prefixes of either address
        // (needed when the realizing projections are lower sequences and the
        // common-prefix sequence only approaches one side closely enough),
        // then shorter common prefixes.
        std::vector<std::vector<long long>> candidates;
        candidates.push_back({a1.entries.begin(), a1.entries.begin() + static_cast<std::ptrdiff_t>(n)});
        std::vector<std::vector<long long>> deeper;
        for (const auto* a : {&a1, &a2})
            for (std::size_t len = a->entries.size(); len > n; --len)
                deeper.push_back({a->entries.begin(), a->entries.begin() + static_cast<std::ptrdiff_t>(len)});
        std::sort(deeper.begin(), deeper.end(),
                  [](const auto& x, const auto& y) { return x.back() != y.back() ? x.back() > y.back() : x.size() > y.size(); });
        candidates.insert(candidates.end(), deeper.begin(), deeper.end());
        for (std::size_t len = n; len >= 1; --len)
            candidates.push_back({a1.entries.begin(), a1.entries.begin() + static_cast<std::ptrdiff_t>(len)});

        for (const auto& entries : candidates) {
            if (entries.empty()) continue;
            const Seq mu = address_to_kneading(InternalAddress{entries, false});
            const DepthResult dn = Diff(mu, nu);
            const DepthResult dn2 = Diff(mu, nu2);
            if (dn.at_least(k) && dn2.at_least(k)) return WeakBranch{mu, k, dn, dn2};
        }
    }
    throw std::logic_error("weak_branch: no candidate satisfied the postconditions for " + nu.str() + ", " + nu2.str());
}

}  // namespace knead
