#include "knead/renorm.hpp"

#include <numeric>

namespace knead {

Seq derenormalize(const Seq& nu, long long p) {
    if (p < 2) throw std::invalid_argument("derenormalize: p >= 2 required");
    // Positions p, 2p, ... of an eventually periodic word are again
    // eventually periodic: preperiod ceil(r/p), period period/gcd.
    const long long r = nu.preperiod();
    const long long q = nu.period();
    const long long rr = (r + p - 1) / p;
    const long long qq = q / std::gcd(q, p);
    Word pre, per;
    for (long long k = 1; k <= rr; ++k) pre.push_back(nu.entry(k * p));
    for (long long k = rr + 1; k <= rr + qq; ++k) per.push_back(nu.entry(k * p));
    return Seq(std::move(pre), std::move(per));
}

namespace {

// Window on which the off-multiple pattern test is decided exactly: past
// preperiod + lcm(p, period) everything repeats.
long long pattern_window(const Seq& nu, long long p) {
    return nu.preperiod() + std::lcm<long long>(p, nu.period()) + p;
}

}  // namespace

std::vector<RenormalizationCertificate> detect_renormalizable(const Seq& nu, long long p_max) {
    if (nu.is_trivial()) throw std::invalid_argument("detect_renormalizable: non-trivial sequence required");
    if (p_max <= 0) p_max = nu.is_star_periodic() ? nu.period() : nu.preperiod() + nu.period();
    std::vector<RenormalizationCertificate> found;

    for (long long p = 2; p <= p_max; ++p) {
        // (a) off-multiple positions must be p-periodic: collect the pattern
        // for each residue 1..p-1, stars acting as wildcards.
        std::vector<Symbol> pattern(static_cast<std::size_t>(p), Symbol::Star);
        const long long w = pattern_window(nu, p);
        bool ok = true;
        for (long long m = 1; m <= w && ok; ++m) {
            if (m % p == 0) continue;
            const Symbol s = nu.entry(m);
            if (!is_concrete(s)) continue;
            Symbol& slot = pattern[static_cast<std::size_t>(m % p)];
            if (slot == Symbol::Star)
                slot = s;
            else if (slot != s)
                ok = false;
        }
        if (!ok) continue;
        for (long long j = 1; j < p; ++j)
            if (pattern[static_cast<std::size_t>(j)] == Symbol::Star) ok = false;  // residue never resolved
        if (!ok) continue;

        // (b) the p-shift must move nu.
        if (nu.shifted(p) == nu) continue;

        RenormalizationCertificate cert;
        cert.p = p;
        Word base(pattern.begin() + 1, pattern.end());
        base.push_back(Symbol::Star);
        cert.base = Seq({}, std::move(base));
        cert.derenormalized = derenormalize(nu, p);

        // The leading p-block of nu identifies which projection of the base
        // plays the dynamical sequence.
        const Symbol lead = nu.entry(p);
        const Symbol e = is_concrete(lead) ? lead : Symbol::Zero;
        cert.dynamical = cert.base.projected(e);
        cert.dynamical_is_upper = (cert.dynamical == upper_lower(cert.base).upper);
        cert.certified =
            nu.starts_with_one() && precedes_by_address(cert.base, nu) == OrderEvidence::Yes;
        found.push_back(std::move(cert));
    }
    return found;
}

Seq tune(const Seq& mu, const Seq& eta) {
    if (!mu.is_star_periodic() || mu.is_trivial() || !mu.starts_with_one())
        throw std::invalid_argument("tune: mu must be a non-trivial star-periodic kneading sequence");
    if (eta.is_trivial()) throw std::invalid_argument("tune: eta must be non-trivial");
    if (!eta.has_star() && eta.preperiod() == 0)
        throw std::invalid_argument("tune: purely periodic star-free eta makes shift^p(nu) = nu; rejected");
    const long long p = mu.period();
    const long long r_eta = eta.preperiod();
    const long long q_eta = eta.period();
    // nu has preperiod p*r_eta and period p*q_eta before canonicalization.
    Word pre, per;
    auto emit = [&](Word& out, long long m) {
        if (m % p == 0)
            out.push_back(eta.entry(m / p));
        else
            out.push_back(mu.entry(m % p));
    };
    for (long long m = 1; m <= p * r_eta; ++m) emit(pre, m);
    for (long long m = p * r_eta + 1; m <= p * (r_eta + q_eta); ++m) emit(per, m);
    return Seq(std::move(pre), std::move(per));
}

EntropyIdentityReport entropy_identity_check(const Seq& nu, const RenormalizationCertificate& cert, double tol) {
    EntropyIdentityReport rep;
    rep.h_nu = entropy_exact(nu).value;
    rep.h_base = cert.base.is_trivial() ? 0.0 : entropy_exact(cert.base).value;
    rep.h_eta = cert.derenormalized.is_trivial() ? 0.0 : entropy_exact(cert.derenormalized).value;
    rep.expected = std::max(rep.h_base, rep.h_eta / static_cast<double>(cert.p));
    rep.residual = std::abs(rep.h_nu - rep.expected);
    rep.ok = rep.residual < tol;
    return rep;
}

std::vector<Seq> maximal_base_chain(const Seq& nu) {
    std::vector<Seq> chain{nu};
    Seq cur = nu;
    while (true) {
        if (cur.is_trivial()) break;
        if (!cur.starts_with_one()) cur = cur.flipped();
        std::vector<RenormalizationCertificate> certs = detect_renormalizable(cur);
        const RenormalizationCertificate* pick = nullptr;
        for (const auto& c : certs)
            if (c.certified && (!pick || c.p < pick->p)) pick = &c;
        if (!pick) break;
        cur = pick->derenormalized;
        if (!cur.starts_with_one() && !cur.is_trivial()) cur = cur.flipped();
        chain.push_back(cur);
        if (chain.size() > 64) throw std::logic_error("maximal_base_chain: chain failed to terminate");
    }
    return chain;
}

}  // namespace knead
