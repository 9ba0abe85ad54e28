#pragma once

// Deterministic test corpora shared by the unit and acceptance suites.

#include <random>

#include "knead/address.hpp"
#include "knead/sequence.hpp"

namespace knead::testing {

// Every star-periodic kneading word of period 2..p_max (first symbol 1, star
// last): 2^(p-2) words per period p >= 2.
inline std::vector<Seq> all_star_periodic(int p_max) {
    std::vector<Seq> out;
    for (int p = 2; p <= p_max; ++p) {
        const unsigned long long combos = p >= 3 ? (1ULL << (p - 2)) : 1;
        for (unsigned long long bits = 0; bits < combos; ++bits) {
            Word w{Symbol::One};
            for (int i = 1; i < p - 1; ++i)
                w.push_back((bits >> (i - 1)) & 1 ? Symbol::One : Symbol::Zero);
            w.push_back(Symbol::Star);
            out.emplace_back(Word{}, std::move(w));
        }
    }
    return out;
}

inline Seq random_star_periodic(std::mt19937_64& rng, int p_min, int p_max) {
    const int p = p_min + static_cast<int>(rng() % static_cast<unsigned>(p_max - p_min + 1));
    Word w{Symbol::One};
    for (int i = 1; i < p - 1; ++i) w.push_back(rng() & 1 ? Symbol::One : Symbol::Zero);
    w.push_back(Symbol::Star);
    return Seq({}, std::move(w));
}

// Random strictly preperiodic star-free kneading sequence (canonicalization
// can swallow the preperiod, so retry until one survives).
inline Seq random_preperiodic(std::mt19937_64& rng, int pre_max, int per_max) {
    while (true) {
        const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(pre_max));
        const int p = 1 + static_cast<int>(rng() % static_cast<unsigned>(per_max));
        Word pre{Symbol::One}, per;
        for (int i = 1; i < r; ++i) pre.push_back(rng() & 1 ? Symbol::One : Symbol::Zero);
        for (int i = 0; i < p; ++i) per.push_back(rng() & 1 ? Symbol::One : Symbol::Zero);
        Seq s(std::move(pre), std::move(per));
        if (s.preperiod() > 0 && s.starts_with_one()) return s;
    }
}

// Mixed corpus of eventually periodic kneading sequences with periods <= 10.
inline std::vector<Seq> mixed_corpus(std::size_t size, unsigned long long seed = 20240601) {
    std::vector<Seq> corpus = all_star_periodic(8);
    std::mt19937_64 rng(seed);
    while (corpus.size() < size) {
        Seq s = (rng() & 1) ? random_star_periodic(rng, 9, 10) : random_preperiodic(rng, 3, 10);
        corpus.push_back(std::move(s));
    }
    return corpus;
}

inline InternalAddress random_address(std::mt19937_64& rng, int len, long long max_step = 4) {
    InternalAddress a{{1}, false};
    while (static_cast<int>(a.entries.size()) < len)
        a.entries.push_back(a.entries.back() + 1 + static_cast<long long>(rng() % max_step));
    return a;
}

// Pairs mu < nu certified by the address-prefix construction.
inline std::vector<std::pair<Seq, Seq>> address_pairs(std::size_t count, unsigned long long seed = 9157) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Seq, Seq>> pairs;
    while (pairs.size() < count) {
        const InternalAddress a = random_address(rng, 2 + static_cast<int>(rng() % 4));
        InternalAddress b = a;
        const int ext = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < ext; ++i)
            b.entries.push_back(b.entries.back() + 1 + static_cast<long long>(rng() % 4));
        const Seq mu = address_to_kneading(a), nu = address_to_kneading(b);
        if (precedes_by_address(mu, nu) == OrderEvidence::Yes) pairs.emplace_back(mu, nu);
    }
    return pairs;
}

}  // namespace knead::testing
