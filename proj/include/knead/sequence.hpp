#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knead {

// Symbol of the kneading alphabet. Star acts as a wildcard in itinerary
// comparisons and as a replacement target in projections.
enum class Symbol : std::uint8_t { Zero = 0, One = 1, Star = 2 };

inline char symbol_char(Symbol s) {
    switch (s) {
        case Symbol::Zero: return '0';
        case Symbol::One: return '1';
        default: return '*';
    }
}

inline bool is_concrete(Symbol s) { return s != Symbol::Star; }

// Two symbols "differ" only when both are concrete and unequal; a star never
// differs from anything.
inline bool symbols_differ(Symbol a, Symbol b) {
    return is_concrete(a) && is_concrete(b) && a != b;
}

inline Symbol flip(Symbol s) {
    if (s == Symbol::Zero) return Symbol::One;
    if (s == Symbol::One) return Symbol::Zero;
    return Symbol::Star;
}

using Word = std::vector<Symbol>;

// An eventually periodic symbol sequence preperiod . period^omega, stored in
// canonical form: the period is primitive (not a proper power) and the
// preperiod is shortest possible.  Equality is canonical-form equality, which
// for eventually periodic sequences coincides with literal stream equality.
//
// The class carries no kneading-specific constraints beyond canonicity;
// shifted sequences and de-renormalized subsequences (which may start with 0
// or carry a star mid-period) are representable.  Kneading validity is a
// separate predicate.
class Seq {
  public:
    Seq() : per_{Symbol::Star} {}  // the trivial sequence
    Seq(Word preperiod, Word period);

    static Seq parse(std::string_view text);   // grammar: PRE(PER) over {0,1,*}
    std::string str() const;

    const Word& preperiod_word() const { return pre_; }
    const Word& period_word() const { return per_; }
    int preperiod() const { return static_cast<int>(pre_.size()); }
    int period() const { return static_cast<int>(per_.size()); }

    // 1-based indexing into preperiod . period^omega.
    Symbol entry(long long k) const;

    Seq shifted(long long n) const;
    Seq projected(Symbol e) const;  // replace every star by e, re-canonicalize
    Seq flipped() const;            // swap 0 <-> 1 everywhere

    bool has_star() const;
    bool is_trivial() const;        // the sequence star^omega
    // Star-periodic in the sense of the kneading alphabet: purely periodic,
    // exactly one star per period, sitting at the last position.
    bool is_star_periodic() const;
    // A valid abstract kneading sequence in this artifact's universe: the
    // trivial sequence, a star-periodic sequence starting with 1, or a
    // star-free eventually periodic sequence starting with 1.  Purely periodic
    // star-free sequences are representable but flagged here, since several
    // operations treat them specially (they arise as projections).
    bool starts_with_one() const;
    bool is_valid_kneading() const;

    bool operator==(const Seq& o) const { return pre_ == o.pre_ && per_ == o.per_; }
    bool operator!=(const Seq& o) const { return !(*this == o); }
    bool operator<(const Seq& o) const;  // arbitrary total order for containers

  private:
    Word pre_;
    Word per_;
    void canonicalize();
};

inline Seq trivial_sequence() { return Seq({}, {Symbol::Star}); }

// Bounded symbol stream: explicit symbols up to a hard horizon, no tail
// assumption.  Used where the caller supplies finitely many entries.
struct BoundedStream {
    Word symbols;
    Symbol entry(long long k) const {
        if (k < 1 || k > static_cast<long long>(symbols.size()))
            throw std::out_of_range("BoundedStream::entry: index beyond horizon");
        return symbols[static_cast<std::size_t>(k - 1)];
    }
    long long length() const { return static_cast<long long>(symbols.size()); }
};

BoundedStream parse_bounded(std::string_view digits);

}  // namespace knead
