#include "knead/sequence.hpp"

#include <algorithm>

namespace knead {

Seq::Seq(Word preperiod, Word period) : pre_(std::move(preperiod)), per_(std::move(period)) {
    if (per_.empty()) throw std::invalid_argument("Seq: period must be nonempty");
    canonicalize();
}

void Seq::canonicalize() {
    // Reduce the period to its primitive root.
    const std::size_t p = per_.size();
    for (std::size_t d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < p && ok; ++i) ok = per_[i] == per_[i - d];
        if (ok) {
            per_.resize(d);
            break;
        }
    }
    // Absorb preperiod symbols that already agree with the periodic tail:
    // while the last preperiod symbol equals the last period symbol, rotate
    // the period right and drop that symbol.
    while (!pre_.empty() && pre_.back() == per_.back()) {
        per_.insert(per_.begin(), per_.back());
        per_.pop_back();
        pre_.pop_back();
    }
}

Symbol Seq::entry(long long k) const {
    if (k < 1) throw std::out_of_range("Seq::entry: 1-based index required");
    const long long r = preperiod();
    if (k <= r) return pre_[static_cast<std::size_t>(k - 1)];
    return per_[static_cast<std::size_t>((k - r - 1) % period())];
}

Seq Seq::shifted(long long n) const {
    if (n < 0) throw std::invalid_argument("Seq::shifted: negative shift");
    const long long r = preperiod();
    if (n <= r) {
        Word npre(pre_.begin() + static_cast<std::ptrdiff_t>(n), pre_.end());
        return Seq(std::move(npre), per_);
    }
    const long long rot = (n - r) % period();
    Word nper(per_.begin() + static_cast<std::ptrdiff_t>(rot), per_.end());
    nper.insert(nper.end(), per_.begin(), per_.begin() + static_cast<std::ptrdiff_t>(rot));
    return Seq({}, std::move(nper));
}

Seq Seq::projected(Symbol e) const {
    if (!is_concrete(e)) throw std::invalid_argument("Seq::projected: concrete symbol required");
    Word npre = pre_, nper = per_;
    for (auto& s : npre)
        if (s == Symbol::Star) s = e;
    for (auto& s : nper)
        if (s == Symbol::Star) s = e;
    return Seq(std::move(npre), std::move(nper));
}

Seq Seq::flipped() const {
    Word npre = pre_, nper = per_;
    for (auto& s : npre) s = flip(s);
    for (auto& s : nper) s = flip(s);
    return Seq(std::move(npre), std::move(nper));
}

bool Seq::has_star() const {
    return std::find(pre_.begin(), pre_.end(), Symbol::Star) != pre_.end() ||
           std::find(per_.begin(), per_.end(), Symbol::Star) != per_.end();
}

bool Seq::is_trivial() const { return pre_.empty() && per_.size() == 1 && per_[0] == Symbol::Star; }

bool Seq::is_star_periodic() const {
    if (!pre_.empty()) return false;
    if (per_.back() != Symbol::Star) return false;
    return std::count(per_.begin(), per_.end(), Symbol::Star) == 1;
}

bool Seq::starts_with_one() const { return entry(1) == Symbol::One; }

bool Seq::is_valid_kneading() const {
    if (is_trivial()) return true;
    if (!starts_with_one()) return false;
    if (has_star()) return is_star_periodic();
    return preperiod() > 0;  // star-free purely periodic sequences are not kneading sequences
}

bool Seq::operator<(const Seq& o) const {
    if (pre_ != o.pre_) return pre_ < o.pre_;
    return per_ < o.per_;
}

namespace {

Symbol char_symbol(char c, std::size_t pos) {
    switch (c) {
        case '0': return Symbol::Zero;
        case '1': return Symbol::One;
        case '*': return Symbol::Star;
        default:
            throw std::invalid_argument(std::string("invalid symbol '") + c + "' at position " +
                                        std::to_string(pos + 1) + ", expected 0, 1 or *");
    }
}

}  // namespace

Seq Seq::parse(std::string_view text) {
    Word pre, per;
    std::size_t i = 0;
    for (; i < text.size() && text[i] != '('; ++i) pre.push_back(char_symbol(text[i], i));
    if (i == text.size()) throw std::invalid_argument("sequence must contain a (period): got '" + std::string(text) + "'");
    ++i;
    for (; i < text.size() && text[i] != ')'; ++i) per.push_back(char_symbol(text[i], i));
    if (i == text.size() || text[i] != ')')
        throw std::invalid_argument("unterminated period starting at position " + std::to_string(pre.size() + 1) +
                                    " in '" + std::string(text) + "'");
    if (i + 1 != text.size())
        throw std::invalid_argument("trailing characters after position " + std::to_string(i + 1) + " in '" +
                                    std::string(text) + "'");
    if (per.empty()) throw std::invalid_argument("empty period in '" + std::string(text) + "'");

    // Enforce the kneading-alphabet star placement at the parse boundary:
    // a star may only occur as the last symbol of the period of a purely
    // periodic word, and only once.
    const bool star_in_pre = std::find(pre.begin(), pre.end(), Symbol::Star) != pre.end();
    const auto stars_in_per = std::count(per.begin(), per.end(), Symbol::Star);
    if (star_in_pre) throw std::invalid_argument("star not allowed in the preperiod");
    if (stars_in_per > 1) throw std::invalid_argument("at most one star allowed per period");
    if (stars_in_per == 1) {
        if (!pre.empty()) throw std::invalid_argument("star-periodic sequences must have empty preperiod");
        if (per.back() != Symbol::Star) throw std::invalid_argument("the star must sit at the end of the period");
    }
    return Seq(std::move(pre), std::move(per));
}

std::string Seq::str() const {
    std::string out;
    out.reserve(pre_.size() + per_.size() + 2);
    for (Symbol s : pre_) out.push_back(symbol_char(s));
    out.push_back('(');
    for (Symbol s : per_) out.push_back(symbol_char(s));
    out.push_back(')');
    return out;
}

BoundedStream parse_bounded(std::string_view digits) {
    BoundedStream s;
    s.symbols.reserve(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) s.symbols.push_back(char_symbol(digits[i], i));
    return s;
}

}  // namespace knead
