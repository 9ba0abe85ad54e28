#include <doctest.h>

#include <random>

#include "knead/sequence.hpp"

using namespace knead;

TEST_CASE("parse and print round canonical forms") {
    CHECK(Seq::parse("1(10)").str() == "1(10)");
    CHECK(Seq::parse("(1101*)").str() == "(1101*)");
    CHECK(Seq::parse("(10)").str() == "(10)");
    CHECK(Seq::parse("(*)").str() == "(*)");

    // canonicalization: proper powers reduce, absorbable preperiods shrink
    CHECK(Seq::parse("(1010)") == Seq::parse("(10)"));
    CHECK(Seq::parse("1(01)") == Seq::parse("(10)"));
    CHECK(Seq::parse("11(01)") == Seq::parse("1(10)"));
    CHECK(Seq::parse("110(10)") == Seq::parse("1(10)"));
    CHECK(Seq::parse("10(00)").str() == "1(0)");
}

TEST_CASE("parser rejects malformed words") {
    CHECK_THROWS_AS(Seq::parse("101"), std::invalid_argument);       // no period
    CHECK_THROWS_AS(Seq::parse("1()"), std::invalid_argument);       // empty period
    CHECK_THROWS_AS(Seq::parse("1*(10)"), std::invalid_argument);    // star in preperiod
    CHECK_THROWS_AS(Seq::parse("(1*0)"), std::invalid_argument);     // star not last
    CHECK_THROWS_AS(Seq::parse("1(10*)"), std::invalid_argument);    // star with preperiod
    CHECK_THROWS_AS(Seq::parse("(1**)"), std::invalid_argument);     // two stars
    CHECK_THROWS_AS(Seq::parse("(12)"), std::invalid_argument);      // bad symbol
}

TEST_CASE("1-based entry indexing") {
    const Seq eta = Seq::parse("(1101*)");
    CHECK(eta.entry(5) == Symbol::Star);   // period-5 star position
    CHECK(eta.entry(10) == Symbol::Star);
    CHECK(eta.entry(6) == Symbol::One);
    const Seq nu = Seq::parse("1(10)");
    CHECK(nu.entry(4) == Symbol::One);     // 1 10 10... -> position 4 is 1
    CHECK(Seq::parse("(1*)").entry(7) == Symbol::One);
    CHECK_THROWS_AS(nu.entry(0), std::out_of_range);
}

TEST_CASE("projections replace stars and re-canonicalize") {
    CHECK(Seq::parse("(101*)").projected(Symbol::One) == Seq::parse("(1011)"));
    CHECK(Seq::parse("(101*)").projected(Symbol::Zero) == Seq::parse("(10)"));  // period shrinks
    CHECK(Seq::parse("(1*)").projected(Symbol::One) == Seq::parse("(1)"));
}

TEST_CASE("shift walks the stream") {
    const Seq nu = Seq::parse("1(10)");
    CHECK(nu.shifted(1) == Seq::parse("(10)"));
    CHECK(nu.shifted(2) == Seq::parse("(01)"));
    CHECK(nu.shifted(3) == Seq::parse("(10)"));
    const Seq sp = Seq::parse("(1101*)");
    CHECK(sp.shifted(5) == sp);
}

TEST_CASE("kneading validity predicate") {
    CHECK(Seq::parse("(*)").is_valid_kneading());
    CHECK(Seq::parse("(1101*)").is_valid_kneading());
    CHECK(Seq::parse("1(10)").is_valid_kneading());
    CHECK_FALSE(Seq::parse("(10)").is_valid_kneading());   // purely periodic star-free
    CHECK_FALSE(Seq::parse("(01)").is_valid_kneading());
    CHECK(Seq::parse("(10)").shifted(1).str() == "(01)");  // representable all the same
}

TEST_CASE("fuzz: the parser only ever throws invalid_argument") {
    std::mt19937_64 rng(13);
    const char alphabet[] = "01*()x ";
    for (int trial = 0; trial < 3000; ++trial) {
        std::string s;
        const int len = static_cast<int>(rng() % 12);
        for (int i = 0; i < len; ++i) s.push_back(alphabet[rng() % (sizeof(alphabet) - 1)]);
        try {
            const Seq parsed = Seq::parse(s);
            CHECK(Seq::parse(parsed.str()) == parsed);  // print/parse round trip
        } catch (const std::invalid_argument&) {
        }
    }
}

TEST_CASE("property: shift commutes with entry") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        Word pre, per;
        const int r = static_cast<int>(rng() % 4), p = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < r; ++i) pre.push_back(rng() & 1 ? Symbol::One : Symbol::Zero);
        for (int i = 0; i < p; ++i) per.push_back(rng() & 1 ? Symbol::One : Symbol::Zero);
        const Seq s(pre, per);
        const long long n = static_cast<long long>(rng() % 10);
        const Seq t = s.shifted(n);
        for (long long k = 1; k <= 20; ++k) CHECK(t.entry(k) == s.entry(k + n));
    }
}
