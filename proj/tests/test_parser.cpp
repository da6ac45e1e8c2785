#include "taut/parser.hpp"

#include "random_classes.hpp"
#include "taut/pushforward.hpp"

#include <doctest.h>

#include <random>

using namespace taut;
using namespace taut::testing;

namespace {

const RingParams kD3(3, 2);
constexpr int kStar = PointSet::kStar;

}  // namespace

TEST_CASE("parses the centering class with a star alias") {
    const PointSet total = PointSet::of({1}).with_star();
    const TautClass parsed = parse_expression("chi*pi(1,s) - psi(e,s)", kD3, total, "s");
    const TautClass expected =
        TautClass::intersection(kD3, total, {1, kStar}).scaled(kD3.chi) -
        TautClass::psi(kD3, total, CharClassMonomial::euler(3), kStar);
    CHECK(parsed == expected);

    // The reserved name "star" always works.
    CHECK(parse_expression("chi*pi(1,star) - psi(e,star)", kD3, total) == expected);
}

TEST_CASE("kappa atoms and monomial arguments") {
    const PointSet none;
    CHECK(parse_expression("kappa(e^2)", kD3, none) ==
          TautClass::kappa(kD3, none, CharClassMonomial::euler(3, 2)));
    CHECK(parse_expression("kappa(e*e)", kD3, none) ==
          TautClass::kappa(kD3, none, CharClassMonomial::euler(3, 2)));
    // p_d rewrites to e^2.
    CHECK(parse_expression("kappa(p3)", kD3, none) ==
          parse_expression("kappa(e^2)", kD3, none));
    // kappa(1) = 0 and kappa of low degree folds away.
    CHECK(parse_expression("kappa(1)", kD3, none).is_zero());
    CHECK(parse_expression("kappa(p1)", kD3, none).is_zero());
    CHECK(parse_expression("kappa(e)", kD3, none) ==
          TautClass::scalar(kD3, none, kD3.chi));
}

TEST_CASE("rationals, powers and division") {
    const PointSet none;
    CHECK(parse_expression("3/4", kD3, none) == TautClass::scalar(kD3, none, rat(3, 4)));
    CHECK(parse_expression("-2^3", kD3, none) == TautClass::scalar(kD3, none, rat(-8)));
    CHECK(parse_expression("(1 - 3)^2", kD3, none) == TautClass::scalar(kD3, none, rat(4)));
    CHECK(parse_expression("kappa(e^2)^0", kD3, none) ==
          TautClass::scalar(kD3, none, rat(1)));
    CHECK(parse_expression("chi", kD3, none) == TautClass::scalar(kD3, none, rat(-2)));
    CHECK(parse_expression("kappa(e^2)/chi", kD3, none) ==
          TautClass::kappa(kD3, none, CharClassMonomial::euler(3, 2)).scaled(rat(-1, 2)));
    CHECK_THROWS_AS(parse_expression("1/0", kD3, none), ParseError);
    CHECK_THROWS_AS(parse_expression("1/kappa(e^2)", kD3, none), ParseError);
}

TEST_CASE("parse errors carry positions") {
    const PointSet total = PointSet::of({1, 2}).with_star();

    // Intersection classes need at least two points.
    CHECK_THROWS_AS(parse_expression("pi(1)", kD3, total), ParseError);

    // Unknown points and generators out of range.
    CHECK_THROWS_AS(parse_expression("pi(1,7)", kD3, total), ParseError);
    CHECK_THROWS_AS(parse_expression("psi(e,9)", kD3, total), ParseError);
    CHECK_THROWS_AS(parse_expression("kappa(p4)", kD3, total), ParseError);
    CHECK_THROWS_AS(parse_expression("psi(q,1)", kD3, total), ParseError);

    // Unbalanced and trailing input.
    CHECK_THROWS_AS(parse_expression("(1 + 2", kD3, total), ParseError);
    CHECK_THROWS_AS(parse_expression("1 + ", kD3, total), ParseError);
    CHECK_THROWS_AS(parse_expression("1 # 2", kD3, total), ParseError);
    CHECK_THROWS_AS(parse_expression("kappa(e^2) kappa(e^2)", kD3, total), ParseError);

    try {
        parse_expression("1 + kappa(p9)", kD3, total);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 10);  // offset of "p9"
        CHECK(std::string(e.what()).find("p9") != std::string::npos);
    }
}

TEST_CASE("negative exponents are rejected") {
    const PointSet none;
    CHECK_THROWS_AS(parse_expression("kappa(e^2)^-1", kD3, none), ParseError);
    CHECK_THROWS_AS(parse_expression("kappa(e^-2)", kD3, none), ParseError);
}

TEST_CASE("parse after print is the identity on canonical forms") {
    std::mt19937 rng(321);
    const PointSet pts = PointSet::of({1, 2, 3}).with_star();
    for (int t = 0; t < 200; ++t) {
        const TautClass a = random_class(rng, kD3, pts, 3);
        CHECK(parse_expression(a.str(), kD3, pts) == a);
    }
    // Also over the empty point set (pure kappa polynomials).
    const PointSet none;
    for (int t = 0; t < 50; ++t) {
        const TautClass a = random_class(rng, kD3, none, 3);
        CHECK(parse_expression(a.str(), kD3, none) == a);
    }
}

TEST_CASE("print after parse normalizes") {
    const PointSet pts = PointSet::of({1, 2});
    // pi_{12}^2 normalizes to the block with psi(e) at the representative.
    const TautClass a = parse_expression("pi(1,2)*pi(1,2)", kD3, pts);
    CHECK(a.str() == "psi(e,1)*pi(1,2)");
    // psi factors merge across the block.
    CHECK(parse_expression("pi(1,2)*psi(e^2,2)", kD3, pts).str() == "psi(e^2,1)*pi(1,2)");
}

TEST_CASE("standalone char-class monomial parsing") {
    CHECK(parse_charclass("e^2*p1", kD3) == CharClassMonomial::make(3, {{0, 2}, {1, 1}}));
    CHECK(parse_charclass("1", kD3) == CharClassMonomial::unit(3));
    CHECK(parse_charclass("p3", kD3) == CharClassMonomial::euler(3, 2));
    CHECK_THROWS_AS(parse_charclass("p4", kD3), ParseError);
    CHECK_THROWS_AS(parse_charclass("e + e", kD3), ParseError);
}

TEST_CASE("malformed input never escapes as anything but a parse error") {
    std::mt19937 rng(1234);
    const PointSet pts = PointSet::of({1, 2}).with_star();
    const std::string alphabet = "epk01239+-*/^(), aschitr";
    std::uniform_int_distribution<size_t> len(0, 24);
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    for (int t = 0; t < 500; ++t) {
        std::string text;
        const size_t n = len(rng);
        for (size_t i = 0; i < n; ++i)
            text += alphabet[pick(rng)];
        try {
            (void)parse_expression(text, kD3, pts, "s");
        } catch (const ParseError&) {
            // expected for most random strings
        }
    }
}

TEST_CASE("parsed classes feed the pushforward machinery") {
    const PointSet total = PointSet::of({1}).with_star();
    const TautClass a = parse_expression("(chi*pi(1,star) - psi(e,star))^2", kD3, total);
    const TautClass pushed = push_forget(a);
    const PointSet one = PointSet::of({1});
    CHECK(pushed ==
          TautClass::psi(kD3, one, CharClassMonomial::euler(3), 1)
                  .scaled((kD3.chi - 2) * kD3.chi) +
              TautClass::kappa(kD3, one, CharClassMonomial::euler(3, 2)));
}
