#include <catch_amalgamated.hpp>

#include "uqp/io.hpp"
#include "uqp/parse.hpp"
#include "uqp/verify.hpp"

using namespace uqp;

namespace {
const Letter e12{1, 2}, e13{1, 3}, e23{2, 3};
}

TEST_CASE("grammar") {
    const Expression e = parse("x1*x2 - q^-1*x2*x1", 2);
    CHECK(e.kind == Expression::Kind::sum);
    REQUIRE(e.children.size() == 2);
    CHECK(e.children[0].first == 1);
    CHECK(e.children[1].first == -1);
    CHECK(e.children[0].second.kind == Expression::Kind::product);

    CHECK_NOTHROW(parse("(q+q^-1)*x1*x2*x1", 2));
    CHECK_NOTHROW(parse("e[1,3]^2", 2));
    CHECK_NOTHROW(parse("x1 x2", 2));        // implicit multiplication
    CHECK_NOTHROW(parse("  x1\t* x2 ", 2));  // whitespace-insensitive
    CHECK_NOTHROW(parse("-x1 + 2", 2));      // leading sign
    CHECK_NOTHROW(parse("3(x1 + x2)q^2", 2));
}

TEST_CASE("evaluation") {
    CHECK(parse_element("x1*x2 - q^-1*x2*x1", 2) == Element::letter(e13));
    CHECK(parse_element("x1*x1*x2 - (q+q^-1)*x1*x2*x1 + x2*x1*x1", 2).is_zero());
    CHECK(parse_element("1", 2) == Element::one());
    CHECK(parse_element("q^-3", 2) == Element::scalar(Laurent::q_power(-3)));
    CHECK(parse_element("e[1,3]^2", 2) ==
          Element::monomial(Monomial::letter(e13, 2)));
    CHECK(parse_element("x2 x1", 2) == Element::generator(2) * Element::generator(1));
    CHECK(parse_element("2*3", 2) == Element::scalar(Laurent(6)));
    CHECK(parse_element("x1^0", 2) == Element::one());
    CHECK(parse_element("-x1", 2) == -Element::generator(1));
}

TEST_CASE("errors carry positions") {
    const auto pos_of = [](const std::string& text, int n) -> size_t {
        try {
            parse(text, n);
        } catch (const ParseError& e) {
            return e.pos;
        }
        return static_cast<size_t>(-1);
    };
    CHECK(pos_of("x1 + ", 2) == 5);
    CHECK(pos_of("x1 # x2", 2) == 3);
    CHECK(pos_of("(x1", 2) == 3);
    CHECK(pos_of("e[1 2]", 2) == 4);
    CHECK(pos_of("x9", 2) == 0);        // index out of range for rank
    CHECK(pos_of("e[1,4]", 2) == 0);    // letter out of range for rank
    CHECK(pos_of("e[2,2]", 2) == 0);
    CHECK(pos_of("x1^-1", 2) == 2);     // negative exponent only on q
    CHECK_NOTHROW(parse("q^-1", 2));
    CHECK_NOTHROW(parse("e[1,4]", 3));
}

TEST_CASE("round trip: parse after render is the identity") {
    Rng rng(61);
    for (int k = 0; k < 200; ++k) {
        const int n = rng.range(1, 3);
        const Element e = random_element(rng, n, 4, 3);
        const std::string text = to_text(e);
        INFO("text: " << text);
        CHECK(parse_element(text, n) == e);
    }
    // and the zero element
    CHECK(parse_element(to_text(Element::zero()), 2).is_zero());
}

TEST_CASE("rendering worked values") {
    CHECK(to_text(Element::generator(2) * Element::generator(1)) ==
          "q*e[1,2]*e[2,3] - q*e[1,3]");
    CHECK(to_text(Element::zero()) == "0");
    CHECK(to_text(Element::one()) == "1");
    CHECK(to_text(Element::scalar(Laurent::q_power(1) - Laurent::q_power(-1))) == "-q^-1 + q");
    const Element mixed = Element::scalar(Laurent(2)) + Element::letter(e12).scaled(-Laurent(1));
    CHECK(to_text(mixed) == "2 - e[1,2]");
}

TEST_CASE("json forms") {
    const json scalar = to_json(Laurent::q_power(-1) + Laurent(2));
    CHECK(scalar.dump() == "[[-1,1],[0,2]]");
    const json element = to_json(Element::generator(2) * Element::generator(1));
    REQUIRE(element.is_array());
    REQUIRE(element.size() == 2);
    CHECK(element[0]["monomial"].dump() == "[[1,2,1],[2,3,1]]");
    CHECK(element[0]["coeff"].dump() == "[[1,1]]");
    CHECK(element[1]["monomial"].dump() == "[[1,3,1]]");
    CHECK(element[1]["coeff"].dump() == "[[1,-1]]");
    const json tensor = to_json(tensor2(Element::one(), Element::generator(1)));
    CHECK(tensor.dump() == R"([{"coeff":[[0,1]],"slots":[[],[[1,2,1]]]}])");
}
