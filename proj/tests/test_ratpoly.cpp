#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "shafbound/json_io.hpp"
#include "shafbound/ratpoly.hpp"

using namespace shafbound;

namespace {

RatPoly random_poly(std::mt19937_64& rng, int max_deg = 5) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 6);
    std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = Rat(num(rng), den(rng));
    return RatPoly(std::move(c));
}

}  // namespace

TEST_CASE("canonical form and degree") {
    CHECK(RatPoly().degree() == -1);
    CHECK(RatPoly({Rat(0), Rat(0)}).degree() == -1);
    CHECK(RatPoly({Rat(1), Rat(0)}) == RatPoly::constant(1));
    CHECK(RatPoly({Rat(-1), Rat(2)}).degree() == 1);
    CHECK(RatPoly::monomial(Rat(3), 2).degree() == 2);
    CHECK(RatPoly::constant(0).is_zero());
}

TEST_CASE("eval") {
    const RatPoly p({Rat(-1), Rat(2)});  // 2x - 1
    CHECK(p.eval(16) == 31);
    CHECK(RatPoly().eval(Rat(123, 7)) == 0);
    CHECK(RatPoly({Rat(1), Rat(3)}).eval(1) == 4);
}

TEST_CASE("backward difference") {
    CHECK(RatPoly::monomial(1, 2).backward_difference() == RatPoly({Rat(-1), Rat(2)}));
    CHECK(RatPoly::constant(7).backward_difference().is_zero());
    // binom(x+2,2) -> binom(x+1,1) = x + 1
    const RatPoly b2({Rat(1), Rat(3, 2), Rat(1, 2)});
    CHECK(b2.backward_difference() == RatPoly({Rat(1), Rat(1)}));
}

TEST_CASE("substitute scale") {
    const RatPoly p({Rat(-1), Rat(2)});
    CHECK(p.substitute_scale(16) == RatPoly({Rat(-1), Rat(32)}));
    CHECK(p.substitute_scale(1) == p);
    CHECK(RatPoly::monomial(1, 2).substitute_scale(3) == RatPoly::monomial(9, 2));
    CHECK_THROWS_AS(p.substitute_scale(0), PreconditionViolated);
}

TEST_CASE("integer valuedness") {
    CHECK(RatPoly({Rat(0), Rat(1, 2), Rat(1, 2)}).is_integer_valued());  // x(x+1)/2
    CHECK_FALSE(RatPoly({Rat(0), Rat(1, 2)}).is_integer_valued());       // x/2
    const RatPoly p({Rat(-1, 2), Rat(2)});                               // 2x - 1/2
    CHECK_FALSE(p.is_integer_valued());
    CHECK(p.binomial_basis_coeffs()[0] == Rat(-1, 2));
}

TEST_CASE("eval respects ring operations") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 9);
    for (int i = 0; i < 200; ++i) {
        const RatPoly p = random_poly(rng);
        const RatPoly q = random_poly(rng);
        const Rat t(num(rng), den(rng));
        CHECK((p + q).eval(t) == p.eval(t) + q.eval(t));
        CHECK((p * q).eval(t) == p.eval(t) * q.eval(t));
        CHECK((p - q).eval(t) == p.eval(t) - q.eval(t));
    }
}

TEST_CASE("difference lowers degree and scales the leading coefficient") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        RatPoly p = random_poly(rng);
        if (p.degree() < 1) continue;
        const RatPoly d = p.backward_difference();
        REQUIRE(d.degree() == p.degree() - 1);
        CHECK(d.leading() == Rat(p.degree()) * p.leading());
    }
}

TEST_CASE("scale composes multiplicatively") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const RatPoly p = random_poly(rng);
        CHECK(p.substitute_scale(3).substitute_scale(5) == p.substitute_scale(15));
    }
}

TEST_CASE("integer valuedness survives differencing") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int i = 0; i < 100; ++i) {
        // random integer combination of binomial basis polynomials
        RatPoly p;
        RatPoly basis = RatPoly::constant(1);
        for (int k = 0; k <= 4; ++k) {
            p = p + Rat(coeff(rng)) * basis;
            basis = basis * RatPoly({Rat(-k), Rat(1)});
            basis = Rat(Int(1), Int(k + 1)) * basis;
        }
        if (p.is_zero()) continue;
        REQUIRE(p.is_integer_valued());
        CHECK(p.backward_difference().is_integer_valued());
    }
}

TEST_CASE("json round trip is bit exact") {
    const RatPoly p({Rat(-1), Rat(2)});
    const Json j = ratpoly_to_json(p);
    CHECK(j.dump() == "[\"-1\",\"2\"]");
    CHECK(ratpoly_from_json(j) == p);

    const RatPoly q({Rat(1, 3), Rat(0), Rat(-7, 2)});
    CHECK(ratpoly_from_json(ratpoly_to_json(q)) == q);
    CHECK(ratpoly_from_json(Json::parse("[-1,2]")) == p);
}
