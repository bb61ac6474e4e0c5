#include <catch2/catch_amalgamated.hpp>

#include "shafbound/gotzmann.hpp"
#include "shafbound/hilbert.hpp"
#include "shafbound/json_io.hpp"

using namespace shafbound;

namespace {

RatPoly linear(int c, int b) { return RatPoly({Rat(b), Rat(c)}); }

}  // namespace

TEST_CASE("binomial_term") {
    CHECK(binomial_term(1, 1) == RatPoly({Rat(1), Rat(1)}));            // x + 1
    CHECK(binomial_term(0, 4) == RatPoly::constant(1));                 // constant convention
    CHECK(binomial_term(2, 2) == RatPoly({Rat(0), Rat(1, 2), Rat(1, 2)}));  // (x+1)x/2
    CHECK_THROWS_AS(binomial_term(-1, 1), PreconditionViolated);
    CHECK_THROWS_AS(binomial_term(1, 0), PreconditionViolated);
}

TEST_CASE("greedy decomposition on the named examples") {
    const auto d1 = decompose_greedy(linear(3, 0));
    CHECK(d1.a_seq == std::vector<int>{1, 1, 1});
    CHECK(reconstruct(d1) == linear(3, 0));

    const auto d2 = decompose_greedy(linear(3, 1));
    CHECK(d2.a_seq == std::vector<int>{1, 1, 1, 0});
    CHECK(reconstruct(d2) == linear(3, 1));

    const auto d3 = decompose_greedy(RatPoly::constant(1));
    CHECK(d3.a_seq == std::vector<int>{0});
}

TEST_CASE("greedy rejects non-Hilbert inputs") {
    CHECK_THROWS_AS(decompose_greedy(RatPoly()), NotGotzmann);
    CHECK_THROWS_AS(decompose_greedy(linear(1, 0)), NotGotzmann);   // x: remainder -1
    CHECK_THROWS_AS(decompose_greedy(linear(-2, 5)), NotGotzmann);  // negative leading
    CHECK_THROWS_AS(decompose_greedy(RatPoly({Rat(0), Rat(1, 2)})), NotGotzmann);  // x/2
    CHECK_THROWS_AS(decompose_greedy(RatPoly::monomial(1, 2)), NotGotzmann);       // x^2
    // cap: the constant tail of 10x - 40 is far above three terms
    GotzmannOptions opts;
    opts.max_iterations = 3;
    CHECK_THROWS_AS(decompose_greedy(linear(10, 40), opts), NotGotzmann);
}

TEST_CASE("recursive lengths on the named examples") {
    const LengthTable t1 = lengths_recursive(linear(3, 1), 1);
    REQUIRE(t1.ell.size() == 3);
    CHECK(t1.ell[2] == 0);
    CHECK(t1.ell[1] == 3);
    CHECK(t1.ell[0] == 4);
    CHECK(t1.q[1][0] == 0);
    CHECK(t1.q[1][1] == 3);
    CHECK(t1.q[0][0] == 1);

    // constants are handled as n = 0 with ell_0 = p_0
    const LengthTable t2 = lengths_recursive(RatPoly::constant(7), 0);
    CHECK(t2.ell0() == 7);
    CHECK(t2.q[0][0] == 7);

    // the scaled genus-2 pipeline polynomial 32x - 1: q_{1,0} is the full
    // sum over j = 1..32 of (2 - j) = -464, so ell_0 = 32 + (-1 + 464)
    const LengthTable t3 = lengths_recursive(linear(32, -1), 1);
    CHECK(t3.ell[1] == 32);
    CHECK(t3.q[1][0] == -464);
    CHECK(t3.ell0() == 495);
    CHECK(decompose_greedy(linear(32, -1)).length() == 495);
}

TEST_CASE("recursion rejects what greedy rejects") {
    CHECK_THROWS_AS(lengths_recursive(RatPoly::monomial(1, 2), 2), NotGotzmann);
    CHECK_THROWS_AS(lengths_recursive(linear(1, 0), 1), NotGotzmann);
    CHECK_THROWS_AS(lengths_recursive(linear(3, 1), 2), PreconditionViolated);  // wrong n
}

TEST_CASE("sigma_symmetric") {
    CHECK(sigma_symmetric(1, 1, 1) == 1);
    CHECK(sigma_symmetric(2, 3, 2) == 0);  // values -1 and 0
    CHECK(sigma_symmetric(5, -7, 0) == 1);
    // j = 1: values {1, 2, 3}, e_2 = 2 + 3 + 6
    CHECK(sigma_symmetric(3, 1, 2) == 11);
    CHECK_THROWS_AS(sigma_symmetric(2, 1, 3), PreconditionViolated);
}

TEST_CASE("mu") {
    CHECK(mu(linear(32, -1), 1) == 32);
    CHECK(mu(linear(1, 100), 1) == 100);
    CHECK(mu(linear(1, 0), 1) == 1);
    CHECK_THROWS_AS(mu(RatPoly({Rat(0), Rat(1, 3), Rat(1, 6)}), 2), NonIntegral);
    CHECK_THROWS_AS(mu(linear(3, 1), 2), PreconditionViolated);
}

TEST_CASE("gamma tower") {
    CHECK(gamma_k(0) == 1);
    CHECK(gamma_k(1) == 2);
    CHECK(gamma_k(2) == 64);
    CHECK(gamma_k(3) == 1358954496);
}

TEST_CASE("c tower") {
    CHECK(c_seq(0) == 1);
    CHECK(c_seq(1) == 2);
    CHECK(c_seq(2) == 28);
    CHECK(c_seq(3) == 923522);
}

TEST_CASE("c_k is dominated by gamma_k") {
    for (int k = 0; k <= 8; ++k) CHECK(c_seq(k) <= gamma_k(k));
}

TEST_CASE("tower length bound") {
    CHECK(length_upper_bound(linear(32, -1), 1).exact_value() == 2080);
    // mu = 1: 1 + 2
    CHECK(tower_length_bound(1, 1).exact_value() == 3);
    // n = 2, mu = 2: 2 + 2*4 + 64*64
    CHECK(tower_length_bound(2, 2).exact_value() == 4106);
    // P = x^2 has mu = 2
    CHECK(mu(RatPoly::monomial(1, 2), 2) == 2);
    CHECK(length_upper_bound(RatPoly::monomial(1, 2), 2).exact_value() == 4106);
}

TEST_CASE("tower bound switches to log tier when the digits explode") {
    PrecisionGuard guard(50);
    MagnitudePolicy saved = magnitude_policy();
    magnitude_policy().exact_digit_limit = 50;
    const Magnitude m = tower_length_bound(1000, 3);
    magnitude_policy() = saved;
    REQUIRE(m.level() == 1);
    // dominant term gamma_3 * mu^{4!} = 1358954496 * 10^72
    const Magnitude exact = tower_length_bound(1000, 3);
    REQUIRE(exact.level() == 0);
    const Real diff = boost::multiprecision::abs(m.log_payload() - log10_int(exact.exact_value()));
    CHECK(diff < Real("1e-30"));
}

TEST_CASE("roundtrip and oracle equivalence across a mixed corpus") {
    std::vector<RatPoly> polys;
    for (int c = 1; c <= 20; ++c) polys.push_back(RatPoly::constant(c));
    for (int c = 1; c <= 12; ++c)
        for (int b = -6; b <= 6; ++b) polys.push_back(linear(c, b));
    for (Int g = 2; g <= 12; ++g) {
        const RatPoly h = *curve_canonical_hilbert(g).hilbert;
        polys.push_back(h.substitute_scale(3));
        polys.push_back(h.substitute_scale(16));
    }
    int successes = 0;
    for (const RatPoly& p : polys) {
        GotzmannDecomposition dec;
        try {
            dec = decompose_greedy(p);
        } catch (const NotGotzmann&) {
            CHECK_THROWS_AS(lengths_recursive(p, p.degree()), NotGotzmann);
            continue;
        }
        ++successes;
        CHECK(reconstruct(dec) == p);
        REQUIRE(std::is_sorted(dec.a_seq.rbegin(), dec.a_seq.rend()));
        const LengthTable t = lengths_recursive(p, p.degree());
        CHECK(t.ell0() == Int(dec.length()));
        // chain 0 = ell_{n+1} < ell_n <= ... <= ell_0
        CHECK(t.ell.back() == 0);
        CHECK(t.ell[t.ell.size() - 2] > 0);
        for (std::size_t k = 0; k + 1 < t.ell.size(); ++k) CHECK(t.ell[k] >= t.ell[k + 1]);
        // q_{k,k} = (ell_k - ell_{k+1}) / k!
        for (std::size_t k = 0; k + 1 < t.ell.size(); ++k)
            CHECK(t.q[k][k] == Rat(t.ell[k] - t.ell[k + 1], factorial(static_cast<unsigned>(k))));
        // tower bound
        const Magnitude star = length_upper_bound(p, p.degree());
        REQUIRE(star.is_exact());
        CHECK(Int(dec.length()) <= star.exact_value());
    }
    CHECK(successes > 100);
}

TEST_CASE("degree-two decompositions") {
    // binom(x+2,2) + binom(x+1,1) + 1: a = (2,1,0)
    const RatPoly p = binomial_term(2, 1) + binomial_term(1, 2) + binomial_term(0, 3);
    const auto dec = decompose_greedy(p);
    CHECK(dec.a_seq == std::vector<int>{2, 1, 0});
    CHECK(lengths_recursive(p, 2).ell0() == 3);

    // plane Hilbert polynomial binom(x+2,2): a = (2)
    const auto plane = decompose_greedy(binomial_term(2, 1));
    CHECK(plane.a_seq == std::vector<int>{2});

    // twisted cubic: h(t) = 3t + 1
    const auto cubic = decompose_greedy(linear(3, 1));
    CHECK(cubic.length() == 4);
}

TEST_CASE("json serialization") {
    const auto dec = decompose_greedy(linear(3, 1));
    CHECK(decomposition_to_json(dec).dump() == "{\"a\":[1,1,1,0],\"length\":4}");
    const LengthTable t = lengths_recursive(linear(3, 1), 1);
    CHECK(length_table_to_json(t).dump() ==
          "{\"ell\":[\"0\",\"3\",\"4\"],\"q\":[[\"1\"],[\"0\",\"3\"]]}");
}
