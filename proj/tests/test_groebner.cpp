#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "galois/groebner.hpp"

using namespace galois;

namespace {

PolyQx P(const std::string& s, const PolyRingPtr& ring) { return parse_poly(s, ring); }

IdealQx ideal(const PolyRingPtr& ring, std::initializer_list<const char*> gens) {
    std::vector<PolyQx> g;
    for (const char* s : gens) g.push_back(parse_poly(s, ring));
    return IdealQx(ring, std::move(g));
}

}  // namespace

TEST_CASE("term order axioms and known comparisons") {
    auto ring = make_ring({"a", "b", "c"});
    TermOrder g = TermOrder::grevlex();
    Monomial a = Monomial::var(0), b = Monomial::var(1), c = Monomial::var(2);
    CHECK(g.compare(a, b) > 0);
    CHECK(g.compare(b, c) > 0);
    // classic grevlex example: b^2 > a*c
    CHECK(g.compare(b * b, a * c) > 0);
    // lex: a*c > b^2
    CHECK(TermOrder::lex().compare(a * c, b * b) > 0);

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> ed(0, 3);
    auto rand_mono = [&]() {
        return Monomial({{0, ed(rng)}, {1, ed(rng)}, {2, ed(rng)}});
    };
    for (TermOrder ord : {TermOrder::grevlex(), TermOrder::lex(), TermOrder::block_elim(0b010)}) {
        for (int it = 0; it < 200; ++it) {
            Monomial x = rand_mono(), y = rand_mono(), z = rand_mono();
            // antisymmetry and totality
            CHECK(ord.compare(x, y) == -ord.compare(y, x));
            if (x == y) CHECK(ord.compare(x, y) == 0);
            // compatibility with multiplication
            int before = ord.compare(x, y);
            CHECK(ord.compare(x * z, y * z) == before);
            // 1 is minimal
            CHECK(ord.compare(x, Monomial::one()) >= 0);
            // transitivity spot check
            if (ord.compare(x, y) > 0 && ord.compare(y, z) > 0) CHECK(ord.compare(x, z) > 0);
        }
    }
}

TEST_CASE("multipoly parse and print round trip") {
    auto ring = matrix_ring(2);
    for (const char* s :
         {"y11*y22 - y12*y21", "y11^2 + 2*y11*y12 + y12^2", "(x + 1)*y11 - x*y22",
          "y21 - y12", "x", "0", "-y11 + 1/2"}) {
        PolyQx p = P(s, ring);
        PolyQx q = P(p.str(), ring);
        CHECK(p == q);
        CHECK(p.str() == q.str());
    }
}

TEST_CASE("groebner basics") {
    auto ring = make_ring({"y1", "y2"});
    SUBCASE("divisibility") {
        auto b = groebner_basis(std::vector<PolyQx>{P("y1", ring), P("y1*y2", ring)},
                                TermOrder::grevlex());
        REQUIRE(b.size() == 1);
        CHECK(b[0] == P("y1", ring));
    }
    SUBCASE("membership collapse") {
        auto b = groebner_basis(std::vector<PolyQx>{P("y1^2 - 1", ring), P("y1 - 1", ring)},
                                TermOrder::grevlex());
        REQUIRE(b.size() == 1);
        CHECK(b[0] == P("y1 - 1", ring));
    }
    SUBCASE("linear solve") {
        auto b = groebner_basis(std::vector<PolyQx>{P("y1 + y2", ring), P("y1 - y2", ring)},
                                TermOrder::grevlex());
        REQUIRE(b.size() == 2);
        CHECK(b[0] == P("y1", ring));
        CHECK(b[1] == P("y2", ring));
    }
    SUBCASE("empty input") {
        auto b = groebner_basis(std::vector<PolyQx>{}, TermOrder::grevlex());
        CHECK(b.empty());
    }
}

TEST_CASE("groebner is canonical under recomputation") {
    auto ring = make_ring({"u", "v", "w"});
    std::vector<PolyQx> gens{P("u^2 + v*w - 1", ring), P("u*v - w", ring), P("v^2 - u*w", ring)};
    auto b1 = groebner_basis(gens, TermOrder::grevlex());
    std::reverse(gens.begin(), gens.end());
    auto b2 = groebner_basis(gens, TermOrder::grevlex());
    REQUIRE(b1.size() == b2.size());
    for (size_t i = 0; i < b1.size(); ++i) {
        CHECK(b1[i] == b2[i]);
        CHECK(b1[i].str() == b2[i].str());
    }
}

TEST_CASE("normal form") {
    auto ring = make_ring({"y1"});
    IdealQx I = ideal(ring, {"y1 - 1"});
    CHECK(I.reduce(P("y1^2 - 1", ring)).is_zero());
    auto ring2 = matrix_ring(2);
    IdealQx J = ideal(ring2, {"y12"});
    CHECK(J.reduce(P("y11", ring2)) == P("y11", ring2));
    // normal_form(p + q) == normal_form(p) for q in the ideal
    IdealQx K = ideal(ring2, {"y11*y22 - y12*y21", "y12^2 - y21"});
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> cd(-3, 3);
    auto rand_poly = [&]() {
        PolyQx p(ring2, TermOrder::grevlex());
        for (const Monomial& m : monomials_up_to_degree(ring2, 2))
            p = p + PolyQx::from_monomial(ring2, TermOrder::grevlex(), m, RatFunc(Rational(cd(rng))));
        return p;
    };
    for (int it = 0; it < 20; ++it) {
        PolyQx p = rand_poly();
        PolyQx q = rand_poly() * K.generators()[0] + rand_poly() * K.generators()[1];
        CHECK(K.reduce(p + q) == K.reduce(p));
    }
}

TEST_CASE("ideal equality") {
    auto ring = make_ring({"y1"});
    CHECK(ideal_equal(ideal(ring, {"y1^2 - 1"}), ideal(ring, {"(y1 - 1)*(y1 + 1)"})));
    CHECK(!ideal_equal(ideal(ring, {"y1 - 1"}), ideal(ring, {"y1 + 1"})));
}

TEST_CASE("intersection") {
    auto ring = make_ring({"y1"});
    IdealQx a = ideal(ring, {"y1 - 1"});
    IdealQx b = ideal(ring, {"y1 + 1"});
    IdealQx c = intersect(a, b);
    CHECK(ideal_equal(c, ideal(ring, {"y1^2 - 1"})));
    CHECK(ideal_equal(intersect(a, a), a));

    // intersect(I, J) contained in both
    auto ring2 = matrix_ring(2);
    IdealQx I = ideal(ring2, {"y11", "y12*y21 - 1"});
    IdealQx J = ideal(ring2, {"y22", "y12 - y21"});
    IdealQx M = intersect(I, J);
    for (const auto& g : M.generators()) {
        CHECK(I.contains(g));
        CHECK(J.contains(g));
    }
}

TEST_CASE("eliminate") {
    auto ring = make_ring({"y", "z"});
    IdealQx I = ideal(ring, {"z - y^2", "z - 4"});
    IdealQx E = eliminate(I, 0b10);  // drop z
    CHECK(ideal_equal(E, ideal(ring, {"y^2 - 4"})));

    IdealQx I2 = ideal(ring, {"y"});
    CHECK(ideal_equal(eliminate(I2, 0b10), I2));
}

TEST_CASE("eliminate agrees with intersect on random small ideals") {
    auto ring = make_ring({"u", "v"});
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> cd(-2, 2);
    auto rand_poly = [&]() {
        PolyQx p(ring, TermOrder::grevlex());
        for (const Monomial& m : monomials_up_to_degree(ring, 2))
            p = p + PolyQx::from_monomial(ring, TermOrder::grevlex(), m, RatFunc(Rational(cd(rng))));
        return p;
    };
    for (int it = 0; it < 8; ++it) {
        IdealQx I(ring, {rand_poly(), rand_poly()});
        IdealQx J(ring, {rand_poly()});
        // the t-trick inside intersect IS elimination; cross-check the result
        // against mutual membership of generator products
        IdealQx M = intersect(I, J);
        for (const auto& g : M.generators()) {
            CHECK(I.contains(g));
            CHECK(J.contains(g));
        }
    }
}

TEST_CASE("is_unit_mod") {
    auto ring = matrix_ring(3);
    IdealQx I_irr = ideal(ring, {"y11", "y13", "y22", "y23", "y31", "y32"});
    PolyQx det = P("y11*y22*y33 - y11*y23*y32 - y12*y21*y33 + y12*y23*y31 + y13*y21*y32 - y13*y22*y31",
                   ring);
    CHECK(is_unit_mod(I_irr, P("y12", ring), det));
    CHECK(is_unit_mod(I_irr, P("1", ring), det));
    CHECK(!is_unit_mod(I_irr, P("y12 + y21", ring), det));
}

TEST_CASE("standard monomials") {
    auto ring = matrix_ring(3);
    IdealQx I_irr = ideal(ring, {"y11", "y13", "y22", "y23", "y31", "y32"});
    auto sm = standard_monomials(I_irr, 1);
    REQUIRE(sm.size() == 4);
    CHECK(monomial_str(sm[0], *ring) == "1");
    CHECK(monomial_str(sm[1], *ring) == "y33");
    CHECK(monomial_str(sm[2], *ring) == "y21");
    CHECK(monomial_str(sm[3], *ring) == "y12");

    IdealQx all = ideal(ring, {"y11", "y12", "y13", "y21", "y22", "y23", "y31", "y32", "y33"});
    auto sm2 = standard_monomials(all, 1);
    REQUIRE(sm2.size() == 1);
    CHECK(sm2[0].is_one());

    IdealQx I47 = ideal(ring, {"y11", "y12", "y22", "y23", "y31", "y33"});
    auto sm3 = standard_monomials(I47, 1);
    REQUIRE(sm3.size() == 4);
    CHECK(monomial_str(sm3[1], *ring) == "y32");
    CHECK(monomial_str(sm3[2], *ring) == "y21");
    CHECK(monomial_str(sm3[3], *ring) == "y13");
}

TEST_CASE("fibonacci relation ideal membership (source example values)") {
    auto ring = matrix_ring(2);
    IdealQx I = ideal(ring, {"y21 - y12", "y22 - y12 - y11"});
    CHECK(I.contains(P("y21 - y12", ring)));
    // same ideal presented through a different generating set
    IdealQx J = ideal(ring, {"y21 - y12", "y22 - y21 - y11", "y11*y22 - y11*y12 - y11^2"});
    CHECK(ideal_equal(I, J));
}
