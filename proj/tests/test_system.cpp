#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "galois/annihilator.hpp"
#include "galois/scalar_op.hpp"

using namespace galois;

namespace {

DifferenceSystem fib() { return system_from_strings(2, {{"0", "1"}, {"1", "1"}}); }
DifferenceSystem ex310() { return system_from_strings(3, {{"0", "1", "0"}, {"0", "0", "1"}, {"x", "0", "0"}}); }
DifferenceSystem ex53() { return system_from_strings(3, {{"0", "1", "0"}, {"x", "0", "0"}, {"0", "0", "1/x"}}); }

}  // namespace

TEST_CASE("choose_rho") {
    CHECK(choose_rho(fib()) == 0);
    CHECK(choose_rho(system_from_strings(2, {{"1/x", "0"}, {"0", "1"}})) >= 1);
    CHECK(choose_rho(system_from_strings(2, {{"0", "1"}, {"x - 3", "0"}})) == 4);
    CHECK(choose_rho(ex310()) == 1);
    CHECK(choose_rho(ex53()) == 1);
}

TEST_CASE("germ terms fibonacci") {
    GermSequence g = germ_terms(fib(), 0, 4);
    CHECK(g.terms[0] == MatQ::identity(2));
    MatQ a(2, 2);
    a(0, 0) = 0; a(0, 1) = 1; a(1, 0) = 1; a(1, 1) = 1;
    CHECK(g.terms[1] == a);
    CHECK(g.terms[2] == a * a);
    CHECK(g.terms[3] == a * a * a);
    // invariants: invertible and Z_{i+1} = A(i) Z_i
    DifferenceSystem S = fib();
    for (size_t i = 0; i + 1 < g.terms.size(); ++i) {
        CHECK(g.terms[i].det() != 0);
        CHECK(g.terms[i + 1] == S.eval_at(Int(g.rho + static_cast<long>(i))) * g.terms[i]);
    }
}

TEST_CASE("germ terms constant identity") {
    DifferenceSystem S = system_from_strings(2, {{"1", "0"}, {"0", "1"}});
    GermSequence g = germ_terms(S, 0, 5);
    for (const auto& z : g.terms) CHECK(z == MatQ::identity(2));
}

TEST_CASE("germ terms ex310 by direct multiplication") {
    DifferenceSystem S = ex310();
    GermSequence g = germ_terms(S, 1, 5);
    MatQ acc = MatQ::identity(3);
    for (int i = 0; i < 5; ++i) {
        CHECK(g.terms[i] == acc);
        acc = S.eval_at(Int(1 + i)) * acc;
    }
}

TEST_CASE("sigma_poly basics") {
    DifferenceSystem S = fib();
    auto ring = S.y_ring();
    PolyQx y11 = parse_poly("y11", ring);
    CHECK(sigma_poly(y11, S, 1) == parse_poly("y21", ring));
    PolyQx one = parse_poly("1", ring);
    CHECK(sigma_poly(one, S, 3) == one);
    // composition property
    PolyQx p = parse_poly("(x + 1)*y11*y22 - y12^2 + 3", ring);
    CHECK(sigma_poly(sigma_poly(p, S, 1), S, 2) == sigma_poly(p, S, 3));
    CHECK(sigma_poly(sigma_poly(p, S, 2), S, 1) == sigma_poly(p, S, 3));
}

TEST_CASE("sigma_poly certificates for the worked systems") {
    DifferenceSystem S = ex53();
    auto ring = S.y_ring();
    // sigma^2(y12) = x*y12, sigma^2(y21) = (x+1)*y21, sigma^2(y33) = y33/(x(x+1))
    CHECK(sigma_poly(parse_poly("y12", ring), S, 2) == parse_poly("x*y12", ring));
    CHECK(sigma_poly(parse_poly("y21", ring), S, 2) == parse_poly("(x+1)*y21", ring));
    CHECK(sigma_poly(parse_poly("y33", ring), S, 2) == parse_poly("y33/(x*(x+1))", ring));

    DifferenceSystem T = ex310();
    auto ring3 = T.y_ring();
    CHECK(sigma_poly(parse_poly("y13", ring3), T, 3) == parse_poly("x*y13", ring3));
    CHECK(sigma_poly(parse_poly("y21", ring3), T, 3) == parse_poly("(x+1)*y21", ring3));
    CHECK(sigma_poly(parse_poly("y32", ring3), T, 3) == parse_poly("(x+2)*y32", ring3));
}

TEST_CASE("exterior power") {
    DifferenceSystem S = ex53();
    // r = 1 is the system itself
    DifferenceSystem E1 = exterior_power(S, 1);
    CHECK(E1.A() == S.A());
    // r = n is the determinant
    DifferenceSystem En = exterior_power(S, 3);
    CHECK(En.n() == 1);
    CHECK(En.A()(0, 0) == S.det());
    // Cauchy-Binet on random rational 3x3 pairs
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> cd(-4, 4);
    for (int it = 0; it < 10; ++it) {
        MatQx a(3, 3), b(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                a(i, j) = RatFunc(Rational(cd(rng)));
                b(i, j) = RatFunc(Rational(cd(rng)));
            }
        if (a.det().is_zero() || b.det().is_zero()) continue;
        DifferenceSystem Sa(3, a), Sb(3, b), Sab(3, a * b);
        CHECK(exterior_power(Sab, 2).A() == exterior_power(Sa, 2).A() * exterior_power(Sb, 2).A());
    }
}

TEST_CASE("monomial annihilator: scalar constant system") {
    DifferenceSystem S = system_from_strings(1, {{"1"}});
    ScalarOperator L = monomial_annihilator(S, 1, 0);
    REQUIRE(L.order() == 1);
    CHECK(L.coeffs[0] == -UniPoly::one());
    CHECK(L.coeffs[1] == UniPoly::one());
}

TEST_CASE("monomial annihilator: fibonacci reproduces the order-6 operator") {
    ScalarOperator L = monomial_annihilator(fib(), 2, 0);
    REQUIRE(L.order() == 6);
    long expect[] = {1, -2, -4, 6, 2, -4, 1};
    for (int t = 0; t <= 6; ++t) CHECK(L.coeffs[t] == UniPoly(Rational(expect[t])));
    // annihilates all 15 monomial germ sequences over 30 consecutive terms
    DifferenceSystem S = fib();
    GermSequence g = germ_terms(S, 0, 40);
    auto monos = degree_monomials(S, 2);
    REQUIRE(monos.size() == 15);
    for (const Monomial& m : monos) {
        auto values = [&](long i) { return eval_monomial(m, g.at_index(i), 2); };
        for (long start = 0; start < 30; ++start) CHECK(L.apply_at(values, start) == 0);
    }
}

TEST_CASE("monomial annihilator: identity system with x-weights") {
    DifferenceSystem S = system_from_strings(2, {{"1", "0"}, {"0", "1"}});
    ScalarOperator L = monomial_annihilator(S, 1, 1);
    GermSequence g = germ_terms(S, 0, 40);
    auto monos = degree_monomials(S, 1);
    for (const Monomial& m : monos) {
        for (int i = 0; i <= 1; ++i) {
            auto values = [&](long idx) {
                return rat_pow(Rational(idx), i) * eval_monomial(m, g.at_index(idx), 2);
            };
            for (long start = 1; start < 31; ++start) CHECK(L.apply_at(values, start) == 0);
        }
    }
}

TEST_CASE("monomial annihilator: ex310 kills monomial germs past integer roots") {
    DifferenceSystem S = ex310();
    ScalarOperator L = monomial_annihilator(S, 2, 0);
    long guard = 1;
    for (const UniPoly& edge : {L.trailing(), L.leading()})
        for (const Int& r : integer_roots(edge)) guard = std::max(guard, r.get_si() + 1);
    GermSequence g = germ_terms(S, 1, static_cast<int>(guard) + L.order() + 35);
    auto monos = degree_monomials(S, 2);
    REQUIRE(monos.size() == 55);
    for (const Monomial& m : monos) {
        auto values = [&](long i) { return eval_monomial(m, g.at_index(i), 3); };
        for (long start = guard; start < guard + 30; ++start) CHECK(L.apply_at(values, start) == 0);
    }
}

TEST_CASE("cyclic vector scalarization: 1x1") {
    MatQx M(1, 1);
    M(0, 0) = parse_ratfunc("x/(x+1)");
    CyclicScalarization cs = cyclic_vector_scalarize(M, 1);
    REQUIRE(cs.op.order() == 1);
    // L annihilates u with u(m+1) = M(m) u(m); take u = 1/m from m = 1
    auto values = [&](long m) { return make_rational(Int(1), Int(m)); };
    for (long m = 1; m < 20; ++m) CHECK(cs.op.apply_at(values, m) == 0);
}

TEST_CASE("cyclic vector scalarization: diagonal factorial pair") {
    MatQx M(2, 2);
    M(0, 0) = RatFunc::x();
    M(1, 1) = parse_ratfunc("x + 1");
    CyclicScalarization cs = cyclic_vector_scalarize(M, 1);
    REQUIRE(cs.op.order() == 2);
    // coordinate solutions are (m-1)! and m!
    std::vector<Rational> f1{Rational(1)}, f2{Rational(1)};
    for (long m = 1; m < 30; ++m) {
        f1.push_back(f1.back() * Rational(m));
        f2.push_back(f2.back() * Rational(m + 1));
    }
    auto v1 = [&](long m) { return f1.at(m - 1); };
    auto v2 = [&](long m) { return f2.at(m - 1); };
    for (long m = 1; m < 20; ++m) {
        CHECK(cs.op.apply_at(v1, m) == 0);
        CHECK(cs.op.apply_at(v2, m) == 0);
    }
}

TEST_CASE("cyclic vector scalarization: companion matrix") {
    MatQx M(3, 3);
    M(0, 1) = RatFunc(Rational(1));
    M(1, 2) = RatFunc(Rational(1));
    M(2, 0) = parse_ratfunc("x");
    M(2, 1) = parse_ratfunc("1");
    M(2, 2) = parse_ratfunc("x^2");
    CyclicScalarization cs = cyclic_vector_scalarize(M, 1);
    CHECK(cs.op.order() == 3);
    CHECK(!cs.gauge.det().is_zero());
}
