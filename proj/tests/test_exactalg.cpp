#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "minverma/factored_poly.hpp"
#include "minverma/linear_form.hpp"
#include "minverma/multi_poly.hpp"
#include "minverma/rational.hpp"

using namespace minverma;

namespace {

// Naive convolution oracle: multiply two expanded polynomials term by term,
// independently of FactoredPoly::expand's factor loop.
MultiPoly naive_product(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            r.add_term(m, ca * cb);
        }
    return r;
}

std::mt19937 rng(20240817);

Rational rand_rat() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    return Rational(num(rng), den(rng));
}

LinearForm rand_form(int maxvar) {
    std::uniform_int_distribution<int> nv(0, maxvar);
    LinearForm f(rand_rat());
    int k = nv(rng);
    for (int j = 1; j <= k; ++j) f.set_coeff(j, rand_rat());
    return f;
}

FactoredPoly rand_poly(int maxfac) {
    std::uniform_int_distribution<int> nf(0, maxfac), mult(1, 2);
    FactoredPoly p;
    int k = nf(rng);
    for (int i = 0; i < k; ++i) p.add_factor(rand_form(2), mult(rng));
    return p;
}

}  // namespace

TEST_CASE("rational invariants and string round trip") {
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(-7, 2).str() == "-7/2");
    CHECK(Rational(4, 1).str() == "4");
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational(1) / Rational(0));
    for (int i = 0; i < 200; ++i) {
        Rational r = rand_rat();
        CHECK(Rational::parse(r.str()) == r);
        CHECK(r.den() > 0);
        CHECK(gcdz(r.num(), r.den()) == 1);
    }
}

TEST_CASE("binomial square") {
    FactoredPoly p;
    LinearForm one{Rational(1)};
    p.add_factor(one, 2);
    MultiPoly e = p.expand();
    CHECK(e.coeff(Monomial{{kVarX, 2}}) == Rational(1));
    CHECK(e.coeff(Monomial{{kVarX, 1}}) == Rational(-2));
    CHECK(e.coeff(Monomial{}) == Rational(1));
}

TEST_CASE("empty product expands to one") {
    FactoredPoly p;
    CHECK(p.expand() == MultiPoly{Rational(1)});
    CHECK(p.degree() == 0);
}

TEST_CASE("quadratic with lambda coefficients against the convolution oracle") {
    // (x - l2/2 - 3/2)(x + l2/2) -> x^2 - (3/2) x - l2^2/4 - (3/4) l2
    FactoredPoly p;
    LinearForm r1;
    r1.set_coeff(2, Rational(1, 2));
    r1.set_constant(Rational(3, 2));
    LinearForm r2;
    r2.set_coeff(2, Rational(-1, 2));
    p.add_factor(r1);
    p.add_factor(r2);
    MultiPoly e = p.expand();

    MultiPoly x = MultiPoly::variable(kVarX);
    MultiPoly f1 = x - MultiPoly(r1), f2 = x - MultiPoly(r2);
    CHECK(e == naive_product(f1, f2));

    CHECK(e.coeff(Monomial{{kVarX, 2}}) == Rational(1));
    CHECK(e.coeff(Monomial{{kVarX, 1}}) == Rational(-3, 2));
    CHECK(e.coeff(Monomial{{kVarX, 1}, {2, 1}}) == Rational(0));
    CHECK(e.coeff(Monomial{{2, 2}}) == Rational(-1, 4));
    CHECK(e.coeff(Monomial{{2, 1}}) == Rational(-3, 4));
}

TEST_CASE("expand is a ring homomorphism on products, degree additive") {
    for (int i = 0; i < 60; ++i) {
        FactoredPoly p = rand_poly(3), q = rand_poly(3);
        FactoredPoly pq = p * q;
        CHECK(pq.expand() == naive_product(p.expand(), q.expand()));
        CHECK(pq.degree() == p.degree() + q.degree());
    }
}

TEST_CASE("eval_at commutes with expand") {
    for (int i = 0; i < 60; ++i) {
        FactoredPoly p = rand_poly(3);
        Assignment a{{1, rand_rat()}, {2, rand_rat()}};
        Rational x0 = rand_rat();
        auto roots = p.eval_at(a);
        Rational prod(1);
        for (const auto& [r, m] : roots)
            for (unsigned k = 0; k < m; ++k) prod *= (x0 - r);
        Assignment full = a;
        full[kVarX] = x0;
        CHECK(p.expand().eval(full) == prod);
    }
}

TEST_CASE("eval_at reports root collisions and missing variables") {
    FactoredPoly p;
    p.add_factor(LinearForm::variable(1));  // x - l1
    p.add_factor(LinearForm(Rational(1)));  // x - 1
    auto roots = p.eval_at(Assignment{{1, Rational(1)}});
    REQUIRE(roots.size() == 1);
    CHECK(roots.at(Rational(1)) == 2);
    CHECK_THROWS_WITH(p.eval_at(Assignment{}), doctest::Contains("1"));
}

TEST_CASE("multiset equality of factored polynomials is order independent") {
    FactoredPoly p, q;
    LinearForm a{Rational(1)}, b = LinearForm::variable(2);
    p.add_factor(a);
    p.add_factor(b);
    q.add_factor(b);
    q.add_factor(a);
    CHECK(p == q);
    q.add_factor(a);
    CHECK(p != q);
}

TEST_CASE("linear form primitive extraction") {
    LinearForm f;
    f.set_coeff(1, Rational(-2, 3));
    f.set_constant(Rational(-4, 3));
    auto [s, prim] = f.primitive();
    CHECK(s == Rational(-2, 3));
    CHECK(prim.coeff(1) == Rational(1));
    CHECK(prim.constant() == Rational(2));
    CHECK(LinearForm().primitive().first == Rational(0));
}

TEST_CASE("factor product zero detection stays factor attributable") {
    FactorProduct r;
    r.mul_form(LinearForm::variable(1));
    CHECK_FALSE(r.identically_zero());
    r.mul_form(LinearForm());
    CHECK(r.identically_zero());
    CHECK(r.zero_factor_count() == 1);
    CHECK(r.eval(Assignment{{1, Rational(5)}}) == Rational(0));
}

TEST_CASE("multi poly substitution and power") {
    MultiPoly p = MultiPoly::variable(1) + MultiPoly::variable(2);
    MultiPoly sq = p.pow(2);
    CHECK(sq.coeff(Monomial{{1, 1}, {2, 1}}) == Rational(2));
    MultiPoly sub = sq.substitute(Assignment{{2, Rational(3)}});
    CHECK(sub.coeff(Monomial{{1, 1}}) == Rational(6));
    CHECK(sub.coeff(Monomial{}) == Rational(9));
}
