#include "support.hpp"

using namespace resint;
using namespace resint_test;

static void arithmetic_examples() {
    RingPtr r = ring({"x", "y"});
    CHECK_EQ(pp(r, "x+y") + pp(r, "x-y"), pp(r, "2*x"));
    CHECK_EQ(pp(r, "x+y") * pp(r, "x-y"), pp(r, "x^2-y^2"));

    // over F_5: (x+1)(x+4) = x^2 + 5x + 4 = x^2 + 4, reduced by hand
    RingPtr f5 = ring({"x"}, FieldSpec::prime_field(5));
    CHECK_EQ(pp<Fp>(f5, "x+1") * pp<Fp>(f5, "x+4"), pp<Fp>(f5, "x^2+4"));

    RingPtr other = ring({"x", "z"});
    CHECK_THROWS(pp(r, "x") + pp(other, "x"), input_error);
}

static void derivative_examples() {
    RingPtr r = ring({"x", "y"});
    CHECK_EQ(pp(r, "x^2*y").differentiate(0), pp(r, "2*x*y"));
    CHECK_EQ(pp(r, "x^2").differentiate(1), pp(r, "0"));
    CHECK_EQ(pp(r, "x^3+x*y").differentiate(0), pp(r, "3*x^2+y"));
    CHECK_THROWS(pp(r, "x").differentiate(5), input_error);
}

static void homogeneous_parts_examples() {
    RingPtr r = ring({"x", "y", "z"});
    auto parts = pp(r, "x^2+x*y+z").homogeneous_parts();
    CHECK_EQ(parts.size(), std::size_t{2});
    CHECK_EQ(parts[0].first, 1u);
    CHECK_EQ(parts[0].second, pp(r, "z"));
    CHECK_EQ(parts[1].first, 2u);
    CHECK_EQ(parts[1].second, pp(r, "x^2+x*y"));

    CHECK(pp(r, "0").homogeneous_parts().empty());

    auto cube = pp(r, "x^3-1").homogeneous_parts();
    CHECK_EQ(cube.size(), std::size_t{2});
    CHECK_EQ(cube[0].first, 0u);
    CHECK_EQ(cube[0].second, pp(r, "-1"));
    CHECK_EQ(cube[1].first, 3u);
    CHECK_EQ(cube[1].second, pp(r, "x^3"));
}

static void ring_laws_property() {
    RingPtr r = ring({"x", "y", "z"});
    SplitMix64 gen(20240601);
    for (int trial = 0; trial < 60; ++trial) {
        Poly<Rat> a = random_poly<Rat>(r, gen);
        Poly<Rat> b = random_poly<Rat>(r, gen);
        Poly<Rat> c = random_poly<Rat>(r, gen);
        CHECK_EQ(a + b, b + a);
        CHECK_EQ((a + b) + c, a + (b + c));
        CHECK_EQ(a * b, b * a);
        CHECK_EQ((a * b) * c, a * (b * c));
        CHECK_EQ(a * (b + c), a * b + a * c);
        CHECK_EQ(a - a, Poly<Rat>::zero(r));
    }
}

static void leibniz_property() {
    RingPtr r = ring({"x", "y"});
    SplitMix64 gen(777);
    for (int trial = 0; trial < 40; ++trial) {
        Poly<Rat> f = random_poly<Rat>(r, gen);
        Poly<Rat> g = random_poly<Rat>(r, gen);
        const std::size_t v = gen.below(2);
        CHECK_EQ((f * g).differentiate(v),
                 f * g.differentiate(v) + g * f.differentiate(v));
    }
}

static void parts_resum_property() {
    RingPtr r = ring({"x", "y", "z"});
    SplitMix64 gen(1234);
    for (int trial = 0; trial < 40; ++trial) {
        Poly<Rat> f = random_poly<Rat>(r, gen, 6, 5);
        Poly<Rat> sum = Poly<Rat>::zero(r);
        unsigned last_deg = 0;
        bool first = true;
        for (const auto& [deg, part] : f.homogeneous_parts()) {
            CHECK(first || deg > last_deg);
            first = false;
            last_deg = deg;
            for (const auto& [m, coef] : part.terms()) CHECK_EQ(m.degree(), deg);
            sum = sum + part;
        }
        CHECK_EQ(sum, f);
    }
}

static Monomial random_monomial(SplitMix64& gen, std::size_t nvars, int max_deg) {
    Monomial m(nvars);
    const int deg = static_cast<int>(gen.below(static_cast<std::uint64_t>(max_deg) + 1));
    for (int d = 0; d < deg; ++d) m[gen.below(nvars)] += 1;
    return m;
}

static void monomial_order_properties() {
    const std::size_t n = 4;
    std::vector<MonomialOrder> orders = {MonomialOrder::lex(), MonomialOrder::grevlex(),
                                         MonomialOrder::elimination(0b0011)};
    SplitMix64 gen(99);
    const Monomial one(n);
    for (const auto& ord : orders) {
        for (int trial = 0; trial < 300; ++trial) {
            Monomial a = random_monomial(gen, n, 5);
            Monomial b = random_monomial(gen, n, 5);
            Monomial c = random_monomial(gen, n, 5);
            // totality and antisymmetry
            const int ab = ord.cmp(a, b);
            CHECK_EQ(ab == 0, a == b);
            CHECK_EQ(ab, -ord.cmp(b, a));
            // transitivity
            if (ord.cmp(a, b) <= 0 && ord.cmp(b, c) <= 0) CHECK(ord.cmp(a, c) <= 0);
            // multiplicativity: a < b => ac < bc
            if (ab < 0) CHECK(ord.cmp(a * c, b * c) < 0);
            // well-order: 1 is minimal
            CHECK(ord.cmp(one, a) <= 0);
        }
    }
}

static void print_parse_roundtrip() {
    RingPtr r = ring({"x", "y", "z"});
    SplitMix64 gen(31337);
    for (int trial = 0; trial < 50; ++trial) {
        Poly<Rat> f = random_poly<Rat>(r, gen, 5, 4);
        CHECK_EQ(pp(r, poly_text(f)), f);
    }
    // rational coefficients survive the grammar too
    Poly<Rat> g = pp(r, "1/2*x - 7/3*y^2 + 4");
    CHECK_EQ(pp(r, poly_text(g)), g);
    CHECK_EQ(poly_text(pp(r, "0")), std::string("0"));
}

int main() {
    arithmetic_examples();
    derivative_examples();
    homogeneous_parts_examples();
    ring_laws_property();
    leibniz_property();
    parts_resum_property();
    monomial_order_properties();
    print_parse_roundtrip();
    TEST_DONE();
}
