#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "magmoid/axioms.hpp"

using namespace magmoid;

namespace {

// Iterates all labeled magmoids of the given order (2 or 3).
template <typename Fn>
void for_all(int n, Fn fn) {
    const int cells = n * n;
    long total = 1;
    for (int i = 0; i < cells; ++i) total *= n + 1;
    for (long code = 1; code < total; ++code) {
        Magmoid m = make_magmoid("m", n == 2 ? std::vector<std::string>{"a", "b"}
                                             : std::vector<std::string>{"a", "b", "c"});
        long c = code;
        for (int i = cells - 1; i >= 0; --i) {
            m.table[static_cast<size_t>(i)] = static_cast<int>(c % (n + 1)) - 1;
            c /= n + 1;
        }
        fn(m);
    }
}

}  // namespace

TEST_CASE("associativity flags on the fixtures") {
    AssocFlags f = associativity_flags(fixtures::ex72());
    CHECK(f.TA);
    CHECK(f.A1);
    CHECK(f.A2);
    CHECK(f.A3);
    CHECK(f.S1);
    CHECK(f.S2);
    CHECK(f.S3);

    AssocFlags d = associativity_flags(fixtures::discrete2());
    CHECK(d.S3);
    CHECK(!d.TA);

    // single cell ab=a: A1, A3, S1 vacuous; ((ab)b)=a defined but (a(bb)) is not
    Magmoid m = make_magmoid("m", {"a", "b"});
    m.set_cell(0, 1, 0);
    AssocFlags g = associativity_flags(m);
    CHECK(g.A1);
    CHECK(g.A3);
    CHECK(g.S1);
    CHECK(!g.A2);
    CHECK(!g.S2);
    CHECK(!g.S3);
}

TEST_CASE("axiom_by_name covers all seven names") {
    AssocFlags f;
    f.TA = true;
    bool found = false;
    CHECK(axiom_by_name(f, "TA", &found));
    CHECK(found);
    axiom_by_name(f, "bogus", &found);
    CHECK(!found);
}

TEST_CASE("on magmas the four S-style conditions coincide") {
    for_all(2, [](const Magmoid& m) {
        if (!m.total()) return;
        AssocFlags f = associativity_flags(m);
        CHECK(f.S1 == f.S2);
        CHECK(f.S2 == f.S3);
        CHECK(f.S3 == f.TA);
    });
}

TEST_CASE("S-conditions decompose over order <= 3") {
    for (int n : {2, 3})
        for_all(n, [](const Magmoid& m) {
            AssocFlags f = associativity_flags(m);
            CHECK(f.S1 == (f.A1 && f.A3));
            CHECK(f.S2 == (f.A2 && f.A3));
            CHECK(f.S3 == (f.S1 && f.S2));
            if (f.TA) {
                CHECK(f.A1);
                CHECK(f.A2);
                CHECK(f.A3);
            }
        });
}

TEST_CASE("general associativity report") {
    GeneralAssocReport r = general_assoc_check(fixtures::z2(), {1, 1, 1, 0});
    CHECK(r.value == 1);  // a.a.a.e = a
    CHECK(r.shapes == 5);
    CHECK(r.defined_count == 5);
    CHECK(r.all_defined_agree);

    GeneralAssocReport e = general_assoc_check(fixtures::ex72(), {0, 1, 1});
    CHECK(e.value == 0);
    CHECK(e.defined_count == 2);

    GeneralAssocReport d = general_assoc_check(fixtures::discrete2(), {0, 1});
    CHECK(d.value == undef);
    CHECK(d.defined_count == 0);

    Magmoid m = make_magmoid("m", {"a", "b"});
    m.set_cell(0, 1, 0);  // fails A2
    CHECK_THROWS_AS(general_assoc_check(m, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(general_assoc_check(fixtures::z2(), {0}), std::invalid_argument);
}

TEST_CASE("general_assoc_check agrees with eval_expr shape by shape") {
    std::vector<int> chain = {0, 1, 1, 0};
    GeneralAssocReport r = general_assoc_check(fixtures::ex72(), chain);
    auto shapes = all_parenthesizations(chain);
    REQUIRE(static_cast<int>(shapes.size()) == r.shapes);
    for (size_t i = 0; i < shapes.size(); ++i) {
        int v = eval_expr(fixtures::ex72(), shapes[i]);
        CHECK(r.defined[i] == (v != undef));
        if (v != undef) CHECK(v == r.value);
    }
}

TEST_CASE("unit sets on the fixtures") {
    UnitReport u = units(fixtures::ex72());
    CHECK(u.globalTwoSided == 0b10);           // {y}
    CHECK(u.localLeft[0] == 0b11);             // {x, y}
    CHECK(u.localLeft[1] == 0b10);             // {y}

    UnitReport z = units(fixtures::z2());
    CHECK(z.globalTwoSided == 0b01);
    CHECK(z.effectiveLeft[1] == 0b01);
    CHECK(z.effectiveRight[1] == 0b01);

    UnitReport iv = units(fixtures::interval());
    CHECK(iv.globalTwoSided == 0b011);  // {e1, e2}
    CHECK(iv.effectiveLeft[2] == 0b001);
    CHECK(iv.effectiveRight[2] == 0b010);
}

TEST_CASE("unit intersections hold over order <= 3") {
    for (int n : {2, 3})
        for_all(n, [](const Magmoid& m) {
            UnitReport u = units(m);
            for (int x = 0; x < m.order(); ++x) {
                CHECK(u.effectiveLeft[x] == (u.localLeft[x] & u.globalTwoSided));
                CHECK(u.effectiveRight[x] == (u.localRight[x] & u.globalTwoSided));
                CHECK(u.twistedLeft[x] == (u.localLeft[x] & u.globalRight));
                CHECK(u.twistedRight[x] == (u.localRight[x] & u.globalLeft));
            }
        });
}

TEST_CASE("idempotents") {
    CHECK(idempotents(fixtures::ex72()) == 0b11);
    CHECK(idempotents(fixtures::z2()) == 0b01);
    CHECK(idempotents(fixtures::interval()) == 0b011);  // ff undefined
}

TEST_CASE("inverse relations on the fixtures") {
    InverseReport ex = inverse_report(fixtures::ex72());
    CHECK(ex.I[0] == 0b01);
    CHECK(ex.I[1] == 0b10);

    InverseReport lz = inverse_report(fixtures::left_zero());
    CHECK(lz.I[0] == 0b11);
    CHECK(lz.I[1] == 0b11);

    InverseReport z = inverse_report(fixtures::z2());
    CHECK(z.strongI[0] == 0b01);
    CHECK(z.strongI[1] == 0b10);
}

TEST_CASE("inverse relation laws over order <= 3") {
    for (int n : {2, 3})
        for_all(n, [](const Magmoid& m) {
            InverseReport r = inverse_report(m);
            for (int x = 0; x < m.order(); ++x) {
                CHECK(r.I[x] == (r.Iplus[x] & r.Istar[x]));
                CHECK((r.strongJ[x] & ~r.J[x]) == 0);
                CHECK((r.strongIplus[x] & ~r.Iplus[x]) == 0);
                CHECK((r.strongIstar[x] & ~r.Istar[x]) == 0);
                CHECK((r.strongI[x] & ~r.I[x]) == 0);
                for (int b = 0; b < m.order(); ++b) {
                    CHECK(set_has(r.Iplus[x], b) == set_has(r.Iplus[b], x));
                    CHECK(set_has(r.Istar[x], b) == set_has(r.Istar[b], x));
                    CHECK(set_has(r.I[x], b) == set_has(r.I[b], x));
                    CHECK(set_has(r.strongI[x], b) == set_has(r.strongI[b], x));
                }
            }
            ElemSet idem = idempotents(m);
            UnitReport u = units(m);
            for (int i = 0; i < m.order(); ++i) {
                if (!set_has(idem, i)) continue;
                CHECK(set_has(u.localLeft[i], i));
                CHECK(set_has(u.localRight[i], i));
                CHECK(set_has(r.Iplus[i], i));
                CHECK(set_has(r.Istar[i], i));
                CHECK(set_has(r.I[i], i));
            }
        });
}

TEST_CASE("canonical local units") {
    CanonicalUnits ex = canonical_local_units(fixtures::ex72(), InverseKind::Pre);
    CHECK(ex.left[0] == 0b01);
    CHECK(ex.right[0] == 0b01);
    CHECK(ex.left[1] == 0b10);
    CHECK(ex.uniqueLeft);
    CHECK(ex.uniqueRight);

    CanonicalUnits lz = canonical_local_units(fixtures::left_zero(), InverseKind::Pre);
    CHECK(lz.left[0] == 0b01);
    CHECK(lz.right[0] == 0b11);
    CHECK(lz.uniqueLeft);
    CHECK(!lz.uniqueRight);

    CanonicalUnits z = canonical_local_units(fixtures::z2(), InverseKind::Pre);
    CHECK(z.left[1] == 0b01);  // {lam}_a = {e}
    CHECK(z.uniqueLeft);

    CHECK_THROWS_AS(canonical_local_units(fixtures::interval(), InverseKind::Pre),
                    MissingInverseError);
}

TEST_CASE("set helpers") {
    CHECK(set_size(0b1011) == 3);
    CHECK(set_elements(0b101, 3) == std::vector<int>{0, 2});
    CHECK(both_defined_equal(2, 2));
    CHECK(!both_defined_equal(undef, undef));
}
