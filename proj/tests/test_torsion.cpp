#include "doctest.h"
#include "pretor/abgrp.hpp"
#include "pretor/chaincx.hpp"
#include "pretor/torsion.hpp"
#include "pretor/typea.hpp"

#include <random>

using namespace pretor;
using torsion::ClassSpec;
using torsion::TorsionPair;
using typea::TypeA;

namespace {

ClassSpec cls(const Category& c, const char* text) { return torsion::parse_class(c, text); }

ObjectExpr obj(const Category& c, const char* text) { return *c.parse_object(text); }

// Torsion classes by the closure definition: quotient- and extension-closed,
// evaluated with the subobject oracle over the universe.
std::set<ClassSpec> torsion_classes_by_closure(const Category& c) {
    std::set<ClassSpec> out;
    auto universe = c.default_universe();
    const auto n = c.indecomposable_count();
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        ClassSpec s;
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1u) s.members.insert(static_cast<IndId>(i));
        auto r = torsion::closure_checks(c, s, universe);
        if (r.under_quotients && r.under_extensions) out.insert(s);
    }
    return out;
}

}  // namespace

TEST_CASE("closure checks") {
    TypeA c(2, 2);
    auto u = c.default_universe();
    auto all = torsion::closure_checks(c, ClassSpec::all(c), u);
    CHECK(all.under_quotients);
    CHECK(all.under_subobjects);
    CHECK(all.under_extensions);
    CHECK_FALSE(torsion::closure_checks(c, cls(c, "12,2"), u).under_quotients);
    auto split = torsion::closure_checks(c, cls(c, "2,1"), u);
    CHECK_FALSE(split.under_extensions);
    CHECK(split.under_quotients);
}

TEST_CASE("torsion pair examples") {
    TypeA c(2, 2);
    auto u = c.default_universe();
    CHECK(torsion::is_torsion_pair(c, {{}, ClassSpec::all(c)}, u).ok);
    CHECK(torsion::is_torsion_pair(c, {ClassSpec::all(c), {}}, u).ok);
    CHECK(torsion::is_torsion_pair(c, {cls(c, "1,12"), cls(c, "2")}, u).ok);
    auto bad = torsion::is_torsion_pair(c, {cls(c, "1"), cls(c, "12")}, u);
    CHECK_FALSE(bad.ok);
    CHECK(torsion::trace(c, obj(c, "2"), cls(c, "1")).source.is_zero());
}

TEST_CASE("trace and reject") {
    TypeA c(2, 2);
    CHECK(torsion::trace(c, obj(c, "12"), cls(c, "1")).source.is_zero());
    CHECK(torsion::trace(c, obj(c, "12+2"), ClassSpec::all(c)).source == obj(c, "12+2"));
    abgrp::AbGrpCategory g;
    auto z12 = obj(g, "Z/4+Z/3");
    auto t2 = ClassSpec::where(g, [&](IndId id) { return g.cyclic_order(id) % 2 == 0; });
    CHECK(torsion::trace(g, z12, t2).source == obj(g, "Z/4"));
    CHECK(torsion::trace(g, z12, t2).source == abgrp::primary_part(g, {{2}}, z12).source);
    // idempotence and trace inside the class for every torsion pair
    TypeA c3(3, 3);
    for (const auto& tp : torsion::enumerate_torsion_pairs(c3, c3.default_universe()))
        for (const auto& x : c3.default_universe()) {
            auto t = torsion::trace(c3, x, tp.T);
            CHECK(tp.T.contains(t.source));
            CHECK(torsion::trace(c3, t.source, tp.T).source == t.source);
            auto rj = torsion::reject(c3, x, tp.F);
            CHECK(rj.target == c3.cokernel(t).target);
        }
}

TEST_CASE("canonical sequences") {
    abgrp::AbGrpCategory g;
    auto p23 = ClassSpec::where(g, [&](IndId id) { return g.cyclic_order(id) % 5 != 0; });
    auto p5 = ClassSpec::where(g, [&](IndId id) { return g.cyclic_order(id) % 5 == 0; });
    auto s = torsion::canonical_ses(g, obj(g, "Z/4+Z/5"), {p23, p5});
    CHECK(s.sub() == obj(g, "Z/4"));
    CHECK(s.quot() == obj(g, "Z/5"));
    TypeA c(2, 2);
    TorsionPair tp{cls(c, "1,12"), cls(c, "2")};
    auto in_t = torsion::canonical_ses(c, obj(c, "12"), tp);
    CHECK(in_t.sub() == obj(c, "12"));
    CHECK(in_t.quot().is_zero());
    auto in_f = torsion::canonical_ses(c, obj(c, "2"), tp);
    CHECK(in_f.sub().is_zero());
    CHECK_THROWS_AS(torsion::canonical_ses(c, obj(c, "2"), {cls(c, "1"), cls(c, "12")}), std::invalid_argument);
}

TEST_CASE("torsion pair counts follow the Catalan numbers") {
    const std::size_t want[] = {0, 2, 5, 14, 42};
    for (int n = 1; n <= 4; ++n) {
        TypeA c(n, 2);
        auto pairs = torsion::enumerate_torsion_pairs(c, c.default_universe());
        CHECK(pairs.size() == want[n]);
        std::set<TorsionPair> distinct(pairs.begin(), pairs.end());
        CHECK(distinct.size() == pairs.size());
        for (const auto& tp : pairs) {
            CHECK(torsion::right_perp(c, tp.T) == tp.F);
            CHECK(torsion::left_perp(c, tp.F) == tp.T);
        }
    }
}

TEST_CASE("enumerated torsion classes match the closure definition") {
    for (int n = 1; n <= 3; ++n)
        for (Scalar p : {2, 3}) {
            TypeA c(n, p);
            std::set<ClassSpec> enumerated;
            for (const auto& tp : torsion::enumerate_torsion_pairs(c, c.default_universe())) enumerated.insert(tp.T);
            CHECK(enumerated == torsion_classes_by_closure(c));
        }
}

TEST_CASE("chain complex torsion pairs (T_n, Fmono(n+1))") {
    chaincx::ChainCategory c(0, 5, 2);
    auto u = c.indecomposable_objects();
    for (int n = 0; n <= 4; ++n) {
        TorsionPair tp{ClassSpec::where(c, [&](IndId id) { return c.ind_in_T(n, id); }),
                       ClassSpec::where(c, [&](IndId id) { return c.ind_in_Fmono(n + 1, id); })};
        CHECK(torsion::is_torsion_pair(c, tp, u).ok);
        TorsionPair literal{tp.T, ClassSpec::where(c, [&](IndId id) { return c.ind_in_Fmono(n, id); })};
        auto r = torsion::is_torsion_pair(c, literal, u);
        CHECK_FALSE(r.ok);
    }
}

TEST_CASE("extension products") {
    TypeA c(2, 2);
    auto a = cls(c, "1,12");
    CHECK(torsion::ext_product(c, a, {}) == a);
    CHECK(torsion::in_ext_product(c, cls(c, "2"), cls(c, "1"), obj(c, "12")));
    CHECK_FALSE(torsion::in_ext_product(c, cls(c, "1"), cls(c, "2"), obj(c, "12")));
    abgrp::AbGrpCategory g(72);
    auto two = ClassSpec::where(g, [&](IndId id) { return g.cyclic_order(id) % 2 == 0; });
    auto three = ClassSpec::where(g, [&](IndId id) { return g.cyclic_order(id) % 3 == 0; });
    for (const auto& x : g.default_universe()) CHECK(torsion::in_ext_product(g, two, three, x));
}

TEST_CASE("Serre classes and reflections") {
    TypeA c(2, 2);
    auto u = c.default_universe();
    ClassSpec zero;
    CHECK(torsion::is_serre(c, zero, u));
    CHECK(torsion::s_coreflection(c, obj(c, "12"), zero).source.is_zero());
    CHECK(torsion::s_reflection(c, obj(c, "12"), zero).target.is_zero());
    auto s1 = cls(c, "1");
    CHECK(torsion::is_serre(c, s1, u));
    CHECK(torsion::s_coreflection(c, obj(c, "12"), s1).source.is_zero());
    auto beta = torsion::s_reflection(c, obj(c, "12"), s1);
    CHECK(beta.target == obj(c, "1"));
    CHECK(beta == c.hom_basis(obj(c, "12"), obj(c, "1")).at(0));
    CHECK_FALSE(torsion::is_serre(c, cls(c, "12"), u));
    abgrp::AbGrpCategory g;
    auto s3 = torsion::serre_from_simples(g, {g.id(3)});
    CHECK(s3.members == std::set<IndId>{g.id(3), g.id(9)});
    CHECK(torsion::s_coreflection(g, obj(g, "Z/4+Z/3"), s3).source == obj(g, "Z/3"));
    // every support set gives a Serre class
    TypeA c3(3, 2);
    for (std::uint32_t m = 0; m < 8; ++m) {
        std::set<IndId> simples;
        for (int v = 0; v < 3; ++v)
            if (m >> v & 1u) simples.insert(c3.id({v + 1, v + 1}));
        CHECK(torsion::is_serre(c3, torsion::serre_from_simples(c3, simples), c3.default_universe()));
    }
}

TEST_CASE("stability classes") {
    TypeA c(2, 2);
    torsion::StabilityFunction phi{{1, 0}, {1, 1}};
    CHECK((phi.value(c, obj(c, "1")) == torsion::Rational(1)));
    CHECK((phi.value(c, obj(c, "2")) == torsion::Rational(0)));
    CHECK((phi.value(c, obj(c, "12")) == torsion::Rational(1, 2)));
    auto tp = torsion::stability_classes(c, phi, 1, false);
    CHECK(tp.T == cls(c, "1"));
    torsion::StabilityFunction constant{{1, 1}, {1, 1}};
    auto everything = torsion::stability_classes(c, constant, 1, false);
    CHECK(everything.T == ClassSpec::all(c));
    CHECK(everything.F.members.empty());
    CHECK(torsion::seesaw_check(c, phi, c.default_universe()).ok);
    CHECK_THROWS_AS((torsion::StabilityFunction{{1, 0}, {1, 0}}.check(c)), std::invalid_argument);
}

TEST_CASE("stability torsion pairs are torsion pairs for random slopes") {
    TypeA c(3, 2);
    std::mt19937 rng(17);
    auto u = c.default_universe();
    for (int trial = 0; trial < 10; ++trial) {
        torsion::StabilityFunction phi;
        for (int i = 0; i < 3; ++i) {
            phi.theta.push_back(static_cast<long long>(rng() % 7) - 3);
            phi.ell.push_back(1 + static_cast<long long>(rng() % 3));
        }
        CHECK(torsion::seesaw_check(c, phi, u).ok);
        for (const auto& x : c.indecomposable_objects()) {
            auto p = phi.value(c, x);
            CHECK(torsion::is_torsion_pair(c, torsion::stability_classes(c, phi, p, false), u).ok);
            CHECK(torsion::is_torsion_pair(c, torsion::stability_classes(c, phi, p, true), u).ok);
        }
    }
}

TEST_CASE("class parsing") {
    TypeA c(2, 2);
    CHECK(torsion::describe(c, cls(c, "add{1,12}")) == "add{[1,1],[1,2]}");
    CHECK(cls(c, "[1,1],[1,2]") == cls(c, "1,12"));
    CHECK(cls(c, "0").members.empty());
    CHECK_THROWS_AS(cls(c, "13"), std::invalid_argument);
}
