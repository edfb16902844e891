#include "doctest.h"
#include "pretor/abgrp.hpp"

#include <numeric>
#include <random>
#include <set>

using namespace pretor;
using abgrp::AbGroup;
using abgrp::AbGrpCategory;
using abgrp::PrimeSet;

namespace {

bool primes_within(Scalar order, const PrimeSet& p) {
    for (Scalar q = 2; q <= order; ++q)
        if (order % q == 0 && exactla::is_prime(q) && !p.contains(q)) return false;
    return true;
}

// Membership by the annihilator definitions, element by element.
bool oracle_in_T(const PrimeSet& p, const AbGroup& m) {
    for (auto o : abgrp::element_orders(m))
        if (!primes_within(o, p)) return false;
    return true;
}

bool oracle_in_F(const PrimeSet& p, const AbGroup& m) {
    for (auto o : abgrp::element_orders(m)) {
        if (o == 1) continue;
        for (auto q : p.primes)
            if (o % q == 0) return false;
    }
    return true;
}

// Count homomorphisms Z/a -> Z/b by checking every candidate image of 1.
Scalar count_homs(Scalar a, Scalar b) {
    Scalar n = 0;
    for (Scalar v = 0; v < b; ++v)
        if ((a * v) % b == 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("membership examples") {
    CHECK(abgrp::in_T({{2, 3}}, {{4, 3}}));
    CHECK(oracle_in_T({{2, 3}}, {{4, 3}}));
    CHECK(abgrp::in_T({}, {}));
    CHECK(abgrp::in_F({{2, 3, 5}}, {}));
    CHECK(abgrp::in_F({{2}}, {{9}}));
    CHECK_FALSE(abgrp::in_F({{2}}, {{2, 9}}));
}

TEST_CASE("membership agrees with the element-wise definition on the whole universe") {
    AbGrpCategory c;
    auto universe = c.default_universe();
    CHECK(universe.size() == 55);
    std::vector<PrimeSet> sets;
    for (int mask = 0; mask < 8; ++mask) {
        PrimeSet p;
        if (mask & 1) p.primes.insert(2);
        if (mask & 2) p.primes.insert(3);
        if (mask & 4) p.primes.insert(5);
        sets.push_back(p);
    }
    for (const auto& x : universe) {
        auto g = c.group(x);
        CHECK(360 % g.order() == 0);
        for (const auto& p : sets) {
            CHECK(abgrp::in_T(p, g) == oracle_in_T(p, g));
            CHECK(abgrp::in_F(p, g) == oracle_in_F(p, g));
        }
    }
}

TEST_CASE("primary part") {
    AbGrpCategory c;
    auto z12 = c.object({{4, 3}});
    auto part = abgrp::primary_part(c, {{2}}, z12);
    CHECK(part.source == c.object({{4}}));
    CHECK(is_mono(c, part));
    CHECK(abgrp::primary_part(c, {{2, 3, 5}}, z12).source == z12);
    CHECK(abgrp::primary_part(c, {}, z12).source.is_zero());
    // largest subgroup with orders in P: compare to element count
    for (const auto& x : c.default_universe()) {
        Morphism m = abgrp::primary_part(c, {{2, 5}}, x);
        std::size_t want = 0;
        for (auto o : abgrp::element_orders(c.group(x)))
            if (primes_within(o, {{2, 5}})) ++want;
        CHECK(static_cast<std::size_t>(c.group(m.source).order()) == want);
        auto q = c.cokernel(m).target;
        CHECK(abgrp::in_F({{2, 5}}, c.group(q)));
    }
}

TEST_CASE("hom groups") {
    AbGrpCategory c(72);
    auto h = abgrp::hom_group(c, c.object({{4}}), c.object({{2, 3}}));
    REQUIRE(h.size() == 1);
    CHECK(h[0].order == 2);
    CHECK(abgrp::hom_group(c, c.object({{4}}), ObjectExpr()).empty());
    CHECK(abgrp::hom_group(c, c.object({{2}}), c.object({{2}}))[0].order == 2);
    for (Scalar a : {2, 4, 8, 3, 9})
        for (Scalar b : {2, 4, 8, 3, 9}) {
            auto hs = abgrp::hom_group(c, c.object({{a}}), c.object({{b}}));
            Scalar size = 1;
            for (const auto& g : hs) size *= g.order;
            CHECK(size == count_homs(a, b));
            int log_size = 0;
            for (auto [q, e] : exactla::factorize(size)) log_size += e;
            CHECK(hom_span(c, c.object({{a}}), c.object({{b}})).log_order() == log_size);
        }
}

TEST_CASE("kernels, cokernels and subgroups") {
    AbGrpCategory c;
    auto universe = c.default_universe();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        auto x = universe[rng() % universe.size()], y = universe[rng() % universe.size()];
        Morphism f = c.zero(x, y);
        for (const auto& g : c.hom_basis(x, y)) f = c.add(f, c.scale(g, static_cast<Scalar>(rng() % 8)));
        Morphism k = c.kernel(f), q = c.cokernel(f);
        CHECK(is_mono(c, k));
        CHECK(is_epi(c, q));
        CHECK(c.is_zero(c.compose(f, k)));
        CHECK(c.is_zero(c.compose(q, f)));
        // |ker| * |X/ker| = |X| and |im| * |coker| = |Y| by element counts
        std::size_t kernel_size = 0;
        std::set<std::vector<Scalar>> im;
        for (const auto& e : c.elements(x)) {
            auto v = c.apply(f, e);
            im.insert(v);
            if (std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; })) ++kernel_size;
        }
        CHECK(static_cast<std::size_t>(c.group(k.source).order()) == kernel_size);
        CHECK(static_cast<std::size_t>(c.group(q.target).order() * static_cast<Scalar>(im.size())) ==
              static_cast<std::size_t>(c.group(y).order()));
        CHECK(verify_kernel_universal(c, f, k, c.indecomposable_objects()));
        CHECK(verify_cokernel_universal(c, f, q, c.indecomposable_objects()));
    }
}

TEST_CASE("subgroup counts") {
    AbGrpCategory c;
    CHECK(c.subobjects(c.object({{2, 2}}), 100).size() == 5);
    CHECK(c.subobjects(c.object({{4, 2}}), 100).size() == 8);
    CHECK(c.subobjects(c.object({{8, 9, 5}}), 100).size() == 4 * 3 * 2);
    CHECK(c.subobjects(c.object({{2, 2, 2}}), 100).size() == 16);
    CHECK_THROWS_AS(c.subobjects(c.object({{2, 2, 2}}), 10), BoundExceeded);
}

TEST_CASE("parsing and lifts") {
    AbGrpCategory c;
    CHECK(c.parse_indecomposable("Z/4") == c.id(4));
    CHECK(c.parse_indecomposable("9") == c.id(9));
    CHECK_FALSE(c.parse_indecomposable("Z/6"));
    CHECK_FALSE(c.parse_indecomposable("Z/16"));
    CHECK(c.describe(*c.parse_object("Z/2+Z/3")) == "Z/2+Z/3");
    auto z4 = c.object({{4}}), z2 = c.object({{2}});
    Morphism inc = c.hom_basis(z2, z4).at(0);
    Morphism proj = c.hom_basis(z4, z2).at(0);
    CHECK(is_mono(c, inc));
    CHECK(is_epi(c, proj));
    CHECK_FALSE(c.lift_through_mono(inc, c.identity(z4)));
    CHECK(c.lift_through_mono(inc, c.scale(c.identity(z4), 2)));
    CHECK(c.lift_through_mono(inc, c.compose(c.scale(c.identity(z4), 2), inc)));
    CHECK_FALSE(c.lift_through_epi(proj, c.identity(z4)));
    CHECK(c.lift_through_epi(proj, proj));
    CHECK_THROWS_AS(c.make_morphism(z2, z4, Matrix::from_rows({{1}}, 0)), std::invalid_argument);
    CHECK_THROWS_AS(AbGrpCategory(360, 100).subobjects(c.object({{8, 9, 5}}), 100), BoundExceeded);
}
