#include "doctest.h"
#include "pretor/typea.hpp"

#include <algorithm>
#include <set>

using namespace pretor;
using typea::Interval;
using typea::TypeA;

namespace {

std::vector<Interval> all_intervals(int n) {
    std::vector<Interval> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) out.push_back({a, b});
    return out;
}

}  // namespace

TEST_CASE("hom examples") {
    CHECK(typea::interval_hom_dim({2, 2}, {1, 2}) == 1);
    CHECK(typea::interval_hom_dim({1, 2}, {1, 2}) == 1);
    CHECK(typea::interval_hom_dim({1, 1}, {2, 2}) == 0);
    TypeA c(2, 2);
    auto alpha = c.hom_basis(c.object({{2, 2}}), c.object({{1, 2}})).at(0);
    auto beta = c.hom_basis(c.object({{1, 2}}), c.object({{1, 1}})).at(0);
    CHECK(is_mono(c, alpha));
    CHECK(is_epi(c, beta));
}

TEST_CASE("interval hom rule matches the intertwiner solve for n <= 4, p = 2, 3") {
    for (Scalar p : {2, 3})
        for (int n = 1; n <= 4; ++n) {
            TypeA c(n, p);
            for (auto x : all_intervals(n))
                for (auto y : all_intervals(n)) {
                    auto rx = c.to_rep(c.object({x})), ry = c.to_rep(c.object({y}));
                    CAPTURE(x.name());
                    CAPTURE(y.name());
                    CHECK(static_cast<int>(linrep::rep_hom_basis(rx, ry).size()) == typea::interval_hom_dim(x, y));
                    CHECK(static_cast<int>(c.hom_basis(c.object({x}), c.object({y})).size()) ==
                          typea::interval_hom_dim(x, y));
                }
        }
}

TEST_CASE("image of a nonzero map [a,b] -> [c,d] is [a,d]") {
    TypeA c(4, 2);
    for (auto x : all_intervals(4))
        for (auto y : all_intervals(4)) {
            if (!typea::interval_hom_dim(x, y)) continue;
            auto f = c.hom_basis(c.object({x}), c.object({y})).at(0);
            CHECK(image(c, f).mono.source == c.object({{x.a, y.b}}));
        }
}

TEST_CASE("ext examples") {
    CHECK(typea::interval_ext_dim({1, 1}, {2, 2}) == 1);
    CHECK(typea::interval_ext_middle({1, 1}, {2, 2}) == std::vector<Interval>{{1, 2}});
    for (auto x : all_intervals(4)) CHECK(typea::interval_ext_dim(x, x) == 0);
    CHECK(typea::interval_ext_dim({1, 2}, {3, 3}) == 1);
    CHECK(typea::interval_ext_middle({1, 2}, {3, 3}) == std::vector<Interval>{{1, 3}});
    // Overlapping intervals also extend nontrivially.
    CHECK(typea::interval_ext_dim({1, 2}, {2, 3}) == 1);
    CHECK(typea::interval_ext_middle({1, 2}, {2, 3}) == (std::vector<Interval>{{1, 3}, {2, 2}}));
}

TEST_CASE("ext rule matches the projective-resolution oracle for n <= 5, p = 2, 3") {
    for (Scalar p : {2, 3})
        for (int n = 1; n <= 5; ++n) {
            TypeA c(n, p);
            for (auto b : all_intervals(n))
                for (auto a : all_intervals(n)) {
                    CAPTURE(b.name());
                    CAPTURE(a.name());
                    CHECK(typea::oracle_ext_dim(c, b, a) == typea::interval_ext_dim(b, a));
                }
        }
}

TEST_CASE("constructed extensions are nonsplit short exact sequences") {
    TypeA c(4, 3);
    for (auto b : all_intervals(4))
        for (auto a : all_intervals(4)) {
            if (!typea::interval_ext_dim(b, a)) continue;
            Ses s = c.ext_sequence(b, a);
            CHECK(is_ses(c, s));
            CHECK(s.sub() == c.object({a}));
            CHECK(s.quot() == c.object({b}));
            CHECK(s.middle() != c.object({a, b}));
        }
}

TEST_CASE("subobjects and quotients of intervals") {
    CHECK(typea::interval_subs({1, 2}) == std::vector<Interval>{{1, 2}, {2, 2}});
    CHECK(typea::interval_quots({1, 1}) == std::vector<Interval>{{1, 1}});
    auto q = typea::interval_quots({3, 4});
    CHECK(std::find(q.begin(), q.end(), Interval{3, 3}) != q.end());
    TypeA c(4, 2);
    for (auto x : all_intervals(4)) {
        auto ox = c.object({x});
        std::set<ObjectExpr> subs, quots, want_subs{ObjectExpr()}, want_quots{ObjectExpr()};
        for (const auto& m : c.subobjects(ox, 1000)) {
            subs.insert(m.source);
            quots.insert(c.cokernel(m).target);
        }
        for (auto s : typea::interval_subs(x)) want_subs.insert(c.object({s}));
        for (auto s : typea::interval_quots(x)) want_quots.insert(c.object({s}));
        CHECK(subs == want_subs);
        CHECK(quots == want_quots);
        CHECK(typea::rep_submodules(c.to_rep(ox)).size() == typea::interval_subs(x).size() + 1);
    }
}

TEST_CASE("rep_submodules bound") {
    TypeA c(1, 2);
    CHECK(typea::rep_submodules(c.to_rep(c.object({{1, 1}}))).size() == 2);
    CHECK_THROWS_AS(typea::rep_submodules(c.to_rep(c.object({{1, 1}, {1, 1}, {1, 1}})), 3), BoundExceeded);
}

TEST_CASE("AR quiver") {
    auto q1 = typea::ar_quiver(1);
    CHECK(q1.vertices.size() == 1);
    CHECK(q1.arrows.empty());
    auto q2 = typea::ar_quiver(2);
    REQUIRE(q2.arrows.size() == 2);
    CHECK(q2.arrows[0].from == Interval{2, 2});
    CHECK(q2.arrows[0].to == Interval{1, 2});
    CHECK(q2.arrows[0].mono);
    CHECK(q2.arrows[1].to == Interval{1, 1});
    CHECK_FALSE(q2.arrows[1].mono);
    auto q3 = typea::ar_quiver(3);
    CHECK(q3.vertices.size() == 6);
    CHECK(q3.arrows.size() == 6);
    TypeA c(4, 2);
    auto q4 = typea::ar_quiver(4);
    for (const auto& e : q4.arrows) {
        auto f = c.hom_basis(c.object({e.from}), c.object({e.to}));
        REQUIRE(f.size() == 1);
        CHECK(is_mono(c, f[0]) == e.mono);
        CHECK(is_epi(c, f[0]) == !e.mono);
    }
    // projectives are the intervals ending at the sink, injectives those starting at the source
    for (auto x : q4.projectives) {
        CHECK(x.b == 4);
        for (auto y : all_intervals(4))
            for (auto z : all_intervals(4)) CHECK(typea::interval_ext_dim(x, y) == 0);
    }
    for (auto x : q4.injectives)
        for (auto y : all_intervals(4)) CHECK(typea::interval_ext_dim(y, x) == 0);
    CHECK(q4.simples.size() == 4);
    CHECK(q2.to_dot().find("\"[2,2]\" -> \"[1,2]\"") != std::string::npos);
}

TEST_CASE("parsing and naming") {
    TypeA c(3, 2);
    CHECK(c.parse_indecomposable("[1,2]") == c.id({1, 2}));
    CHECK(c.parse_indecomposable("2..3") == c.id({2, 3}));
    CHECK(c.parse_indecomposable("12") == c.id({1, 2}));
    CHECK_FALSE(c.parse_indecomposable("13"));
    CHECK_FALSE(c.parse_indecomposable("[0,1]"));
    CHECK_FALSE(c.parse_indecomposable("4"));
    auto x = c.parse_object("1+12");
    REQUIRE(x);
    CHECK(c.stack_name(*x) == "1+12");
    CHECK(c.describe(*x) == "[1,1]+[1,2]");
    CHECK(c.name(0) == "[1,1]");
    CHECK(c.name(3) == "[1,2]");
    CHECK(c.default_universe().size() == 63);
}
