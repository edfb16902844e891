#include "doctest.h"
#include "pretor/chaincx.hpp"

using namespace pretor;
using chaincx::ChainCategory;
using chaincx::Complex;

namespace {

Complex two_term(Scalar entry) {
    // X_1 -> X_0 in window [0,1], both one-dimensional
    return {0, 1, 2, {1, 1}, {Matrix::from_rows({{entry}}, 2)}};
}

bool subspace_contains(const Matrix& big, const Matrix& small) {
    return exactla::rank(exactla::hstack(big, small)) == exactla::rank(big);
}

}  // namespace

TEST_CASE("class membership examples") {
    Complex zero{0, 5, 2, {0, 0, 0, 0, 0, 0}, {}};
    for (int k = 1; k <= 5; ++k) zero.diffs.emplace_back(0, 0, 2);
    CHECK(chaincx::in_Tn(2, zero));
    CHECK(chaincx::in_Fmono(2, zero));
    Complex deg3 = zero;
    deg3.dims[3] = 1;
    deg3.diffs[2] = Matrix(0, 1, 2);
    deg3.diffs[3] = Matrix(1, 0, 2);
    deg3.check();
    CHECK(chaincx::in_Tn(2, deg3));
    CHECK(chaincx::in_Fmono(1, two_term(1)));
    CHECK_FALSE(chaincx::in_Fmono(1, two_term(0)));
}

TEST_CASE("torsion part examples") {
    auto id = chaincx::torsion_part(0, two_term(1));
    CHECK(id.sub.is_zero());
    CHECK(chaincx::quotient(id, two_term(1)).quot.dims == std::vector<std::size_t>{1, 1});
    auto z = chaincx::torsion_part(0, two_term(0));
    CHECK(z.sub.dims == std::vector<std::size_t>{0, 1});
}

TEST_CASE("torsion part lands in T_n with quotient in Fmono(n+1)") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        auto x = chaincx::random_complex(rng, 0, 5, 3, 2);
        x.check();
        for (int n = 0; n <= 4; ++n) {
            auto t = chaincx::torsion_part(n, x);
            t.sub.check();
            auto q = chaincx::quotient(t, x);
            q.quot.check();
            CHECK(chaincx::in_Tn(n, t.sub));
            CHECK(chaincx::in_Fmono(n + 1, q.quot));
            if (chaincx::in_Tn(n, x)) CHECK(t.sub.dims == x.dims);
        }
    }
}

TEST_CASE("torsion part is the largest subcomplex in T_n") {
    std::mt19937_64 rng(99);
    ChainCategory c(0, 3, 2);
    for (int trial = 0; trial < 40; ++trial) {
        auto x = chaincx::random_complex(rng, 0, 3, 2, 2);
        auto r = c.to_rep(x);
        for (int n = 0; n <= 2; ++n) {
            auto t = chaincx::torsion_part(n, x);
            linrep::for_each_subrep(r, [&](const std::vector<Matrix>& bases) {
                bool in_t = true;
                for (int k = 0; k <= n; ++k)
                    if (bases[3 - k].cols()) in_t = false;
                if (!in_t) return true;
                for (int k = 0; k <= 3; ++k) CHECK(subspace_contains(t.inclusion[k], bases[3 - k]));
                return true;
            });
        }
    }
}

TEST_CASE("membership of a complex matches membership of its summands") {
    std::mt19937_64 rng(5);
    ChainCategory c(0, 5, 2);
    for (int trial = 0; trial < 200; ++trial) {
        auto x = chaincx::random_complex(rng, 0, 5, 3, 2);
        auto d = c.decompose_complex(x);
        auto back = c.to_complex(d.type);
        CHECK(back.dims == x.dims);
        for (int n = 0; n <= 5; ++n) {
            bool all_t = true, all_f = true;
            for (auto id : d.type.summands()) {
                all_t = all_t && c.ind_in_T(n, id);
                all_f = all_f && c.ind_in_Fmono(n, id);
            }
            CHECK(chaincx::in_Tn(n, x) == all_t);
            CHECK(chaincx::in_Fmono(n, x) == all_f);
        }
    }
}

TEST_CASE("Hom(T_n, Fmono(n+1)) = 0 and the literal pairing misses spheres") {
    ChainCategory c(0, 5, 2);
    for (int n = 0; n <= 4; ++n) {
        for (auto a : c.indecomposables())
            for (auto b : c.indecomposables())
                if (c.ind_in_T(n, a) && c.ind_in_Fmono(n + 1, b)) CHECK_FALSE(c.hom_nonzero(a, b));
        // S_n is neither in T_n nor in Fmono(n), and it is simple
        auto s = c.sphere(n);
        CHECK_FALSE(c.ind_in_T(n, s));
        CHECK_FALSE(c.ind_in_Fmono(n, s));
        CHECK(c.subobjects(ObjectExpr::single(s), 10).size() == 2);
    }
}

TEST_CASE("names, parsing and JSON") {
    ChainCategory c(0, 5, 2);
    CHECK(c.indecomposable_count() == 11);
    CHECK(c.name(c.sphere(3)) == "S3");
    CHECK(c.name(c.disk(3)) == "D3");
    CHECK(c.parse_indecomposable("D1") == c.disk(1));
    CHECK_FALSE(c.parse_indecomposable("D0"));
    CHECK_FALSE(c.parse_indecomposable("S6"));
    auto d3 = c.to_complex(ObjectExpr::single(c.disk(3)));
    CHECK(d3.dims == std::vector<std::size_t>{0, 0, 1, 1, 0, 0});
    std::mt19937_64 rng(1);
    auto x = chaincx::random_complex(rng, 0, 5, 3, 2);
    auto y = chaincx::complex_from_json(chaincx::to_json(x), 2);
    CHECK(y.dims == x.dims);
    CHECK(y.diffs == x.diffs);
    auto bad = chaincx::to_json(two_term(1));
    bad["dims"] = {1, 2};
    CHECK_THROWS_AS(chaincx::complex_from_json(bad, 2), std::invalid_argument);
}
