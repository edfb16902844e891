#include "doctest.h"
#include "pretor/exactla.hpp"

#include <random>
#include <set>

using namespace pretor::exactla;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, Scalar p) {
    Matrix m(r, c, p);
    std::uniform_int_distribution<Scalar> d(0, p - 1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, d(rng));
    return m;
}

// Brute-force closure of a generated subgroup of Z/m_1 (+) ... (+) Z/m_k.
std::set<std::vector<Scalar>> closure(const std::vector<std::vector<Scalar>>& gens, const std::vector<Scalar>& mod) {
    std::set<std::vector<Scalar>> s{std::vector<Scalar>(mod.size(), 0)};
    for (const auto& g : gens) {
        std::set<std::vector<Scalar>> next;
        for (const auto& x : s) {
            auto y = x;
            for (Scalar c = 0; c < 400; ++c) {
                if (!next.insert(y).second && c > 0) break;
                for (std::size_t i = 0; i < y.size(); ++i) y[i] = mod_reduce(y[i] + g[i], mod[i]);
            }
        }
        s = std::move(next);
    }
    return s;
}

}  // namespace

TEST_CASE("rank examples") {
    CHECK(rank(Matrix(2, 2, 2)) == 0);
    CHECK(rank(Matrix::identity(3, 2)) == 3);
    CHECK(rank(Matrix::from_rows({{1, 1}, {1, 1}}, 2)) == 1);
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace(Matrix::identity(2, 2)).cols() == 0);
    CHECK(nullspace(Matrix(2, 2, 2)).cols() == 2);
    Matrix k = nullspace(Matrix::from_rows({{1, 1}}, 2));
    REQUIRE(k.cols() == 1);
    CHECK(k.column(0) == std::vector<Scalar>{1, 1});
}

TEST_CASE("subspace operations") {
    Subspace a(Matrix::from_rows({{1}, {0}}, 2));
    Subspace b(Matrix::from_rows({{1}, {1}}, 2));
    CHECK(a.sum(b).dim() == 2);
    CHECK(a.intersection(b).dim() == 0);
    CHECK(a.sum(a) == a);
    CHECK(a.intersection(a) == a);
    CHECK(a.quotient_basis().cols() == 1);
    CHECK_THROWS(a.sum(Subspace(3, 2)));
}

TEST_CASE("rank-nullity and solve on random matrices") {
    std::mt19937 rng(7);
    for (Scalar p : {2, 3, 5}) {
        for (int t = 0; t < 200; ++t) {
            std::size_t r = rng() % 6 + 1, c = rng() % 6 + 1;
            Matrix m = random_matrix(rng, r, c, p);
            Matrix k = nullspace(m);
            CHECK(rank(m) + k.cols() == c);
            CHECK((m * k).is_zero());
            Matrix x = random_matrix(rng, c, 1, p);
            Matrix b = m * x;
            auto sol = solve(m, b.column(0));
            REQUIRE(sol.has_value());
            Matrix sm = from_columns({*sol}, c, p);
            CHECK(m * sm == b);
        }
    }
}

TEST_CASE("modular dimension law on random subspace pairs") {
    std::mt19937 rng(11);
    for (int t = 0; t < 1000; ++t) {
        Scalar p = (t % 2) ? 3 : 2;
        std::size_t n = rng() % 5 + 1;
        Subspace a(random_matrix(rng, n, rng() % 4, p));
        Subspace b(random_matrix(rng, n, rng() % 4, p));
        CHECK(a.sum(b).dim() + a.intersection(b).dim() == a.dim() + b.dim());
        CHECK(a.dim() + a.quotient_basis().cols() == n);
    }
}

TEST_CASE("subspace enumeration counts") {
    // Gaussian binomials: GF(2)^2 has 5 subspaces, GF(2)^3 has 16, GF(3)^2 has 6.
    auto count = [](std::size_t d, Scalar p) {
        std::size_t n = 0;
        enumerate_subspaces(d, p, [&](const Matrix&) { return ++n, true; });
        return n;
    };
    CHECK(count(0, 2) == 1);
    CHECK(count(2, 2) == 5);
    CHECK(count(3, 2) == 16);
    CHECK(count(2, 3) == 6);
    CHECK(count(4, 2) == 67);
}

TEST_CASE("ModSpan agrees with brute-force subgroup closure") {
    std::mt19937 rng(3);
    const std::vector<std::vector<Scalar>> shapes{{4, 2}, {8, 4, 3}, {9, 3, 6}, {2, 2, 2}, {12, 10}, {5, 25}};
    for (int t = 0; t < 300; ++t) {
        const auto& mod = shapes[t % shapes.size()];
        std::vector<std::vector<Scalar>> gens;
        std::size_t ng = rng() % 3;
        for (std::size_t g = 0; g < ng; ++g) {
            std::vector<Scalar> v;
            for (auto m : mod) v.push_back(rng() % m);
            gens.push_back(v);
        }
        ModSpan span(mod);
        for (auto& g : gens) span.add(g);
        auto all = closure(gens, mod);
        Scalar size = 1;
        for (auto [p, e] : span.order())
            for (int i = 0; i < e; ++i) size *= p;
        CHECK(size == static_cast<Scalar>(all.size()));
        // every element of the ambient group
        std::vector<Scalar> v(mod.size(), 0);
        std::set<std::vector<Scalar>> forms;
        while (true) {
            bool member = all.count(v) > 0;
            CHECK(span.contains(v) == member);
            forms.insert(span.normal_form(v));
            if (member) {
                auto c = span.express(v);
                REQUIRE(c.has_value());
                std::vector<Scalar> back(mod.size(), 0);
                for (std::size_t g = 0; g < gens.size(); ++g)
                    for (std::size_t i = 0; i < mod.size(); ++i)
                        back[i] = mod_reduce(back[i] + (*c)[g] * gens[g][i], mod[i]);
                CHECK(back == v);
            } else {
                CHECK_FALSE(span.express(v).has_value());
            }
            std::size_t i = 0;
            while (i < v.size() && ++v[i] == mod[i]) v[i++] = 0;
            if (i == v.size()) break;
        }
        Scalar ambient = 1;
        for (auto m : mod) ambient *= m;
        CHECK(static_cast<Scalar>(forms.size()) * size == ambient);
    }
}

TEST_CASE("preimage generators match brute force") {
    std::mt19937 rng(5);
    const std::vector<Scalar> tmod{4, 6};
    for (int t = 0; t < 100; ++t) {
        ModSpan target(tmod);
        target.add(std::vector<Scalar>{static_cast<Scalar>(rng() % 4), static_cast<Scalar>(rng() % 6)});
        std::vector<std::vector<Scalar>> images;
        std::vector<Scalar> orders;
        for (int i = 0; i < 2; ++i) {
            std::vector<Scalar> img{static_cast<Scalar>(rng() % 4), static_cast<Scalar>(rng() % 6)};
            orders.push_back(element_order(img, tmod) * (1 + static_cast<Scalar>(rng() % 2)));
            images.push_back(img);
        }
        auto gens = preimage_generators(images, orders, target);
        ModSpan pre(orders);
        for (auto& g : gens) pre.add(g);
        for (Scalar a = 0; a < orders[0]; ++a)
            for (Scalar b = 0; b < orders[1]; ++b) {
                std::vector<Scalar> v(2);
                for (int i = 0; i < 2; ++i) v[i] = mod_reduce(a * images[0][i] + b * images[1][i], tmod[i]);
                CHECK(pre.contains(std::vector<Scalar>{a, b}) == target.contains(v));
            }
    }
}
