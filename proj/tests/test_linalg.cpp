#include <doctest.h>

#include <random>

#include "gfw/matrix.hpp"

using namespace gfw;

namespace {

SparseMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    const long nr = static_cast<long>(rows.size());
    const long nc = nr ? static_cast<long>(rows[0].size()) : 0;
    SparseMatrix m(nr, nc);
    for (long r = 0; r < nr; ++r)
        for (long c = 0; c < nc; ++c)
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0)
                m.set(r, c, rows[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    return m;
}

std::vector<Rat> mat_vec(const SparseMatrix& m, const std::vector<Rat>& v) {
    std::vector<Rat> out(static_cast<size_t>(m.rows()));
    for (const auto& [rc, val] : m.entries())
        out[static_cast<size_t>(rc.first)] += val * v[static_cast<size_t>(rc.second)];
    return out;
}

bool is_zero_vec(const std::vector<Rat>& v) {
    for (const Rat& x : v)
        if (x != 0)
            return false;
    return true;
}

}  // namespace

TEST_CASE("rank on small matrices") {
    CHECK(rank(SparseMatrix(0, 0)) == 0);
    CHECK(rank(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(SparseMatrix(4, 7)) == 0);
}

TEST_CASE("kernel bases") {
    CHECK(kernel_basis(from_rows({{1, 0}, {0, 1}})).empty());
    CHECK(kernel_basis(SparseMatrix(2, 3)).size() == 3);

    auto basis = kernel_basis(from_rows({{1, 2}, {2, 4}}));
    REQUIRE(basis.size() == 1);
    // proportional to (2, -1)
    CHECK(basis[0][0] * Rat(-1) == basis[0][1] * Rat(2));
    CHECK(is_zero_vec(mat_vec(from_rows({{1, 2}, {2, 4}}), basis[0])));
}

TEST_CASE("solve") {
    std::vector<Rat> b = {3, 5};
    auto x = solve(from_rows({{1, 0}, {0, 1}}), b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 3);
    CHECK((*x)[1] == 5);

    std::vector<Rat> one = {1};
    CHECK_FALSE(solve(SparseMatrix(1, 1), one).has_value());

    SparseMatrix m = from_rows({{1, 2}, {2, 4}});
    std::vector<Rat> b2 = {1, 2};
    auto x2 = solve(m, b2);
    REQUIRE(x2.has_value());
    auto residual = mat_vec(m, *x2);
    CHECK(residual[0] == 1);
    CHECK(residual[1] == 2);

    std::vector<Rat> wrong = {1};
    CHECK_THROWS_AS(solve(m, wrong), std::invalid_argument);
}

TEST_CASE("rank-nullity and solve consistency on random sparse matrices") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dim(0, 8);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_int_distribution<int> density(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const long nr = dim(rng), nc = dim(rng);
        SparseMatrix m(nr, nc);
        for (long r = 0; r < nr; ++r)
            for (long c = 0; c < nc; ++c)
                if (density(rng) == 0)
                    m.set(r, c, entry(rng));

        const long rk = rank(m);
        auto basis = kernel_basis(m);
        CHECK(rk + static_cast<long>(basis.size()) == nc);
        for (const auto& v : basis)
            CHECK(is_zero_vec(mat_vec(m, v)));

        std::vector<Rat> b(static_cast<size_t>(nr));
        for (auto& x : b)
            x = entry(rng);
        auto x = solve(m, b);
        if (x) {
            auto res = mat_vec(m, *x);
            for (long r = 0; r < nr; ++r)
                CHECK(res[static_cast<size_t>(r)] == b[static_cast<size_t>(r)]);
        } else {
            // b outside the column span: the augmented matrix gains rank
            SparseMatrix aug(nr, nc + 1);
            for (const auto& [rc, v] : m.entries())
                aug.set(rc.first, rc.second, v);
            for (long r = 0; r < nr; ++r)
                aug.set(r, nc, b[static_cast<size_t>(r)]);
            CHECK(rank(aug) == rk + 1);
        }
    }
}

TEST_CASE("results do not depend on entry insertion order") {
    SparseMatrix a(3, 3), b(3, 3);
    const std::vector<std::tuple<long, long, int>> entries = {
        {0, 0, 2}, {0, 2, -1}, {1, 1, 3}, {2, 0, 4}, {2, 2, -2}};
    for (const auto& [r, c, v] : entries)
        a.set(r, c, v);
    for (auto it = entries.rbegin(); it != entries.rend(); ++it)
        b.set(std::get<0>(*it), std::get<1>(*it), std::get<2>(*it));
    CHECK(rank(a) == rank(b));
    CHECK(kernel_basis(a) == kernel_basis(b));
}

TEST_CASE("rational entries are cleared row-wise, exactly") {
    SparseMatrix m(2, 2);
    m.set(0, 0, Rat(1, 3));
    m.set(0, 1, Rat(1, 6));
    m.set(1, 0, Rat(2, 3));
    m.set(1, 1, Rat(1, 3));
    CHECK(rank(m) == 1);
    auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(is_zero_vec(mat_vec(m, basis[0])));
}

TEST_CASE("scalars stay in lowest terms with positive denominators") {
    CHECK(rat_string(Rat(0)) == "0");
    CHECK(rat_string(Rat(4, 6)) == "2/3");
    CHECK(rat_string(Rat(3, -6)) == "-1/2");
    CHECK(parse_rat("-7/21") == Rat(-1, 3));
    CHECK(parse_rat("5") == Rat(5));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> pick(-30, 30);
    for (int trial = 0; trial < 200; ++trial) {
        int a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
        if (b == 0 || d == 0)
            continue;
        Rat x(a, b), y(c, d);
        for (const Rat& v : {x + y, x - y, x * y}) {
            CHECK(denominator(v) > 0);
            CHECK(gcd(numerator(v) < 0 ? Int(-numerator(v)) : numerator(v), denominator(v)) == 1);
        }
        CHECK(parse_rat(rat_string(x * y)) == x * y);
    }
}

TEST_CASE("echelon_span canonicalizes spans") {
    auto b1 = echelon_span({{Rat(2), Rat(0), Rat(2)}, {Rat(1), Rat(1), Rat(0)}}, 3);
    auto b2 = echelon_span({{Rat(3), Rat(1), Rat(2)}, {Rat(0), Rat(2), Rat(-2)}}, 3);
    CHECK(b1 == b2);  // same row space, same canonical basis
    CHECK(echelon_span({{Rat(0), Rat(0)}}, 2).empty());
}
