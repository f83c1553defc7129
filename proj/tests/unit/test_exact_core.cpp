#include <doctest.h>

#include <random>
#include <string>

#include <vertexkernel/linalg.hpp>
#include <vertexkernel/lincomb.hpp>
#include <vertexkernel/rational.hpp>

using namespace vk;

namespace
{

// Falling factorial over j! with plain long arithmetic; exact for small inputs.
Rational binom_oracle(long m, long j)
{
    Rational num = 1;
    Rational den = 1;
    for (long i = 0; i < j; ++i) {
        num *= m - i;
        den *= i + 1;
    }
    return num / den;
}

using Comb = LinComb<std::string>;

// mpq_class(p, q) is not reduced by itself.
Rational frac(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Comb random_comb(std::mt19937 &rng)
{
    static const char *keys[] = {"a", "b", "c", "d"};
    std::uniform_int_distribution<int> coeff(-4, 4), den(1, 3), count(0, 4), key(0, 3);
    Comb out;
    for (int i = count(rng); i > 0; --i) {
        out.add(keys[key(rng)], frac(coeff(rng), den(rng)));
    }
    return out;
}

} // namespace

TEST_CASE("binom_general on fixed values")
{
    CHECK(binom_general(2, 3) == 0);
    CHECK(binom_general(-1, 2) == 1);
    CHECK(binom_general(-3, 2) == 6);
    CHECK(binom_general(5, 0) == 1);
    CHECK(binom_general(-7, 0) == 1);
}

TEST_CASE("binom_general agrees with the falling factorial")
{
    for (long m = -8; m <= 8; ++m) {
        for (long j = 0; j <= 8; ++j) {
            CAPTURE(m);
            CAPTURE(j);
            CHECK(binom_general(m, j) == binom_oracle(m, j));
        }
    }
}

TEST_CASE("binom_general satisfies Pascal's rule for negative tops")
{
    for (long m = -6; m <= 6; ++m) {
        for (long j = 1; j <= 6; ++j) {
            CHECK(binom_general(m, j) == binom_general(m - 1, j) + binom_general(m - 1, j - 1));
        }
    }
}

TEST_CASE("factorials")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(inverse_factorial(4) == Rational(1, 24));
    CHECK(sign_power(3) == -1);
    CHECK(sign_power(-2) == 1);
}

TEST_CASE("rational text round trip")
{
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(frac(-6, 4)) == "-3/2");
    CHECK(to_string(frac(4, 2)) == "2");
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("combine cancels and rescales")
{
    const auto k = Comb::term("k");
    CHECK(combine(k, k, Rational(-1)).empty());
    const auto r = combine(k, Comb::term("m", 2), Rational(1, 2));
    CHECK(r.size() == 2);
    CHECK(r.coeff("k") == 1);
    CHECK(r.coeff("m") == 1);
    CHECK(combine(Comb{}, Comb::term("k", 3), Rational(0)).empty());
}

TEST_CASE("tensor of combinations")
{
    auto t = tensor(Comb::term("k", 2), Comb::term("m", 3));
    CHECK(t.size() == 1);
    CHECK(t.coeff({"k", "m"}) == 6);
    CHECK(tensor(Comb{}, Comb::term("m")).empty());
    Comb kl = Comb::term("k") + Comb::term("l");
    auto t2 = tensor(kl, Comb::term("m"));
    CHECK(t2.size() == 2);
    CHECK(t2.coeff({"k", "m"}) == 1);
    CHECK(t2.coeff({"l", "m"}) == 1);
}

TEST_CASE("linear combinations form a vector space over the rationals")
{
    std::mt19937 rng(20261018);
    for (int trial = 0; trial < 200; ++trial) {
        const Comb a = random_comb(rng), b = random_comb(rng), c = random_comb(rng);
        const Rational s = frac(static_cast<int>(rng() % 7) - 3, 2);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a - a).empty());
        CHECK(s * (a + b) == s * a + s * b);
        for (const auto &[k, q] : a + b) {
            CHECK(sgn(q) != 0);
        }
        // bilinearity of the tensor product
        CHECK(tensor(a + b, c) == tensor(a, c) + tensor(b, c));
        CHECK(tensor(s * a, c) == s * tensor(a, c));
    }
}

TEST_CASE("rank and kernel")
{
    Matrix m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(rank(m, 3) == 2);
    auto ker = kernel(m, 3);
    REQUIRE(ker.size() == 1);
    for (const auto &row : m) {
        Rational dot = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            dot += row[j] * ker[0][j];
        }
        CHECK(dot == 0);
    }
    CHECK(rank(Matrix{}, 4) == 0);
    CHECK(kernel(Matrix{}, 2).size() == 2);
}

TEST_CASE("kernel vectors are annihilated for random matrices")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
        Matrix m(rows, Vector(cols));
        for (auto &r : m) {
            for (auto &x : r) {
                x = entry(rng);
            }
        }
        const auto ker = kernel(m, cols);
        CHECK(rank(m, cols) + ker.size() == cols);
        for (const auto &v : ker) {
            for (const auto &r : m) {
                Rational dot = 0;
                for (std::size_t j = 0; j < cols; ++j) {
                    dot += r[j] * v[j];
                }
                CHECK(dot == 0);
            }
        }
    }
}
