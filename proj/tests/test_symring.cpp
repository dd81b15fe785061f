#include <catch2/catch.hpp>

#include "fockforge/symring.hpp"

using namespace fockforge;

namespace {

SymFunc s(std::initializer_list<int> parts) { return SymFunc::schur(Partition(parts)); }

}  // namespace

TEST_CASE("symfunc arithmetic basics", "[symring]") {
    SymFunc f = s({2}) + s({1, 1});
    CHECK(f.coeff(Partition({2})) == 1);
    CHECK((f - f).is_zero());
    CHECK((f * Rational(0)).is_zero());
    CHECK(f.degree() == 2);
    CHECK(SymFunc::zero().degree() == SymFunc::kDegreeOfZero);
    CHECK((s({1}) * s({1})) == s({2}) + s({1, 1}));
}

TEST_CASE("multiplication operators on examples", "[symring]") {
    CHECK(mul_h(2).apply(s({1})) == s({3}) + s({2, 1}));
    CHECK(mul_e(2).apply(s({1})) == s({2, 1}) + s({1, 1, 1}));
    CHECK(op_equal_on_window(mul_schur(Partition()), LinOp::identity(), 5));
    CHECK(mul_h(0).apply(s({2})) == s({2}));
    CHECK(mul_h(-1).apply(s({2})).is_zero());
    CHECK(*mul_h(2).degree_shift() == 2);
    CHECK(*mul_schur(Partition({2, 1})).degree_shift() == 3);
}

TEST_CASE("skew operators on examples", "[symring]") {
    CHECK(skew_h(1).apply(s({2, 1})) == s({2}) + s({1, 1}));
    CHECK(skew_e(1).apply(s({1, 1})) == s({1}));
    CHECK(skew_schur(Partition({2, 1})).apply(s({1})).is_zero());  // degree
    CHECK(skew_h(0).apply(s({2})) == s({2}));
    CHECK(skew_h(-1).apply(s({2})).is_zero());
    CHECK(*skew_schur(Partition({2, 1})).degree_shift() == -3);
}

TEST_CASE("power sum operators on examples", "[symring]") {
    CHECK(mul_p(2).apply(SymFunc::one()) == s({2}) - s({1, 1}));
    CHECK(skew_p(3).apply(SymFunc::one()).is_zero());
    SymFunc defect = skew_p(2).apply(mul_p(2).apply(SymFunc::one())) -
                     mul_p(2).apply(skew_p(2).apply(SymFunc::one()));
    CHECK(defect == Rational(2) * SymFunc::one());
    CHECK_THROWS_AS(mul_p(0), std::invalid_argument);
    CHECK_THROWS_AS(skew_p(-1), std::invalid_argument);
}

TEST_CASE("hall inner product", "[symring]") {
    CHECK(hall_inner(s({2, 1}), s({2, 1})) == 1);
    CHECK(hall_inner(s({2}), s({1, 1})) == 0);
    CHECK(hall_inner(mul_h(1).apply(s({1})), s({2})) == 1);
    CHECK(hall_inner(s({1}), skew_h(1).apply(s({2}))) == 1);
}

TEST_CASE("mul/skew are Hall adjoint", "[symring]") {
    for (int dn = 0; dn <= 4; ++dn)
        for (const Partition& nu : partitions_of(dn)) {
            LinOp up = mul_schur(nu);
            LinOp down = skew_schur(nu);
            for (int dl = 0; dl <= 6; ++dl)
                for (const Partition& lam : partitions_of(dl))
                    for (const Partition& mu : partitions_of(dl + dn)) {
                        CHECK(hall_inner(up.apply(SymFunc::schur(lam)), SymFunc::schur(mu)) ==
                              hall_inner(SymFunc::schur(lam), down.apply(SymFunc::schur(mu))));
                    }
        }
}

TEST_CASE("skew operators compose through LR", "[symring]") {
    for (int dm = 0; dm <= 3; ++dm)
        for (const Partition& mu : partitions_of(dm))
            for (int dn = 0; dn <= 3; ++dn)
                for (const Partition& nu : partitions_of(dn)) {
                    LinOp lhs = skew_schur(mu) * skew_schur(nu);
                    LinOp rhs = LinOp::zero();
                    for (const Partition& lam : partitions_of(dm + dn)) {
                        auto c = lr_coefficient(lam, mu, nu);
                        if (c) rhs = rhs + Rational(static_cast<long>(c)) * skew_schur(lam);
                    }
                    CHECK(op_equal_on_window(lhs, rhs, 8));
                }
}

TEST_CASE("power sum basis conversions", "[symring]") {
    PowerExpansion p2 = to_p_basis(s({2}));
    CHECK(p2.size() == 2);
    CHECK(p2.at(Partition({2})) == Rational(1, 2));
    CHECK(p2.at(Partition({1, 1})) == Rational(1, 2));

    PowerExpansion p11 = to_p_basis(s({1, 1}));
    CHECK(p11.at(Partition({2})) == Rational(-1, 2));
    CHECK(p11.at(Partition({1, 1})) == Rational(1, 2));

    CHECK(to_p_basis(s({1})) == PowerExpansion{{Partition({1}), Rational(1)}});
}

TEST_CASE("p-basis round trip", "[symring]") {
    for (int d = 0; d <= 6; ++d)
        for (const Partition& lam : partitions_of(d)) {
            SymFunc f = SymFunc::schur(lam);
            CHECK(from_p_basis(to_p_basis(f)) == f);
        }
    SymFunc mixed = Rational(2, 3) * s({3, 1}) - s({2}) + Rational(5) * SymFunc::one();
    CHECK(from_p_basis(to_p_basis(mixed)) == mixed);
}

TEST_CASE("generating function coefficients", "[symring]") {
    CHECK(gf_h(0) == SymFunc::one());
    CHECK(gf_e(0) == SymFunc::one());
    CHECK(gf_h(3) == s({3}));
    CHECK(gf_e(3) == s({1, 1, 1}));
    for (int n = 1; n <= 6; ++n) {
        CHECK(gf_h(n) == SymFunc::schur(Partition({n})));
        CHECK(gf_e(n) == SymFunc::schur(Partition(std::vector<int>(n, 1))));
    }
    CHECK_THROWS_AS(gf_h(-1), std::invalid_argument);
}

TEST_CASE("window equality of operators", "[symring]") {
    CHECK(op_equal_on_window(mul_h(1) * mul_h(2), mul_h(2) * mul_h(1), 6));
    CHECK_FALSE(op_equal_on_window(skew_h(1) * mul_h(1), mul_h(1) * skew_h(1), 4));
    CHECK(op_equal_on_window(LinOp::zero(), LinOp::zero(), 5));
    auto mismatch = find_op_mismatch(skew_h(1) * mul_h(1), mul_h(1) * skew_h(1), 4);
    REQUIRE(mismatch.has_value());
    CHECK(std::get<0>(*mismatch) == Partition());
}

TEST_CASE("power sums equal alternating hook sums", "[symring]") {
    for (int k = 1; k <= 8; ++k) {
        LinOp hook_sum = LinOp::zero();
        auto hs = hooks(k);
        for (int i = 0; i < k; ++i)
            hook_sum = hook_sum + Rational(i % 2 ? -1 : 1) * mul_schur(hs[static_cast<std::size_t>(i)]);
        CHECK(op_equal_on_window(mul_p(k), hook_sum, 8));
    }
}

TEST_CASE("mixed degree shift propagates", "[symring]") {
    LinOp mixed = mul_h(1) + mul_h(2);
    CHECK_FALSE(mixed.degree_shift().has_value());
    LinOp sum = mul_h(1) + mul_h(1);
    CHECK(*sum.degree_shift() == 1);
    CHECK(*(skew_h(2) * mul_h(3)).degree_shift() == 1);
}
