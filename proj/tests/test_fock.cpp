#include <catch2/catch.hpp>

#include <algorithm>
#include <functional>

#include "fockforge/fock.hpp"
#include "fockforge/ribbon.hpp"

using namespace fockforge;

namespace {

FockVector basis(int charge, std::initializer_list<int> parts) {
    return FockVector::basis({charge, Partition(parts)});
}

}  // namespace

TEST_CASE("charged partition text form", "[fock]") {
    CHECK(ChargedPartition{2, Partition({3, 1})}.str() == "2|3,1");
    CHECK(ChargedPartition{0, Partition()}.str() == "0|-");
    CHECK(ChargedPartition::parse("2|3,1") == ChargedPartition{2, Partition({3, 1})});
    CHECK(ChargedPartition::parse("-1|-") == ChargedPartition{-1, Partition()});
    CHECK_THROWS_AS(ChargedPartition::parse("3,1"), std::invalid_argument);
    CHECK(ChargedPartition{1, Partition()}.weight_halves() == 1);
    CHECK(ChargedPartition{0, Partition({3})}.weight_halves() == 6);
}

TEST_CASE("vacuum annihilation conventions", "[fock]") {
    for (int i = 0; i <= 5; ++i) CHECK(psi(i, vacuum(0)).is_zero());
    for (int i = -5; i < 0; ++i) CHECK(psi_star(i, vacuum(0)).is_zero());
    for (int i = -5; i < 0; ++i) CHECK_FALSE(psi(i, vacuum(0)).is_zero());
    for (int i = 0; i <= 5; ++i) CHECK_FALSE(psi_star(i, vacuum(0)).is_zero());
}

TEST_CASE("creation on the vacuum", "[fock]") {
    CHECK(psi(-1, vacuum(0)) == vacuum(1));  // sign +1 here
    CHECK(psi(-3, vacuum(0)) == basis(1, {2}));
    CHECK(psi(0, basis(0, {1})) == -vacuum(1));
    CHECK(psi_star(1, basis(0, {1})) == -basis(-1, {2}));
    CHECK(psi(1, psi(1, basis(0, {2, 1}))).is_zero());  // double creation
}

TEST_CASE("full clifford relations on a window", "[fock]") {
    for (int m = -2; m <= 2; ++m)
        for (const auto& b : sector_basis(m, 4)) {
            FockVector v = FockVector::basis(b);
            for (int i = -4; i <= 4; ++i)
                for (int j = -4; j <= 4; ++j) {
                    CHECK((psi(i, psi(j, v)) + psi(j, psi(i, v))).is_zero());
                    CHECK((psi_star(i, psi_star(j, v)) + psi_star(j, psi_star(i, v))).is_zero());
                    FockVector anti = psi(i, psi_star(j, v)) + psi_star(j, psi(i, v));
                    if (i == j)
                        CHECK(anti == v);
                    else
                        CHECK(anti.is_zero());
                }
        }
}

TEST_CASE("anticommutator at a fixed index resolves the identity", "[fock]") {
    for (int m = -1; m <= 1; ++m)
        for (const auto& b : sector_basis(m, 6)) {
            FockVector v = FockVector::basis(b);
            CHECK(psi(2, psi_star(2, v)) + psi_star(2, psi(2, v)) == v);
        }
}

TEST_CASE("fermionic power sums on examples", "[fock]") {
    CHECK(fermion_p(1, vacuum(0)) == basis(0, {1}));
    for (int n = 1; n <= 5; ++n)
        for (int m = -2; m <= 2; ++m) CHECK(fermion_p_star(n, vacuum(m)).is_zero());
    FockVector defect = fermion_p_star(2, fermion_p(2, vacuum(0))) -
                        fermion_p(2, fermion_p_star(2, vacuum(0)));
    CHECK(defect == Rational(2) * vacuum(0));
    CHECK_THROWS_AS(fermion_p(0, vacuum(0)), std::invalid_argument);
}

TEST_CASE("fermionic power sums commute", "[fock]") {
    for (int m = -2; m <= 2; ++m)
        for (const auto& b : sector_basis(m, 5)) {
            FockVector v = FockVector::basis(b);
            for (int n = 1; n <= 4; ++n)
                for (int k = n; k <= 4; ++k)
                    CHECK(fermion_p(n, fermion_p(k, v)) == fermion_p(k, fermion_p(n, v)));
        }
}

TEST_CASE("fermionic power sums follow the ribbon rule", "[fock]") {
    for (int m = -2; m <= 2; ++m)
        for (int d = 0; d <= 6; ++d)
            for (const Partition& lam : partitions_of(d))
                for (int n = 1; n <= 5; ++n) {
                    FockVector got = fermion_p(n, FockVector::basis({m, lam}));
                    FockVector want;
                    for (const auto& [mu, h] : add_ribbons(lam, n))
                        want.add_term({m, mu}, h % 2 ? -1 : 1);
                    CHECK(got == want);

                    FockVector got_star = fermion_p_star(n, FockVector::basis({m, lam}));
                    FockVector want_star;
                    for (const auto& [mu, h] : remove_ribbons(lam, n))
                        want_star.add_term({m, mu}, h % 2 ? -1 : 1);
                    CHECK(got_star == want_star);
                }
}

TEST_CASE("charge shift", "[fock]") {
    CHECK(charge_shift(vacuum(0)) == vacuum(1));
    for (int m = -2; m <= 2; ++m)
        for (const auto& b : sector_basis(m, 6)) {
            FockVector v = FockVector::basis(b);
            CHECK(charge_unshift(charge_shift(v)) == v);
            for (int n = 1; n <= 6; ++n)
                CHECK(charge_shift(fermion_p(n, v)) == fermion_p(n, charge_shift(v)));
        }
}

TEST_CASE("maya window encoding is a bijection", "[fock]") {
    for (int m = -3; m <= 3; ++m)
        for (int d = 0; d <= 6; ++d)
            for (const Partition& lam : partitions_of(d)) {
                ChargedPartition b{m, lam};
                for (int rows = lam.length() + 1; rows <= lam.length() + 4; ++rows) {
                    auto window = maya::occupied_window(b, rows);
                    CHECK(std::is_sorted(window.begin(), window.end(), std::greater<long>()));
                    CHECK(maya::from_window(window, m) == b);
                    for (long pos : window) CHECK(maya::occupied(b, pos));
                }
            }
}

TEST_CASE("basis counting", "[fock]") {
    CHECK(count_basis(0, 0) == 1);
    CHECK(count_basis(0, 6) == 3);   // q^3 at charge 0: p(3)
    CHECK(count_basis(1, 1) == 1);   // q^{1/2} at charge 1
    CHECK(count_basis(1, 2) == 0);   // parity mismatch
    CHECK(count_basis(-2, 4) == 1);
    CHECK(count_basis(3, 7) == 0);   // below the sector minimum
    for (int m = -3; m <= 3; ++m)
        for (int h = 0; h <= 12; ++h) {
            std::int64_t direct = 0;
            for (const auto& b : sector_basis(m, 6))
                if (b.weight_halves() == h) ++direct;
            CHECK(count_basis(m, h) == direct);
        }
}
