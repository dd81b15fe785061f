#include <catch2/catch.hpp>

#include <random>
#include <thread>
#include <vector>

#include "fockforge/correspondence.hpp"
#include "fockforge/symring.hpp"

using namespace fockforge;

namespace {

// deterministic generators so failures reproduce
struct Gen {
    std::mt19937 rng{20240814};

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    Partition partition(int max_size) {
        int n = pick(0, max_size);
        const auto& all = partitions_of(n);
        return all[static_cast<std::size_t>(pick(0, static_cast<int>(all.size()) - 1))];
    }

    Rational coeff() {
        int num = pick(-6, 6);
        int den = pick(1, 4);
        return rat(num ? num : 1, den);
    }

    SymFunc symfunc(int max_deg, int terms) {
        SymFunc f;
        for (int t = 0; t < terms; ++t) f.add_term(partition(max_deg), coeff());
        return f;
    }

    FockVector fock(int charge_span, int max_energy, int terms) {
        FockVector v;
        for (int t = 0; t < terms; ++t)
            v.add_term({pick(-charge_span, charge_span), partition(max_energy)}, coeff());
        return v;
    }
};

}  // namespace

TEST_CASE("operators are linear on random elements", "[properties]") {
    Gen gen;
    for (int trial = 0; trial < 40; ++trial) {
        SymFunc f = gen.symfunc(5, 3);
        SymFunc g = gen.symfunc(5, 3);
        Rational a = gen.coeff();
        LinOp op = trial % 2 ? mul_schur(gen.partition(3)) : skew_schur(gen.partition(3));
        CHECK(op.apply(a * f + g) == a * op.apply(f) + op.apply(g));
    }
}

TEST_CASE("hall pairing is bilinear and orthonormal", "[properties]") {
    Gen gen;
    for (int trial = 0; trial < 40; ++trial) {
        SymFunc f = gen.symfunc(5, 3);
        SymFunc g = gen.symfunc(5, 3);
        SymFunc h = gen.symfunc(5, 3);
        Rational a = gen.coeff();
        CHECK(hall_inner(a * f + g, h) == a * hall_inner(f, h) + hall_inner(g, h));
        CHECK(hall_inner(f, g) == hall_inner(g, f));
    }
}

TEST_CASE("mul and skew stay adjoint on random elements", "[properties]") {
    Gen gen;
    for (int trial = 0; trial < 30; ++trial) {
        Partition nu = gen.partition(3);
        SymFunc f = gen.symfunc(4, 3);
        SymFunc g = gen.symfunc(7, 3);
        CHECK(hall_inner(mul_schur(nu).apply(f), g) == hall_inner(f, skew_schur(nu).apply(g)));
    }
}

TEST_CASE("p-basis round trip on random elements", "[properties]") {
    Gen gen;
    for (int trial = 0; trial < 25; ++trial) {
        SymFunc f = gen.symfunc(6, 4);
        CHECK(from_p_basis(to_p_basis(f)) == f);
    }
}

TEST_CASE("clifford generators are linear across charge sectors", "[properties]") {
    Gen gen;
    for (int trial = 0; trial < 25; ++trial) {
        FockVector v = gen.fock(2, 4, 3);
        FockVector w = gen.fock(2, 4, 3);
        Rational a = gen.coeff();
        int i = gen.pick(-4, 4);
        CHECK(psi(i, a * v + w) == a * psi(i, v) + psi(i, w));
        CHECK(clifford_psi(i, a * v + w) == a * clifford_psi(i, v) + clifford_psi(i, w));
        CHECK(clifford_psi_star(i, a * v + w) ==
              a * clifford_psi_star(i, v) + clifford_psi_star(i, w));
    }
}

TEST_CASE("boson dictionary intertwines on random sector elements", "[properties]") {
    Gen gen;
    for (int trial = 0; trial < 25; ++trial) {
        int m = gen.pick(-2, 2);
        SymFunc f = gen.symfunc(5, 3);
        FockVector v = from_boson(f, m);
        int n = gen.pick(1, 4);
        CHECK(to_boson(fermion_p(n, v), m) == mul_p(n).apply(f));
        CHECK(to_boson(fermion_p_star(n, v), m) == skew_p(n).apply(f));
    }
}

TEST_CASE("shared caches survive concurrent use", "[properties]") {
    // serial reference
    SymFunc serial;
    for (const Partition& lam : partitions_up_to(5))
        serial += mul_p(3).apply(mul_schur(Partition({2, 1})).apply(SymFunc::schur(lam)));

    std::vector<SymFunc> results(4);
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&results, t] {
            SymFunc acc;
            for (const Partition& lam : partitions_up_to(5))
                acc += mul_p(3).apply(mul_schur(Partition({2, 1})).apply(SymFunc::schur(lam)));
            results[static_cast<std::size_t>(t)] = std::move(acc);
        });
    for (auto& th : pool) th.join();
    for (const auto& r : results) CHECK(r == serial);
}
