#include <catch2/catch.hpp>

#include "fockforge/serialize.hpp"

using namespace fockforge;

TEST_CASE("symfunc json round trip and key order", "[serialize]") {
    SymFunc f = Rational(1, 2) * SymFunc::schur(Partition({2, 1})) -
                Rational(3) * SymFunc::schur(Partition({1})) + SymFunc::one();
    OrderedJson j = to_json(f);
    CHECK(j.dump() == R"({"-":"1","1":"-3","2,1":"1/2"})");  // graded order
    CHECK(symfunc_from_json(j) == f);
    CHECK(to_json(SymFunc::zero()).dump() == "{}");
}

TEST_CASE("fock vector json round trip", "[serialize]") {
    FockVector v = vacuum(2) - Rational(5, 3) * FockVector::basis({-1, Partition({3, 1})});
    OrderedJson j = to_json(v);
    CHECK(j.dump() == R"({"-1|3,1":"-5/3","2|-":"1"})");
    CHECK(fockvector_from_json(j) == v);
}

TEST_CASE("kclass json round trip", "[serialize]") {
    KClass k = 2 * KClass::simple(Partition({2}), Partition({1})) -
               KClass::simple(Partition(), Partition());
    OrderedJson j = to_json(k);
    CHECK(j.dump() == R"({"-;-":-1,"2;1":2})");
    CHECK(kclass_from_json(j) == k);
}

TEST_CASE("rational strings", "[serialize]") {
    CHECK(rational_str(rat(6, -4)) == "-3/2");
    CHECK(rational_str(rat(8, 4)) == "2");
    CHECK(parse_rational("-3/2") == rat(-3, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}
