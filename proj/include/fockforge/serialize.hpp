#pragma once
// JSON forms of the value types. Keys follow the internal graded order;
// ordered_json preserves it so output is deterministic byte for byte.
//   SymFunc:    { "2,1": "1/2", ... }           partition -> rational
//   FockVector: { "0|2,1": "1", ... }           charge|partition -> rational
//   KClass:     { "2,1;1": 3, ... }             lam;mu -> integer

#include <json.hpp>

#include <string>

#include "category.hpp"
#include "fock.hpp"
#include "symfunc.hpp"

namespace fockforge {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson to_json(const SymFunc& f) {
    OrderedJson j = OrderedJson::object();
    for (const auto& [lam, c] : f.terms()) j[lam.str()] = rational_str(c);
    return j;
}

inline SymFunc symfunc_from_json(const OrderedJson& j) {
    SymFunc f;
    for (const auto& [key, value] : j.items())
        f.add_term(Partition::parse(key), parse_rational(value.get<std::string>()));
    return f;
}

inline OrderedJson to_json(const FockVector& v) {
    OrderedJson j = OrderedJson::object();
    for (const auto& [b, c] : v.terms()) j[b.str()] = rational_str(c);
    return j;
}

inline FockVector fockvector_from_json(const OrderedJson& j) {
    FockVector v;
    for (const auto& [key, value] : j.items())
        v.add_term(ChargedPartition::parse(key), parse_rational(value.get<std::string>()));
    return v;
}

inline OrderedJson to_json(const KClass& k) {
    OrderedJson j = OrderedJson::object();
    for (const auto& [l, c] : k.terms()) j[l.str()] = c;
    return j;
}

inline KClass kclass_from_json(const OrderedJson& j) {
    KClass k;
    for (const auto& [key, value] : j.items())
        k.add_term(SimpleLabel::parse(key), value.get<std::int64_t>());
    return k;
}

}  // namespace fockforge
