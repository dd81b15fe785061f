#pragma once
// Umbrella header.

#include "category.hpp"
#include "correspondence.hpp"
#include "fock.hpp"
#include "linop.hpp"
#include "lr.hpp"
#include "partition.hpp"
#include "rational.hpp"
#include "ribbon.hpp"
#include "serialize.hpp"
#include "symfunc.hpp"
#include "symring.hpp"
#include "verifier.hpp"
