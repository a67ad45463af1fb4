#pragma once

#include <string>

#include "cyc/io.hpp"

namespace cyc {

// results of the compute commands; schema_error on bad input
json compute_tate(const json& in);
json compute_cyclic(const json& in);
json compute_splitting(const json& in);
// addition and multiplication tables of W2(F_{p^d}) as text
std::string demo_witt(int p, int d);

}  // namespace cyc
