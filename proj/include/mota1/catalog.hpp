#pragma once

#include "mota1/module.hpp"

#include <string>
#include <vector>

namespace mota1 {

// Built-in modules: "M2" (the monoidal unit), "A1" (the rank-one free
// module, 8 generators), "A1tilde" (8 generators), "J" (the joker, 5
// generators).  Throws UnknownName otherwise.
const A1Module& builtin(const std::string& name);

const std::vector<std::string>& builtin_names();

// The monomial words of the A1 catalog basis in application order
// (1 = Sq1, 2 = Sq2); index-aligned with builtin("A1").basis.
const std::vector<std::vector<int>>& a1_monomial_words();

}  // namespace mota1
