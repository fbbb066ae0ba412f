#pragma once

#include "mota1/f2map.hpp"
#include "mota1/monomial_map.hpp"

#include <string>
#include <vector>

namespace mota1 {

// A bigraded M2-free module with an action of the motivic A(1): two
// endomorphisms of the underlying basis in the degrees of Sq1 and Sq2,
// subject to the operator identities checked by validate().
struct A1Module {
    std::string name;
    BasisPtr basis;
    MonomialMap sq1;  // degree (1,0)
    MonomialMap sq2;  // degree (2,1)
};

struct Violation {
    std::string relation;
    std::string generator;
    Bidegree at;
};

std::string describe(const std::vector<Violation>& vs);

// Empty result means the operator identities
//   Sq1 Sq1 = 0,  Sq2 Sq2 = tau Sq1 Sq2 Sq1,  Sq1 Sq2 Sq1 Sq2 = Sq2 Sq1 Sq2 Sq1
// hold and both action maps carry the correct degrees.
std::vector<Violation> validate(const A1Module& m);
inline bool is_valid(const A1Module& m) { return validate(m).empty(); }

// Degree (0,0) map of modules; validate_map checks commutation with both
// actions.
struct ModuleMap {
    A1Module source;
    A1Module target;
    MonomialMap map;
};

std::vector<Violation> validate_map(const ModuleMap& phi);

A1Module suspend(const A1Module& m, int a, int b);

// Tensor product over M2 with the diagonal action
//   Sq1(g⊗h) = Sq1 g⊗h + g⊗Sq1 h
//   Sq2(g⊗h) = Sq2 g⊗h + tau·Sq1 g⊗Sq1 h + g⊗Sq2 h.
// Pair (i,j) gets index i·|N| + j.
A1Module tensor(const A1Module& m, const A1Module& n);

// M2-linear dual: generators in negated degrees, action bits transposed
// (the antipode fixes Sq1 and Sq2).
A1Module dual(const A1Module& m);

// Direct sum; generator ids are prefixed "<part>." to stay unique.
A1Module direct_sum(const std::vector<A1Module>& parts);

// The tau = 0 reduction of an A(1)-module.
struct F2A1Module {
    std::string name;
    BasisPtr basis;
    F2Map sq1;
    F2Map sq2;
};

std::vector<Violation> validate(const F2A1Module& m);

// Drop every action entry whose forced valuation is positive.
F2A1Module quotient_tau(const A1Module& m);

// The induced degree-(0,0) map on tau quotients.
F2Map quotient_tau(const ModuleMap& phi);

F2A1Module tensor(const F2A1Module& m, const F2A1Module& n);

// Identical generator lists (ids included) and identical action entries.
bool structurally_equal(const A1Module& a, const A1Module& b);

// Same generator degrees and action entries position by position, ignoring ids.
bool positionally_equal(const A1Module& a, const A1Module& b);
bool positionally_equal(const F2A1Module& a, const F2A1Module& b);

}  // namespace mota1
