#pragma once

#include <vector>

#include "pvilab/ratexpr.hpp"

namespace pvilab {

struct PoleTerm {
    RatExpr pole;     // location in the remaining variables
    RatExpr residue;  // coefficient of 1/(v - pole)
};

struct PartialFractions {
    std::vector<PoleTerm> terms;
    RatExpr polynomial_part;  // polynomial in v
};

// Residue of f at a simple pole v = c. Returns 0 when f is regular there;
// throws MultiplicityError at a higher-order pole.
RatExpr residue_at(const RatExpr& f, Var v, const RatExpr& pole);

// Decompose f over the given simple poles in v. Post-condition (checked):
// f == polynomial_part + sum residue_i / (v - pole_i); a leftover means the
// pole list was incomplete and raises StructureMismatchError.
PartialFractions partial_fractions(const RatExpr& f, Var v, const std::vector<RatExpr>& poles);

}  // namespace pvilab
