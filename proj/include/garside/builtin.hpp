#pragma once

#include <map>
#include <string>
#include <vector>

#include "garside/laurent.hpp"
#include "garside/system.hpp"

namespace garside::builtin {

/// Reduced Burau matrices for B3: σ1 ↦ [[−t,1],[0,1]], σ2 ↦ [[1,0],[t,−t]].
LaurentMatrix burau_sigma1();
LaurentMatrix burau_sigma2();

/// ⟨a, b | a^p = b^q⟩. Carries a Burau representation for (2,3).
SystemDef torus(int p, int q);
/// Classical dihedral Artin monoid: aba⋯ = bab⋯ (m letters each). Burau rep for m = 3.
SystemDef dihedral(int m);
/// Dual dihedral monoid on m atoms: x1 xm = xm x(m−1) = ⋯ = x2 x1. Burau rep for m = 3.
SystemDef dual_dihedral(int m);
/// Pure dihedral monoid of rank n: an⋯a1 = a(n−1)⋯a1 an = ⋯ = a1 an⋯a2.
SystemDef pure_dihedral(int n);
/// Pure braid monoid P3: abc = bca = cab, with the rep a = x3², b = x2², c = x1²
/// through the dual B3 monoid.
SystemDef p3();
/// ⟨s, b | s b s = b b⟩ with Δ = b³: Garside but not of spindle type.
SystemDef nonspindle_b3();
/// One atom a with Δ = a (the integers).
SystemDef integers();

/// Template instantiation by name: torus (p, q), dihedral (m), dual-dihedral (m),
/// pure-dihedral (n), p3, nonspindle-b3, integers.
SystemDef from_template(const std::string& name, const std::map<std::string, long>& params);

/// The spindle systems exercised by the axiom suites.
std::vector<SystemDef> spindle_catalogue();

}  // namespace garside::builtin
