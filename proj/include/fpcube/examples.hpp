#pragma once

#include "fpcube/words.hpp"

namespace fpcube::examples {

// Genus-2 surface relator a b a^-1 b^-1 c d c^-1 d^-1 over Z*Z*Z*Z.
Presentation surface_genus2();

// Z/2 * Z/2 modulo (ab)^7; the quotient is dihedral of order 14.
Presentation dihedral7();

// Z/3 * Z/3 modulo (ab)^7 (von Dyck type); both factors finite.
Presentation finite_von_dyck();

// Z^2 * Z with relator a1 b a2 b^2 a3 b^3 a4 b^4, a_i the four unit vectors.
Presentation grid_example();

// F_2 * Z with relator x b y b^2 x^-1 b^3 y^-1 b^4.
Presentation tree_example();

// Cyclic group Z/n as a multiplication table.
std::vector<std::vector<int>> cyclic_table(int n);

Presentation by_name(const std::string& name);

}  // namespace fpcube::examples
