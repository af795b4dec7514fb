#pragma once

#include "helixlab/ints.hpp"
#include "helixlab/variety.hpp"

#include <compare>
#include <string>

namespace helixlab {

// Catalog atoms. Omega / WedgeT mean the plain (co)tangent wedge powers on
// P^n and the *restricted* ambient ones on Q_n; the variety disambiguates.
// Enum order is the canonical sort order of printed expressions.
enum class AtomKind : int {
  Structure = 0,  // O(t)
  Sigma = 1,      // spinor bundle on Q_n, normalized so Sigma* = Sigma(-1)
  Psi = 2,        // psi_j on Q_n (kept range 2..n-1 after rewrites)
  PsiDual = 3,    // psi_j^* on Q_n
  Omega = 4,      // Omega^p(t), ambient-restricted on Q_n
  WedgeT = 5,     // wedge^p T(t), ambient-restricted on Q_n
};

struct Atom {
  AtomKind kind = AtomKind::Structure;
  int p = 0;         // wedge power / psi index; 0 for Structure and Sigma
  long long t = 0;   // twist

  auto operator<=>(const Atom&) const = default;
};

// rank of a single catalog atom on the given variety (atom assumed kept,
// i.e. already in normal form for that variety).
Int atom_rank(const Variety& v, const Atom& a);

// "O(-3)", "Sigma(0)", "Omega^2(5)", "wT^1(-1)", "psi_2(0)", ... The twist
// is always printed, including (0).
std::string atom_str(const Atom& a);

}  // namespace helixlab
