#pragma once

#include "helixlab/atom.hpp"
#include "helixlab/ints.hpp"
#include "helixlab/variety.hpp"

#include <string>
#include <vector>

namespace helixlab {

struct Term {
  Atom atom;
  Int mult = 1;  // always > 0 in a stored expression

  bool operator==(const Term& o) const {
    return atom == o.atom && mult == o.mult;
  }
};

// Formal direct sum of catalog atoms in canonical form: terms sorted by
// (kind, p, twist), equal atoms merged, no zero multiplicities. The empty
// term list is the zero sheaf. Structural equality of normal forms is the
// catalog's isomorphism test (see expr.cpp for the rewrite rules).
class Expr {
 public:
  explicit Expr(const Variety& v) : v_(v) {}

  const Variety& variety() const { return v_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool single_atom() const {
    return terms_.size() == 1 && terms_[0].mult == 1;
  }

  bool operator==(const Expr& o) const {
    return v_ == o.v_ && terms_ == o.terms_;
  }

  std::string str() const;

 private:
  Variety v_;
  std::vector<Term> terms_;

  friend Expr atom_expr(const Variety&, AtomKind, long long, long long,
                        const Int&);
  friend Expr zero_expr(const Variety&);
  friend Expr direct_sum(const Expr&, const Expr&);
  friend Expr twist(const Expr&, long long);
  friend Expr dual(const Expr&);
};

// The only constructors; both apply the catalog rewrites:
//   Omega^0 -> O(t),       Omega^n on P^n -> O(t-n-1),
//   wT^0    -> O(t),       wT^n on P^n    -> O(t+n+1),
//   Omega^(n+1)| on Q_n -> O(t-n-2),  wT^(n+1)| -> O(t+n+2),
//   out-of-range wedge powers -> zero sheaf,
//   psi_0 -> O(t), psi_1 -> Omega^1(t+1)|, psi_n -> 2^((n+1)/2) * Sigma(t-1),
//   psidual_0 -> O(t), psidual_1 -> wT^1(t-1)|, psidual_n -> 2^((n+1)/2)*Sigma(t),
//   psi_(n+2k) -> psi_n; psi index n+odd is out of catalog (throws).
// Throws std::invalid_argument for atoms foreign to the variety.
Expr atom_expr(const Variety& v, AtomKind kind, long long p, long long t,
               const Int& mult = 1);
Expr zero_expr(const Variety& v);

Expr direct_sum(const Expr& a, const Expr& b);
Expr twist(const Expr& f, long long t);
Expr dual(const Expr& f);

Int rank(const Expr& f);

// smallest twist appearing among the terms (0 for the zero sheaf); seed
// value for regularity scans.
long long min_twist(const Expr& f);

}  // namespace helixlab
