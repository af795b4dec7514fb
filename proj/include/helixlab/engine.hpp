#pragma once

#include "helixlab/expr.hpp"
#include "helixlab/rank.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

namespace helixlab {

class LesChase;

// Class coordinates in the basis ([E_0], ..., [E_n]) of the standard
// geometric collection sigma_0.
using K0 = std::vector<Int>;

// Castelnuovo-Mumford regularity through the ambient embedding: least m
// with h^i(F(m-i)) = 0 for 1 <= i <= dim X (on Q_n this is the regularity
// of the pushforward; the ambient top degree vanishes automatically).
struct CmRegularity {
  bool minus_infinity = false;        // zero sheaf: regular for every m
  std::optional<long long> m;         // empty: interval-valued probe blocked
};

// Per-variety computation engine: cohomology and Ext tables built from the
// closed base formulas plus LES interval chases, the K0 lattice with the
// Euler pairing, and the CM-regularity scan. One instance per variety,
// created on first use; all public methods are thread-safe and pure
// (memoization is invisible).
class Engine {
 public:
  static Engine& get(const Variety& v);

  const Variety& variety() const { return v_; }

  // H^q(X, F) for q = 0..n. Additive over terms; every atom table is the
  // meet of its defining-sequence chases, the Serre-dual computation, the
  // pinned base facts, and the K0 Euler-characteristic constraint.
  Table cohomology_table(const Expr& f);

  // dim Ext^q(A, B) for q = 0..n; bilinear over direct sums.
  Table ext_table(const Expr& a, const Expr& b);

  K0 k0_class(const Expr& f);
  Int euler_chi(const Expr& a, const Expr& b);  // k0(A)^T Gram k0(B)
  Int chi_of(const Expr& f);                    // chi(O, F)
  const std::vector<std::vector<Int>>& gram() const { return gram_; }

  // E_j of sigma_0 for j = 0..n: O(j) on P^n; O(0..n-1), Sigma(n-1) on Q_n.
  Expr collection_member(int j) const;

  CmRegularity cm_regularity(const Expr& f);

 private:
  explicit Engine(const Variety& v);

  // ---- K0 lattice (k0.cpp)
  void bootstrap_k0();
  const K0& line_k0(long long t);
  const K0& sigma_k0(long long t);
  K0 atom_k0(const Atom& a);
  Int chi_k0(const K0& a, const K0& b) const;

  // ---- cohomology (cohom.cpp)
  const Table& final_cohom(const Atom& a);
  Table raw_cohom(const Atom& a);
  Table cohom_expr(const Expr& f);
  Table restricted_omega_cohom(int p, long long t);

  // ---- ext (ext.cpp)
  const Table& final_ext(const Atom& a, const Atom& b);
  Table raw_ext(const Atom& a, const Atom& b);
  Table sigma_gap_ext(long long g);
  Table decompose_contravariant(const Atom& a, const Atom& b);
  Table decompose_covariant(const Atom& a, const Atom& b);
  Table ext_of_exprs(const Expr& a, const Expr& b);
  Table ext_from_left(const Expr& e, const Atom& b);  // Ext(e, b)
  Table ext_to_right(const Atom& a, const Expr& e);   // Ext(a, e)
  Table contra_chase(const Expr& s0, const Expr& s1, const Expr& s2,
                     int unknown_slot, const Atom& b,
                     const std::function<void(LesChase&)>& facts);
  Table co_chase(const Atom& a, const Expr& s0, const Expr& s1, const Expr& s2,
                 int unknown_slot, const std::function<void(LesChase&)>& facts);
  Table contra_omega(const Atom& a, const Atom& b);
  Table contra_wedge(const Atom& a, const Atom& b);
  Table co_omega(const Atom& a, const Atom& b);
  Table co_wedge(const Atom& a, const Atom& b);
  std::optional<Atom> cross_form(const Atom& a) const;

  // least CM-regularity of a single atom at twist 0 (memoized); nullopt
  // when a probe is interval-valued. Drives the multiplication-map rank
  // facts in the Euler/Koszul chases.
  std::optional<long long> cm_oracle(const Atom& a);

  int atom_measure(const Atom& a) const;
  bool certified_exceptional(const Atom& a) const;
  Atom dual_atom(const Atom& a) const;

  struct DepthGuard;

  Variety v_;
  std::vector<std::vector<Int>> gram_;
  bool chi_ready_ = false;

  std::map<Atom, Table> cohom_memo_;
  std::map<std::tuple<AtomKind, int, AtomKind, int, long long>, Table>
      ext_memo_;
  std::map<long long, K0> line_k0_memo_;
  std::map<long long, K0> sigma_k0_memo_;
  std::map<std::pair<AtomKind, int>, std::optional<long long>> cm_memo_;
  int depth_ = 0;

  mutable std::recursive_mutex mu_;
};

}  // namespace helixlab
