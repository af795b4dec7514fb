#include "engine_detail.hpp"
#include "helixlab/chase.hpp"

#include <stdexcept>

namespace helixlab {

using detail::delta_table;
using detail::psi_ladder_width;

Table Engine::cohomology_table(const Expr& f) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  if (!(f.variety() == v_))
    throw std::invalid_argument("cohomology: expression from another variety");
  Table t = cohom_expr(f);
  for (const auto& r : t)
    if (r.hi_inf)
      throw std::logic_error("unbounded cohomology interval escaped");
  return t;
}

Table Engine::cohom_expr(const Expr& f) {
  Table acc = table_zero(v_.n + 1);
  for (const auto& term : f.terms())
    acc = table_add(acc, table_scale(final_cohom(term.atom), term.mult));
  return acc;
}

// final table = route meet for the atom itself, cut against the Serre flip
// of the route meet for F^ (x) K, then squeezed by chi. Pinned base facts
// live inside raw_cohom so both sides of the flip see them.
const Table& Engine::final_cohom(const Atom& a) {
  auto it = cohom_memo_.find(a);
  if (it != cohom_memo_.end()) return it->second;
  DepthGuard guard(*this);
  Table t = raw_cohom(a);
  Atom serre = detail::twisted(dual_atom(a), v_.canonical_twist());
  t = table_meet(t, table_flip(raw_cohom(serre)));
  if (chi_ready_) chi_tighten(t, chi_k0(line_k0(0), atom_k0(a)));
  return cohom_memo_.emplace(a, std::move(t)).first->second;
}

// H^q(Q_n, Omega^p(t)|) out of the ambient ideal sequence
//   0 -> Omega^p(t-2) -> Omega^p(t) -> Omega^p(t)| -> 0
// on P^(n+1). The top arrow H^N(t-2) -> H^N(t) is Serre-dual to
// multiplication by the quadric equation on sections, hence surjective;
// with that fact the chase is exact for every p, t (the Bott flanks are
// concentrated in at most one degree each).
Table Engine::restricted_omega_cohom(int p, long long t) {
  const int N = v_.n + 1;
  LesChase ch(N);
  ch.set_table(0, bott(N, p, t - 2));
  ch.set_table(1, bott(N, p, t));
  ch.fact_surjective(0, N);
  ch.solve();
  Table full = ch.table(2);
  if (!full.at(N).is_zero())
    throw std::logic_error("restriction chase: H^(n+1) of a pushforward");
  full.resize(N);  // degrees 0..n
  return full;
}

Table Engine::raw_cohom(const Atom& a) {
  const int n = v_.n;
  switch (a.kind) {
    case AtomKind::Structure:
      return v_.is_projective() ? bott(n, 0, a.t) : cohom_line_q(n, a.t);
    case AtomKind::Sigma:
      return cohom_spinor_q(n, a.t);
    case AtomKind::Omega:
      if (v_.is_projective()) return bott(n, a.p, a.t);
      return restricted_omega_cohom(a.p, a.t);
    case AtomKind::WedgeT:
      // wedge^p T = Omega^(dim - p) (x) K^ on the ambient space
      if (v_.is_projective()) return bott(n, n - a.p, a.t + n + 1);
      return restricted_omega_cohom(n + 1 - a.p, a.t + n + 2);
    case AtomKind::Psi: {
      const int j = a.p;
      Table acc;
      {
        // middle of 0 -> Omega^j(j+t)| -> psi_j(t) -> psi_(j-2)(t) -> 0
        LesChase ch(n);
        ch.set_table(0, final_cohom(Atom{AtomKind::Omega, j, a.t + j}));
        ch.set_table(2, cohom_expr(atom_expr(v_, AtomKind::Psi, j - 2, a.t)));
        ch.solve();
        acc = ch.table(1);
      }
      {
        // kernel of 0 -> psi_j(t) -> O(t)^(N_j) -> psi_(j-1)(t+1) -> 0
        LesChase ch(n);
        ch.set_table(1, table_scale(final_cohom(Atom{AtomKind::Structure, 0, a.t}),
                                    psi_ladder_width(n, j)));
        ch.set_table(
            2, cohom_expr(atom_expr(v_, AtomKind::Psi, j - 1, a.t + 1)));
        ch.solve();
        acc = table_meet(acc, ch.table(0));
      }
      // externally sourced base points the chases cannot reach:
      // h^i(psi_j(-j)) = delta_(ij), and H^*(psi_2) = 0 (the extension
      // defining psi_2 is non-split, which no rank bookkeeping sees).
      if (a.t == -j) acc = table_meet(acc, delta_table(n + 1, j));
      if (j == 2 && a.t == 0) acc = table_meet(acc, table_zero(n + 1));
      return acc;
    }
    case AtomKind::PsiDual: {
      const int j = a.p;
      Table acc;
      {
        // middle of 0 -> psidual_(j-2)(t) -> psidual_j(t) -> wT^j(t-j)| -> 0
        LesChase ch(n);
        ch.set_table(
            0, cohom_expr(atom_expr(v_, AtomKind::PsiDual, j - 2, a.t)));
        ch.set_table(2, final_cohom(Atom{AtomKind::WedgeT, j, a.t - j}));
        ch.solve();
        acc = ch.table(1);
      }
      {
        // cokernel of 0 -> psidual_(j-1)(t-1) -> O(t)^(N_j) -> psidual_j(t) -> 0
        LesChase ch(n);
        ch.set_table(
            0, cohom_expr(atom_expr(v_, AtomKind::PsiDual, j - 1, a.t - 1)));
        ch.set_table(1, table_scale(final_cohom(Atom{AtomKind::Structure, 0, a.t}),
                                    psi_ladder_width(n, j)));
        ch.solve();
        acc = table_meet(acc, ch.table(2));
      }
      return acc;
    }
  }
  throw std::logic_error("raw_cohom: unreachable");
}

}  // namespace helixlab
