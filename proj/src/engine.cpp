#include "engine_detail.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace helixlab {

using detail::twisted;

Engine& Engine::get(const Variety& v) {
  static std::mutex reg_mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Engine>> registry;
  std::lock_guard<std::mutex> lk(reg_mu);
  auto key = std::make_pair(static_cast<int>(v.kind), v.n);
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::unique_ptr<Engine>(new Engine(v))).first;
  return *it->second;
}

Engine::Engine(const Variety& v) : v_(v) { bootstrap_k0(); }

Expr Engine::collection_member(int j) const {
  if (j < 0 || j > v_.n)
    throw std::invalid_argument("collection member index out of range");
  if (v_.is_projective() || j < v_.n)
    return atom_expr(v_, AtomKind::Structure, 0, j);
  return atom_expr(v_, AtomKind::Sigma, 0, v_.n - 1);
}

Atom Engine::dual_atom(const Atom& a) const {
  switch (a.kind) {
    case AtomKind::Structure:
      return Atom{AtomKind::Structure, 0, -a.t};
    case AtomKind::Sigma:
      return Atom{AtomKind::Sigma, 0, -1 - a.t};
    case AtomKind::Omega:
      return Atom{AtomKind::WedgeT, a.p, -a.t};
    case AtomKind::WedgeT:
      return Atom{AtomKind::Omega, a.p, -a.t};
    case AtomKind::Psi:
      return Atom{AtomKind::PsiDual, a.p, -a.t};
    case AtomKind::PsiDual:
      return Atom{AtomKind::Psi, a.p, -a.t};
  }
  throw std::logic_error("dual_atom: unreachable");
}

// Decomposition order: an Ext pair is resolved from its side of larger
// measure, and every defining sequence rewrites an atom into atoms of
// strictly smaller measure, so the recursion terminates.
int Engine::atom_measure(const Atom& a) const {
  switch (a.kind) {
    case AtomKind::Structure:
      return 0;
    case AtomKind::Sigma:
      return 1;
    case AtomKind::Omega:
    case AtomKind::WedgeT:
      return v_.is_projective() ? a.p : 2 * a.p;
    case AtomKind::Psi:
    case AtomKind::PsiDual:
      return 2 * a.p + 1;
  }
  throw std::logic_error("atom_measure: unreachable");
}

// Atoms whose self-Ext table is known to be delta_0 (exceptionality). On
// the quadric the middle wedge powers are restrictions of ambient bundles
// that are not exceptional on Q, so they are left out.
bool Engine::certified_exceptional(const Atom& a) const {
  if (v_.is_projective()) return true;
  switch (a.kind) {
    case AtomKind::Structure:
    case AtomKind::Sigma:
    case AtomKind::Psi:
    case AtomKind::PsiDual:
      return true;
    case AtomKind::Omega:
    case AtomKind::WedgeT:
      return a.p == 1;
  }
  return false;
}

namespace {

// is F m-regular? +1 yes, -1 no, 0 = an interval-valued probe blocks the
// answer. A definite nonzero anywhere wins over a blocked probe.
template <typename ProbeTable>
int regularity_probe(int n, long long m, ProbeTable&& table_at) {
  bool blocked = false;
  for (int i = 1; i <= n; ++i) {
    Table t = table_at(m - i);
    const RankValue& r = t.at(i);
    if (r.is_zero()) continue;
    if (r.lo > 0) return -1;
    blocked = true;
  }
  return blocked ? 0 : 1;
}

// least regular m by a monotone scan over [lo, hi]; nullopt when blocked.
template <typename ProbeTable>
std::optional<long long> least_regular(int n, long long lo, long long hi,
                                       ProbeTable&& table_at) {
  long long m = lo;
  int st = regularity_probe(n, m, table_at);
  if (st == 0) return std::nullopt;
  if (st == 1) {
    // regular at the window bottom: walk down to the boundary
    for (int steps = 0; steps < 512; ++steps) {
      int below = regularity_probe(n, m - 1, table_at);
      if (below == -1) return m;
      if (below == 0) return std::nullopt;
      --m;
    }
    throw std::logic_error("regularity scan: no lower boundary found");
  }
  while (m < hi) {
    ++m;
    st = regularity_probe(n, m, table_at);
    if (st == 1) return m;
    if (st == 0) return std::nullopt;
  }
  throw std::logic_error("regularity scan exhausted its window");
}

}  // namespace

// memoized per atom shape; twisting shifts the answer: reg(F(t)) = reg(F) - t.
std::optional<long long> Engine::cm_oracle(const Atom& a) {
  auto key = std::make_pair(a.kind, a.p);
  auto it = cm_memo_.find(key);
  if (it == cm_memo_.end()) {
    const Atom a0{a.kind, a.p, 0};
    const long long w = 8LL * (v_.n + 2);
    auto base = least_regular(v_.n, -w, w, [&](long long s) {
      return final_cohom(twisted(a0, s));
    });
    it = cm_memo_.emplace(key, base).first;
  }
  if (!it->second) return std::nullopt;
  return *it->second - a.t;
}

CmRegularity Engine::cm_regularity(const Expr& f) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  if (!(f.variety() == v_))
    throw std::invalid_argument("cm regularity: expression from another variety");
  CmRegularity out;
  if (f.is_zero()) {
    out.minus_infinity = true;
    return out;
  }
  long long tmin = f.terms().front().atom.t, tmax = tmin;
  for (const auto& term : f.terms()) {
    tmin = std::min(tmin, term.atom.t);
    tmax = std::max(tmax, term.atom.t);
  }
  const long long w = 8LL * (v_.n + 2);
  out.m = least_regular(v_.n, -w - tmax, w - tmin, [&](long long s) {
    return cohom_expr(twist(f, s));
  });
  return out;
}

}  // namespace helixlab
