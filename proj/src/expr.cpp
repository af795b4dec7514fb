#include "helixlab/expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace helixlab {

Int atom_rank(const Variety& v, const Atom& a) {
  switch (a.kind) {
    case AtomKind::Structure:
      return 1;
    case AtomKind::Sigma:
      return Int(1) << v.spinor_rank_log2();
    case AtomKind::Omega:
    case AtomKind::WedgeT:
      return binomial(v.ambient_dim(), a.p);
    case AtomKind::Psi:
    case AtomKind::PsiDual: {
      // rank psi_j = C(n+1, j) + rank psi_(j-2), rank psi_0 = 1,
      // rank psi_1 = n+1; duals have equal rank.
      Int r = (a.p % 2 == 0) ? Int(1) : Int(v.n + 1);
      for (int j = (a.p % 2 == 0) ? 2 : 3; j <= a.p; j += 2)
        r += binomial(v.n + 1, j);
      return r;
    }
  }
  throw std::logic_error("atom_rank: bad kind");
}

std::string atom_str(const Atom& a) {
  std::string tw = "(" + std::to_string(a.t) + ")";
  switch (a.kind) {
    case AtomKind::Structure: return "O" + tw;
    case AtomKind::Sigma: return "Sigma" + tw;
    case AtomKind::Psi: return "psi_" + std::to_string(a.p) + tw;
    case AtomKind::PsiDual: return "psidual_" + std::to_string(a.p) + tw;
    case AtomKind::Omega: return "Omega^" + std::to_string(a.p) + tw;
    case AtomKind::WedgeT: return "wT^" + std::to_string(a.p) + tw;
  }
  throw std::logic_error("atom_str: bad kind");
}

namespace {

void push_term(std::vector<Term>& out, AtomKind k, int p, long long t,
               const Int& mult) {
  check_twist(t, "atom");
  out.push_back(Term{Atom{k, p, t}, mult});
}

// Applies the catalog rewrites for one requested atom, appending 0 or 1
// normalized terms. See expr.hpp for the full rule list.
void append_normalized(const Variety& v, AtomKind kind, long long p,
                       long long t, const Int& mult, std::vector<Term>& out) {
  const int n = v.n;
  switch (kind) {
    case AtomKind::Structure:
      push_term(out, kind, 0, t, mult);
      return;
    case AtomKind::Sigma:
      if (!v.is_quadric())
        throw std::invalid_argument("Sigma lives on quadrics only");
      push_term(out, kind, 0, t, mult);
      return;
    case AtomKind::Omega:
    case AtomKind::WedgeT: {
      const bool cot = (kind == AtomKind::Omega);
      const int N = v.ambient_dim();
      if (p < 0 || p > N) return;  // zero sheaf
      if (p == 0) {
        push_term(out, AtomKind::Structure, 0, t, mult);
        return;
      }
      if (p == N) {
        // top power: Omega^N(t) = O(t-N-1), wedge^N T(t) = O(t+N+1).
        push_term(out, AtomKind::Structure, 0, cot ? t - N - 1 : t + N + 1,
                  mult);
        return;
      }
      push_term(out, kind, static_cast<int>(p), t, mult);
      return;
    }
    case AtomKind::Psi:
    case AtomKind::PsiDual: {
      if (!v.is_quadric())
        throw std::invalid_argument("psi bundles live on quadrics only");
      const bool is_dual = (kind == AtomKind::PsiDual);
      if (p < 0) throw std::invalid_argument("psi index must be >= 0");
      if (p > n) {
        if ((p - n) % 2 != 0)
          throw std::invalid_argument(
              "psi_" + std::to_string(p) + " is not a catalog bundle on " +
              v.str());
        p = n;  // psi_(j+2) = psi_j for j >= n
      }
      if (p == 0) {
        push_term(out, AtomKind::Structure, 0, t, mult);
        return;
      }
      if (p == 1) {
        // psi_1 = Omega^1(1)|, psi_1^* = T(-1)|.
        if (is_dual)
          append_normalized(v, AtomKind::WedgeT, 1, t - 1, mult, out);
        else
          append_normalized(v, AtomKind::Omega, 1, t + 1, mult, out);
        return;
      }
      if (p == n) {
        // psi_n = Sigma(-1) ^ 2^((n+1)/2); the dual loses the (-1).
        Int m = mult * (Int(1) << ((n + 1) / 2));
        push_term(out, AtomKind::Sigma, 0, is_dual ? t : t - 1, m);
        return;
      }
      push_term(out, kind, static_cast<int>(p), t, mult);
      return;
    }
  }
  throw std::logic_error("append_normalized: bad kind");
}

// sort + merge equal atoms; drops nothing else (mults stay positive).
void canonicalize(std::vector<Term>& ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return a.atom < b.atom; });
  std::vector<Term> merged;
  for (auto& tm : ts) {
    if (!merged.empty() && merged.back().atom == tm.atom)
      merged.back().mult += tm.mult;
    else
      merged.push_back(std::move(tm));
  }
  ts = std::move(merged);
}

}  // namespace

Expr atom_expr(const Variety& v, AtomKind kind, long long p, long long t,
               const Int& mult) {
  if (mult <= 0) throw std::invalid_argument("multiplicity must be positive");
  Expr e(v);
  append_normalized(v, kind, p, t, mult, e.terms_);
  canonicalize(e.terms_);
  return e;
}

Expr zero_expr(const Variety& v) { return Expr(v); }

Expr direct_sum(const Expr& a, const Expr& b) {
  if (!(a.variety() == b.variety()))
    throw std::invalid_argument("direct_sum: variety mismatch");
  Expr e(a.variety());
  e.terms_ = a.terms_;
  e.terms_.insert(e.terms_.end(), b.terms_.begin(), b.terms_.end());
  canonicalize(e.terms_);
  return e;
}

Expr twist(const Expr& f, long long t) {
  Expr e(f.variety());
  e.terms_ = f.terms_;
  for (auto& tm : e.terms_) {
    tm.atom.t += t;
    check_twist(tm.atom.t, "twist");
  }
  return e;  // shifting all twists equally preserves the sort order
}

Expr dual(const Expr& f) {
  const Variety& v = f.variety();
  Expr e(v);
  for (const auto& tm : f.terms()) {
    const Atom& a = tm.atom;
    switch (a.kind) {
      case AtomKind::Structure:
        append_normalized(v, AtomKind::Structure, 0, -a.t, tm.mult, e.terms_);
        break;
      case AtomKind::Sigma:
        append_normalized(v, AtomKind::Sigma, 0, -1 - a.t, tm.mult, e.terms_);
        break;
      case AtomKind::Omega:
        append_normalized(v, AtomKind::WedgeT, a.p, -a.t, tm.mult, e.terms_);
        break;
      case AtomKind::WedgeT:
        append_normalized(v, AtomKind::Omega, a.p, -a.t, tm.mult, e.terms_);
        break;
      case AtomKind::Psi:
        append_normalized(v, AtomKind::PsiDual, a.p, -a.t, tm.mult, e.terms_);
        break;
      case AtomKind::PsiDual:
        append_normalized(v, AtomKind::Psi, a.p, -a.t, tm.mult, e.terms_);
        break;
    }
  }
  canonicalize(e.terms_);
  return e;
}

Int rank(const Expr& f) {
  Int r = 0;
  for (const auto& tm : f.terms()) r += tm.mult * atom_rank(f.variety(), tm.atom);
  return r;
}

long long min_twist(const Expr& f) {
  long long m = 0;
  bool first = true;
  for (const auto& tm : f.terms()) {
    if (first || tm.atom.t < m) m = tm.atom.t;
    first = false;
  }
  return m;
}

std::string Expr::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    if (terms_[i].mult != 1) s += terms_[i].mult.str() + "*";
    s += atom_str(terms_[i].atom);
  }
  return s;
}

}  // namespace helixlab
