#include "engine_detail.hpp"

#include <stdexcept>

namespace helixlab {

using detail::alt_sum;

namespace {

// signed accumulate: out += sign * c * v
void axpy(K0& out, int sign, const Int& c, const K0& v) {
  for (size_t i = 0; i < out.size(); ++i)
    out[i] += (sign > 0 ? c : -c) * v[i];
}

}  // namespace

void Engine::bootstrap_k0() {
  const int n = v_.n;
  gram_.assign(n + 1, std::vector<Int>(n + 1, Int(0)));
  if (v_.kind == VarietyKind::Projective) {
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b)
        gram_[a][b] = alt_sum(bott(n, 0, b - a));
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        gram_[a][b] = alt_sum(cohom_line_q(n, b - a));
    // chi(O(a), Sigma(n-1)) = chi(Sigma(n-1-a)); chi(Sigma(n-1), O(b)) =
    // chi(Sigma(-n)(b)) since Sigma(n-1)^ = Sigma(-n).
    for (int a = 0; a < n; ++a)
      gram_[a][n] = alt_sum(cohom_spinor_q(n, n - 1 - a));
    for (int b = 0; b < n; ++b)
      gram_[n][b] = alt_sum(cohom_spinor_q(n, b - n));
    gram_[n][n] = 1;  // exceptionality of the spinor bundle
  }
  for (int a = 0; a <= n; ++a) {
    if (gram_[a][a] != 1)
      throw std::logic_error("Euler pairing: diagonal is not 1");
    for (int b = 0; b < a; ++b)
      if (gram_[a][b] != 0)
        throw std::logic_error("Euler pairing: lower triangle is not 0");
  }

  const int line_top = (v_.kind == VarietyKind::Projective) ? n : n - 1;
  for (int j = 0; j <= line_top; ++j) {
    K0 e(n + 1, Int(0));
    e[j] = 1;
    line_k0_memo_[j] = e;
  }
  if (v_.kind == VarietyKind::Quadric) {
    K0 e(n + 1, Int(0));
    e[n] = 1;
    sigma_k0_memo_[n - 1] = e;
    // [O(n)] = [E_0 (x) K^] by the helix shift: run the right-mutation
    // chain y_k = chi(y_{k-1}, E_k) [E_k] - y_{k-1} across the collection.
    K0 y(n + 1, Int(0));
    y[0] = 1;
    for (int k = 1; k <= n; ++k) {
      Int c = 0;
      for (int i = 0; i <= n; ++i) c += y[i] * gram_[i][k];
      K0 next(n + 1, Int(0));
      for (int i = 0; i <= n; ++i) next[i] = -y[i];
      next[k] += c;
      y = std::move(next);
    }
    line_k0_memo_[n] = std::move(y);
  }
  chi_ready_ = true;
}

// [O(t)] for any t via the length-(n+2) Koszul relation
// sum_{k=0}^{n+1} (-1)^k C(n+1,k) [O(t0+k)] = 0, walked iteratively so deep
// twists cannot overflow the stack.
const K0& Engine::line_k0(long long t) {
  check_twist(t, "K0 twist walk");
  auto it = line_k0_memo_.find(t);
  if (it != line_k0_memo_.end()) return it->second;
  const int n = v_.n;
  if (t > n) {
    long long lo = line_k0_memo_.rbegin()->first + 1;
    for (long long u = lo; u <= t; ++u) {
      K0 acc(n + 1, Int(0));
      for (int k = 0; k <= n; ++k)
        axpy(acc, (n - k) % 2 == 0 ? 1 : -1, binomial(n + 1, k),
             line_k0_memo_.at(u - n - 1 + k));
      line_k0_memo_.emplace(u, std::move(acc));
    }
  } else {
    long long hi = line_k0_memo_.begin()->first - 1;
    for (long long u = hi; u >= t; --u) {
      K0 acc(n + 1, Int(0));
      for (int k = 1; k <= n + 1; ++k)
        axpy(acc, k % 2 == 1 ? 1 : -1, binomial(n + 1, k),
             line_k0_memo_.at(u + k));
      line_k0_memo_.emplace(u, std::move(acc));
    }
  }
  return line_k0_memo_.at(t);
}

// [Sigma(t)] via [Sigma(t-1)] + [Sigma(t)] = 2^{(n+1)/2} [O(t)]
const K0& Engine::sigma_k0(long long t) {
  check_twist(t, "K0 twist walk");
  auto it = sigma_k0_memo_.find(t);
  if (it != sigma_k0_memo_.end()) return it->second;
  const int n = v_.n;
  const Int r = Int(1) << ((n + 1) / 2);
  if (t > n - 1) {
    long long lo = sigma_k0_memo_.rbegin()->first + 1;
    for (long long u = lo; u <= t; ++u) {
      K0 acc(n + 1, Int(0));
      axpy(acc, 1, r, line_k0(u));
      axpy(acc, -1, 1, sigma_k0_memo_.at(u - 1));
      sigma_k0_memo_.emplace(u, std::move(acc));
    }
  } else {
    long long hi = sigma_k0_memo_.begin()->first - 1;
    for (long long u = hi; u >= t; --u) {
      K0 acc(n + 1, Int(0));
      axpy(acc, 1, r, line_k0(u + 1));
      axpy(acc, -1, 1, sigma_k0_memo_.at(u + 1));
      sigma_k0_memo_.emplace(u, std::move(acc));
    }
  }
  return sigma_k0_memo_.at(t);
}

K0 Engine::atom_k0(const Atom& a) {
  const int n = v_.n;
  const int coords = v_.ambient_dim() + 1;
  K0 acc(n + 1, Int(0));
  switch (a.kind) {
    case AtomKind::Structure:
      return line_k0(a.t);
    case AtomKind::Sigma:
      return sigma_k0(a.t);
    case AtomKind::Omega:
      // [Omega^p(s)] = sum_{i=0}^{p} (-1)^i C(coords, p-i) [O(s-p+i)]
      for (int i = 0; i <= a.p; ++i)
        axpy(acc, i % 2 == 0 ? 1 : -1, binomial(coords, a.p - i),
             line_k0(a.t - a.p + i));
      return acc;
    case AtomKind::WedgeT:
      for (int i = 0; i <= a.p; ++i)
        axpy(acc, i % 2 == 0 ? 1 : -1, binomial(coords, a.p - i),
             line_k0(a.t + a.p - i));
      return acc;
    case AtomKind::Psi: {
      // [psi_j(t)] = [Omega^j(j+t)|] + [psi_{j-2}(t)]
      for (int i = 0; i <= a.p; ++i)
        axpy(acc, i % 2 == 0 ? 1 : -1, binomial(coords, a.p - i),
             line_k0(a.t + i));
      Expr rest = atom_expr(v_, AtomKind::Psi, a.p - 2, a.t);
      for (const auto& term : rest.terms())
        axpy(acc, 1, term.mult, atom_k0(term.atom));
      return acc;
    }
    case AtomKind::PsiDual: {
      // [psidual_j(t)] = [psidual_{j-2}(t)] + [wT^j(t-j)|]
      for (int i = 0; i <= a.p; ++i)
        axpy(acc, i % 2 == 0 ? 1 : -1, binomial(coords, a.p - i),
             line_k0(a.t - i));
      Expr rest = atom_expr(v_, AtomKind::PsiDual, a.p - 2, a.t);
      for (const auto& term : rest.terms())
        axpy(acc, 1, term.mult, atom_k0(term.atom));
      return acc;
    }
  }
  throw std::logic_error("atom_k0: unreachable");
}

K0 Engine::k0_class(const Expr& f) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  if (!(f.variety() == v_))
    throw std::invalid_argument("k0_class: expression from another variety");
  DepthGuard guard(*this);
  K0 acc(v_.n + 1, Int(0));
  for (const auto& term : f.terms()) axpy(acc, 1, term.mult, atom_k0(term.atom));
  return acc;
}

Int Engine::chi_k0(const K0& a, const K0& b) const {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) s += a[i] * gram_[i][j] * b[j];
  return s;
}

Int Engine::euler_chi(const Expr& a, const Expr& b) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  return chi_k0(k0_class(a), k0_class(b));
}

Int Engine::chi_of(const Expr& f) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  return chi_k0(k0_class(atom_expr(v_, AtomKind::Structure, 0, 0)),
                k0_class(f));
}

}  // namespace helixlab
