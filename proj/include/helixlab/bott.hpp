#pragma once

#include "helixlab/rank.hpp"

namespace helixlab {

// H^q(P^n, Omega^p(t)) for 0 <= p <= n, all ranks exact, table length n+1.
// At most one degree is nonzero:
//   q = 0, t > p      : C(t+n-p, t) * C(t-1, p)
//   q = p, t = 0      : 1
//   q = n, t < p - n  : C(-t+p, -t) * C(-t-1, n-p)
// p = 0 gives the usual line-bundle table on P^n. Out-of-range p (the zero
// sheaf) gives the zero table.
Table bott(int n, int p, long long t);

// H^q(Q_n, O(t)): h0 = C(t+n+1, n+1) - C(t+n-1, n+1), middles vanish,
// h^n by Serre duality (K_Q = O(-n)).
Table cohom_line_q(int n, long long t);

// H^q(Q_n, Sigma(t)): h0 = s(t) with s from the twisted spinor sequences
// 0 -> Sigma(j-1) -> O(j)^(2^((n+1)/2)) -> Sigma(j) -> 0, middles vanish,
// h^n = s(-t-n-1) by Serre duality and Sigma* = Sigma(-1).
Table cohom_spinor_q(int n, long long t);

Int h0_line_q(int n, long long t);
Int h0_spinor_q(int n, long long t);

}  // namespace helixlab
