#pragma once

#include "mapcount/laurent.hpp"

namespace mapcount {

/// Index of the diagonal zero of the step matrix at step n:
/// delta(n) = n*(nu-1) - beta + 2. Strictly increasing in n; unit slope
/// exactly when nu = 2, which is what makes the fixed band possible.
long step_delta(int n, int nu, int beta);

/// Entry [k, i] (1-based) of the sub-diagonal step matrix M^(n):
/// zero unless i is k or k-1, with
///   M[k, k]   = n*(nu-1) - (beta + k + nu - 3)
///   M[k, k-1] = nu*(beta + k + n - 3).
Rational m_entry(int n, int nu, int beta, long k, long i);

/// One derivative step: coefficients at order j from order j-1 via
///   q_l(j) = nu*(beta+l+j-2)*q_{l-1}(j-1) - (beta+l-1-(nu-1)*(j-1))*q_l(j-1).
/// For nu = 2 the result is re-windowed to the fixed band; the entry evicted
/// on the left is checked to be exactly zero. A primitive regular vector
/// (order 0) advances by the direct derivative rule
///   q_l(1) = vertex_weight * (nu-1) * (beta-1+l) * q_l(0).
LaurentVector advance(const LaurentVector& v);

/// Inverse of advance. The bidiagonal system is solved by forward
/// substitution; the final, overdetermined equation must hold exactly.
/// Errors: zero_pivot when a diagonal coefficient vanishes,
/// inconsistent_vector when the input is not in the image of advance.
LaurentVector invert_step(const LaurentVector& v);

/// Exact count at j vertices from an initial vector at order j_init:
/// vertex_weight^(j - j_init) times the entry sum after j - j_init steps.
/// The rational-valued form is exposed for cross-method checks on synthetic
/// vectors; count_recurrence additionally asserts integrality.
Rational count_recurrence_exact(const ModelSpec& spec, const LaurentVector& v_init, int j);
Integer count_recurrence(const ModelSpec& spec, const LaurentVector& v_init, int j);

}  // namespace mapcount
