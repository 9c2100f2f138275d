#include "sympsig/meyer.hpp"

#include "sympsig/errors.hpp"
#include "sympsig/linalg.hpp"

namespace sympsig {

int meyer_cocycle(const SpMat& a, const SpMat& b) {
  if (a.g != b.g) throw invalid_input("genus mismatch in cocycle evaluation");
  const std::size_t n = 2 * a.g;
  const Mat eye = Mat::identity(n);
  const Mat ker = kernel_basis(hstack(symplectic_inverse(a).m - eye, b.m - eye));

  // (x + y)^T m y' with m = J (I - b), on pairs (x; y).
  const Mat m = symplectic_form(a.g) * (eye - b.m);
  Mat q(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      q(i, n + j) = m(i, j);
      q(n + i, n + j) = m(i, j);
    }

  const Mat gm = ker.transpose() * q * ker;
  if (!gm.is_symmetric())
    throw construction_bug("restricted kernel form is not symmetric");
  return static_cast<int>(signature_of_symmetric(gm).signature());
}

int meyer_via_graphs(const SpMat& a, const SpMat& b) {
  if (a.g != b.g) throw invalid_input("genus mismatch in cocycle evaluation");
  return wall_maslov(graph_lagrangian(SpMat::identity(a.g)),
                     graph_lagrangian(a), graph_lagrangian(a * b));
}

bool check_cocycle_identity(const Cocycle& tau, const SpMat& a, const SpMat& b,
                            const SpMat& c) {
  if (a.g != b.g || a.g != c.g)
    throw invalid_input("genus mismatch in cocycle identity");
  return tau(a, b) + tau(a * b, c) == tau(b, c) + tau(a, b * c);
}

}  // namespace sympsig
