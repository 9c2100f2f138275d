#pragma once

#include <functional>

#include "sympsig/maslov.hpp"

namespace sympsig {

// Signature cocycle on Sp(2g) by the kernel presentation: the symmetric
// form (x + y)^T J (I - b) y' on ker(a^{-1} - I | b - I). This route is
// the library's canonical sign convention.
int meyer_cocycle(const SpMat& a, const SpMat& b);

// The same cocycle as the index of the graph triple
// (graph(I), graph(a), graph(ab)) in the doubled space; an independent
// computational route, equal to meyer_cocycle on every input.
int meyer_via_graphs(const SpMat& a, const SpMat& b);

using Cocycle = std::function<long(const SpMat&, const SpMat&)>;

// tau(a, b) + tau(ab, c) = tau(b, c) + tau(a, bc), exactly.
bool check_cocycle_identity(const Cocycle& tau, const SpMat& a, const SpMat& b,
                            const SpMat& c);

}  // namespace sympsig
