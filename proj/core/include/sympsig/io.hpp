#pragma once

#include <string>

#include "sympsig/bundle.hpp"
#include "sympsig/circle.hpp"
#include "sympsig/lagrangian.hpp"
#include "sympsig/matrix.hpp"
#include "sympsig/symplectic.hpp"

namespace sympsig {

/// JSON formats.
///
/// Matrix      {"rows": R, "cols": C, "entries": [[e, ...], ...]} with each
///             entry a decimal integer or a "p/q" string; floating point
///             numbers are rejected.
/// Lagrangian  {"g": g, "basis": Matrix} or, for g = 1,
///             {"g": 1, "direction": [p, q]}.
/// Monodromy   {"g": g, "h": h, "pairs": [[Matrix, Matrix], ...]}.
/// Cocycle     {"m": m, "cochain": {"breaks": [x, ...], "values": [v, ...]}}
///             for m times the standard cocycle plus a coboundary, or the
///             explicit arrangement {"a_breaks": [...], "b_breaks": [...],
///             "diag": [...], "cells": [[i, j, band, value], ...]}.
///
/// Parsers throw invalid_input on malformed text and let the domain
/// constructors report their own violations (e.g. precondition_error for a
/// matrix that fails the symplectic relation). Serializers emit every
/// scalar in the canonical "n"/"p/q" string form.

Mat parse_mat_json(const std::string& text);
SpMat parse_spmat_json(const std::string& text);
Lagrangian parse_lagrangian_json(const std::string& text);
Monodromy parse_monodromy_json(const std::string& text);
PiecewiseCocycle parse_cocycle_json(const std::string& text);

std::string mat_to_json(const Mat& m);
std::string lagrangian_to_json(const Lagrangian& l);
std::string monodromy_to_json(const Monodromy& m);
std::string cocycle_to_json(const PiecewiseCocycle& t);

}  // namespace sympsig
