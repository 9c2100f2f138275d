// JSON input and output: round trips through the serializers, canonical
// scalar forms, and rejection of malformed documents with the documented
// error types.

#include <string>

#include "doctest.h"

#include "sympsig/bundle.hpp"
#include "sympsig/circle.hpp"
#include "sympsig/errors.hpp"
#include "sympsig/io.hpp"
#include "sympsig/lagrangian.hpp"
#include "sympsig/rational.hpp"
#include "sympsig/symplectic.hpp"

using namespace sympsig;

namespace {

Rat R(long n, long d = 1) { return make_rat(n, d); }

}  // namespace

TEST_CASE("matrix JSON round trip and scalar forms") {
  const Mat m{{R(1, 2), R(-3)}, {R(0), R(7, 5)}};
  const Mat back = parse_mat_json(mat_to_json(m));
  CHECK(back == m);
  CHECK(parse_mat_json(
            R"({"rows": 1, "cols": 2, "entries": [["-3/6", 4]]})") ==
        Mat{{R(-1, 2), R(4)}});
}

TEST_CASE("matrix JSON rejects malformed documents") {
  CHECK_THROWS_AS(parse_mat_json("not json"), invalid_input);
  CHECK_THROWS_AS(parse_mat_json("[1, 2]"), invalid_input);
  CHECK_THROWS_AS(parse_mat_json(
                      R"({"rows": 2, "cols": 2, "entries": [[1, 2]]})"),
                  invalid_input);
  CHECK_THROWS_AS(parse_mat_json(
                      R"({"rows": 1, "cols": 1, "entries": [[0.5]]})"),
                  invalid_input);
  CHECK_THROWS_AS(parse_mat_json(
                      R"({"rows": 1, "cols": 1, "entries": [["1/0"]]})"),
                  invalid_input);
  CHECK_THROWS_AS(parse_mat_json(R"({"rows": 1, "cols": 1})"),
                  invalid_input);
}

TEST_CASE("symplectic parsing enforces the relation") {
  const SpMat j = parse_spmat_json(
      R"({"rows": 2, "cols": 2, "entries": [[0, 1], [-1, 0]]})");
  CHECK(j.g == 1);
  CHECK_THROWS_AS(parse_spmat_json(
                      R"({"rows": 2, "cols": 2, "entries": [[1,1],[1,1]]})"),
                  precondition_error);
  CHECK_THROWS_AS(parse_spmat_json(
                      R"({"rows": 2, "cols": 3,
                          "entries": [[1,0,0],[0,1,0]]})"),
                  invalid_input);
}

TEST_CASE("lagrangian JSON forms") {
  const Lagrangian line =
      parse_lagrangian_json(R"({"g": 1, "direction": [2, 4]})");
  CHECK(line == line_lagrangian(R(1), R(2)));
  const Lagrangian back = parse_lagrangian_json(lagrangian_to_json(line));
  CHECK(back == line);

  const Lagrangian by_basis = parse_lagrangian_json(R"({
    "g": 2,
    "basis": {"rows": 4, "cols": 2,
              "entries": [[1, 0], [0, 1], [0, 0], [0, 0]]}})");
  CHECK(by_basis == default_lagrangian(2));
  CHECK(parse_lagrangian_json(lagrangian_to_json(by_basis)) == by_basis);

  CHECK_THROWS_AS(parse_lagrangian_json(R"({"g": 1})"), invalid_input);
  CHECK_THROWS_AS(
      parse_lagrangian_json(R"({"g": 1, "direction": [0, 0]})"),
      invalid_input);
  // Pairs the first basis vector against its dual partner, so the span is
  // full rank but not isotropic.
  CHECK_THROWS_AS(parse_lagrangian_json(R"({
    "g": 2,
    "basis": {"rows": 4, "cols": 2,
              "entries": [[1, 0], [0, 0], [0, 1], [0, 0]]}})"),
                  not_lagrangian);
}

TEST_CASE("monodromy JSON round trip") {
  const std::string closed = R"({"g": 1, "h": 2, "pairs": [
    [{"rows": 2, "cols": 2, "entries": [[0, 1], [-1, 0]]},
     {"rows": 2, "cols": 2, "entries": [[1, 1], [0, 1]]}],
    [{"rows": 2, "cols": 2, "entries": [[1, 1], [0, 1]]},
     {"rows": 2, "cols": 2, "entries": [[0, 1], [-1, 0]]}]]})";
  const Monodromy m = parse_monodromy_json(closed);
  CHECK(m.g == 1);
  CHECK(m.h == 2);
  CHECK(is_closed(m));
  const Monodromy back = parse_monodromy_json(monodromy_to_json(m));
  CHECK(back.g == m.g);
  CHECK(back.h == m.h);
  CHECK(back.pairs == m.pairs);

  CHECK_THROWS_AS(parse_monodromy_json(R"({"g": 1, "h": 1, "pairs": []})"),
                  invalid_input);
  // h must match the pair count.
  CHECK_THROWS_AS(parse_monodromy_json(R"({"g": 1, "h": 3, "pairs": [
    [{"rows": 2, "cols": 2, "entries": [[1, 0], [0, 1]]},
     {"rows": 2, "cols": 2, "entries": [[1, 0], [0, 1]]}]]})"),
                  invalid_input);
  // g must match the matrices.
  CHECK_THROWS_AS(parse_monodromy_json(R"({"g": 2, "h": 1, "pairs": [
    [{"rows": 2, "cols": 2, "entries": [[1, 0], [0, 1]]},
     {"rows": 2, "cols": 2, "entries": [[1, 0], [0, 1]]}]]})"),
                  invalid_input);
}

TEST_CASE("cocycle JSON: both forms, round trip, and rejection") {
  const PiecewiseCocycle std1 = parse_cocycle_json(
      R"({"m": 1, "cochain": {"breaks": ["0"], "values": [0]}})");
  CHECK(covering_number(std1) == 1);

  const PiecewiseCocycle pic = parse_cocycle_json(
      R"({"m": 4, "cochain": {"breaks": ["0", "1/2"], "values": [-1, -3]}})");
  CHECK(covering_number(pic) == 4);
  const PiecewiseCocycle back = parse_cocycle_json(cocycle_to_json(pic));
  CHECK(covering_number(back) == 4);
  CHECK(back.a_breaks == pic.a_breaks);
  CHECK(back.cells == pic.cells);

  const PiecewiseCocycle eight = parse_cocycle_json(R"({
    "a_breaks": ["0", "1/2"], "b_breaks": ["0", "1/2"],
    "diag": ["1/2", "1", "3/2"],
    "cells": [[0, 0, 0, 1], [0, 0, 1, 4], [1, 0, 1, 1], [1, 0, 2, 3],
              [0, 1, 1, 1], [0, 1, 2, 3], [1, 1, 2, 0], [1, 1, 3, 3]]})");
  CHECK(covering_number(eight) == 5);

  CHECK_THROWS_AS(parse_cocycle_json(R"({"m": 1})"), invalid_input);
  CHECK_THROWS_AS(
      parse_cocycle_json(
          R"({"cochain": {"breaks": ["0"], "values": [0]}})"),
      invalid_input);
  CHECK_THROWS_AS(parse_cocycle_json(R"({
    "a_breaks": ["0"], "b_breaks": ["0"], "diag": ["1"],
    "cells": [[0, 0, 0, 1], [0, 0, 0, 2], [0, 0, 1, 3]]})"),
                  invalid_input);
  CHECK_THROWS_AS(parse_cocycle_json(R"({
    "a_breaks": ["0"], "b_breaks": ["0"], "diag": ["1"],
    "cells": "nope"})"),
                  invalid_input);
  CHECK_THROWS_AS(parse_cocycle_json(
                      R"({"m": 0.5,
                          "cochain": {"breaks": ["0"], "values": [0]}})"),
                  invalid_input);
}
