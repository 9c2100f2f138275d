#include "sympsig/io.hpp"

#include <json.hpp>

#include "sympsig/errors.hpp"

namespace sympsig {

namespace {

using nlohmann::ordered_json;

ordered_json parse_document(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input(std::string("malformed JSON: ") + e.what());
  }
}

Rat scalar_from(const ordered_json& j, const char* what) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw invalid_input(std::string(what) +
                      " must be an integer or a \"p/q\" string");
}

long integer_from(const ordered_json& j, const char* what) {
  if (!j.is_number_integer())
    throw invalid_input(std::string(what) + " must be an integer");
  return static_cast<long>(j.get<long long>());
}

std::size_t count_from(const ordered_json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw invalid_input(std::string(what) + " must be a nonnegative integer");
  return static_cast<std::size_t>(j.get<long long>());
}

const ordered_json& field(const ordered_json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw invalid_input(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

Mat mat_from(const ordered_json& j) {
  const std::size_t rows = count_from(field(j, "rows"), "rows");
  const std::size_t cols = count_from(field(j, "cols"), "cols");
  if (rows == 0 || cols == 0) throw invalid_input("matrix must be nonempty");
  const ordered_json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows)
    throw invalid_input("entries must hold one array per row");
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const ordered_json& row = entries.at(i);
    if (!row.is_array() || row.size() != cols)
      throw invalid_input("each row must hold one entry per column");
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = scalar_from(row.at(k), "matrix entry");
  }
  return m;
}

SpMat spmat_from(const ordered_json& j) {
  const Mat m = mat_from(j);
  if (!m.is_square() || m.rows() % 2 != 0)
    throw invalid_input("a symplectic matrix must be square of even size");
  return SpMat(m.rows() / 2, m);
}

ordered_json mat_json(const Mat& m) {
  ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < m.cols(); ++k)
      row.push_back(rat_to_string(m(i, k)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::vector<Rat> rat_list_from(const ordered_json& j, const char* what) {
  if (!j.is_array()) throw invalid_input(std::string(what) + " must be an array");
  std::vector<Rat> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(scalar_from(item, what));
  return out;
}

}  // namespace

Mat parse_mat_json(const std::string& text) {
  return mat_from(parse_document(text));
}

SpMat parse_spmat_json(const std::string& text) {
  return spmat_from(parse_document(text));
}

Lagrangian parse_lagrangian_json(const std::string& text) {
  const ordered_json j = parse_document(text);
  const std::size_t g = count_from(field(j, "g"), "g");
  if (j.contains("direction")) {
    if (g != 1)
      throw invalid_input("direction form is only available for g = 1");
    const ordered_json& d = j.at("direction");
    if (!d.is_array() || d.size() != 2)
      throw invalid_input("direction must be a [p, q] pair");
    return line_lagrangian(scalar_from(d.at(0), "direction entry"),
                           scalar_from(d.at(1), "direction entry"));
  }
  return lagrangian_from_basis(mat_from(field(j, "basis")), g);
}

Monodromy parse_monodromy_json(const std::string& text) {
  const ordered_json j = parse_document(text);
  const std::size_t g = count_from(field(j, "g"), "g");
  const std::size_t h = count_from(field(j, "h"), "h");
  const ordered_json& pairs = field(j, "pairs");
  if (!pairs.is_array() || pairs.size() != h)
    throw invalid_input("pairs must hold exactly h handle pairs");
  std::vector<std::pair<SpMat, SpMat>> handles;
  handles.reserve(h);
  for (const auto& pair : pairs) {
    if (!pair.is_array() || pair.size() != 2)
      throw invalid_input("each handle must be a [matrix, matrix] pair");
    SpMat a = spmat_from(pair.at(0));
    SpMat b = spmat_from(pair.at(1));
    if (a.g != g || b.g != g)
      throw invalid_input("handle genus differs from the declared g");
    handles.emplace_back(std::move(a), std::move(b));
  }
  return make_monodromy(std::move(handles));
}

PiecewiseCocycle parse_cocycle_json(const std::string& text) {
  const ordered_json j = parse_document(text);
  if (j.is_object() && j.contains("cochain")) {
    const long m = integer_from(field(j, "m"), "m");
    const ordered_json& cochain = j.at("cochain");
    std::vector<long> values;
    for (const auto& v : field(cochain, "values"))
      values.push_back(integer_from(v, "cochain value"));
    return from_standard_plus_coboundary(
        m, make_nice_cochain(
               rat_list_from(field(cochain, "breaks"), "cochain break"),
               std::move(values)));
  }
  if (j.is_object() && j.contains("a_breaks")) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, long> cells;
    const ordered_json& cell_list = field(j, "cells");
    if (!cell_list.is_array())
      throw invalid_input("cells must be an array of [i, j, band, value]");
    for (const auto& cell : cell_list) {
      if (!cell.is_array() || cell.size() != 4)
        throw invalid_input("each cell must be [i, j, band, value]");
      const auto key = std::make_tuple(count_from(cell.at(0), "cell index"),
                                       count_from(cell.at(1), "cell index"),
                                       count_from(cell.at(2), "cell band"));
      if (cells.count(key)) throw invalid_input("duplicate cell address");
      cells[key] = integer_from(cell.at(3), "cell value");
    }
    return make_piecewise(rat_list_from(field(j, "a_breaks"), "a break"),
                          rat_list_from(field(j, "b_breaks"), "b break"),
                          rat_list_from(field(j, "diag"), "diagonal constant"),
                          std::move(cells));
  }
  throw invalid_input(
      "cocycle JSON needs either a \"cochain\" or an \"a_breaks\" form");
}

std::string mat_to_json(const Mat& m) { return mat_json(m).dump(2); }

std::string lagrangian_to_json(const Lagrangian& l) {
  ordered_json j;
  j["g"] = l.g;
  j["basis"] = mat_json(l.basis);
  return j.dump(2);
}

std::string monodromy_to_json(const Monodromy& m) {
  ordered_json j;
  j["g"] = m.g;
  j["h"] = m.h;
  ordered_json pairs = ordered_json::array();
  for (const auto& [a, b] : m.pairs)
    pairs.push_back(ordered_json::array({mat_json(a.m), mat_json(b.m)}));
  j["pairs"] = std::move(pairs);
  return j.dump(2);
}

std::string cocycle_to_json(const PiecewiseCocycle& t) {
  ordered_json j;
  auto rat_strings = [](const std::vector<Rat>& xs) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : xs) arr.push_back(rat_to_string(x));
    return arr;
  };
  j["a_breaks"] = rat_strings(t.a_breaks);
  j["b_breaks"] = rat_strings(t.b_breaks);
  j["diag"] = rat_strings(t.diag_consts);
  ordered_json cells = ordered_json::array();
  for (const auto& [key, value] : t.cells)
    cells.push_back(ordered_json::array(
        {std::get<0>(key), std::get<1>(key), std::get<2>(key), value}));
  j["cells"] = std::move(cells);
  return j.dump(2);
}

}  // namespace sympsig
