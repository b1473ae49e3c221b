#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "eii/epc.hpp"
#include "eii/field.hpp"
#include "eii/grid.hpp"
#include "eii/layout.hpp"
#include "eii/sim.hpp"

namespace eii {

using Json = nlohmann::ordered_json;
using AnyField = std::variant<BinaryField, WideBinaryField>;

// "DEG:HEX" (e.g. "3:0b") or "mp:P".
AnyField parse_field(const std::string& text);
AnyField field_from_descriptor(int degree, const std::string& modulus_hex);
Json field_descriptor(const AnyField& field);

// Grid file: {"m","n","field":{"degree","modulus"},"code"?,"cells":[[hex|null]]}.
struct GridFile {
  std::size_t m = 0;
  std::size_t n = 0;
  int degree = 0;
  std::string modulus;
  std::optional<std::string> code;
  std::vector<std::vector<std::optional<std::string>>> cells;
};

GridFile parse_grid_file(const Json& j);
Json to_json(const GridFile& file);

template <GaloisField F>
SymbolGrid<typename F::value_type> grid_from_file(const F& field, const GridFile& file) {
  SymbolGrid<typename F::value_type> grid(file.m, file.n, field.zero());
  for (std::size_t r = 0; r < file.m; ++r) {
    for (std::size_t c = 0; c < file.n; ++c) {
      const auto& cell = file.cells[r][c];
      if (cell) {
        grid.set(r, c, field.from_hex(*cell));
      } else {
        grid.erase(r, c);
      }
    }
  }
  return grid;
}

template <GaloisField F>
GridFile grid_to_file(const F& field, const SymbolGrid<typename F::value_type>& grid,
                      std::optional<std::string> code) {
  GridFile file;
  file.m = grid.rows();
  file.n = grid.cols();
  file.degree = field.degree();
  file.modulus = BinaryPolynomial(field.modulus()).to_hex();
  file.code = std::move(code);
  file.cells.assign(file.m, std::vector<std::optional<std::string>>(file.n));
  for (std::size_t r = 0; r < file.m; ++r) {
    for (std::size_t c = 0; c < file.n; ++c) {
      if (!grid.erased(r, c)) file.cells[r][c] = field.to_hex(grid.at(r, c));
    }
  }
  return file;
}

Json cells_json(const std::vector<Cell>& cells);

template <class T>
Json report_json(const DecodeReport<T>& report, const std::string& mode) {
  Json j;
  j["mode"] = mode;
  j["status"] = status_name(report.status);
  j["passes"] = report.passes;
  j["corrected_rows"] = report.corrected_rows;
  j["residual"] = cells_json(report.residual);
  return j;
}

Json layout_json(const Profile& profile, const ParityLayout& layout);
Json sim_result_json(const SimResult& result, const std::string& profile);

template <GaloisField F>
Json matrix_json(const F& field, const FieldMatrix<F>& h) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < h.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < h.cols(); ++c) row.push_back(field.to_hex(h(r, c)));
    rows.push_back(std::move(row));
  }
  Json j;
  j["rows"] = h.rows();
  j["cols"] = h.cols();
  j["entries"] = std::move(rows);
  return j;
}

}  // namespace eii
