#include "eii/io.hpp"

#include <charconv>

namespace eii {

namespace {

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    throw Error(Errc::parse_error, "invalid " + what + " '" + text + "'");
  }
  return v;
}

}  // namespace

AnyField field_from_descriptor(int degree, const std::string& modulus_hex) {
  const BinaryPolynomial f = BinaryPolynomial::from_hex(modulus_hex);
  if (f.degree() != degree) {
    throw Error(Errc::parse_error, "modulus " + modulus_hex + " does not have degree " +
                                       std::to_string(degree));
  }
  // M_p keeps its known alpha order.
  const BinaryPolynomial ones = BinaryPolynomial::all_ones(static_cast<std::size_t>(degree) + 1);
  if (degree > BinaryField::kMaxDegree) {
    if (f == ones) return build_mp_field(static_cast<std::uint64_t>(degree) + 1);
    return WideBinaryField(f);
  }
  return BinaryField(degree, f.low_word());
}

AnyField parse_field(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(Errc::parse_error, "field must be DEG:HEX or mp:P");
  const std::string head = text.substr(0, colon);
  const std::string tail = text.substr(colon + 1);
  if (head == "mp") return build_mp_field(parse_uint(tail, "prime"));
  return field_from_descriptor(static_cast<int>(parse_uint(head, "degree")), tail);
}

Json field_descriptor(const AnyField& field) {
  return std::visit(
      [](const auto& f) {
        Json j;
        j["degree"] = f.degree();
        j["modulus"] = BinaryPolynomial(f.modulus()).to_hex();
        return j;
      },
      field);
}

GridFile parse_grid_file(const Json& j) {
  try {
    GridFile file;
    file.m = j.at("m").get<std::size_t>();
    file.n = j.at("n").get<std::size_t>();
    file.degree = j.at("field").at("degree").get<int>();
    file.modulus = j.at("field").at("modulus").get<std::string>();
    if (j.contains("code")) file.code = j.at("code").get<std::string>();
    const auto& cells = j.at("cells");
    if (!cells.is_array() || cells.size() != file.m) {
      throw Error(Errc::parse_error, "cells must hold m rows");
    }
    for (const auto& row : cells) {
      if (!row.is_array() || row.size() != file.n) {
        throw Error(Errc::parse_error, "every row must hold n cells");
      }
      std::vector<std::optional<std::string>> out;
      for (const auto& cell : row) {
        if (cell.is_null()) {
          out.emplace_back();
        } else {
          out.emplace_back(cell.get<std::string>());
        }
      }
      file.cells.push_back(std::move(out));
    }
    return file;
  } catch (const Json::exception& e) {
    throw Error(Errc::parse_error, std::string("grid file: ") + e.what());
  }
}

Json to_json(const GridFile& file) {
  Json j;
  j["m"] = file.m;
  j["n"] = file.n;
  j["field"] = {{"degree", file.degree}, {"modulus", file.modulus}};
  if (file.code) j["code"] = *file.code;
  Json rows = Json::array();
  for (const auto& row : file.cells) {
    Json out = Json::array();
    for (const auto& cell : row) {
      if (cell) {
        out.push_back(*cell);
      } else {
        out.push_back(nullptr);
      }
    }
    rows.push_back(std::move(out));
  }
  j["cells"] = std::move(rows);
  return j;
}

Json cells_json(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (const auto& [r, c] : cells) out.push_back(Json::array({r, c}));
  return out;
}

Json layout_json(const Profile& profile, const ParityLayout& layout) {
  Json j;
  j["code"] = profile.to_string();
  j["style"] = layout.style == LayoutStyle::tail ? "tail" : "balanced";
  j["count"] = layout.positions.size();
  j["positions"] = cells_json(layout.positions);
  return j;
}

Json sim_result_json(const SimResult& result, const std::string& profile) {
  Json j;
  j["model"] = result.model;
  j["profile"] = profile;
  j["trials"] = result.trials;
  j["seed"] = result.seed;
  j["metric"] = result.metric;
  j["mean"] = result.mean;
  j["std_error"] = result.std_error;
  if (!result.histogram.empty()) j["histogram"] = result.histogram;
  return j;
}

}  // namespace eii
