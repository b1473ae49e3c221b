#pragma once

#include <stdexcept>
#include <string>

namespace eii {

enum class Errc {
  reducible_modulus,
  mp_reducible,
  division_by_zero,
  context_mismatch,
  length_exceeds_order,
  not_sorted,
  entry_exceeds_n,
  empty_profile,
  has_erasures,
  wrong_data_length,
  empty_range,
  parameter_out_of_range,
  order_too_small,
  field_too_small,
  too_large,
  parse_error,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace eii
