#include "eii/error.hpp"

namespace eii {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::reducible_modulus: return "ReducibleModulus";
    case Errc::mp_reducible: return "MpReducible";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::context_mismatch: return "ContextMismatch";
    case Errc::length_exceeds_order: return "LengthExceedsOrder";
    case Errc::not_sorted: return "NotSorted";
    case Errc::entry_exceeds_n: return "EntryExceedsN";
    case Errc::empty_profile: return "EmptyProfile";
    case Errc::has_erasures: return "HasErasures";
    case Errc::wrong_data_length: return "WrongDataLength";
    case Errc::empty_range: return "EmptyRange";
    case Errc::parameter_out_of_range: return "ParameterOutOfRange";
    case Errc::order_too_small: return "OrderTooSmall";
    case Errc::field_too_small: return "FieldTooSmall";
    case Errc::too_large: return "TooLarge";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace eii
