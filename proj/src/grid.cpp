#include "eii/grid.hpp"

#include "eii/errmode.hpp"

namespace eii {

const char* status_name(DecodeStatus status) noexcept {
  switch (status) {
    case DecodeStatus::fully_corrected: return "FullyCorrected";
    case DecodeStatus::partially_corrected: return "PartiallyCorrected";
    case DecodeStatus::failed: return "Failed";
  }
  return "Unknown";
}

const char* status_name(ErrorDecodeStatus status) noexcept {
  switch (status) {
    case ErrorDecodeStatus::corrected: return "Corrected";
    case ErrorDecodeStatus::failed_rows: return "FailedRows";
    case ErrorDecodeStatus::failed_both: return "FailedBoth";
  }
  return "Unknown";
}

}  // namespace eii
