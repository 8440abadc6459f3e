#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgl {

enum class Errc {
  malformed_record,
  truncated_record,
  unsupported_size,
  invalid_permutation,
  disconnected_graph,
  unsupported_depth,
  sequencing,
  shape,
  missing_data,
  schema,
  parameter,
  io,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::malformed_record: return "malformed record";
    case Errc::truncated_record: return "truncated record";
    case Errc::unsupported_size: return "unsupported size";
    case Errc::invalid_permutation: return "invalid permutation";
    case Errc::disconnected_graph: return "disconnected graph";
    case Errc::unsupported_depth: return "unsupported depth";
    case Errc::sequencing: return "sequencing error";
    case Errc::shape: return "shape error";
    case Errc::missing_data: return "missing data";
    case Errc::schema: return "schema mismatch";
    case Errc::parameter: return "invalid parameter";
    case Errc::io: return "i/o error";
  }
  return "unknown error";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qgl
