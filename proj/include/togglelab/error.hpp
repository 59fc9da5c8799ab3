#ifndef TOGGLELAB_ERROR_HPP
#define TOGGLELAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tgl {

/// Error categories raised by the library. Each maps 1:1 onto a C API
/// status code (see togglelab.h).
enum class errc {
  bad_parameter = 1,
  empty_diagram,
  bad_character,
  cap_exceeded,
  not_an_ideal,
  not_an_antichain,
  not_a_diamond,
  ambient_mismatch,
  dependent_generators,
  not_in_span,
  conditions_fail,
  unknown_family,
  bad_diagram,
  cell_not_in_diagram,
  predicate_fail,
  parse_error,
  io_error,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

} // namespace tgl

#endif
