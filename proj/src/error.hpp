#pragma once

#include <stdexcept>
#include <string>

namespace gs {

enum class Errc {
  InvalidArg,
  Parse,
  Unsupported,
  Numeric,
  Io,
  Internal,
};

// Library-wide exception. The C boundary maps Errc onto status codes; the
// message is preserved verbatim for gs_last_error().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace gs
