#ifndef SHX_ERROR_HPP
#define SHX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace shx {

// Error taxonomy shared by the C++ core, the C API status codes and the
// CLI exit-code mapping (0 ok, 1 domain, 2 usage).
enum class errc {
  usage = 1,           // bad arguments / malformed request
  parse = 2,           // unreadable input (JSON, CSV)
  invalid_graph = 3,   // structural invariant violated
  shape_mismatch = 4,  // non-conforming matrix shapes
  domain = 5,          // operation precondition violated
  io = 6,              // filesystem failure
  limit = 7,           // size guard exceeded
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace shx

#endif  // SHX_ERROR_HPP
