#pragma once

#include <stdexcept>
#include <string>

namespace vsg {

enum class errc {
    parse,
    zero_move,
    mixed_dimension,
    overflow,
    negative_result,
    budget_exceeded,
    unsupported_regime,
    shape_mismatch,
    color_conflict,
    bad_argument,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace vsg
