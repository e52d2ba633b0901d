#ifndef ORBITFORGE_ERRORS_HPP
#define ORBITFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orbitforge {

/** Raised when a computation hits a configured ceiling (scan level, precision). */
class ComputeLimitError : public std::runtime_error {
  public:
    explicit ComputeLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orbitforge

#endif
