#pragma once

#include <stdexcept>
#include <string>

namespace symchar {

// Raised when a computed quantity contradicts an identity that must hold
// regardless of input (an engine bug, not bad user input). The CLI maps
// this to exit code 3, ordinary domain errors to exit code 2.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

} // namespace symchar
