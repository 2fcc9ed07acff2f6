#pragma once

#include <stdexcept>
#include <string>

namespace flagdod {

// Raised for violated preconditions and failed computations. The CLI maps
// this to exit status 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw Error(what);
}

}  // namespace flagdod
