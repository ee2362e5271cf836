#pragma once

#include <stdexcept>

namespace abexp {

/// A configured resource cap (node count, word count) was exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace abexp
