#pragma once

#include <string>

#include "goncarov/poly.hpp"

namespace gonc {

// Outcome of an identity check. On failure `index` and `residual` hold the
// first failing n and the nonzero difference.
struct CheckResult {
    bool ok = true;
    unsigned index = 0;
    MultiPoly residual;
    std::string detail;

    explicit operator bool() const { return ok; }

    static CheckResult pass() { return {}; }
    static CheckResult fail(unsigned n, MultiPoly residual, std::string detail = {});
};

} // namespace gonc
