#include "ineq/format.hpp"

#include <cstdio>

namespace ineq {

std::string fmt_g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string fmt_fixed4(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

}  // namespace ineq
