#include "format.hpp"

#include <sstream>

#include "exls/series.hpp"

namespace exls::detail {

std::string format_sum(const std::vector<std::pair<Scalar, std::string>> &terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[c, mono] : terms) {
        bool negative = c.is_monomial() && c.leading_sign() < 0;
        Scalar mag = negative ? -c : c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (mono.empty()) {
            os << (mag.is_monomial() ? mag.str() : "(" + mag.str() + ")");
        } else if (mag.is_one()) {
            os << mono;
        } else if (mag.is_monomial()) {
            os << mag.str() << '*' << mono;
        } else {
            os << '(' << mag.str() << ")*" << mono;
        }
    }
    return os.str();
}

std::string format_trunc(const std::string &var, int trunc) {
    if (trunc == kExact) return "";
    return " + O(" + var + "^" + std::to_string(trunc) + ")";
}

}  // namespace exls::detail
