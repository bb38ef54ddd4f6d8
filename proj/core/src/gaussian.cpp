#include "crsym/gaussian.hpp"

namespace crsym {

std::string to_string(const GaussianRational& x) {
    if (x.is_zero()) return "0";
    if (x.is_real()) return to_string(x.re);

    std::string im_part;
    if (x.im == 1)
        im_part = "i";
    else if (x.im == -1)
        im_part = "-i";
    else
        im_part = to_string(x.im) + "i";

    if (is_zero(x.re)) return "(" + im_part + ")";

    std::string out = "(" + to_string(x.re);
    if (sgn(x.im) > 0) out += "+";
    out += im_part + ")";
    return out;
}

}  // namespace crsym
