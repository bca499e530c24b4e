#include "levigauge/rational.hpp"

namespace levigauge {

std::string rational_to_string(const Rational& r) {
    return r.str();
}

std::string integer_to_string(const Integer& n) {
    return n.str();
}

double rational_to_double(const Rational& r) {
    return r.convert_to<double>();
}

std::complex<double> GaussianRational::to_complex() const {
    return {rational_to_double(re), rational_to_double(im)};
}

std::string GaussianRational::to_string() const {
    if (im == 0) {
        return rational_to_string(re);
    }
    std::string out = "(" + rational_to_string(re);
    if (im < 0) {
        out += "-" + rational_to_string(-im);
    } else {
        out += "+" + rational_to_string(im);
    }
    out += "i)";
    return out;
}

}  // namespace levigauge
