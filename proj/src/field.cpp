#include "sarseg/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sarseg {

double min_value(const ScalarField& f) {
    return *std::min_element(f.v.begin(), f.v.end());
}

double max_value(const ScalarField& f) {
    return *std::max_element(f.v.begin(), f.v.end());
}

double mean_value(const ScalarField& f) {
    double s = 0.0;
    for (double x : f.v) s += x;
    return f.v.empty() ? 0.0 : s / static_cast<double>(f.v.size());
}

bool all_finite(const ScalarField& f) {
    for (double x : f.v)
        if (!std::isfinite(x)) return false;
    return true;
}

void require_positive(const ScalarField& f, const char* what) {
    for (double x : f.v) {
        if (!std::isfinite(x) || x <= 0.0)
            throw std::invalid_argument(std::string(what) + ": image values must be finite and > 0");
    }
}

}  // namespace sarseg
