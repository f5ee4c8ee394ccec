#include "qneuron/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace qneuron {

void validate(const PhysicalConstants& pc) {
    const bool ok = std::isfinite(pc.h) && pc.h > 0.0 &&
                    std::isfinite(pc.c) && pc.c > 0.0 &&
                    std::isfinite(pc.k) && pc.k > 0.0 &&
                    std::isfinite(pc.e_charge) && pc.e_charge > 0.0;
    if (!ok) {
        throw std::invalid_argument(
            "PhysicalConstants: all constants must be finite and > 0");
    }
}

}  // namespace qneuron
