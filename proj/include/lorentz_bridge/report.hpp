#ifndef LORENTZ_BRIDGE_REPORT_HPP
#define LORENTZ_BRIDGE_REPORT_HPP

#include "lorentz_bridge/harness.hpp"

#include <string>

namespace lorentz_bridge {

/// %.{digits}g rendering; non-finite values become "inf", "-inf" or "nan".
std::string format_number(double value, int significant_digits);

/// JSON with doubles at 17 significant digits; non-finite numbers are null.
std::string to_json(const VerificationReport& report);

}  // namespace lorentz_bridge

#endif  // LORENTZ_BRIDGE_REPORT_HPP
