#include "hexlap/bignum.hpp"

#include "hexlap/error.hpp"

#include <cmath>

namespace hexlap {

double log10_big(const BigInt& v) {
    if (v <= 0) throw DomainError("log10 of a non-positive integer");
    const std::string digits = v.str();
    constexpr std::size_t kLead = 17;
    if (digits.size() <= kLead) return std::log10(std::stod(digits));
    const double lead = std::stod(digits.substr(0, kLead));
    return std::log10(lead) + static_cast<double>(digits.size() - kLead);
}

} // namespace hexlap
