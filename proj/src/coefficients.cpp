#include "srtor/coefficients.hpp"

#include <charconv>
#include <stdexcept>

namespace srtor {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

Coefficients Coefficients::prime_field(std::uint32_t p) {
    if (p >= (1U << 31) || !is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    return Coefficients(Kind::PrimeField, p);
}

Coefficients Coefficients::parse(std::string_view text) {
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    std::string_view digits;
    if (text.starts_with("Fp:")) {
        digits = text.substr(3);
    } else if (text.starts_with("F")) {
        digits = text.substr(1);
    } else {
        throw std::invalid_argument("unknown coefficients '" + std::string(text) + "'");
    }
    std::uint32_t p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
        throw std::invalid_argument("bad field characteristic in '" + std::string(text) + "'");
    return prime_field(p);
}

std::string to_string(const Coefficients& c) {
    switch (c.kind()) {
    case Coefficients::Kind::Integers: return "Z";
    case Coefficients::Kind::Rationals: return "Q";
    case Coefficients::Kind::PrimeField: return "Fp:" + std::to_string(c.characteristic());
    }
    return "?";
}

}  // namespace srtor
