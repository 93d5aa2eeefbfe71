#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace srtor {

/// Coefficient ring k: the integers, the rationals, or F_p.
class Coefficients {
public:
    enum class Kind { Integers, Rationals, PrimeField };

    static Coefficients integers() { return Coefficients(Kind::Integers, 0); }
    static Coefficients rationals() { return Coefficients(Kind::Rationals, 0); }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static Coefficients prime_field(std::uint32_t p);

    /// Accepts "Z", "Q", "Fp:<p>" and the shorthand "F<p>" (e.g. "F2").
    static Coefficients parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_field() const { return kind_ != Kind::Integers; }
    /// Characteristic; 0 for Z and Q.
    std::uint32_t characteristic() const { return p_; }

    friend bool operator==(const Coefficients&, const Coefficients&) = default;

private:
    Coefficients(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

/// "Z", "Q" or "Fp:<p>".
std::string to_string(const Coefficients& c);

}  // namespace srtor
