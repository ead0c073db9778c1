#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bc {

using Rational = mpq_class;

// Parses "p", "-p", "p/q" into lowest terms. Throws Error("ParseError").
Rational parse_rational(std::string_view text);

// Lowest-terms rendering; integers are rendered without a denominator.
std::string to_string(const Rational& q);

// Rendering that always carries the slash, used by the curve file format.
std::string to_pq(const Rational& q);

double to_double(const Rational& q);

// Domain failure with a stable machine-readable name ("NotSimple", ...).
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(name + (detail.empty() ? "" : ": " + detail)),
          name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Largest power-of-two fraction k/2^bits not exceeding x (x >= 0).
Rational dyadic_floor(double x, int bits);

}  // namespace bc
