#include "fibcones/rational.hpp"

#include <stdexcept>

#include "fibcones/errors.hpp"

namespace fibcones {

std::string to_string(const Rational& q) {
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) throw std::invalid_argument("empty integer");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9')
            throw std::invalid_argument("not an integer: " + std::string(text));
    }
    return Integer(std::string(text[0] == '+' ? text.substr(1) : text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
}

const char* kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::GradeMismatch: return "GradeMismatch";
        case ErrorKind::DuplicateName: return "DuplicateName";
        case ErrorKind::NotTopGrade: return "NotTopGrade";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::InvalidHN: return "InvalidHN";
        case ErrorKind::RankTooSmall: return "RankTooSmall";
        case ErrorKind::NotUnstable: return "NotUnstable";
        case ErrorKind::NotSemistable: return "NotSemistable";
        case ErrorKind::DimMismatch: return "DimMismatch";
        case ErrorKind::ZeroGenerator: return "ZeroGenerator";
        case ErrorKind::NotAGenerator: return "NotAGenerator";
        case ErrorKind::BasisMismatch: return "BasisMismatch";
        case ErrorKind::MixedStabilityUnsupported: return "MixedStabilityUnsupported";
    }
    return "Unknown";
}

}  // namespace fibcones
