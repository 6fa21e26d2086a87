#include "geometry/scalar.h"

#include <cctype>

namespace srs {

std::optional<Scalar> parse_scalar(const std::string& token) {
    if (token.empty()) return std::nullopt;

    auto digits_only = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    std::string body = token;
    bool negative = false;
    if (body[0] == '+' || body[0] == '-') {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    if (body.empty()) return std::nullopt;

    Scalar value;
    auto slash = body.find('/');
    auto dot = body.find('.');
    if (slash != std::string::npos) {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den)) return std::nullopt;
        mpz_class d(den);
        if (d == 0) return std::nullopt;
        value = Scalar(mpz_class(num), d);
        value.canonicalize();
    } else if (dot != std::string::npos) {
        std::string whole = body.substr(0, dot);
        std::string frac = body.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!digits_only(whole) || (!frac.empty() && !digits_only(frac))) return std::nullopt;
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        mpz_class num = mpz_class(whole) * scale + (frac.empty() ? mpz_class(0) : mpz_class(frac));
        value = Scalar(num, scale);
        value.canonicalize();
    } else {
        if (!digits_only(body)) return std::nullopt;
        value = Scalar(mpz_class(body));
    }
    if (negative) value = -value;
    return value;
}

std::string to_string(const Scalar& s) {
    return s.get_str();
}

}  // namespace srs
