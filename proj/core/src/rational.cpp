#include "evlogic/rational.hpp"

#include "evlogic/errors.hpp"

#include <cctype>

namespace evlogic {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

BigInt pow10(std::size_t k) {
    BigInt p = 1;
    for (std::size_t i = 0; i < k; ++i)
        p *= 10;
    return p;
}

} // namespace

Rat parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty())
        throw ParseError("not a number: '" + std::string(text) + "'");

    Rat value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("bad rational: '" + std::string(text) + "'");
        BigInt q{std::string(den)};
        if (q == 0)
            throw ParseError("zero denominator: '" + std::string(text) + "'");
        value = Rat(BigInt{std::string(num)}, q);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw ParseError("bad decimal: '" + std::string(text) + "'");
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
            throw ParseError("bad decimal: '" + std::string(text) + "'");
        BigInt w = whole.empty() ? BigInt(0) : BigInt{std::string(whole)};
        BigInt f = frac.empty() ? BigInt(0) : BigInt{std::string(frac)};
        BigInt scale = pow10(frac.size());
        value = Rat(w * scale + f, scale);
    } else {
        if (!all_digits(s))
            throw ParseError("not a number: '" + std::string(text) + "'");
        value = Rat(BigInt{std::string(s)});
    }
    return negative ? Rat(-value) : value;
}

std::string to_fraction_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_decimal_string(const Rat& r, int digits) {
    BigInt p = numerator(r);
    BigInt q = denominator(r);
    bool negative = p < 0;
    if (negative)
        p = -p;
    BigInt scale = pow10(static_cast<std::size_t>(digits));
    BigInt scaled = p * scale;
    BigInt d = scaled / q;
    BigInt rem = scaled % q;
    if (2 * rem >= q)
        d += 1;
    BigInt whole = d / scale;
    BigInt frac = d % scale;
    std::string frac_str = frac.str();
    frac_str.insert(frac_str.begin(), static_cast<std::size_t>(digits) - frac_str.size(), '0');
    std::string out;
    if (negative && d != 0)
        out += '-';
    out += whole.str();
    out += '.';
    out += frac_str;
    return out;
}

Rat rat_abs(const Rat& r) {
    return r < 0 ? Rat(-r) : r;
}

} // namespace evlogic
