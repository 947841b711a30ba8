#include "bispec/gaussian_rational.hpp"

#include <cctype>

namespace bispec {

std::string GR::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out = re_.get_str();
    if (sgn(im_) != 0) {
        mpq_class a = abs(im_);
        std::string mag = (a == 1) ? "" : a.get_str();
        if (out.empty())
            out = (sgn(im_) < 0 ? "-" : "") + mag + "i";
        else
            out += (sgn(im_) < 0 ? "-" : "+") + mag + "i";
    }
    return out;
}

namespace {

// Parses unsigned "p" or "p/q" starting at s[pos]; leaves pos after the number.
mpq_class parse_ratio(std::string_view s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected number", start);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw ParseError("expected denominator", dstart);
    }
    mpq_class q(std::string(s.substr(start, pos - start)));
    q.canonicalize();
    return q;
}

} // namespace

GR GR::parse(std::string_view s) {
    if (s == "0") return GR();
    std::size_t pos = 0;
    mpq_class re = 0, im = 0;

    auto parse_part = [&](bool first) {
        int sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw ParseError("expected sign", pos);
        }
        mpq_class mag;
        if (pos < s.size() && s[pos] == 'i') {
            mag = 1;
        } else {
            mag = parse_ratio(s, pos);
        }
        if (pos < s.size() && s[pos] == 'i') {
            ++pos;
            im += sign * mag;
        } else {
            re += sign * mag;
        }
    };

    parse_part(true);
    if (pos < s.size()) parse_part(false);
    if (pos != s.size()) throw ParseError("trailing characters in scalar", pos);
    return GR(re, im);
}

std::string to_string(const GR& v) { return v.str(); }

} // namespace bispec
