#include "borel/rational.hpp"

#include <cctype>
#include <ostream>

namespace borel {

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw ParseError("Rational: empty string");
    auto check = [&](const std::string& part) {
        if (part.empty()) throw ParseError("Rational: bad literal '" + s + "'");
        std::size_t k = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (k == part.size()) throw ParseError("Rational: bad literal '" + s + "'");
        for (; k < part.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(part[k])))
                throw ParseError("Rational: bad literal '" + s + "'");
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        check(s);
        return Rational(mpq_class(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check(num);
    check(den);
    mpq_class q(num + "/" + den);
    if (q.get_den() == 0) throw SingularityError("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace borel
