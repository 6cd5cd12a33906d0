#include "mutalg/telem.hpp"

#include <cctype>
#include <stdexcept>

namespace mutalg {

int t_sign(const TElem& x) { return sgn(Int(x.a + x.b)); }

std::string to_string(const TElem& x) {
    if (x.is_zero()) return "0";
    std::string out;
    if (x.a != 0) out = x.a.get_str();
    if (x.b != 0) {
        if (x.b == 1)
            out += x.a != 0 ? "+t" : "t";
        else if (x.b == -1)
            out += "-t";
        else {
            if (x.b > 0 && x.a != 0) out += "+";
            out += x.b.get_str() + "t";
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const TElem& x) { return os << to_string(x); }

namespace {

// one signed term: [+-]digits?t?
bool read_term(const std::string& s, std::size_t& pos, Int& a, Int& b) {
    if (pos >= s.size()) return false;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string digits = s.substr(start, pos - start);
    bool has_t = pos < s.size() && s[pos] == 't';
    if (has_t) ++pos;
    if (digits.empty() && !has_t) return false;
    Int v = digits.empty() ? Int(1) : Int(digits);
    if (neg) v = -v;
    (has_t ? b : a) += v;
    return true;
}

}  // namespace

TElem parse_telem(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty ring element");
    Int a = 0, b = 0;
    std::size_t pos = 0;
    int terms = 0;
    while (pos < s.size()) {
        if (terms > 0 && s[pos] != '+' && s[pos] != '-')
            throw std::invalid_argument("bad ring element: " + raw);
        if (!read_term(s, pos, a, b)) throw std::invalid_argument("bad ring element: " + raw);
        ++terms;
    }
    return TElem(a, b);
}

}  // namespace mutalg
