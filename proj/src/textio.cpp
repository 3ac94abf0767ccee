#include "sectorpack/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace sectorpack {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Int parse_int(const std::string& s) {
    if (!looks_like_integer(s)) throw parse_error("not an integer: '" + s + "'");
    return s[0] == '+' ? Int(s.substr(1)) : Int(s);
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = strip(text);
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (sgn(den) == 0) throw parse_error("zero denominator in '" + text + "'");
    return Rational(num, den);
}

SectorSlope parse_slope(const std::string& text) {
    std::string s = strip(text);
    if (s == "inf" || s == "infinity") return SectorSlope::infinity();
    auto sq = s.find("sqrt(");
    if (sq == std::string::npos) {
        Rational v = parse_rational(s);
        if (v.sign() <= 0) throw parse_error("sector slope must be positive: '" + text + "'");
        return SectorSlope::rational(v);
    }
    // a+b*sqrt(d) / a-b*sqrt(d); the rational part may be absent.
    if (s.back() != ')') throw parse_error("malformed slope: '" + text + "'");
    std::string rad_text = s.substr(sq + 5, s.size() - sq - 6);
    Int rad = parse_int(rad_text);
    std::string head = s.substr(0, sq); // "a+b*" or "b*" or "+", "-", ""
    if (!head.empty() && head.back() == '*') head.pop_back();
    // split the coefficient from the rational part at the last top-level +/-
    std::string a_text = "0", b_text = head;
    for (std::size_t i = head.size(); i-- > 1;) {
        if (head[i] == '+' || head[i] == '-') {
            a_text = head.substr(0, i);
            b_text = head.substr(i);
            break;
        }
    }
    if (b_text.empty() || b_text == "+") b_text = "1";
    else if (b_text == "-") b_text = "-1";
    Rational a = parse_rational(a_text);
    Rational b = parse_rational(b_text);
    if (sgn(rad) <= 0) throw parse_error("radicand must be positive: '" + text + "'");
    try {
        return SectorSlope::quad_irrational(a, b, rad);
    } catch (const std::domain_error& e) {
        throw parse_error(std::string(e.what()) + ": '" + text + "'");
    }
}

namespace {

// One monomial of the closed-form grammar: coefficient and (dx, dy) powers.
struct Term {
    Rational coef;
    int dx = 0, dy = 0;
};

Term parse_term(const std::string& term) {
    Term out;
    out.coef = Rational(1);
    std::string coef_text;
    bool have_coef = false;
    std::size_t i = 0;
    if (i < term.size() && (term[i] == '+' || term[i] == '-')) {
        if (term[i] == '-') out.coef = Rational(-1);
        ++i;
    }
    // leading numeric coefficient (possibly p/q)
    std::size_t start = i;
    while (i < term.size() && (std::isdigit(static_cast<unsigned char>(term[i])) || term[i] == '/'))
        ++i;
    if (i > start) {
        coef_text = term.substr(start, i - start);
        have_coef = true;
    }
    if (have_coef) out.coef = out.coef * parse_rational(coef_text);
    // variable factors separated by '*'
    while (i < term.size()) {
        if (term[i] == '*') { ++i; continue; }
        char var = term[i];
        if (var != 'x' && var != 'y') throw parse_error("unexpected '" + term.substr(i) + "'");
        ++i;
        int pow = 1;
        if (i < term.size() && term[i] == '^') {
            ++i;
            if (i >= term.size() || !std::isdigit(static_cast<unsigned char>(term[i])))
                throw parse_error("malformed exponent in '" + term + "'");
            pow = term[i] - '0';
            ++i;
        }
        (var == 'x' ? out.dx : out.dy) += pow;
    }
    return out;
}

} // namespace

IVQuadratic parse_poly(const std::string& text) {
    // Space-separated sextuple first.
    {
        std::istringstream is(text);
        std::vector<std::string> toks;
        std::string t;
        while (is >> t) toks.push_back(t);
        if (toks.size() == 6 &&
            std::all_of(toks.begin(), toks.end(), looks_like_integer)) {
            IVQuadratic p;
            p.a = parse_int(toks[0]);
            p.b = parse_int(toks[1]);
            p.c = parse_int(toks[2]);
            p.d = parse_int(toks[3]);
            p.e = parse_int(toks[4]);
            p.f = parse_int(toks[5]);
            return p;
        }
    }
    std::string s = strip(text);
    if (s.empty()) throw parse_error("empty polynomial");
    // split into signed terms
    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-') {
            terms.push_back(s.substr(start, i - start));
            start = i;
        }
    terms.push_back(s.substr(start));

    Rational ca(0), cb(0), cc(0), cd(0), ce(0), cf(0);
    for (const auto& ts : terms) {
        Term term = parse_term(ts);
        int deg = term.dx + term.dy;
        if (deg > 2) throw parse_error("degree above 2 in '" + ts + "'");
        if (term.dx == 2) ca += term.coef;
        else if (term.dx == 1 && term.dy == 1) cb += term.coef;
        else if (term.dy == 2) cc += term.coef;
        else if (term.dx == 1) cd += term.coef;
        else if (term.dy == 1) ce += term.coef;
        else cf += term.coef;
    }
    return from_closed_form(ca, cb, cc, cd, ce, cf);
}

} // namespace sectorpack
