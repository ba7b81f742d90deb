#include "dvfactor/format.hpp"

namespace dvfactor {

namespace {

std::string power(char var, std::size_t k) {
    if (k == 0) return "";
    if (k == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(k);
}

// Unsigned monomial |c| * var^k with an optional trailing factor.
std::string monomial(const BigInt& c, char var, std::size_t k, const std::string& tail = "") {
    const BigInt mag = abs(c);
    std::string p = power(var, k);
    if (!tail.empty()) p = p.empty() ? tail : p + "*" + tail;
    if (p.empty()) return mag.get_str();
    if (mag == 1) return p;
    return mag.get_str() + "*" + p;
}

void append_term(std::string& out, bool negative, const std::string& body) {
    if (out.empty()) {
        out = (negative ? "-" : "") + body;
    } else {
        out += negative ? " - " : " + ";
        out += body;
    }
}

}  // namespace

std::string to_string(const IntPoly& f, char var) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto c = f.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (sgn(c[k]) == 0) continue;
        append_term(out, sgn(c[k]) < 0, monomial(c[k], var, k));
    }
    return out;
}

std::string to_string(const BiPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto a = f.coefficients();
    for (std::size_t k = a.size(); k-- > 0;) {
        const IntPoly& coeff = a[k];
        if (coeff.is_zero()) continue;
        const auto xc = coeff.coefficients();
        std::size_t nonzero = 0;
        for (const auto& c : xc) nonzero += sgn(c) != 0;
        if (k == 0 || nonzero == 1) {
            // Distribute the y-power over each x-term.
            for (std::size_t j = xc.size(); j-- > 0;) {
                if (sgn(xc[j]) == 0) continue;
                const std::string ypow = power('y', k);
                std::string body;
                if (j == 0) {
                    body = abs(xc[j]) == 1 && !ypow.empty() ? ypow
                                                            : BigInt(abs(xc[j])).get_str() + (ypow.empty() ? "" : "*" + ypow);
                } else {
                    body = monomial(xc[j], 'x', j, ypow);
                }
                append_term(out, sgn(xc[j]) < 0, body);
            }
        } else {
            append_term(out, false, "(" + to_string(coeff, 'x') + ")" + (k > 0 ? "*" + power('y', k) : ""));
        }
    }
    return out;
}

}  // namespace dvfactor
