#include "ytab/params.hpp"

#include <cmath>
#include <cstdlib>

namespace ytab {

namespace {

// smallest |k| with (z+k)(z'+k) <= 0, if any
std::optional<int> find_witness(double z, double zp) {
    const int bound = static_cast<int>(std::ceil(std::max(std::fabs(z), std::fabs(zp)))) + 2;
    for (int a = 0; a <= bound; ++a) {
        for (int k : {a, -a}) {
            if ((z + k) * (zp + k) <= 0.0) return k;
            if (a == 0) break;
        }
    }
    return std::nullopt;
}

} // namespace

Parameters Parameters::validate(double z_re, double z_im, double zp_re,
                                double zp_im, double r) {
    if (!(r > 0.0)) throw ParamError("truncation level r must be positive");

    if (z_im != 0.0 || zp_im != 0.0) {
        if (z_im == 0.0 || zp_im == 0.0 || z_re != zp_re || z_im != -zp_im)
            throw ParamError("complex parameters must form a conjugate pair z' = conj(z)");
        const double s = 2.0 * z_re;
        const double p = z_re * z_re + z_im * z_im;
        return Parameters(s, p, r, ParamKind::conjugate_pair, 0);
    }

    // both real: need a common open unit interval (m, m+1)
    const double z = z_re, zp = zp_re;
    const double fz = std::floor(z), fzp = std::floor(zp);
    if (z == fz || zp == fzp || fz != fzp) {
        auto k = find_witness(z, zp);
        std::string msg = "real parameters must lie in a common open unit interval (m, m+1)";
        if (k) msg += "; witness k = " + std::to_string(*k) +
                      " gives (z+k)(z'+k) <= 0";
        throw ParamError(msg, k);
    }
    return Parameters(z + zp, z * zp, r, ParamKind::real_interval,
                      static_cast<int>(fz));
}

std::pair<double, double> parse_complex(const std::string& text) {
    const auto fail = [&]() -> std::pair<double, double> {
        throw std::invalid_argument("cannot parse complex number: '" + text + "'");
    };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return fail();

    // pure imaginary or real-only fast paths handled by the general split:
    // find the +/- that separates real and imaginary parts (not an exponent
    // sign, not the leading sign)
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')
            split = k; // keep the last one; handles "1e-2+3i"
    }

    const auto to_num = [&](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        char* end = nullptr;
        const double v = std::strtod(t.c_str(), &end);
        if (end != t.c_str() + t.size()) fail();
        return v;
    };

    if (s.back() == 'i' || s.back() == 'I') {
        const std::string body = s.substr(0, s.size() - 1);
        if (split == std::string::npos)
            return {0.0, to_num(body)};
        return {to_num(body.substr(0, split)), to_num(body.substr(split))};
    }
    if (split != std::string::npos && (s[split - 1] == 'i' || s[split - 1] == 'I')) fail();
    return {to_num(s), 0.0};
}

} // namespace ytab
