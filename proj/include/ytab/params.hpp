#ifndef YTAB_PARAMS_HPP
#define YTAB_PARAMS_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "ytab/numeric.hpp"
#include "ytab/partitions.hpp"

namespace ytab {

// Parameter rejection; carries the violating integer shift when one exists.
class ParamError : public std::invalid_argument {
public:
    ParamError(const std::string& msg, std::optional<int> witness_k = std::nullopt)
        : std::invalid_argument(msg), witness_k_(witness_k) {}
    std::optional<int> witness_k() const { return witness_k_; }

private:
    std::optional<int> witness_k_;
};

enum class ParamKind { conjugate_pair, real_interval };

// Admissible (z, z') pair plus the truncation level r. Only the real
// invariants s = z + z' and p = z z' are stored; every downstream rate is a
// real quadratic in the cell content, q(c) = p + s c + c^2 > 0.
class Parameters {
public:
    // Accepts either a conjugate pair (z' = conj(z), Im z != 0) or two reals
    // inside a common open unit interval (m, m+1). Throws ParamError with the
    // violating k where there is an integer witness of (z+k)(z'+k) <= 0.
    static Parameters validate(double z_re, double z_im, double zp_re,
                               double zp_im, double r);

    double s() const { return s_; }
    double p() const { return p_; }
    double r() const { return r_; }
    ParamKind kind() const { return kind_; }
    int interval_m() const { return m_; } // meaningful for real_interval only

    double q(int content) const {
        const double c = static_cast<double>(content);
        return p_ + s_ * c + c * c;
    }
    double q(Cell cell) const { return q(cell.content()); }

    // same (z, z') at a different truncation level
    Parameters with_r(double r) const {
        if (!(r > 0.0)) throw ParamError("truncation level r must be positive");
        return Parameters(s_, p_, r, kind_, m_);
    }

private:
    Parameters(double s, double p, double r, ParamKind kind, int m)
        : s_(s), p_(p), r_(r), kind_(kind), m_(m) {}

    double s_, p_, r_;
    ParamKind kind_;
    int m_;
};

// Exact-rational counterpart for the identity checks. No admissibility is
// imposed: the combinatorial identities are polynomial in (s, p).
struct RationalParams {
    Rational s, p, r;

    Rational q(int content) const {
        const Rational c(content);
        return p + s * c + c * c;
    }
    Rational q(Cell cell) const { return q(cell.content()); }
};

// Parses "a+bi" / "a-bi" / plain decimals into (re, im).
std::pair<double, double> parse_complex(const std::string& text);

} // namespace ytab

#endif
