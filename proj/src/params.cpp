#include "atl/params.hpp"

#include <cmath>
#include <limits>

namespace atl {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 7-point Gauss / 15-point Kronrod pair on [-1, 1]
struct GK15 {
    static constexpr double xk[15] = {
        -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
        -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
        0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
        0.864864423359769,  0.949107912342759,  0.991455371120813};
    static constexpr double wk[15] = {
        0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
        0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
        0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
        0.104790010322250, 0.063092092629979, 0.022935322010529};
    static constexpr double wg[7] = {
        0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
        0.381830050505119, 0.279705391489277, 0.129484966168870};
};

template <class F>
void gk15(F&& f, double a, double b, double& value, double& err) {
    double h = 0.5 * (b - a), mid = 0.5 * (a + b);
    double k = 0.0, g = 0.0;
    for (int i = 0; i < 15; ++i) {
        double fx = f(mid + h * GK15::xk[i]);
        k += GK15::wk[i] * fx;
        if (i % 2 == 1) g += GK15::wg[i / 2] * fx;
    }
    value = k * h;
    err = std::abs((k - g) * h);
}

template <class F>
double adaptive_gk(F&& f, double a, double b, double tol, int depth = 0) {
    double v, e;
    gk15(f, a, b, v, e);
    if (e < tol || depth > 48) return v;
    double mid = 0.5 * (a + b);
    return adaptive_gk(f, a, mid, tol / 2, depth + 1) + adaptive_gk(f, mid, b, tol / 2, depth + 1);
}

}  // namespace

double e_infinity(double gamma) {
    if (!(gamma > 0.0 && gamma < kPi))
        throw std::invalid_argument("e_infinity: gamma must lie in (0, pi)");
    auto integrand = [gamma](double t) {
        if (std::abs(t) < 1e-8) {
            // removable singularity: sinh((pi-g)t)/(sinh(pi t) cosh(g t)) -> (pi-g)/pi
            double c2 = (kPi - gamma) / kPi;
            // next order keeps the quadrature smooth through t = 0
            double tt = t * t;
            double series = c2 * (1.0 + tt * ((kPi - gamma) * (kPi - gamma) - kPi * kPi) / 6.0 -
                                  tt * gamma * gamma / 2.0);
            return series;
        }
        return std::sinh((kPi - gamma) * t) / (std::sinh(kPi * t) * std::cosh(gamma * t));
    };
    // integrand ~ 2 exp(-2 gamma t); pick T so the tail is below 1e-16
    double tail_rate = 2.0 * gamma;
    double T = std::log(1e17 / tail_rate) / tail_rate + 1.0;
    double half = adaptive_gk(integrand, 0.0, T, 2.5e-14);
    return std::sin(gamma) * 2.0 * half;
}

double fermi_velocity(double gamma) {
    if (!(gamma > 0.0 && gamma < kPi))
        throw std::invalid_argument("fermi_velocity: gamma must lie in (0, pi)");
    return kPi * std::sin(gamma) / gamma;
}

double central_charge(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("central_charge: x must be positive");
    return 1.0 - 6.0 / (x * (x + 1.0));
}

double param_from_c(double c) {
    if (!(c < 1.0)) throw std::invalid_argument("param_from_c: need c < 1");
    double s = 6.0 / (1.0 - c);
    return 0.5 * (std::sqrt(1.0 + 4.0 * s) - 1.0);
}

double loop_weight(double x, SignConvention conv) {
    if (!(x > 0.0)) throw std::invalid_argument("loop_weight: x must be positive");
    double m = 2.0 * std::cos(kPi / (x + 1.0));
    return conv == SignConvention::Negated ? -m : m;
}

LatticeParams LatticeParams::from_x(int n_sites, double x, SignConvention conv, double y) {
    if (!(x > 0.0)) throw std::invalid_argument("LatticeParams: x must be positive");
    if (n_sites <= 0 || n_sites % 2 != 0)
        throw std::invalid_argument("LatticeParams: N must be positive and even");
    LatticeParams p;
    p.n_sites = n_sites;
    p.x = x;
    p.gamma = kPi / (x + 1.0);
    p.m = loop_weight(x, conv);
    if (p.m == 0.0) throw std::invalid_argument("LatticeParams: m = 0 degenerates the loop product");
    p.c = central_charge(x);
    p.e_infty = e_infinity(p.gamma);
    p.v_f = fermi_velocity(p.gamma);
    p.y = y;
    p.convention = conv;
    return p;
}

LatticeParams LatticeParams::from_c(int n_sites, double c, SignConvention conv, double y) {
    return from_x(n_sites, param_from_c(c), conv, y);
}

LatticeParams LatticeParams::raw(int n_sites, double m, double e_infty, SignConvention conv,
                                 double y) {
    if (n_sites <= 0 || n_sites % 2 != 0)
        throw std::invalid_argument("LatticeParams: N must be positive and even");
    if (m == 0.0) throw std::invalid_argument("LatticeParams: m = 0 degenerates the loop product");
    LatticeParams p;
    p.n_sites = n_sites;
    p.m = m;
    p.e_infty = e_infty;
    p.y = y;
    p.convention = conv;
    double plain_m = conv == SignConvention::Negated ? -m : m;
    if (std::abs(plain_m) < 2.0) {
        p.gamma = std::acos(plain_m / 2.0);
        p.x = kPi / p.gamma - 1.0;
        p.c = p.x > 0.0 ? central_charge(p.x) : std::numeric_limits<double>::quiet_NaN();
        p.v_f = fermi_velocity(p.gamma);
    } else {
        p.x = p.gamma = p.c = p.v_f = std::numeric_limits<double>::quiet_NaN();
    }
    return p;
}

ModuleSpec ModuleSpec::parse(const std::string& text) {
    auto next = [&](std::size_t& pos) {
        std::size_t colon = text.find(':', pos);
        std::string tok = text.substr(pos, colon == std::string::npos ? colon : colon - pos);
        pos = colon == std::string::npos ? text.size() : colon + 1;
        return tok;
    };
    std::size_t pos = 0;
    std::string head = next(pos);
    if (head == "quotient0" || head == "quotient-zero") return quotient_zero();
    if (head == "standard") {
        std::string js = next(pos);
        std::string ps = pos < text.size() ? text.substr(pos) : "0";
        if (js.empty()) throw std::invalid_argument("module spec: standard:<j>[:phi]");
        return standard(std::stoi(js), ps.empty() ? 0.0 : std::stod(ps));
    }
    if (head == "glued" || head == "glued-quotient") {
        std::string js = next(pos);
        if (js.empty()) throw std::invalid_argument("module spec: " + head + ":<j_max>");
        int j = std::stoi(js);
        return head == "glued" ? glued(j) : glued_quotient(j);
    }
    throw std::invalid_argument("unknown module spec: " + text);
}

std::string ModuleSpec::to_string() const {
    switch (kind) {
        case ModuleKind::Standard:
            return "standard:" + std::to_string(j) + ":" + std::to_string(phi);
        case ModuleKind::QuotientZero:
            return "quotient0";
        case ModuleKind::Glued:
            return "glued:" + std::to_string(j);
        case ModuleKind::GluedQuotient:
            return "glued-quotient:" + std::to_string(j);
    }
    return "?";
}

}  // namespace atl
