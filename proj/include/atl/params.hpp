#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace atl {

enum class SignConvention { Plain, Negated };

enum class ModuleKind { Standard, QuotientZero, Glued, GluedQuotient };

enum class BasisOrder { Default, Appendix };

// Which representation the algebra acts on. Standard(j, phi) carries exactly
// 2j through-lines and pseudomomentum phi; for j = 0 the noncontractible loop
// weight is 2 cos(phi/2). Glued(j_max) stacks all sectors 0..j_max with free
// through-line contraction; GluedQuotient additionally restricts the j = 0
// sector to states that do not cross the seam.
struct ModuleSpec {
    ModuleKind kind = ModuleKind::Standard;
    int j = 0;          // Standard sector, or j_max for glued kinds
    double phi = 0.0;   // pseudomomentum (Standard only; glued kinds use 0)
    BasisOrder order = BasisOrder::Default;

    static ModuleSpec standard(int j, double phi) { return {ModuleKind::Standard, j, phi}; }
    static ModuleSpec quotient_zero() { return {ModuleKind::QuotientZero, 0, 0.0}; }
    static ModuleSpec glued(int j_max) { return {ModuleKind::Glued, j_max, 0.0}; }
    static ModuleSpec glued_quotient(int j_max) { return {ModuleKind::GluedQuotient, j_max, 0.0}; }

    bool is_glued() const { return kind == ModuleKind::Glued || kind == ModuleKind::GluedQuotient; }
    bool rewires() const { return kind == ModuleKind::QuotientZero || kind == ModuleKind::GluedQuotient; }

    // parse "standard:j:phi", "quotient0", "glued:j", "glued-quotient:j"
    static ModuleSpec parse(const std::string& text);
    std::string to_string() const;

    bool operator==(const ModuleSpec&) const = default;
};

// Bethe-ansatz ground-state density of the e_j: sin(g) times the even-line
// integral of sinh((pi-g)t) / (sinh(pi t) cosh(g t)). Absolute accuracy 1e-12.
double e_infinity(double gamma);

// sound velocity pi sin(gamma) / gamma
double fermi_velocity(double gamma);

// Couplings of one lattice realization. `m` is the loop fugacity actually
// used when stacking diagrams and gluing overlaps; under the Negated
// convention it is -2cos(pi/(x+1)) and every generator matrix is negated.
struct LatticeParams {
    int n_sites = 0;
    double x = 0.0;        // Kac parameter (NaN for raw parameter sets)
    double gamma = 0.0;    // pi / (x + 1)
    double m = 0.0;        // loop weight
    double c = 0.0;        // central charge 1 - 6/(x(x+1))
    double e_infty = 0.0;
    double v_f = 0.0;
    double y = 1.0;        // contraction weight on odd-site through-line caps
    SignConvention convention = SignConvention::Plain;

    double L() const { return n_sites / 2.0; }
    double sign() const { return convention == SignConvention::Negated ? -1.0 : 1.0; }

    static LatticeParams from_x(int n_sites, double x, SignConvention conv = SignConvention::Plain,
                                double y = 1.0);
    static LatticeParams from_c(int n_sites, double c, SignConvention conv = SignConvention::Plain,
                                double y = 1.0);
    // free (m, e_infty) pair for closed-form matrix work; x/c/v_f are filled
    // from m when |m| < 2, otherwise left NaN and the Virasoro layer rejects
    static LatticeParams raw(int n_sites, double m, double e_infty,
                             SignConvention conv = SignConvention::Plain, double y = 1.0);
};

double central_charge(double x);
double param_from_c(double c);  // positive root; requires c < 1
double loop_weight(double x, SignConvention conv);

}  // namespace atl
