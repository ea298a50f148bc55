#include "dengue/stability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "dengue/errors.hpp"

namespace dengue {

std::string to_string(EquilibriumSet s)
{
    switch (s) {
    case EquilibriumSet::E0: return "E0";
    case EquilibriumSet::E1: return "E1";
    case EquilibriumSet::Eprime: return "Eprime";
    case EquilibriumSet::Ehat0: return "Ehat0";
    case EquilibriumSet::Ehat1: return "Ehat1";
    }
    return "?";
}

std::string to_string(Classification c)
{
    switch (c) {
    case Classification::AsymptoticallyStable: return "AsymptoticallyStable";
    case Classification::Stable: return "Stable";
    case Classification::Unstable: return "Unstable";
    case Classification::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string to_string(Scope s) { return s == Scope::Full6 ? "full6" : "mosquito2"; }

namespace {

void check_h(double h_star)
{
    if (!(h_star >= 0.0 && h_star <= 1.0)) throw DomainError("h_star must lie in [0, 1]");
}

void require_unit_Q0(const NondimParams& n, double tol_Q, const char* what)
{
    const double Q0 = basic_offspring(n);
    if (!(std::abs(Q0 - 1.0) < tol_Q)) {
        std::ostringstream os;
        os << what << " exists only when Q0 = 1 (|Q0 - 1| = " << std::abs(Q0 - 1.0) << " >= " << tol_Q << ")";
        throw DomainError(os.str());
    }
}

double u_of_v(const NondimParams& n, double v_star) { return v_star * n.gamma / (n.k * n.mu1); }

}  // namespace

HomogState EquilibriumDescriptor::homog_point() const
{
    if (set == EquilibriumSet::Ehat0 || set == EquilibriumSet::Ehat1) {
        throw DomainError("traveling-wave equilibria have no homogeneous point; use wave_point");
    }
    return {u_star, 0.0, v_star, h_star, 0.0, 1.0 - h_star};
}

WaveState EquilibriumDescriptor::wave_point(double c) const
{
    WaveState s;
    s.Phi1 = u_star;
    s.Phi3 = v_star;
    s.Phi4 = h_star;
    s.Phi6 = 1.0 - h_star;
    s.c = c;
    return s;
}

EquilibriumDescriptor make_E0(double h_star)
{
    check_h(h_star);
    return {EquilibriumSet::E0, h_star, 0.0, 0.0};
}

EquilibriumDescriptor make_E1(const NondimParams& n, double h_star, double v_star, double tol_Q)
{
    check_h(h_star);
    if (!(v_star > 0.0)) throw DomainError("E1 points need v_star > 0");
    require_unit_Q0(n, tol_Q, "E1");
    return {EquilibriumSet::E1, h_star, v_star, u_of_v(n, v_star)};
}

EquilibriumDescriptor make_Eprime(const NondimParams& n, double v_star, double tol_Q)
{
    if (!(v_star >= 0.0)) throw DomainError("Eprime points need v_star >= 0");
    if (v_star > 0.0) require_unit_Q0(n, tol_Q, "a nonzero Eprime point");
    return {EquilibriumSet::Eprime, 1.0, v_star, u_of_v(n, v_star)};
}

EquilibriumDescriptor make_Ehat0(double h_star)
{
    check_h(h_star);
    return {EquilibriumSet::Ehat0, h_star, 0.0, 0.0};
}

EquilibriumDescriptor make_Ehat1(const NondimParams& n, double h_star, double v_star, double tol_Q)
{
    check_h(h_star);
    if (!(v_star > 0.0)) throw DomainError("Ehat1 points need v_star > 0");
    require_unit_Q0(n, tol_Q, "Ehat1");
    return {EquilibriumSet::Ehat1, h_star, v_star, u_of_v(n, v_star)};
}

bool EquilibriumSets::contains(EquilibriumSet s) const
{
    return std::find(sets.begin(), sets.end(), s) != sets.end();
}

EquilibriumSets equilibria(const NondimParams& n, const ModelVariant& m, double tol_Q)
{
    if (m.tag != Variant::Malthus2 && !(m.tag == Variant::Family && m.epsilon == 0.0)) {
        throw NotImplementedError("equilibrium sets are only derived for the eps = 0 Malthusian model, not " +
                                  m.name());
    }
    if (n.mu3 != 0.0) throw NotImplementedError("equilibrium sets are only derived for mu3 = 0");
    EquilibriumSets out;
    out.Q0 = basic_offspring(n);
    out.det_A = 1.0 - out.Q0;
    out.sets.push_back(EquilibriumSet::E0);
    if (std::abs(out.Q0 - 1.0) < tol_Q) out.sets.push_back(EquilibriumSet::E1);
    return out;
}

namespace {

void require_homog_descriptor(const EquilibriumDescriptor& p, const NondimParams& n)
{
    if (p.set != EquilibriumSet::E0 && p.set != EquilibriumSet::E1) {
        throw DomainError("homogeneous Jacobian requested for " + to_string(p.set) + " descriptor");
    }
    if (n.mu3 != 0.0 || n.epsilon != 0.0) {
        throw DomainError("closed-form Jacobians assume mu3 = 0 and eps = 0");
    }
    if (p.set == EquilibriumSet::E1) {
        require_unit_Q0(n, kTolQ, "E1");
        const double u = u_of_v(n, p.v_star);
        if (std::abs(u - p.u_star) > 1e-12 * std::max(1.0, std::abs(u))) {
            throw DomainError("E1 descriptor does not match parameters: u* != v* gamma / (k mu1)");
        }
    }
}

}  // namespace

Matrix6 jacobian_homog(const EquilibriumDescriptor& p, const NondimParams& n)
{
    require_homog_descriptor(p, n);
    const double b2h = n.beta2 * p.h_star;
    const double b1u = n.beta1 * p.u_star;  // zero on E0
    Matrix6 J = Matrix6::Zero();
    J(0, 0) = -n.mu1;
    J(0, 2) = n.gamma / n.k;
    J(0, 4) = -b1u;
    J(1, 1) = -n.mu1;
    J(1, 4) = b1u;
    J(2, 0) = n.k;
    J(2, 1) = n.k;
    J(2, 2) = -(n.gamma + n.mu2);
    J(3, 1) = -b2h;
    J(4, 1) = b2h;
    J(4, 4) = -n.sigma;
    J(5, 4) = n.sigma;
    return J;
}

std::vector<Poly> char_factors_homog(const EquilibriumDescriptor& p, const NondimParams& n)
{
    require_homog_descriptor(p, n);
    const double trace_uv = n.gamma + n.mu1 + n.mu2;
    // μ₁(γ+μ₂)(1 - Q₀), written without forming Q₀.
    const double const_uv = n.mu1 * (n.gamma + n.mu2) - n.gamma;
    const Poly lambda_sq{0.0, 0.0, 1.0};
    const Poly P_uv{const_uv, trace_uv, 1.0};
    if (p.set == EquilibriumSet::E0) {
        return {lambda_sq, Poly{n.mu1, 1.0}, Poly{n.sigma, 1.0}, P_uv};
    }
    const double const_wI = n.mu1 * n.sigma - n.beta1 * n.beta2 * p.u_star * p.h_star;
    return {lambda_sq, P_uv, Poly{const_wI, n.mu1 + n.sigma, 1.0}};
}

Spectrum closed_form_spectrum(std::vector<Poly> factors)
{
    Spectrum s;
    s.source = SpectrumSource::ClosedForm;
    for (const auto& f : factors) {
        auto r = f.roots();
        s.eigenvalues.insert(s.eigenvalues.end(), r.begin(), r.end());
    }
    s.factors = std::move(factors);
    return s;
}

Spectrum dense_spectrum(const Eigen::MatrixXd& J)
{
    Eigen::EigenSolver<Eigen::MatrixXd> es(J, false);
    if (es.info() != Eigen::Success) throw NumericalError("dense eigenvalue solver did not converge");
    Spectrum s;
    s.source = SpectrumSource::DenseSolver;
    const auto& ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) s.eigenvalues.push_back(ev[i]);
    return s;
}

double spectrum_distance(const Eigenvalues& a, const Eigenvalues& b)
{
    if (a.size() != b.size()) throw DomainError("spectra have different sizes");
    const std::size_t n = a.size();
    if (n == 0) return 0.0;
    if (n > 16) throw NotImplementedError("spectrum matching limited to 16 eigenvalues");
    // Bottleneck assignment by dynamic programming over subsets of b.
    const std::size_t full = std::size_t{1} << n;
    std::vector<double> best(full, std::numeric_limits<double>::infinity());
    best[0] = 0.0;
    for (std::size_t mask = 0; mask < full; ++mask) {
        if (!std::isfinite(best[mask])) continue;
        const auto i = static_cast<std::size_t>(std::popcount(mask));
        if (i >= n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (std::size_t{1} << j)) continue;
            const double cost = std::max(best[mask], std::abs(a[i] - b[j]));
            auto& slot = best[mask | (std::size_t{1} << j)];
            slot = std::min(slot, cost);
        }
    }
    return best[full - 1];
}

Matrix2 mosquito_jacobian(const NondimParams& n)
{
    Matrix2 J;
    J << -n.mu1, n.gamma / n.k, n.k, -(n.gamma + n.mu2);
    return J;
}

MosquitoSpectrum mosquito_jacobian_spectrum(const NondimParams& n, MosquitoConstant form)
{
    const double Q0 = basic_offspring(n);
    const double s = n.gamma + n.mu1 + n.mu2;
    MosquitoSpectrum out;
    out.form = form;
    out.constant_direct = n.mu1 * (n.gamma + n.mu2) - n.gamma;
    out.constant_printed = -n.mu1 * (n.gamma + n.mu1) * (Q0 - 1.0);
    const double a0 = form == MosquitoConstant::CharacteristicPolynomial ? out.constant_direct : out.constant_printed;

    // λ = ½[-s ± √(s² - 4a₀)]; the discriminant is positive whenever a₀ < s²/4.
    const Poly P{a0, s, 1.0};
    out.closed_form = closed_form_spectrum({P});
    out.dense = dense_spectrum(mosquito_jacobian(n));
    out.mismatch = spectrum_distance(out.closed_form.eigenvalues, out.dense.eigenvalues);
    return out;
}

namespace {

double max_real(const Eigenvalues& ev, std::complex<double>* arg)
{
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& z : ev) {
        if (z.real() > best) {
            best = z.real();
            if (arg) *arg = z;
        }
    }
    return best;
}

double zero_tolerance(const Eigenvalues& ev)
{
    double scale = 1.0;
    for (const auto& z : ev) scale = std::max(scale, std::abs(z));
    return 1e-12 * scale;
}

std::string fmt(double x)
{
    std::ostringstream os;
    os << std::setprecision(8) << x;
    return os.str();
}

std::string fmt(std::complex<double> z)
{
    std::ostringstream os;
    os << std::setprecision(10) << "(" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

}  // namespace

StabilityReport classify(const EquilibriumDescriptor& p, const NondimParams& n, Scope scope)
{
    StabilityReport rep;
    rep.scope = scope;
    rep.set = p.set;
    rep.Q0 = basic_offspring(n);

    if (scope == Scope::Mosquito2) {
        if (p.set != EquilibriumSet::Eprime) {
            throw DomainError("mosquito2 scope needs an Eprime descriptor, got " + to_string(p.set));
        }
        const auto ms = mosquito_jacobian_spectrum(n);
        rep.eigenvalues = ms.closed_form.eigenvalues;
        const double gap = std::abs(ms.constant_direct - ms.constant_printed);
        if (gap > 1e-12 * (n.mu1 * (n.gamma + n.mu2) + n.gamma)) {
            rep.notes.push_back("published constant term mu1(gamma+mu1)(Q0-1) differs from det(lambda I - J) by " +
                                fmt(gap) + "; eigenvalues use det(lambda I - J)");
        }
        std::complex<double> lead;
        const double re = max_real(rep.eigenvalues, &lead);
        const double tol = zero_tolerance(rep.eigenvalues);
        rep.witness_eigenvalue = lead;
        if (re > tol) {
            rep.classification = Classification::Unstable;
            rep.witness = "Q0 = " + fmt(rep.Q0) + " > 1; eigenvalue " + fmt(lead) + " has positive real part";
        } else if (re < -tol) {
            rep.classification = Classification::AsymptoticallyStable;
            rep.witness = "Q0 = " + fmt(rep.Q0) + " < 1; all eigenvalues have negative real part (Routh-Hurwitz)";
        } else {
            // The mosquito plane is linear, so a simple zero eigenvalue with the
            // other one negative gives (non-asymptotic) stability.
            rep.classification = Classification::Stable;
            rep.witness = "Q0 = 1; eigenvalues {0, " + fmt(-(n.gamma + n.mu1 + n.mu2)) +
                          "} of a linear system";
        }
        return rep;
    }

    if (p.set != EquilibriumSet::E0 && p.set != EquilibriumSet::E1) {
        throw DomainError("full6 scope needs an E0 or E1 descriptor, got " + to_string(p.set));
    }
    const auto spec = closed_form_spectrum(char_factors_homog(p, n));
    rep.eigenvalues = spec.eigenvalues;
    if (p.set == EquilibriumSet::E1) rep.R0 = basic_reproduction(n, p.v_star, p.h_star).R0;

    std::complex<double> lead;
    const double re = max_real(rep.eigenvalues, &lead);
    const double tol = zero_tolerance(rep.eigenvalues);
    if (re > tol) {
        rep.classification = Classification::Unstable;
        rep.witness_eigenvalue = lead;
        if (p.set == EquilibriumSet::E0) {
            rep.witness = "Q0 = " + fmt(rep.Q0) + " > 1; eigenvalue " + fmt(lead) + " has positive real part";
        } else {
            rep.witness = "Q0 = 1, R0 = " + fmt(*rep.R0) + " > 1; eigenvalue " + fmt(lead) +
                          " has positive real part";
        }
    } else if (re < -tol) {
        rep.classification = Classification::AsymptoticallyStable;
        rep.witness_eigenvalue = lead;
        rep.witness = "all eigenvalues have negative real part";
    } else {
        rep.classification = Classification::Inconclusive;
        rep.witness_eigenvalue = std::complex<double>(0.0, 0.0);
        rep.witness = "zero eigenvalue with nonlinear center directions; linearization does not decide";
    }
    return rep;
}

std::string to_text(const StabilityReport& r)
{
    std::ostringstream os;
    os << "classification: " << to_string(r.classification) << "\n";
    os << "scope: " << to_string(r.scope) << "\n";
    os << "equilibrium_set: " << to_string(r.set) << "\n";
    os << "Q0: " << fmt(r.Q0) << "\n";
    if (r.R0) os << "R0: " << fmt(*r.R0) << "\n";
    os << "eigenvalues:";
    for (const auto& z : r.eigenvalues) os << " " << fmt(z);
    os << "\n";
    if (r.witness_eigenvalue) os << "witness_eigenvalue: " << fmt(*r.witness_eigenvalue) << "\n";
    os << "witness: " << r.witness << "\n";
    for (const auto& note : r.notes) os << "note: " << note << "\n";
    return os.str();
}

}  // namespace dengue
