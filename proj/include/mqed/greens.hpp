// greens.hpp — projected imaginary-part Green's-function providers
//
// A provider answers M_ab(w) = n_a . Im G(r_a, r_b, w) . n_b in 1/m between any
// pair of registered points for any frequency in its validity range. Providers
// are immutable after construction; evaluation is pure and thread-safe.

#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mqed/errors.hpp"

namespace mqed::greens {

struct PointSpec {
    std::string name;
    Eigen::Vector3d position_nm = Eigen::Vector3d::Zero();
    Eigen::Vector3d orientation = Eigen::Vector3d::UnitZ();  // unit vector, |n| = 1 within 1e-12
};

// Projected Im G of the homogeneous medium with background refractive index n_bg,
// in 1/m. Uses a series expansion below kR = 1e-3 to avoid cancellation; the
// coincident-point limit is finite: n.n' * k/(6 pi).
double free_space_im_g(const Eigen::Vector3d& r_nm, const Eigen::Vector3d& rp_nm,
                       const Eigen::Vector3d& n, const Eigen::Vector3d& np,
                       double omega_ev, double n_bg = 1.0);

class GreensProvider {
public:
    virtual ~GreensProvider() = default;

    const std::vector<PointSpec>& points() const { return points_; }
    std::size_t point_count() const { return points_.size(); }
    std::size_t point_index(const std::string& name) const;

    // n_a . Im G(r_a, r_b, w) . n_b in 1/m; symmetric in (a, b)
    double projected_im_g(std::size_t a, std::size_t b, double omega_ev) const;

    // validity interval in eV (open-ended for analytic providers)
    virtual std::pair<double, double> omega_range() const;

    // non-fatal issues recorded at construction (tabulated PSD violations, ...)
    const std::vector<std::string>& warnings() const { return warnings_; }

protected:
    explicit GreensProvider(std::vector<PointSpec> points);
    virtual double evaluate(std::size_t a, std::size_t b, double omega_ev) const = 0;

    std::vector<PointSpec> points_;
    std::vector<std::string> warnings_;
};

class FreeSpaceProvider final : public GreensProvider {
public:
    FreeSpaceProvider(std::vector<PointSpec> points, double refractive_index = 1.0);
    double refractive_index() const { return n_bg_; }

private:
    double evaluate(std::size_t a, std::size_t b, double omega_ev) const override;
    double n_bg_;
};

// One resonance of a parametric model: Im G_ab(w) = sum_t A_ab,t * (w0/w)^2 * l_t(w)
// with l_t a unit-peak Lorentzian of FWHM kappa. The (w0/w)^2 factor makes the
// resulting spectral density J(w) an exact Lorentzian, which is what the term's
// (center, kappa) parameters describe; at w = w0 the value is A_ab exactly.
struct LorentzianTerm {
    double center_ev = 0.0;
    double kappa_ev = 0.0;            // FWHM, > 0
    Eigen::MatrixXd amplitude_per_m;  // symmetric, PSD on the emitter block
};

class LorentzianProvider final : public GreensProvider {
public:
    LorentzianProvider(std::vector<PointSpec> points, std::vector<LorentzianTerm> terms);
    const std::vector<LorentzianTerm>& terms() const { return terms_; }
    double max_kappa_ev() const;

private:
    double evaluate(std::size_t a, std::size_t b, double omega_ev) const override;
    std::vector<LorentzianTerm> terms_;
};

enum class Interpolation { linear, monotone_cubic };

class TabulatedProvider final : public GreensProvider {
public:
    // grid strictly increasing; samples[p] holds the column for flattened pair p
    TabulatedProvider(std::vector<PointSpec> points, Eigen::VectorXd omega_grid_ev,
                      std::vector<Eigen::VectorXd> pair_samples_per_m,
                      Interpolation interpolation = Interpolation::monotone_cubic);

    std::pair<double, double> omega_range() const override;
    Interpolation interpolation() const { return interp_; }

private:
    double evaluate(std::size_t a, std::size_t b, double omega_ev) const override;
    std::size_t pair_slot(std::size_t a, std::size_t b) const;
    void build_slopes();

    Eigen::VectorXd grid_;
    std::vector<Eigen::VectorXd> samples_;  // one vector per a<=b pair, row-major upper triangle
    std::vector<Eigen::VectorXd> slopes_;   // pchip derivative values per pair
    Interpolation interp_;
};

// Parse the tabulated Green file format: UTF-8 CSV, '#' comments, header
// `omega_ev,img_<a>_<b>,...` with only a<=b pairs, strictly increasing
// frequency rows. Point orientations/positions are not part of the format;
// callers needing geometry attach it separately.
std::shared_ptr<TabulatedProvider> load_tabulated(std::istream& in,
                                                  Interpolation interpolation = Interpolation::monotone_cubic);
std::shared_ptr<TabulatedProvider> load_tabulated_file(const std::string& path,
                                                       Interpolation interpolation = Interpolation::monotone_cubic);

}  // namespace mqed::greens
