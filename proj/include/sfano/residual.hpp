#ifndef SFANO_RESIDUAL_HPP
#define SFANO_RESIDUAL_HPP

#include "sfano/matrix.hpp"
#include "sfano/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sfano {

// A k-plane in P^n given by a full-rank (k+1) x (n+1) matrix. The reduced
// row echelon form fixes the standard chart: plane coordinates are the
// pivot coordinates, directions run over the non-pivot unit vectors.
class PlaneChart {
public:
    explicit PlaneChart(Matrix rows);
    // The plane where the listed coordinates vanish.
    static PlaneChart coordinate(std::size_t ambient, const std::vector<std::size_t>& vanishing,
                                 const Field& field = Field::rationals());
    // "r0c0,r0c1,...;r1c0,..." with rational entries.
    static PlaneChart parse(const std::string& text, const Field& field);

    std::size_t k() const { return matrix_.rows() - 1; }
    std::size_t n() const { return matrix_.cols() - 1; }
    const Field& field() const { return matrix_.field(); }
    const Matrix& matrix() const { return matrix_; }
    const Matrix& reduced() const { return reduced_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::vector<std::size_t>& nonpivots() const { return nonpivots_; }

    // sum_i y_i * reduced row i
    std::vector<Scalar> point(const std::vector<Scalar>& y) const;
    // Chart coordinates (a_m over the non-pivots) of an ambient direction,
    // i.e. the direction modulo the plane. Throws if it lies in the plane.
    std::vector<Scalar> chart_direction(const std::vector<Scalar>& ambient) const;

private:
    Matrix matrix_, reduced_;
    std::vector<std::size_t> pivots_, nonpivots_;
};

// Variables of the standard chart around a plane, for a given ambient ring:
// plane coordinates carry the pivot names, t is the normal coordinate, and
// a<j> is the direction along ambient coordinate j.
struct ChartFrame {
    PlaneChart plane;
    RingPtr ambient;
    RingPtr plane_ring;                    // pivot variables
    RingPtr chart_ring;                    // pivot variables, t, direction variables
    std::vector<std::string> direction_vars;

    ChartFrame(PlaneChart plane, RingPtr ambient);
};

// f restricted to the plane, in plane_ring.
Polynomial restrict_to_plane(const Polynomial& f, const ChartFrame& frame);
// Throws InputError carrying the restriction if f does not vanish on the plane.
void require_contains(const Polynomial& f, const ChartFrame& frame);

// f(sum y_i R_i + t * sum a_m e_m) in chart_ring; `direction` (chart
// coordinates) replaces the symbolic a's when given.
Polynomial chart_image(const Polynomial& f, const ChartFrame& frame,
                       const std::optional<std::vector<Scalar>>& direction = std::nullopt);

struct ResidualResult {
    std::vector<std::string> direction;  // variable names or values
    Polynomial residual;                 // g with t*g = f on the chart
    Polynomial restriction;              // g at t = 0
    bool extension_contained = false;    // g == 0: span(plane, direction) lies in V(f)
};

// `direction` may have n - k entries (chart coordinates) or n + 1 (ambient).
ResidualResult residual(const Polynomial& f, const PlaneChart& plane,
                        const std::optional<std::vector<Scalar>>& direction = std::nullopt);
Polynomial first_order_formula(const Polynomial& f, const PlaneChart& plane,
                               const std::optional<std::vector<Scalar>>& direction = std::nullopt);

struct ResidualCI {
    std::vector<ResidualResult> components;
    bool all_nonzero = false;
    bool extension_contained = false;  // every residual is zero
};

ResidualCI residual_ci(const std::vector<Polynomial>& fs, const PlaneChart& plane,
                       const std::optional<std::vector<Scalar>>& direction = std::nullopt);

struct PsiMatrix {
    Matrix matrix;
    std::vector<std::pair<std::size_t, Monomial>> rows;  // (component, monomial in the plane variables)
    std::vector<std::string> row_labels;
    std::vector<std::string> column_labels;  // direction variables
};

PsiMatrix psi_matrix(const std::vector<Polynomial>& fs, const PlaneChart& plane);

struct SurjectivityReport {
    bool surjective = false;
    std::size_t rank = 0;
    std::size_t target_dimension = 0;
};

SurjectivityReport psi_surjective(const PsiMatrix& psi);

}  // namespace sfano

#endif
