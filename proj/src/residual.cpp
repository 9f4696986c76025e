#include "sfano/residual.hpp"

#include "sfano/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace sfano {

PlaneChart::PlaneChart(Matrix rows) : matrix_(std::move(rows)) {
    if (matrix_.rows() == 0 || matrix_.cols() == 0) throw InputError("plane matrix is empty");
    if (matrix_.rows() >= matrix_.cols()) throw InputError("a k-plane in P^n needs k < n");
    auto ech = matrix_.rref();
    if (ech.pivots.size() != matrix_.rows()) throw InputError("plane matrix must have full row rank");
    reduced_ = Matrix(matrix_.rows(), matrix_.cols(), matrix_.field());
    for (std::size_t i = 0; i < matrix_.rows(); ++i)
        for (std::size_t j = 0; j < matrix_.cols(); ++j) reduced_(i, j) = ech.reduced(i, j);
    pivots_ = ech.pivots;
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
        if (std::find(pivots_.begin(), pivots_.end(), j) == pivots_.end()) nonpivots_.push_back(j);
}

PlaneChart PlaneChart::coordinate(std::size_t ambient, const std::vector<std::size_t>& vanishing, const Field& field) {
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t j = 0; j < ambient; ++j) {
        if (std::find(vanishing.begin(), vanishing.end(), j) != vanishing.end()) continue;
        std::vector<Scalar> row(ambient, Scalar(0));
        row[j] = 1;
        rows.push_back(std::move(row));
    }
    return PlaneChart(Matrix(rows, field));
}

PlaneChart PlaneChart::parse(const std::string& text, const Field& field) {
    std::vector<std::vector<Scalar>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<Scalar> entries;
        std::stringstream es(row);
        std::string e;
        while (std::getline(es, e, ',')) {
            e.erase(std::remove_if(e.begin(), e.end(), [](unsigned char c) { return std::isspace(c); }), e.end());
            mpq_class q;
            if (e.empty() || q.set_str(e, 10) != 0) throw InputError("bad plane entry '" + e + "'");
            if (q.get_den() == 0) throw InputError("bad plane entry '" + e + "'");
            q.canonicalize();
            entries.push_back(field.from_rational(q));
        }
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) throw InputError("empty plane");
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) throw InputError("plane rows have different lengths");
    return PlaneChart(Matrix(rows, field));
}

std::vector<Scalar> PlaneChart::point(const std::vector<Scalar>& y) const {
    if (y.size() != k() + 1) throw InputError("plane point needs k + 1 coordinates");
    const Field& F = field();
    std::vector<Scalar> out(n() + 1, Scalar(0));
    for (std::size_t i = 0; i <= k(); ++i)
        for (std::size_t j = 0; j <= n(); ++j) out[j] = F.add(out[j], F.mul(y[i], reduced_(i, j)));
    return out;
}

std::vector<Scalar> PlaneChart::chart_direction(const std::vector<Scalar>& ambient) const {
    if (ambient.size() != n() + 1) throw InputError("ambient direction needs n + 1 entries");
    const Field& F = field();
    std::vector<Scalar> a;
    bool nonzero = false;
    for (auto q : nonpivots_) {
        Scalar v = ambient[q];
        for (std::size_t i = 0; i <= k(); ++i) v = F.sub(v, F.mul(ambient[pivots_[i]], reduced_(i, q)));
        nonzero = nonzero || !Field::is_zero(v);
        a.push_back(v);
    }
    if (!nonzero) throw InputError("direction lies in the plane");
    return a;
}

namespace {

std::string direction_name(const std::string& var) {
    std::size_t i = 0;
    while (i < var.size() && std::isalpha(static_cast<unsigned char>(var[i]))) ++i;
    const std::string rest = var.substr(i);
    if (!rest.empty() && std::isdigit(static_cast<unsigned char>(rest[0]))) return "a" + rest;
    return "a_" + var;
}

}  // namespace

ChartFrame::ChartFrame(PlaneChart p, RingPtr amb) : plane(std::move(p)), ambient(std::move(amb)) {
    if (ambient->size() != plane.n() + 1)
        throw InputError("plane has " + std::to_string(plane.n() + 1) + " columns but the ring has " +
                         std::to_string(ambient->size()) + " variables");
    if (!(ambient->field() == plane.field())) throw InputError("plane and polynomials use different fields");
    std::vector<std::string> pv;
    for (auto q : plane.pivots()) pv.push_back(ambient->name(q));
    for (auto q : plane.nonpivots()) direction_vars.push_back(direction_name(ambient->name(q)));
    std::vector<std::string> all = pv;
    all.push_back("t");
    all.insert(all.end(), direction_vars.begin(), direction_vars.end());
    if (std::set<std::string>(all.begin(), all.end()).size() != all.size())
        throw InputError("chart variable names clash with the ring's variables");
    plane_ring = make_ring(pv, ambient->field());
    chart_ring = make_ring(all, ambient->field());
}

namespace {

std::vector<Polynomial> chart_images(const ChartFrame& fr, const std::optional<std::vector<Scalar>>& direction,
                                     const RingPtr& target, bool with_normal) {
    const auto& pl = fr.plane;
    std::vector<Polynomial> images;
    for (std::size_t j = 0; j <= pl.n(); ++j) {
        Polynomial x(target);
        for (std::size_t i = 0; i <= pl.k(); ++i)
            if (!Field::is_zero(pl.reduced()(i, j)))
                x += Polynomial::variable(target, i).scaled(pl.reduced()(i, j));
        images.push_back(std::move(x));
    }
    if (!with_normal) return images;
    const Polynomial t = Polynomial::variable(target, "t");
    for (std::size_t m = 0; m < pl.nonpivots().size(); ++m) {
        const std::size_t q = pl.nonpivots()[m];
        Polynomial a = direction ? Polynomial::constant(target, (*direction)[m])
                                 : Polynomial::variable(target, fr.direction_vars[m]);
        images[q] += t * a;
    }
    return images;
}

std::vector<Scalar> normalize_direction(const PlaneChart& plane, const std::vector<Scalar>& d) {
    if (d.size() == plane.n() + 1) return plane.chart_direction(d);
    if (d.size() != plane.n() - plane.k()) throw InputError("direction needs n - k or n + 1 entries");
    if (std::all_of(d.begin(), d.end(), [](const Scalar& s) { return Field::is_zero(s); }))
        throw InputError("direction lies in the plane");
    std::vector<Scalar> out;
    for (const auto& s : d) out.push_back(plane.field().from_rational(s));
    return out;
}

std::vector<std::string> direction_labels(const ChartFrame& fr, const std::optional<std::vector<Scalar>>& d) {
    if (!d) return fr.direction_vars;
    std::vector<std::string> out;
    for (const auto& s : *d) out.push_back(Field::format(s));
    return out;
}

}  // namespace

Polynomial restrict_to_plane(const Polynomial& f, const ChartFrame& frame) {
    auto images = chart_images(frame, std::nullopt, frame.plane_ring, false);
    return substitute(f.embed(frame.ambient), images);
}

void require_contains(const Polynomial& f, const ChartFrame& frame) {
    Polynomial r = restrict_to_plane(f, frame);
    if (!r.is_zero()) throw InputError("plane is not contained in V(f): restriction " + r.to_string());
}

Polynomial chart_image(const Polynomial& f, const ChartFrame& frame, const std::optional<std::vector<Scalar>>& direction) {
    auto images = chart_images(frame, direction, frame.chart_ring, true);
    return substitute(f.embed(frame.ambient), images);
}

namespace {

ResidualResult residual_in_frame(const Polynomial& f, const ChartFrame& fr,
                                 const std::optional<std::vector<Scalar>>& dir) {
    require_contains(f, fr);
    Polynomial img = chart_image(f, fr, dir);
    const std::size_t t = fr.plane.k() + 1;
    std::vector<Term> quotient, at_zero;
    for (const auto& term : img.terms()) {
        if (term.monomial[t] == 0) throw VerificationError("chart image is not divisible by t", img.to_string());
        Monomial m = term.monomial;
        m.set(t, m[t] - 1);
        if (m[t] == 0) at_zero.push_back(Term{m, term.coeff});
        quotient.push_back(Term{std::move(m), term.coeff});
    }
    ResidualResult out{direction_labels(fr, dir), Polynomial(fr.chart_ring, std::move(quotient)),
                       Polynomial(fr.chart_ring, std::move(at_zero)), false};
    out.extension_contained = out.residual.is_zero();
    return out;
}

}  // namespace

ResidualResult residual(const Polynomial& f, const PlaneChart& plane, const std::optional<std::vector<Scalar>>& direction) {
    ChartFrame fr(plane, f.ring());
    std::optional<std::vector<Scalar>> dir;
    if (direction) dir = normalize_direction(plane, *direction);
    return residual_in_frame(f, fr, dir);
}

Polynomial first_order_formula(const Polynomial& f, const PlaneChart& plane,
                               const std::optional<std::vector<Scalar>>& direction) {
    ChartFrame fr(plane, f.ring());
    require_contains(f, fr);
    std::optional<std::vector<Scalar>> dir;
    if (direction) dir = normalize_direction(plane, *direction);
    auto images = chart_images(fr, std::nullopt, fr.chart_ring, false);
    Polynomial out(fr.chart_ring);
    for (std::size_t m = 0; m < plane.nonpivots().size(); ++m) {
        Polynomial restricted = substitute(partial_derivative(f, plane.nonpivots()[m]), images);
        Polynomial a = dir ? Polynomial::constant(fr.chart_ring, (*dir)[m])
                           : Polynomial::variable(fr.chart_ring, fr.direction_vars[m]);
        out += a * restricted;
    }
    return out;
}

ResidualCI residual_ci(const std::vector<Polynomial>& fs, const PlaneChart& plane,
                       const std::optional<std::vector<Scalar>>& direction) {
    if (fs.empty()) throw InputError("need at least one polynomial");
    ChartFrame fr(plane, fs.front().ring());
    std::optional<std::vector<Scalar>> dir;
    if (direction) dir = normalize_direction(plane, *direction);
    ResidualCI out;
    out.all_nonzero = true;
    out.extension_contained = true;
    for (const auto& f : fs) {
        if (!same_ring(f.ring(), fs.front().ring())) throw InputError("polynomials must share one ring");
        out.components.push_back(residual_in_frame(f, fr, dir));
        const bool zero = out.components.back().extension_contained;
        out.all_nonzero = out.all_nonzero && !zero;
        out.extension_contained = out.extension_contained && zero;
    }
    return out;
}

PsiMatrix psi_matrix(const std::vector<Polynomial>& fs, const PlaneChart& plane) {
    if (fs.empty()) throw InputError("need at least one polynomial");
    ChartFrame fr(plane, fs.front().ring());
    const std::size_t cols = plane.nonpivots().size();
    auto images = chart_images(fr, std::nullopt, fr.plane_ring, false);

    PsiMatrix out;
    out.column_labels = fr.direction_vars;
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t l = 0; l < fs.size(); ++l) {
        const auto& f = fs[l];
        if (!same_ring(f.ring(), fs.front().ring())) throw InputError("polynomials must share one ring");
        if (!f.is_homogeneous() || f.degree() < 1) throw InputError("psi needs homogeneous forms of positive degree");
        require_contains(f, fr);
        std::vector<Polynomial> restricted;
        for (auto q : plane.nonpivots()) restricted.push_back(substitute(partial_derivative(f, q), images));
        for (auto& m : monomials_of_degree(plane.k() + 1, static_cast<unsigned>(f.degree() - 1))) {
            std::vector<Scalar> row;
            for (std::size_t c = 0; c < cols; ++c) row.push_back(restricted[c].coefficient(m));
            rows.push_back(std::move(row));
            out.row_labels.push_back("f" + std::to_string(l) + ":" + format_monomial(*fr.plane_ring, m));
            out.rows.emplace_back(l, std::move(m));
        }
    }
    out.matrix = rows.empty() ? Matrix(0, cols, plane.field()) : Matrix(rows, plane.field());
    return out;
}

SurjectivityReport psi_surjective(const PsiMatrix& psi) {
    SurjectivityReport rep;
    rep.target_dimension = psi.matrix.rows();
    rep.rank = psi.matrix.rows() ? psi.matrix.rank() : 0;
    rep.surjective = rep.rank == rep.target_dimension;
    return rep;
}

}  // namespace sfano
