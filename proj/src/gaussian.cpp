#include "lci/gaussian.hpp"

#include <cmath>

#include "lci/rng.hpp"

namespace lci {

GaussianModel make_gaussian(GroundSet ground, Eigen::MatrixXd factor) {
    const int n = ground.size();
    if (factor.rows() != n || factor.cols() != n) throw DomainError("factor must be n x n");
    // Scale-invariant singularity test: determinant of the row-normalized
    // matrix, so uniformly small factors are not rejected.
    Eigen::MatrixXd scaled = factor;
    for (int r = 0; r < n; ++r) {
        const double norm = scaled.row(r).norm();
        if (norm == 0.0) throw NumericalError("factor matrix has a zero row");
        scaled.row(r) /= norm;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(scaled);
    if (std::fabs(lu.determinant()) <= 1e-10) {
        throw NumericalError("factor matrix is numerically singular");
    }
    return GaussianModel{std::move(ground), std::move(factor)};
}

GaussianModel gaussian_from_tdag(const Tdag& g, std::uint64_t seed) {
    const int n = g.size();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
        const double mag = 0.5 + 0.5 * rng.next_double();
        a(i, i) = rng.next_double() < 0.5 ? mag : -mag;
        IndexSet anc = g.ancestral_set(i);
        anc.reset(i);
        for (int j : anc.members()) a(i, j) = rng.next_double(-1.0, 1.0);
    }
    return make_gaussian(g.vertices(), std::move(a));
}

namespace {
Eigen::MatrixXd select_rows(const Eigen::MatrixXd& a, const IndexSet& i) {
    const auto mem = i.members();
    Eigen::MatrixXd out(static_cast<Eigen::Index>(mem.size()), a.cols());
    for (size_t r = 0; r < mem.size(); ++r) out.row(static_cast<Eigen::Index>(r)) = a.row(mem[r]);
    return out;
}

/// (A_K A_K^T)^{-1} via pivoted LU; rank decided at 1e-10 * ||A_K||.
Eigen::MatrixXd gram_inverse(const Eigen::MatrixXd& rows) {
    Eigen::MatrixXd gram = rows * rows.transpose();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
    lu.setThreshold(1e-10 * std::max(1.0, rows.norm()));
    if (lu.rank() < gram.rows()) throw NumericalError("rank-deficient row selection");
    return lu.inverse();
}
} // namespace

Eigen::MatrixXd projector(const GaussianModel& m, const IndexSet& i) {
    const int n = m.ground.size();
    if (i.universe_size() != n) throw DomainError("index set over wrong ground set");
    if (i.empty()) return Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd rows = select_rows(m.factor, i);
    return rows.transpose() * gram_inverse(rows) * rows;
}

Eigen::MatrixXd q_projector(const GaussianModel& m, const IndexSet& i) {
    return Eigen::MatrixXd::Identity(m.ground.size(), m.ground.size()) - projector(m, i);
}

GaussianCiReport check_gaussian_ci(const GaussianModel& m, const CiStatement& s, double tol) {
    if (tol <= 0) throw DomainError("tolerance must be positive");
    const IndexSet setI = s.a.set_union(s.c);
    const IndexSet setJ = s.b.set_union(s.c);
    const IndexSet& setK = s.c;

    const Eigen::MatrixXd ai = select_rows(m.factor, setI);
    const Eigen::MatrixXd aj = select_rows(m.factor, setJ);

    Eigen::MatrixXd schur;
    if (setK.empty()) {
        schur = ai * aj.transpose();
    } else {
        const Eigen::MatrixXd ak = select_rows(m.factor, setK);
        schur = ai * aj.transpose() -
                ai * ak.transpose() * gram_inverse(ak) * ak * aj.transpose();
    }

    const Eigen::MatrixXd pi = projector(m, setI);
    const Eigen::MatrixXd pj = projector(m, setJ);
    const Eigen::MatrixXd pk = projector(m, setK);
    const Eigen::MatrixXd commutator = pi * pj - pj * pi;
    const Eigen::MatrixXd partial =
        pi * (Eigen::MatrixXd::Identity(m.ground.size(), m.ground.size()) - pk) * pj;

    GaussianCiReport report;
    report.schur_deviation = schur.cwiseAbs().maxCoeff();
    report.commutator_deviation = commutator.cwiseAbs().maxCoeff();
    report.partial_deviation = partial.cwiseAbs().maxCoeff();
    const bool ok_schur = report.schur_deviation < tol;
    const bool ok_comm = report.commutator_deviation < tol;
    const bool ok_part = report.partial_deviation < tol;
    if (ok_schur != ok_comm || ok_comm != ok_part) {
        throw ContractViolation("Schur, commutator and partial-projector CI checks disagree");
    }
    report.pass = ok_schur;
    return report;
}

std::vector<int> projector_spectrum(const GaussianModel& m, const IndexSet& i, double tol) {
    const Eigen::MatrixXd p = projector(m, i);
    const int n = m.ground.size();
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (r != c && std::fabs(p(r, c)) > tol) {
                throw NumericalError("projector is not diagonal within tolerance");
            }
        }
    }
    std::vector<int> diag(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
        const double v = p(r, r);
        if (std::fabs(v - std::round(v)) > tol) {
            throw NumericalError("projector diagonal is not near-integer");
        }
        diag[static_cast<size_t>(r)] = static_cast<int>(std::lround(v));
    }
    return diag;
}

} // namespace lci
