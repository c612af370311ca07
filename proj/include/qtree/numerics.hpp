#pragma once

#include "qtree/spectral.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qtree::numerics {

/// Basis solutions of -y'' = lambda y on [0, 1] evaluated at x = 1:
/// s(0)=0, s'(0)=1; c(0)=1, c'(0)=0.
struct Basis {
    double s;
    double c;
};
Basis basis_at_one(double lambda);

/// Which function of lambda a matrix entry carries.
enum class EntryKind { One, S, C, MinusLambdaS };

struct SystemEntry {
    int row;
    int col;
    EntryKind kind;
    int coeff;
};

/// Homogeneous linear system for the per-edge coefficients (A_j, B_j) of
/// y_j = A_j s + B_j c after imposing every vertex condition. Edge j is
/// oriented away from the root; unknown A_j sits in column 2j, B_j in 2j+1.
struct VertexSystem {
    int size = 0;
    std::vector<SystemEntry> entries;
    /// One label per row, e.g. "pendant 4", "continuity 2", "kirchhoff 2".
    std::vector<std::string> row_labels;

    /// Dense row-major matrix at lambda.
    [[nodiscard]] std::vector<double> evaluate(double lambda) const;
};

/// Row order: pendant conditions, continuity chains of non-root interior
/// vertices, their Kirchhoff rows, then the root rows.
VertexSystem build_vertex_system(const RootedTree& rt, const ProblemSpec& spec);

struct DetResult {
    double value;
    /// max |U_ij| / max |A_ij| from the elimination.
    double growth;
};

/// Determinant by LU with partial pivoting.
DetResult det_dense(std::vector<double> a, int n);
DetResult det_oracle(const VertexSystem& vs, double lambda);

/// s(lambda,1)^e * P(c(lambda,1)).
double eval_charfn(const CharFn& f, double lambda);

enum class EigenSource { SFactor, PRoot };
std::string to_string(EigenSource s);

struct Eigenvalue {
    double lambda;
    int multiplicity;
    EigenSource source;
};

struct Spectrum {
    std::vector<Eigenvalue> eigenvalues;
};

/// The K smallest distinct zeros of s^e P(cos sqrt(lambda)) with their orders.
///
/// lambda = (k pi)^2, k >= 1, has order e + 2 m where m is the multiplicity
/// of z = (-1)^k in P (cos - (+-1) vanishes to second order there); lambda = 0
/// has order m(+1); each root z in (-1, 1) of multiplicity m gives the
/// values (+-arccos z + 2 pi k)^2 with order m. e = -1 is accepted only when
/// (z^2 - 1) divides P; otherwise ModeUnsupported.
Spectrum spectrum_from_charfn(const CharFn& f, int k);

struct RatioCheck {
    bool ok = false;
    double max_rel_dev = 0.0;
    int samples_used = 0;
};

/// Deterministic lambda samples, uniform in [lo, hi].
std::vector<double> sample_lambdas(int count, double lo, double hi, std::uint64_t seed);

inline constexpr double kRatioTolerance = 1e-6;

/// r(lambda) = det_oracle / (s^e P(c)) must be constant across samples.
/// Samples where either side is near a zero are skipped; if all are skipped a
/// fresh deterministic batch is drawn.
RatioCheck ratio_constancy_check(const VertexSystem& vs, const CharFn& f, const std::vector<double>& samples,
                                 double tolerance = kRatioTolerance);
RatioCheck ratio_constancy_check(const RootedTree& rt, const ProblemSpec& spec, const std::vector<double>& samples,
                                 double tolerance = kRatioTolerance);

}  // namespace qtree::numerics
