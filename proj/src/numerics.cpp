#include "qtree/numerics.hpp"

#include "qtree/errors.hpp"
#include "qtree/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace qtree::numerics {

Basis basis_at_one(double lambda) {
    if (std::abs(lambda) < 1e-4) {
        const double l2 = lambda * lambda;
        return {1.0 - lambda / 6.0 + l2 / 120.0 - l2 * lambda / 5040.0,
                1.0 - lambda / 2.0 + l2 / 24.0 - l2 * lambda / 720.0};
    }
    const double w = std::sqrt(std::abs(lambda));
    if (lambda > 0) return {std::sin(w) / w, std::cos(w)};
    return {std::sinh(w) / w, std::cosh(w)};
}

std::vector<double> VertexSystem::evaluate(double lambda) const {
    const Basis b = basis_at_one(lambda);
    std::vector<double> m(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0.0);
    for (const auto& e : entries) {
        double v = 1.0;
        switch (e.kind) {
            case EntryKind::One: v = 1.0; break;
            case EntryKind::S: v = b.s; break;
            case EntryKind::C: v = b.c; break;
            case EntryKind::MinusLambdaS: v = -lambda * b.s; break;
        }
        m[static_cast<std::size_t>(e.row) * static_cast<std::size_t>(size) + static_cast<std::size_t>(e.col)] +=
            e.coeff * v;
    }
    return m;
}

VertexSystem build_vertex_system(const RootedTree& rt, const ProblemSpec& spec) {
    const Tree& t = rt.tree;
    if (t.size() < 2) throw InputError("build_vertex_system: tree needs at least one edge");
    const Orientation o = orient(t, rt.root);

    // Edge index by child vertex; edge order follows the tree's edge list.
    std::vector<int> edge_of_child(static_cast<std::size_t>(t.size()), -1);
    {
        int j = 0;
        for (const auto& [a, b] : t.edges()) {
            const Vertex child = o.parent[static_cast<std::size_t>(b)] == a ? b : a;
            edge_of_child[static_cast<std::size_t>(child)] = j++;
        }
    }
    auto col_a = [](int j) { return 2 * j; };
    auto col_b = [](int j) { return 2 * j + 1; };
    auto outgoing = [&](Vertex v) {
        std::vector<int> out;
        for (Vertex w : t.neighbors(v)) {
            if (w != o.parent[static_cast<std::size_t>(v)]) out.push_back(edge_of_child[static_cast<std::size_t>(w)]);
        }
        return out;
    };

    VertexSystem vs;
    vs.size = 2 * (t.size() - 1);
    int row = 0;
    auto push = [&](int col, EntryKind kind, int coeff) { vs.entries.push_back({row, col, kind, coeff}); };

    // y_j(1) = A s + B c,  y_j'(1) = A c - B lambda s,  y_j(0) = B,  y_j'(0) = A.
    for (Vertex v = 0; v < t.size(); ++v) {
        if (v == rt.root || !t.is_pendant(v)) continue;
        const int j = edge_of_child[static_cast<std::size_t>(v)];
        if (spec.pendants == PendantMode::Dirichlet) {
            push(col_a(j), EntryKind::S, 1);
            push(col_b(j), EntryKind::C, 1);
        } else {
            push(col_a(j), EntryKind::C, 1);
            push(col_b(j), EntryKind::MinusLambdaS, 1);
        }
        vs.row_labels.push_back("pendant " + std::to_string(v));
        ++row;
    }
    std::vector<Vertex> inner;
    for (Vertex v = 0; v < t.size(); ++v) {
        if (v != rt.root && t.is_interior(v)) inner.push_back(v);
    }
    for (Vertex v : inner) {
        const int in = edge_of_child[static_cast<std::size_t>(v)];
        for (int k : outgoing(v)) {
            push(col_a(in), EntryKind::S, 1);
            push(col_b(in), EntryKind::C, 1);
            push(col_b(k), EntryKind::One, -1);
            vs.row_labels.push_back("continuity " + std::to_string(v));
            ++row;
        }
    }
    for (Vertex v : inner) {
        const int in = edge_of_child[static_cast<std::size_t>(v)];
        push(col_a(in), EntryKind::C, 1);
        push(col_b(in), EntryKind::MinusLambdaS, 1);
        for (int k : outgoing(v)) push(col_a(k), EntryKind::One, -1);
        vs.row_labels.push_back("kirchhoff " + std::to_string(v));
        ++row;
    }
    const auto out_root = outgoing(rt.root);
    if (spec.root == RootCondition::Dirichlet) {
        for (int k : out_root) {
            push(col_b(k), EntryKind::One, 1);
            vs.row_labels.push_back("root dirichlet");
            ++row;
        }
    } else {
        for (std::size_t i = 1; i < out_root.size(); ++i) {
            push(col_b(out_root[0]), EntryKind::One, 1);
            push(col_b(out_root[i]), EntryKind::One, -1);
            vs.row_labels.push_back("root continuity");
            ++row;
        }
        for (int k : out_root) push(col_a(k), EntryKind::One, 1);
        vs.row_labels.push_back("root kirchhoff");
        ++row;
    }
    if (row != vs.size) throw ConsistencyError("build_vertex_system: row count does not match 2g");
    return vs;
}

DetResult det_dense(std::vector<double> a, int n) {
    const auto N = static_cast<std::size_t>(n);
    double amax = 0.0;
    for (double v : a) amax = std::max(amax, std::abs(v));
    double umax = amax;
    double det = 1.0;
    for (std::size_t k = 0; k < N; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < N; ++i) {
            if (std::abs(a[i * N + k]) > std::abs(a[piv * N + k])) piv = i;
        }
        if (a[piv * N + k] == 0.0) return {0.0, amax > 0 ? umax / amax : 1.0};
        if (piv != k) {
            for (std::size_t c = 0; c < N; ++c) std::swap(a[k * N + c], a[piv * N + c]);
            det = -det;
        }
        const double p = a[k * N + k];
        det *= p;
        for (std::size_t i = k + 1; i < N; ++i) {
            const double f = a[i * N + k] / p;
            if (f == 0.0) continue;
            for (std::size_t c = k; c < N; ++c) {
                a[i * N + c] -= f * a[k * N + c];
                umax = std::max(umax, std::abs(a[i * N + c]));
            }
        }
    }
    return {det, amax > 0 ? umax / amax : 1.0};
}

DetResult det_oracle(const VertexSystem& vs, double lambda) { return det_dense(vs.evaluate(lambda), vs.size); }

double eval_charfn(const CharFn& f, double lambda) {
    const Basis b = basis_at_one(lambda);
    return std::pow(b.s, f.s_exp) * f.poly.eval(b.c);
}

std::string to_string(EigenSource s) { return s == EigenSource::SFactor ? "s-factor" : "P-root"; }

Spectrum spectrum_from_charfn(const CharFn& f, int count) {
    if (count < 1) throw InputError("spectrum: K must be at least 1");
    if (f.poly.is_zero()) throw InputError("spectrum: zero characteristic polynomial");
    if (f.s_exp < -1) throw ModeUnsupported("spectrum: s-exponent below -1");
    const IntPoly z2m1{-1, 0, 1};
    if (f.s_exp == -1) {
        try {
            (void)exact_div(f.poly, z2m1);
        } catch (const DivisionInexact&) {
            throw ModeUnsupported("spectrum: e = -1 requires (z^2 - 1) | P");
        }
    }
    const int m_plus = root_multiplicity(f.poly, 1);
    const int m_minus = root_multiplicity(f.poly, -1);
    IntPoly rest = f.poly;
    for (int i = 0; i < m_plus; ++i) rest = exact_div(rest, IntPoly{-1, 1});
    for (int i = 0; i < m_minus; ++i) rest = exact_div(rest, IntPoly{1, 1});

    constexpr double pi = std::numbers::pi;
    std::vector<Eigenvalue> all;
    if (m_plus > 0) all.push_back({0.0, m_plus, EigenSource::PRoot});
    for (int k = 1; k <= count + 1; ++k) {
        const int mult = f.s_exp + 2 * (k % 2 == 0 ? m_plus : m_minus);
        if (mult > 0) all.push_back({(k * pi) * (k * pi), mult, EigenSource::SFactor});
    }
    if (rest.degree() > 0) {
        for (const auto& r : real_roots(rest)) {
            if (r.value <= -1.0 || r.value >= 1.0) continue;
            const double theta = std::acos(r.value);
            for (int k = 0; k <= count + 1; ++k) {
                const double up = theta + 2 * pi * k;
                all.push_back({up * up, r.multiplicity, EigenSource::PRoot});
                if (k >= 1) {
                    const double down = 2 * pi * k - theta;
                    all.push_back({down * down, r.multiplicity, EigenSource::PRoot});
                }
            }
        }
    }
    std::sort(all.begin(), all.end(), [](const Eigenvalue& a, const Eigenvalue& b) { return a.lambda < b.lambda; });
    if (all.size() > static_cast<std::size_t>(count)) all.resize(static_cast<std::size_t>(count));
    return Spectrum{std::move(all)};
}

std::vector<double> sample_lambdas(int count, double lo, double hi, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        // 53 random bits, independent of the standard library's distributions.
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        out.push_back(lo + (hi - lo) * u);
    }
    return out;
}

RatioCheck ratio_constancy_check(const VertexSystem& vs, const CharFn& f, const std::vector<double>& samples,
                                 double tolerance) {
    double scale = 0.0;
    for (const auto& c : f.poly.coeffs()) scale += std::abs(c.get_d());
    std::vector<double> batch = samples;
    std::uint64_t reseed = 0x5eed;
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<double> ratios;
        for (double lambda : batch) {
            const Basis b = basis_at_one(lambda);
            if (f.s_exp != 0 && std::abs(b.s) < 1e-3) continue;
            const double pc = f.poly.eval(b.c);
            if (std::abs(pc) < 1e-7 * scale) continue;
            const double det = det_oracle(vs, lambda).value;
            if (det == 0.0) continue;
            ratios.push_back(det / (std::pow(b.s, f.s_exp) * pc));
        }
        if (!ratios.empty()) {
            std::vector<double> sorted = ratios;
            std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2),
                             sorted.end());
            const double ref = sorted[sorted.size() / 2];
            double dev = 0.0;
            for (double r : ratios) dev = std::max(dev, std::abs(r - ref) / std::abs(ref));
            return RatioCheck{dev <= tolerance, dev, static_cast<int>(ratios.size())};
        }
        const double lo = samples.empty() ? 0.1 : *std::min_element(samples.begin(), samples.end());
        const double hi = samples.empty() ? 40.0 : *std::max_element(samples.begin(), samples.end());
        batch = sample_lambdas(std::max<int>(20, static_cast<int>(samples.size())), lo, hi, reseed++);
    }
    return RatioCheck{false, 0.0, 0};
}

RatioCheck ratio_constancy_check(const RootedTree& rt, const ProblemSpec& spec, const std::vector<double>& samples,
                                 double tolerance) {
    return ratio_constancy_check(build_vertex_system(rt, spec), char_fn(rt, spec), samples, tolerance);
}

}  // namespace qtree::numerics
