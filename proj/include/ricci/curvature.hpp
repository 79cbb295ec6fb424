#pragma once

#include <stdexcept>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"
#include "ricci/transport.hpp"

namespace ricci {

// Lazy random-walk distribution: alpha at the center, (1-alpha)/deg at
// each neighbor.
struct AlphaDistribution {
    Vertex center;
    Rational alpha;
    MassVector masses;
};

AlphaDistribution mass_distribution(const Graph& g, Vertex x, const Rational& alpha);

struct ProbeValue {
    Rational alpha;
    Rational wasserstein;
};

struct EdgeCurvatureReport {
    Edge edge;
    Rational kappa;
    std::vector<ProbeValue> probes;
    TransportPlan plan;             // at the primary probe
    DualCertificate certificate;
    bool flat = false;
};

struct GraphCurvatureReport {
    std::vector<EdgeCurvatureReport> edges;  // sorted by edge
    bool is_ricci_flat = false;
    Rational min_kappa;
    Rational max_kappa;
    int flat_edge_count = 0;
};

// Raised when the two standard probes keep disagreeing after bisection
// toward alpha = 1; signals a violated linearity assumption rather than
// a silently averaged value.
struct ProbeDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact W(m_x^alpha, m_y^alpha) for an edge xy, with verified plan and
// certificate. Costs are full-graph distances restricted to the support
// union (all at most 3 since x ~ y).
struct WassersteinResult {
    Rational value;
    TransportPlan plan;
    DualCertificate certificate;
};

WassersteinResult wasserstein_edge(const Graph& g, Vertex x, Vertex y,
                                   const Rational& alpha);

EdgeCurvatureReport ricci_curvature(const Graph& g, Vertex x, Vertex y);

GraphCurvatureReport is_ricci_flat(const Graph& g, int jobs = 1);

struct ProfileRow {
    Rational alpha;
    Rational wasserstein;
    bool quotient_defined = false;  // false when alpha == 1
    Rational quotient;              // (1 - W) / (1 - alpha)
};

std::vector<ProfileRow> curvature_profile(const Graph& g, Vertex x, Vertex y,
                                          const std::vector<Rational>& alphas);

}  // namespace ricci
