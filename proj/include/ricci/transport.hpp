#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

// Finitely supported probability distribution with exact masses.
// Entries are kept sorted by vertex; zero masses are dropped.
class MassVector {
public:
    MassVector() = default;
    explicit MassVector(std::vector<std::pair<Vertex, Rational>> entries);

    const std::vector<std::pair<Vertex, Rational>>& entries() const { return entries_; }
    Rational mass(Vertex v) const;
    Rational total() const;
    bool is_probability() const { return total() == 1; }
    std::vector<Vertex> support() const;

private:
    std::vector<std::pair<Vertex, Rational>> entries_;
};

struct TransportMove {
    Vertex from;
    Vertex to;
    Rational amount;
};

struct TransportPlan {
    std::vector<TransportMove> moves;
    Rational cost;
};

struct DualCertificate {
    // 1-Lipschitz potential per vertex in the union of supports.
    std::map<Vertex, Rational> potential;
    Rational objective;
};

struct TransportSolution {
    TransportPlan plan;
    DualCertificate certificate;
};

// Integer cost of shipping one unit from u to v. Must be nonnegative and
// defined on the union of supports (the curvature module passes graph
// distances, which additionally make it a metric).
using CostFn = std::function<int(Vertex, Vertex)>;

// Exact transportation solve: masses are scaled to integers over their
// least common denominator, the integral problem is solved by successive
// shortest augmenting paths with potentials, and the result is divided
// back. The certificate potential is recovered from the optimal plan via
// the tight/feasible difference constraints, so for metric costs it is
// 1-Lipschitz on the whole support union.
//
// Throws std::invalid_argument when a mass vector does not sum to 1 or a
// cost is negative.
TransportSolution solve_transport(const MassVector& supply, const MassVector& demand,
                                  const CostFn& cost);

// Independent feasibility/optimality re-checks. Neither trusts solver
// internals; on failure `reason` (when given) receives a diagnostic.
bool verify_plan(const TransportPlan& plan, const MassVector& supply,
                 const MassVector& demand, const CostFn& cost,
                 std::string* reason = nullptr);
bool verify_certificate(const DualCertificate& cert, const MassVector& supply,
                        const MassVector& demand, const CostFn& distance,
                        std::string* reason = nullptr);

}  // namespace ricci
