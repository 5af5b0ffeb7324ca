#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmetric/space.hpp"
#include "gmetric/tolerance.hpp"

namespace gmetric {

// The offending instance, reproducible by re-evaluation: the ordered tuple
// of the axiom instance (for the triangular axioms the last slot is the
// replaced term) plus the pivot element when one is involved.
struct AxiomWitness {
    std::vector<std::string> tuple;
    std::optional<std::string> pivot;
    double margin = 0.0; // amount by which the instance fails
};

struct AxiomEntry {
    std::string id;   // verbatim identifier, e.g. "(p-inq)", "(S_n-lbnd)"
    bool holds = true;
    bool representational = false; // holds by construction of the storage
    bool derived = false;          // implied row, not an independent axiom
    std::optional<AxiomWitness> witness;
};

struct AxiomReport {
    std::vector<AxiomEntry> entries;
    bool overall = true;

    const AxiomEntry* find(const std::string& id) const;
};

// Exhaustively evaluates every axiom instance of the declared kind,
// including the (n+1)-tuple instances of the triangular inequality.
// Witnesses are the first failures in lexicographic enumeration order.
AxiomReport check_axioms(const FiniteSpace& space, Tolerance tol = Tolerance());

// Axiom identifiers of a family, in report order.
std::vector<std::string> axiom_ids(Family family);

} // namespace gmetric
