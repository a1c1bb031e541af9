#pragma once

#include "tlab/ext_rational.hpp"
#include "tlab/psl2z.hpp"

#include <vector>

namespace tlab {

// One arc of a PPSL(2,Z) element: the matrix acts on [from, next from) in
// the positive circle orientation.
struct Arc {
    ExtRational from;
    PSL2Z matrix;

    bool operator==(const Arc&) const = default;
};

// Orientation-preserving homeomorphism of R u {inf} which is piecewise in
// PSL(2,Z) with finitely many rational breakpoints.
//
// Canonical form: adjacent arcs with equal matrices are merged (so the
// stored breakpoints are exactly the points with no neighbourhood on which
// the map is a single Moebius transformation), and the arc list starts at
// the canonical first point (inf if present, else the smallest rational).
// A breakpoint-free element is stored as a single arc from inf. Continuity
// at every breakpoint and global bijectivity are machine-checked on
// construction.
class PPSLMap {
public:
    PPSLMap() : arcs_{Arc{ExtRational::infinity(), PSL2Z()}} {}
    explicit PPSLMap(std::vector<Arc> arcs);

    static PPSLMap single(const PSL2Z& m) { return PPSLMap({Arc{ExtRational::infinity(), m}}); }

    const std::vector<Arc>& arcs() const { return arcs_; }
    bool is_identity() const { return arcs_.size() == 1 && arcs_[0].matrix.is_identity(); }

    // Breakpoints after canonical merging; empty for a single-matrix element.
    std::vector<ExtRational> breakpoints() const;

    const PSL2Z& matrix_at(const ExtRational& x) const;

    ExtRational operator()(const ExtRational& x) const { return matrix_at(x)(x); }

    PPSLMap inverse() const;

    bool operator==(const PPSLMap& o) const { return arcs_ == o.arcs_; }

private:
    std::vector<Arc> arcs_;
};

// compose(g, h) = g o h, h acts first.
PPSLMap compose(const PPSLMap& g, const PPSLMap& h);

}  // namespace tlab
