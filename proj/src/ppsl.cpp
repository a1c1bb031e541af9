#include "tlab/ppsl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tlab {

namespace {

// Total order realizing the positive circle orientation started at inf.
bool circle_less(const ExtRational& u, const ExtRational& v) {
    if (u.is_infinite()) return !v.is_infinite();
    if (v.is_infinite()) return false;
    return u < v;
}

}  // namespace

PPSLMap::PPSLMap(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
    if (arcs_.empty()) throw std::invalid_argument("PPSLMap: empty arc list");
    for (auto& arc : arcs_) arc.from = arc.from.circle();
    std::sort(arcs_.begin(), arcs_.end(),
              [](const Arc& l, const Arc& r) { return circle_less(l.from, r.from); });
    for (std::size_t i = 1; i < arcs_.size(); ++i)
        if (arcs_[i - 1].from == arcs_[i].from)
            throw std::invalid_argument("PPSLMap: duplicate breakpoints");

    // Canonical merge of adjacent equal matrices, including across the wrap
    // (where the first arc's range is absorbed into the last arc).
    std::vector<Arc> merged;
    for (auto& arc : arcs_) {
        if (!merged.empty() && merged.back().matrix == arc.matrix) continue;
        merged.push_back(arc);
    }
    while (merged.size() > 1 && merged.front().matrix == merged.back().matrix)
        merged.erase(merged.begin());
    if (merged.size() == 1) merged.front().from = ExtRational::infinity();
    arcs_ = std::move(merged);
    if (arcs_.size() == 1) return;

    // Continuity at every breakpoint.
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& prev = arcs_[(i + arcs_.size() - 1) % arcs_.size()];
        if (prev.matrix(arcs_[i].from) != arcs_[i].matrix(arcs_[i].from))
            throw std::invalid_argument("PPSLMap: discontinuity at breakpoint " + arcs_[i].from.str());
    }

    // Bijectivity: the image arcs must wind around the circle exactly once,
    // i.e. the breakpoint images must again be in positive cyclic order.
    std::vector<ExtRational> images;
    for (auto& arc : arcs_) images.push_back(arc.matrix(arc.from));
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (images[i] == images[j])
                throw std::invalid_argument("PPSLMap: breakpoint images collide");
    if (images.size() >= 3)
        for (std::size_t i = 0; i < images.size(); ++i)
            if (!cyclic_order(images[i], images[(i + 1) % images.size()], images[(i + 2) % images.size()]))
                throw std::invalid_argument("PPSLMap: image arcs are not cyclically ordered");
}

std::vector<ExtRational> PPSLMap::breakpoints() const {
    if (arcs_.size() == 1) return {};
    std::vector<ExtRational> bps;
    for (auto& arc : arcs_) bps.push_back(arc.from);
    return bps;
}

const PSL2Z& PPSLMap::matrix_at(const ExtRational& x) const {
    if (arcs_.size() == 1) return arcs_[0].matrix;
    const ExtRational cx = x.circle();
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const ExtRational& lo = arcs_[i].from;
        const ExtRational& hi = arcs_[(i + 1) % arcs_.size()].from;
        if (cx == lo) return arcs_[i].matrix;
        if (cx != hi && cyclic_order(lo, cx, hi)) return arcs_[i].matrix;
    }
    throw std::logic_error("PPSLMap: point not covered by any arc");
}

PPSLMap PPSLMap::inverse() const {
    std::vector<Arc> arcs;
    arcs.reserve(arcs_.size());
    for (auto& arc : arcs_) arcs.push_back(Arc{arc.matrix(arc.from), arc.matrix.inverse()});
    if (arcs_.size() == 1) arcs[0].from = ExtRational::infinity();
    return PPSLMap(std::move(arcs));
}

PPSLMap compose(const PPSLMap& g, const PPSLMap& h) {
    PPSLMap h_inv = h.inverse();
    std::set<ExtRational, bool (*)(const ExtRational&, const ExtRational&)> cuts(circle_less);
    for (auto& x : h.breakpoints()) cuts.insert(x);
    for (auto& x : g.breakpoints()) cuts.insert(h_inv(x));
    if (cuts.empty()) return PPSLMap::single(g.arcs()[0].matrix * h.arcs()[0].matrix);
    std::vector<Arc> arcs;
    for (auto& u : cuts) arcs.push_back(Arc{u, g.matrix_at(h(u)) * h.matrix_at(u)});
    return PPSLMap(std::move(arcs));
}

}  // namespace tlab
