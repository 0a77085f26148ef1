#include "hamc/path.hpp"

#include <algorithm>

#include "hamc/errors.hpp"

namespace hamc {

HamPath::HamPath(std::vector<int> order, bool directed)
    : order_(std::move(order)), directed_(directed) {
    const int n = static_cast<int>(order_.size());
    if (n < 1) throw precondition_error("HamPath: empty vertex sequence");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : order_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw precondition_error("HamPath: sequence is not a permutation of 0..n-1");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    if (!directed_ && n > 1 && order_.front() > order_.back())
        std::reverse(order_.begin(), order_.end());
}

std::vector<int> HamPath::positions() const {
    std::vector<int> pos(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i)
        pos[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
    return pos;
}

bool HamPath::has_edge(int u, int v) const {
    if (u == v) return false;
    auto pos = positions();
    int d = pos[static_cast<std::size_t>(u)] - pos[static_cast<std::size_t>(v)];
    return d == 1 || d == -1;
}

std::vector<std::pair<int, int>> HamPath::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(order_.size() - 1);
    for (std::size_t i = 0; i + 1 < order_.size(); ++i) {
        int u = order_[i], v = order_[i + 1];
        out.emplace_back(std::min(u, v), std::max(u, v));
    }
    return out;
}

Graph HamPath::as_graph() const {
    Graph g(n());
    for (auto [u, v] : edges()) g.add_edge(u, v);
    return g;
}

HamPath HamPath::relabeled(const std::vector<int>& sigma) const {
    if (static_cast<int>(sigma.size()) != n())
        throw precondition_error("relabeled: permutation size mismatch");
    std::vector<int> mapped(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i)
        mapped[i] = sigma[static_cast<std::size_t>(order_[i])];
    return HamPath(std::move(mapped), directed_);
}

HamPath HamPath::as_undirected() const { return HamPath(order_, false); }

void PathFamily::add(HamPath p) {
    if (p.n() != n_)
        throw precondition_error("PathFamily::add: vertex count mismatch");
    if (p.directed() != directed_)
        throw precondition_error("PathFamily::add: directedness mismatch");
    if (!keys_.insert(p.order()).second)
        throw precondition_error("PathFamily::add: duplicate path");
    paths_.push_back(std::move(p));
}

bool PathFamily::contains(const HamPath& p) const { return keys_.count(p.order()) > 0; }

PathFamily PathFamily::as_undirected() const {
    PathFamily out(n_, false);
    for (const auto& p : paths_) {
        HamPath u = p.as_undirected();
        if (!out.contains(u)) out.add(std::move(u));
    }
    return out;
}

} // namespace hamc
